#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

#include "report.hpp"
#include "sdepth/error.hpp"
#include "sdepth/expression.hpp"

namespace sdepth::cli {

namespace {

struct Flags {
  std::string ideal;
  std::optional<std::size_t> vars;
  std::string format = "json";
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned workers = 1;
  std::string variant = "reduced";
  std::string module = "ideal";
  std::string export_path;
  bool timing = false;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SDEPTH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultNodeBudget;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--ideal", f.ideal, "Ideal expression, e.g. \"(x1*x2, x3) & (x4)\"")->required();
  cmd->add_option("--vars", f.vars, "Number of variables (default: largest index)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void emit(const report::Report& r, const Flags& f, std::ostream& out) {
  if (f.format == "text") {
    out << report::to_text(r);
  } else {
    out << report::to_json(r).dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  f.budget = default_budget();

  CLI::App app{"Stanley depth of monomial ideals"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "Evaluate every applicable bound");
  add_common(bounds, f);
  bounds->add_option("--variant", f.variant, "Reading of the four-prime bound")
      ->check(CLI::IsMember({"reduced", "printed"}));

  auto* exact = app.add_subcommand("exact", "Exact Stanley depth with a witness partition");
  add_common(exact, f);
  exact->add_option("--module", f.module, "ideal: sdepth(I); quotient: sdepth(S/I)")
      ->check(CLI::IsMember({"ideal", "quotient"}));
  exact->add_option("--budget", f.budget, "Search node budget (env SDEPTH_BUDGET)");
  exact->add_option("--workers", f.workers, "Parallel search workers")->check(CLI::Range(1u, 256u));
  exact->add_flag("--timing", f.timing, "Include wall time in the report");

  auto* ass = app.add_subcommand("ass", "Associated primes with witnesses");
  add_common(ass, f);

  auto* minprimes = app.add_subcommand("minprimes", "Minimal primes");
  add_common(minprimes, f);

  auto* poset = app.add_subcommand("poset", "Export the characteristic poset");
  add_common(poset, f);
  poset->add_option("--module", f.module, "ideal or quotient side")
      ->check(CLI::IsMember({"ideal", "quotient"}));
  poset->add_option("--export", f.export_path, "Output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    const auto expr = parse_ideal(f.ideal, f.vars);
    report::Report r{expr.to_ideal()};

    if (bounds->parsed()) {
      ReportOptions opts;
      opts.components = expr.term_ideals();
      if (opts.components.size() < 2) opts.components.clear();
      opts.four_prime_variant = f.variant == "printed" ? FourPrimeVariant::printed : FourPrimeVariant::reduced;
      r.bounds = report_all(r.ideal, opts);
    } else if (exact->parsed()) {
      SolverOptions opts;
      opts.node_budget = f.budget;
      opts.workers = f.workers;
      r.exact = f.module == "quotient" ? sdepth_exact_quotient(r.ideal, opts) : sdepth_exact_ideal(r.ideal, opts);
      r.timing = f.timing;
    } else if (ass->parsed()) {
      r.ass = ass_primes(r.ideal);
    } else if (minprimes->parsed()) {
      r.min_primes = min_primes(r.ideal);
    } else if (poset->parsed()) {
      const auto p = f.module == "quotient" ? build_quotient_poset(r.ideal) : build_ideal_poset(r.ideal);
      std::ofstream file(f.export_path);
      if (!file) {
        err << "error: cannot open " << f.export_path << '\n';
        return kExitFailure;
      }
      p.write(file);
      if (f.format == "text") {
        out << "elements  " << p.size() << "\nfile      " << f.export_path << '\n';
      } else {
        nlohmann::ordered_json j;
        j["kind"] = to_string(p.kind());
        j["elements"] = p.size();
        j["file"] = f.export_path;
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    }
    emit(r, f, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace sdepth::cli
