#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace sdepth::report {

namespace {

using nlohmann::ordered_json;

ordered_json vector_json(std::span<const Exponent> v) {
  ordered_json out = ordered_json::array();
  for (Exponent e : v) out.push_back(e);
  return out;
}

std::string vector_text(std::span<const Exponent> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::int64_t reported_ms(const Report& r) {
  return r.timing && r.exact ? static_cast<std::int64_t>(std::llround(r.exact->stats.ms)) : 0;
}

}  // namespace

ordered_json to_json(const Report& report) {
  ordered_json out;
  out["ring"] = {{"n", report.ideal.ring().n}};
  ordered_json gens = ordered_json::array();
  for (const auto& g : report.ideal.generators()) gens.push_back(g.to_string());
  out["ideal"] = {{"generators", gens}};

  if (report.bounds) {
    ordered_json bounds = ordered_json::array();
    for (const auto& b : *report.bounds) {
      ordered_json entry;
      entry["name"] = b.name;
      entry["kind"] = to_string(b.kind);
      entry["target"] = to_string(b.target);
      entry["raw"] = b.applicable ? b.raw.to_string() : "";
      entry["effective"] = b.applicable ? b.effective : 0;
      entry["applicable"] = b.applicable;
      entry["reason"] = b.reason;
      entry["paper_ref"] = b.paper_ref;
      bounds.push_back(std::move(entry));
    }
    out["bounds"] = std::move(bounds);
  }

  if (report.exact) {
    const auto& e = *report.exact;
    ordered_json witness = ordered_json::array();
    for (const auto& iv : e.witness.intervals) {
      ordered_json pair;
      pair["bottom"] = vector_json(iv.bottom);
      pair["top"] = vector_json(iv.top);
      witness.push_back(std::move(pair));
    }
    ordered_json exact;
    exact["target"] = to_string(e.target);
    exact["value"] = e.value;
    exact["nodes"] = e.stats.nodes;
    exact["ms"] = reported_ms(report);
    exact["witness"] = std::move(witness);
    out["exact"] = std::move(exact);
  }

  if (report.ass) {
    ordered_json ass = ordered_json::array();
    for (const auto& aw : *report.ass) {
      ordered_json entry;
      entry["prime"] = aw.prime.to_string();
      entry["height"] = aw.prime.height();
      entry["witness"] = aw.witness.to_string();
      ass.push_back(std::move(entry));
    }
    out["ass"] = std::move(ass);
  }

  if (report.min_primes) {
    ordered_json mins = ordered_json::array();
    for (const auto& p : *report.min_primes) {
      ordered_json entry;
      entry["prime"] = p.to_string();
      entry["height"] = p.height();
      mins.push_back(std::move(entry));
    }
    out["min_primes"] = std::move(mins);
  }
  return out;
}

std::string to_text(const Report& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("ring.n", std::to_string(report.ideal.ring().n));
  rows.emplace_back("ideal", report.ideal.to_string());

  if (report.bounds) {
    for (const auto& b : *report.bounds) {
      std::string label = to_string(b.target) + " " + to_string(b.kind) + " " + b.name;
      std::string value = b.applicable ? std::to_string(b.effective) + " (raw " + b.raw.to_string() + ")"
                                       : "n/a: " + b.reason;
      rows.emplace_back(std::move(label), std::move(value));
    }
  }
  if (report.exact) {
    const auto& e = *report.exact;
    rows.emplace_back("exact." + to_string(e.target), std::to_string(e.value));
    rows.emplace_back("exact.nodes", std::to_string(e.stats.nodes));
    if (report.timing) rows.emplace_back("exact.ms", std::to_string(reported_ms(report)));
    for (std::size_t i = 0; i < e.witness.intervals.size(); ++i) {
      const auto& iv = e.witness.intervals[i];
      rows.emplace_back("witness[" + std::to_string(i) + "]",
                        vector_text(iv.bottom) + " .. " + vector_text(iv.top));
    }
  }
  if (report.ass) {
    for (const auto& aw : *report.ass) {
      rows.emplace_back("ass " + aw.prime.to_string(), "witness " + aw.witness.to_string());
    }
  }
  if (report.min_primes) {
    for (const auto& p : *report.min_primes) {
      rows.emplace_back("min " + p.to_string(), "height " + std::to_string(p.height()));
    }
  }

  std::size_t width = 0;
  for (const auto& [label, value] : rows) width = std::max(width, label.size());
  std::ostringstream out;
  for (const auto& [label, value] : rows) {
    out << label << std::string(width - label.size() + 2, ' ') << value << '\n';
  }
  return out.str();
}

}  // namespace sdepth::report
