#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdepth/bounds.hpp"
#include "sdepth/ideal.hpp"
#include "sdepth/primes.hpp"
#include "sdepth/solver.hpp"

namespace sdepth::report {

struct Report {
  MonomialIdeal ideal;
  std::optional<std::vector<BoundResult>> bounds;
  std::optional<SdepthResult> exact;
  std::optional<std::vector<AssWitness>> ass;
  std::optional<std::vector<PrimeIdeal>> min_primes;
  /// Wall time goes into the report only when set; otherwise `ms` is 0 so
  /// that reports are byte-identical across runs.
  bool timing = false;
};

/// Sections appear in a fixed order: ring, ideal, bounds, exact, ass,
/// min_primes. Absent sections are omitted.
nlohmann::ordered_json to_json(const Report& report);

/// Two-column aligned table.
std::string to_text(const Report& report);

}  // namespace sdepth::report
