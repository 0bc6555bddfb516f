#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "a3res/quiver.hpp"

namespace a3res {

/// "auto", "split-only", "definitive".
std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// One scanned case with its observed degree spread.
struct ScanCase {
  FlagContext ctx;
  Partition lambda, mu;
  int degrees = 0;
};

struct ScanReport {
  int maxN = 0;
  int maxLambda1 = 0;
  int maxMu1 = 0;
  long long cases = 0;
  std::vector<ScanCase> violations;  ///< exact cohomology in >= 2 degrees
  std::vector<ScanCase> ambiguous;   ///< split-only reconciliation stayed ambiguous
  long long elapsedMs = 0;
  /// true when a multi-degree case lies inside the certified single-degree
  /// range (n <= 4, lambda_1 <= 3, mu_1 <= 3).
  bool certifiedViolation = false;
};

nlohmann::ordered_json cohomology_json(const FlagContext& ctx, const Partition& lambda,
                                       const Partition& mu, Method method,
                                       const CohomologyTable& table);
std::string cohomology_text(const FlagContext& ctx, const Partition& lambda,
                            const Partition& mu, Method method, const CohomologyTable& table);

nlohmann::ordered_json resolution_json(const QuiverDatum& q, long long codim,
                                       const std::vector<EquivariantTerm>& terms);
std::string resolution_text(const QuiverDatum& q, long long codim,
                            const std::vector<EquivariantTerm>& terms, int iMax);

nlohmann::ordered_json generators_json(const QuiverDatum& q, const MinimalGenerators& g);
std::string generators_text(const QuiverDatum& q, const MinimalGenerators& g);

nlohmann::ordered_json scan_json(const ScanReport& r);
std::string scan_text(const ScanReport& r);

/// Cache directory resolution: explicit flag value, else the A3RES_CACHE_DIR
/// environment variable, else empty (cache disabled).
std::string resolve_cache_dir(const std::string& flagValue);

}  // namespace a3res
