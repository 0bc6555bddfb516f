#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "a3res/serialize.hpp"

namespace {

using namespace a3res;

Partition parse_partition(const std::string& s, const std::string& what) {
  auto v = parse_csv_ints(s);
  if (!v) throw std::invalid_argument("cannot parse " + what + ": '" + s + "'");
  return make_partition(*v);  // throws std::invalid_argument when not a partition
}

std::vector<int> parse_tuple(const std::string& s, size_t len, const std::string& what) {
  auto v = parse_csv_ints(s);
  if (!v || v->size() != len)
    throw std::invalid_argument("cannot parse " + what + ": expected " + std::to_string(len) +
                                " comma-separated integers, got '" + s + "'");
  return *v;
}

struct CacheSession {
  std::string path;

  explicit CacheSession(const std::string& dirFlag) {
    std::string dir = resolve_cache_dir(dirFlag);
    if (dir.empty()) return;
    path = (std::filesystem::path(dir) / "lr_kostka.txt").string();
    std::string err;
    if (!load_combinatorics_cache(path, err) && std::filesystem::exists(path))
      std::cerr << "warning: ignoring cache: " << err << "\n";
  }

  ~CacheSession() {
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    std::string err;
    if (!save_combinatorics_cache(path, err))
      std::cerr << "warning: could not write cache: " << err << "\n";
  }
};

void emit(const nlohmann::ordered_json& j, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int count_nonzero_degrees(const CohomologyTable& t) {
  int c = 0;
  for (const auto& [deg, reps] : t.byDegree)
    if (!reps.empty()) ++c;
  return c;
}

ScanReport run_scan(int maxN, int maxL1, int maxM1, const Limits& limits) {
  ScanReport rep;
  rep.maxN = maxN;
  rep.maxLambda1 = maxL1;
  rep.maxMu1 = maxM1;
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 3; n <= maxN; ++n) {
    for (int r1 = 1; r1 < n; ++r1) {
      for (int r2 = r1 + 1; r2 < n; ++r2) {
        FlagContext ctx{r1, r2, n};
        for (const auto& lambda : partitions_in_box(r2, maxL1)) {
          for (const auto& mu : partitions_in_box(n - r1, maxM1)) {
            ++rep.cases;
            auto split = cohomology_flag(ctx, lambda, mu, Method::SplitOnly, limits);
            bool amb = split.table.status == CohomologyTable::Status::Ambiguous;
            CohomologyTable exact =
                amb ? cohomology_flag(ctx, lambda, mu, Method::Auto, limits).table : split.table;
            int degs = count_nonzero_degrees(exact);
            if (degs >= 2) {
              rep.violations.push_back({ctx, lambda, mu, degs});
              if (concentration_range(ctx, lambda, mu)) rep.certifiedViolation = true;
            }
            if (amb) rep.ambiguous.push_back({ctx, lambda, mu, degs});
          }
        }
      }
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact GL(n)-equivariant cohomology of homogeneous bundles on 2-step flag varieties,\n"
      "and equivariant minimal free resolutions of equioriented A3 quiver orbit closures."};
  app.require_subcommand(1);

  std::string format = "text";
  std::string methodName = "auto";
  std::string cacheDir;
  long long maxBlock = Limits{}.maxBlockBasis;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--method", methodName, "Computation method")
      ->check(CLI::IsMember({"auto", "split-only", "definitive"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cacheDir,
                 "Directory for the persistent combinatorics cache "
                 "(default: $A3RES_CACHE_DIR, else disabled)");
  app.add_option("--max-block", maxBlock, "Per-weight basis size limit for the direct method")
      ->capture_default_str();

  auto* cohCmd =
      app.add_subcommand("cohomology", "Cohomology of S_lambda(R2) (x) S_mu((W/R1)*) on Flag(r1,r2,n)");
  cohCmd->fallthrough();
  std::string flagStr, lambdaStr, muStr;
  cohCmd->add_option("--flag", flagStr, "r1,r2,n")->required();
  cohCmd->add_option("--lambda", lambdaStr, "Partition for the R2 factor (empty for trivial)");
  cohCmd->add_option("--mu", muStr, "Partition for the (W/R1)* factor (empty for trivial)");

  auto* resCmd = app.add_subcommand("resolution", "Equivariant minimal free resolution terms");
  resCmd->fallthrough();
  std::string dimStr, ranksStr;
  int maxTerm = -1;
  resCmd->add_option("--dim", dimStr, "d1,d2,d3")->required();
  resCmd->add_option("--ranks", ranksStr, "a,b,c rank conditions")->required();
  resCmd->add_option("--max-term", maxTerm, "Highest homological degree to compute (default: codim)");

  auto* genCmd = app.add_subcommand("generators", "Minimal generators of the orbit closure ideal");
  genCmd->fallthrough();
  genCmd->add_option("--dim", dimStr, "d1,d2,d3")->required();
  genCmd->add_option("--ranks", ranksStr, "a,b,c rank conditions")->required();

  auto* scanCmd = app.add_subcommand("scan", "Sweep contexts and report degree spread / ambiguity");
  scanCmd->fallthrough();
  int maxN = 4, maxL1 = 3, maxM1 = 3;
  scanCmd->add_option("--max-n", maxN, "Largest ambient dimension n")->capture_default_str();
  scanCmd->add_option("--max-lambda1", maxL1, "Largest first part of lambda")->capture_default_str();
  scanCmd->add_option("--max-mu1", maxM1, "Largest first part of mu")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto method = method_from_name(methodName);
    if (!method) throw std::invalid_argument("unknown method: " + methodName);
    Limits limits;
    if (maxBlock <= 0) throw std::invalid_argument("--max-block must be positive");
    limits.maxBlockBasis = maxBlock;
    CacheSession cache(cacheDir);

    if (cohCmd->parsed()) {
      auto f = parse_tuple(flagStr, 3, "--flag");
      FlagContext ctx{f[0], f[1], f[2]};
      Partition lambda = parse_partition(lambdaStr, "--lambda");
      Partition mu = parse_partition(muStr, "--mu");
      auto out = cohomology_flag(ctx, lambda, mu, *method, limits);
      emit(cohomology_json(ctx, lambda, mu, *method, out.table),
           cohomology_text(ctx, lambda, mu, *method, out.table), format);
      return 0;
    }
    if (resCmd->parsed() || genCmd->parsed()) {
      auto d = parse_tuple(dimStr, 3, "--dim");
      auto r = parse_tuple(ranksStr, 3, "--ranks");
      QuiverDatum q = datum_from_ranks(d, r[0], r[1], r[2]);
      if (genCmd->parsed()) {
        auto g = minimal_generators(q, *method, limits);
        emit(generators_json(q, g), generators_text(q, g), format);
        return g.f1Match ? 0 : 4;
      }
      long long codim = orbit_codimension(q);
      int iMax = maxTerm >= 0 ? maxTerm : static_cast<int>(codim);
      auto terms = resolution_terms(q, iMax, *method, limits);
      emit(resolution_json(q, codim, terms), resolution_text(q, codim, terms, iMax), format);
      return 0;
    }
    // scan
    if (maxN < 0 || maxL1 < 0 || maxM1 < 0)
      throw std::invalid_argument("scan bounds must be non-negative");
    ScanReport rep = run_scan(maxN, maxL1, maxM1, limits);
    emit(scan_json(rep), scan_text(rep), format);
    return rep.certifiedViolation ? 4 : 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
