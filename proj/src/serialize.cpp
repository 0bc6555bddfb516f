#include "a3res/serialize.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace a3res {

namespace {

using json = nlohmann::ordered_json;

json int_array(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::string tuple_str(const std::vector<int>& v) { return "(" + join_csv(v) + ")"; }

json rep_sum_array(const RepSum& s) {
  json arr = json::array();
  for (const auto& [w, m] : s.terms) {
    json e;
    e["weight"] = int_array(w);
    e["mult"] = m;
    arr.push_back(e);
  }
  return arr;
}

std::string rep_sum_str(const RepSum& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : s.terms) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << "S" << tuple_str(w);
  }
  return os.str();
}

long long summand_count(const EquivariantTerm& t) {
  long long c = 0;
  for (const auto& s : t.summands) c += s.mult;
  return c;
}

json summand_json(const ResolutionSummand& s) {
  json e;
  e["w1"] = int_array(s.w1);
  e["w2"] = int_array(s.w2);
  e["w3"] = int_array(s.w3);
  e["mult"] = s.mult;
  return e;
}

std::string summand_str(const ResolutionSummand& s) {
  std::ostringstream os;
  if (s.mult != 1) os << s.mult << "*";
  os << "S" << tuple_str(s.w1) << "V1 (x) S" << tuple_str(s.w2) << "V2 (x) S" << tuple_str(s.w3)
     << "V3*";
  return os.str();
}

json scan_case_json(const ScanCase& c, bool withDegrees) {
  json e;
  e["flag"] = int_array({c.ctx.r1, c.ctx.r2, c.ctx.n});
  e["lambda"] = int_array(c.lambda);
  e["mu"] = int_array(c.mu);
  if (withDegrees) e["degrees"] = c.degrees;
  return e;
}

std::string scan_case_str(const ScanCase& c) {
  std::ostringstream os;
  os << "flag " << tuple_str({c.ctx.r1, c.ctx.r2, c.ctx.n}) << "  lambda " << tuple_str(c.lambda)
     << "  mu " << tuple_str(c.mu);
  return os.str();
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::SplitOnly: return "split-only";
    case Method::Definitive: return "definitive";
  }
  return "auto";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "split-only") return Method::SplitOnly;
  if (name == "definitive") return Method::Definitive;
  return std::nullopt;
}

json cohomology_json(const FlagContext& ctx, const Partition& lambda, const Partition& mu,
                     Method method, const CohomologyTable& table) {
  json out;
  out["schema"] = "1";
  out["flag"] = int_array({ctx.r1, ctx.r2, ctx.n});
  out["lambda"] = int_array(lambda);
  out["mu"] = int_array(mu);
  out["method"] = method_name(method);
  out["status"] = table.status == CohomologyTable::Status::Exact ? "exact" : "ambiguous";
  json coh = json::object();
  for (const auto& [deg, reps] : table.byDegree) {
    if (reps.empty()) continue;
    coh[std::to_string(deg)] = rep_sum_array(reps);
  }
  out["cohomology"] = coh;
  return out;
}

std::string cohomology_text(const FlagContext& ctx, const Partition& lambda, const Partition& mu,
                            Method method, const CohomologyTable& table) {
  std::ostringstream os;
  os << "flag " << tuple_str({ctx.r1, ctx.r2, ctx.n}) << "  lambda " << tuple_str(lambda)
     << "  mu " << tuple_str(mu) << "  method " << method_name(method) << "  status "
     << (table.status == CohomologyTable::Status::Exact ? "exact" : "ambiguous") << "\n";
  bool any = false;
  for (const auto& [deg, reps] : table.byDegree) {
    if (reps.empty()) continue;
    any = true;
    os << "H^" << deg << ": " << rep_sum_str(reps) << "\n";
  }
  if (!any) os << "all cohomology vanishes\n";
  return os.str();
}

json resolution_json(const QuiverDatum& q, long long codim,
                     const std::vector<EquivariantTerm>& terms) {
  json out;
  out["schema"] = "1";
  out["d"] = int_array(q.d);
  out["ranks"] = int_array({q.a, q.b, q.c});
  out["codim"] = codim;
  json arr = json::array();
  for (const auto& t : terms) {
    json e;
    e["i"] = t.i;
    e["twist"] = t.twist;
    json ss = json::array();
    for (const auto& s : t.summands) ss.push_back(summand_json(s));
    e["summands"] = ss;
    if (t.ambiguous) e["ambiguous"] = true;
    arr.push_back(e);
  }
  out["terms"] = arr;
  return out;
}

std::string resolution_text(const QuiverDatum& q, long long codim,
                            const std::vector<EquivariantTerm>& terms, int iMax) {
  std::ostringstream os;
  os << "d " << tuple_str(q.d) << "  ranks " << tuple_str({q.a, q.b, q.c}) << "  codim " << codim
     << "\n";
  std::map<int, long long> perI;
  std::map<int, bool> ambI;
  for (const auto& t : terms) {
    perI[t.i] += summand_count(t);
    if (t.ambiguous) ambI[t.i] = true;
  }
  for (int i = 0; i <= iMax; ++i) {
    auto it = perI.find(i);
    long long c = it == perI.end() ? 0 : it->second;
    os << "F_" << i << ": " << c << (c == 1 ? " summand" : " summands");
    if (ambI.count(i)) os << " (ambiguous)";
    os << "\n";
  }
  for (const auto& t : terms) {
    os << "F_" << t.i << " twist " << t.twist;
    if (t.ambiguous) os << " (ambiguous)";
    os << ":\n";
    for (const auto& s : t.summands) os << "  " << summand_str(s) << "\n";
  }
  return os.str();
}

json generators_json(const QuiverDatum& q, const MinimalGenerators& g) {
  json out;
  out["schema"] = "1";
  out["d"] = int_array(q.d);
  out["ranks"] = int_array({q.a, q.b, q.c});
  json fams = json::array();
  for (const auto& f : g.families) {
    json e;
    e["name"] = f.name;
    e["size"] = f.size;
    e["w1"] = int_array(f.w1);
    e["w2"] = int_array(f.w2);
    e["w3"] = int_array(f.w3);
    fams.push_back(e);
  }
  out["families"] = fams;
  out["f1_crosscheck"] = g.f1Match ? "pass" : "fail";
  if (!g.f1Match) {
    json ss = json::array();
    for (const auto& s : g.computedF1) ss.push_back(summand_json(s));
    out["computed_f1"] = ss;
  }
  return out;
}

std::string generators_text(const QuiverDatum& q, const MinimalGenerators& g) {
  std::ostringstream os;
  os << "d " << tuple_str(q.d) << "  ranks " << tuple_str({q.a, q.b, q.c}) << "\n";
  if (g.families.empty()) os << "no minimal generators (zero orbit codimension)\n";
  for (const auto& f : g.families) {
    os << f.name << ": size " << f.size << ", "
       << summand_str({f.w1, f.w2, f.w3, 1}) << "\n";
  }
  os << "F_1 cross-check: " << (g.f1Match ? "PASS" : "FAIL") << "\n";
  if (!g.f1Match) {
    os << "computed F_1:\n";
    for (const auto& s : g.computedF1) os << "  " << summand_str(s) << "\n";
  }
  return os.str();
}

json scan_json(const ScanReport& r) {
  json out;
  out["schema"] = "1";
  json bounds;
  bounds["max_n"] = r.maxN;
  bounds["max_lambda1"] = r.maxLambda1;
  bounds["max_mu1"] = r.maxMu1;
  out["bounds"] = bounds;
  out["cases"] = r.cases;
  json viol = json::array();
  for (const auto& c : r.violations) viol.push_back(scan_case_json(c, true));
  out["violations"] = viol;
  json amb = json::array();
  for (const auto& c : r.ambiguous) amb.push_back(scan_case_json(c, false));
  out["ambiguous"] = amb;
  out["elapsed_ms"] = r.elapsedMs;
  return out;
}

std::string scan_text(const ScanReport& r) {
  std::ostringstream os;
  os << "scan bounds: n <= " << r.maxN << ", lambda_1 <= " << r.maxLambda1 << ", mu_1 <= "
     << r.maxMu1 << "\n";
  os << "cases: " << r.cases << "  elapsed: " << r.elapsedMs << " ms\n";
  os << "multi-degree cases: " << r.violations.size() << "\n";
  for (const auto& c : r.violations)
    os << "  " << scan_case_str(c) << "  (" << c.degrees << " degrees)\n";
  os << "ambiguous under splitting: " << r.ambiguous.size() << "\n";
  for (const auto& c : r.ambiguous) os << "  " << scan_case_str(c) << "\n";
  return os.str();
}

std::string resolve_cache_dir(const std::string& flagValue) {
  if (!flagValue.empty()) return flagValue;
  const char* env = std::getenv("A3RES_CACHE_DIR");
  if (env != nullptr && env[0] != '\0') return env;
  return "";
}

}  // namespace a3res
