#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "a3res/quiver.hpp"
#include "a3res/serialize.hpp"

namespace py = pybind11;
using namespace a3res;

namespace {

Method method_of(const std::string& name) {
  auto m = method_from_name(name);
  if (!m) throw std::invalid_argument("unknown method: " + name);
  return *m;
}

py::dict table_dict(const CohomologyTable& t) {
  py::dict coh;
  for (const auto& [deg, reps] : t.byDegree) {
    if (reps.empty()) continue;
    py::list entries;
    for (const auto& [w, m] : reps.terms) entries.append(py::make_tuple(py::cast(w), m));
    coh[py::cast(deg)] = entries;
  }
  return coh;
}

py::dict cohomology_py(int r1, int r2, int n, const std::vector<int>& lambda,
                       const std::vector<int>& mu, const std::string& method, long long maxBlock) {
  Limits limits;
  limits.maxBlockBasis = maxBlock;
  FlagContext ctx{r1, r2, n};
  auto out = cohomology_flag(ctx, make_partition(lambda), make_partition(mu), method_of(method),
                             limits);
  py::dict d;
  d["status"] = out.table.status == CohomologyTable::Status::Exact ? "exact" : "ambiguous";
  d["path"] = out.path;
  d["cohomology"] = table_dict(out.table);
  return d;
}

py::dict resolution_py(const std::vector<int>& dims, const std::vector<int>& ranks, int maxTerm,
                       const std::string& method) {
  if (ranks.size() != 3) throw std::invalid_argument("ranks must have 3 entries");
  QuiverDatum q = datum_from_ranks(dims, ranks[0], ranks[1], ranks[2]);
  long long codim = orbit_codimension(q);
  int iMax = maxTerm >= 0 ? maxTerm : static_cast<int>(codim);
  auto terms = resolution_terms(q, iMax, method_of(method));
  py::dict d;
  d["codim"] = codim;
  py::list termList;
  for (const auto& t : terms) {
    py::dict e;
    e["i"] = t.i;
    e["twist"] = t.twist;
    e["ambiguous"] = t.ambiguous;
    py::list ss;
    for (const auto& s : t.summands)
      ss.append(py::make_tuple(py::cast(s.w1), py::cast(s.w2), py::cast(s.w3), s.mult));
    e["summands"] = ss;
    termList.append(e);
  }
  d["terms"] = termList;
  return d;
}

py::dict generators_py(const std::vector<int>& dims, const std::vector<int>& ranks) {
  if (ranks.size() != 3) throw std::invalid_argument("ranks must have 3 entries");
  QuiverDatum q = datum_from_ranks(dims, ranks[0], ranks[1], ranks[2]);
  auto g = minimal_generators(q, Method::Auto, Limits{});
  py::dict d;
  py::list fams;
  for (const auto& f : g.families) {
    py::dict e;
    e["name"] = f.name;
    e["size"] = f.size;
    e["w1"] = py::cast(f.w1);
    e["w2"] = py::cast(f.w2);
    e["w3"] = py::cast(f.w3);
    fams.append(e);
  }
  d["families"] = fams;
  d["f1_match"] = g.f1Match;
  return d;
}

long long codim_py(const std::vector<int>& dims, const std::vector<int>& ranks) {
  if (ranks.size() != 3) throw std::invalid_argument("ranks must have 3 entries");
  return orbit_codimension(datum_from_ranks(dims, ranks[0], ranks[1], ranks[2]));
}

}  // namespace

PYBIND11_MODULE(_a3res, m) {
  m.doc() =
      "Exact equivariant cohomology on 2-step flag varieties and equivariant minimal free "
      "resolutions of equioriented A3 quiver orbit closures";
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
  m.def("cohomology", &cohomology_py, py::arg("r1"), py::arg("r2"), py::arg("n"),
        py::arg("lambda_"), py::arg("mu"), py::arg("method") = "auto",
        py::arg("max_block") = Limits{}.maxBlockBasis,
        "Cohomology table of S_lambda(R2) (x) S_mu((W/R1)*) on Flag(r1,r2,n)");
  m.def("resolution", &resolution_py, py::arg("dims"), py::arg("ranks"), py::arg("max_term") = -1,
        py::arg("method") = "auto", "Equivariant minimal free resolution terms");
  m.def("generators", &generators_py, py::arg("dims"), py::arg("ranks"),
        "Minimal generator families of the orbit closure ideal");
  m.def("orbit_codimension", &codim_py, py::arg("dims"), py::arg("ranks"));
}
