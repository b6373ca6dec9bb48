// Python bindings for the main operations. Structured values cross the
// boundary as JSON strings; the thoma2 package parses them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thoma2/colim.hpp"
#include "thoma2/exfun.hpp"
#include "thoma2/homology.hpp"
#include "thoma2/ideals.hpp"
#include "thoma2/nlax.hpp"
#include "thoma2/sset.hpp"
#include "thoma2/verify.hpp"

namespace py = pybind11;
using namespace thoma2;

namespace {

Poset poset_from(const std::string& json_or_ordinal) {
  if (!json_or_ordinal.empty() && json_or_ordinal[0] == '{')
    return Poset::from_json(nlohmann::json::parse(json_or_ordinal));
  return Poset::ordinal(std::stoi(json_or_ordinal));
}

}  // namespace

PYBIND11_MODULE(_thoma2, m) {
  m.doc() = "2-categorical subdivision machinery: core operations";

  m.def("chain_poset", [](const std::string& p) { return chain_poset(poset_from(p)).to_json().dump(); },
        py::arg("poset"), "f(P): the poset of non-empty chains, as JSON");

  m.def("horn_poset", [](int n, int k) { return horn_poset(n, k).to_json().dump(); },
        py::arg("n"), py::arg("k"));

  m.def("collar_sizes", [](int n, int k) {
          SkewImmersionCertificate cert = horn_skew_immersion(n, k);
          nlohmann::json j = {{"a", cert.a_objects.size()},
                              {"w", cert.w_objects.size()},
                              {"b", cert.b->n_objects()}};
          return j.dump();
        },
        py::arg("n"), py::arg("k"));

  m.def("nerve", [](const std::string& p, int cap) { return nerve(poset_from(p), cap).to_json().dump(); },
        py::arg("poset"), py::arg("cap"));

  m.def("sd", [](const std::string& sset_json) {
          SimplicialSet k = SimplicialSet::from_json(nlohmann::json::parse(sset_json));
          return sd(k).to_json().dump();
        },
        py::arg("sset"));

  m.def("standard_complex", [](const std::string& kind, int n, int k) {
          ComplexKind ck = kind == "boundary" ? ComplexKind::Boundary
                          : kind == "horn"    ? ComplexKind::Horn
                                              : ComplexKind::Standard;
          return basic_complex(ck, n, k).to_json().dump();
        },
        py::arg("kind"), py::arg("n"), py::arg("k") = -1);

  m.def("n2_counts", [](const std::string& p, int cap) {
          Budget b(Budget::default_limit());
          N2Result r = n2(chain_two_category(poset_from(p)), cap, &b);
          nlohmann::json j = nlohmann::json::array();
          for (int d = 0; d <= cap; ++d)
            j.push_back({{"degree", d},
                         {"total", r.cells[d].size()},
                         {"nondegenerate", r.sset->count(d)}});
          return j.dump();
        },
        py::arg("poset"), py::arg("cap"));

  m.def("ex", [](const std::string& sset_json, int cap, int iterations) {
          auto k = std::make_shared<SimplicialSet>(
              SimplicialSet::from_json(nlohmann::json::parse(sset_json)));
          Budget b(Budget::default_limit());
          SimplicialSet e = ex(k, cap, &b);
          if (iterations == 2) e = ex(std::make_shared<SimplicialSet>(e), cap, &b);
          return e.to_json().dump();
        },
        py::arg("sset"), py::arg("cap"), py::arg("iterations") = 1);

  m.def("homology", [](const std::string& sset_json, int cap) {
          SimplicialSet k = SimplicialSet::from_json(nlohmann::json::parse(sset_json));
          auto h = homology(k, cap);
          nlohmann::json j = nlohmann::json::array();
          for (size_t i = 0; i < h.size(); ++i)
            j.push_back({{"degree", i}, {"betti", h[i].betti}, {"torsion", h[i].torsion}});
          return j.dump();
        },
        py::arg("sset"), py::arg("cap"));

  m.def("quotient_counts", [](const std::string& p, const std::vector<std::string>& ideal) {
          Poset base = poset_from(p);
          auto b = chain_two_category(base);
          std::vector<int> a;
          for (const auto& t : ideal) a.push_back(base.require(t));
          Budget budget(Budget::default_limit());
          QuotientResult q = quotient(b, a, &budget);
          Budget probe(Budget::default_limit());
          nlohmann::json j = {{"objects", q.object->n_objects()},
                              {"one_cells", q.object->all1(&probe).size()},
                              {"two_cells", q.object->all2(&probe).size()}};
          return j.dump();
        },
        py::arg("poset"), py::arg("ideal"));

  m.def("generating_set", [](const std::string& kind, int n, int k) {
          GeneratingKind gk =
              kind == "boundary" ? GeneratingKind::Boundary : GeneratingKind::Horn;
          return generating_sets(gk, n, k).to_json().dump();
        },
        py::arg("kind"), py::arg("n"), py::arg("k") = -1);

  m.def("verify", [](const std::string& lemma, int n, int k, int cap, unsigned seed,
                     const std::string& poset) {
          VerifyParams p;
          p.n = n;
          p.k = k;
          p.cap = cap;
          p.seed = seed;
          if (!poset.empty()) p.poset = poset_from(poset);
          return verify_lemma(lemma, p).to_json().dump();
        },
        py::arg("lemma"), py::arg("n") = 2, py::arg("k") = 1, py::arg("cap") = -1,
        py::arg("seed") = 1, py::arg("poset") = "");

  m.def("lemmas", [] { return lemma_names(); });
}
