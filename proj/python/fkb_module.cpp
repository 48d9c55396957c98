#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fkb/biquandle.hpp"
#include "fkb/coloring.hpp"
#include "fkb/enumerate.hpp"
#include "fkb/moves.hpp"
#include "fkb/version.hpp"
#include "fkb/vssb.hpp"
#include "fkb/word.hpp"

namespace py = pybind11;
using namespace fkb;

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_freebraids, mod) {
  mod.doc() = "free k-braid groups, finite k-biquandles and braid monoid maps";
  mod.attr("__version__") = kVersion;

  py::class_<FreeKBraidWord>(mod, "Word")
      .def(py::init([](const std::string& text, int n, int k) {
             return parse_word(text, n, k);
           }),
           py::arg("text"), py::arg("n"), py::arg("k"))
      .def_readonly("n", &FreeKBraidWord::n)
      .def_readonly("k", &FreeKBraidWord::k)
      .def("__len__", &FreeKBraidWord::size)
      .def("__eq__", &FreeKBraidWord::operator==)
      .def("__str__", &FreeKBraidWord::str)
      .def("__repr__", [](const FreeKBraidWord& w) {
        return "Word('" + w.str() + "', n=" + std::to_string(w.n) +
               ", k=" + std::to_string(w.k) + ")";
      })
      .def("concat", &FreeKBraidWord::concat)
      .def("reduce", [](const FreeKBraidWord& w) { return free_reduce(w); })
      .def("parity",
           [](const FreeKBraidWord& w) {
             std::vector<int> out;
             for (auto b : parity_vector(w)) out.push_back(b);
             return out;
           })
      .def("neighbors", [](const FreeKBraidWord& w) { return neighbors(w); });

  mod.def(
      "equal_bounded",
      [](const FreeKBraidWord& a, const FreeKBraidWord& b, int depth, long nodes) {
        EqOptions opts;
        opts.depth = depth;
        opts.nodes = nodes;
        auto r = equal_bounded(a, b, opts);
        py::dict d;
        d["verdict"] = verdict_name(r.verdict);
        d["nodes_visited"] = r.nodes_visited;
        if (r.verdict == Verdict::Equal) {
          py::list path;
          for (const auto& w : r.path) path.append(w.str());
          d["path"] = path;
        }
        if (r.verdict == Verdict::Distinct) d["witness"] = r.witness;
        return d;
      },
      py::arg("w1"), py::arg("w2"), py::arg("depth") = 8, py::arg("nodes") = 200000);

  py::class_<FiniteKBiquandle>(mod, "Biquandle")
      .def_property_readonly("k", &FiniteKBiquandle::k)
      .def_property_readonly("m", &FiniteKBiquandle::m)
      .def("apply", &FiniteKBiquandle::apply)
      .def("is_trivial", &FiniteKBiquandle::is_trivial)
      .def("to_json", [](const FiniteKBiquandle& B) { return biquandle_to_json(B); })
      .def("check_axioms",
           [](const FiniteKBiquandle& B) {
             auto rep = check_axioms(B);
             py::dict d;
             d["equivariance"] = rep.equivariance.pass;
             d["involution"] = rep.involution.pass;
             d["far_commutativity"] = rep.far_commutativity.pass;
             d["tetrahedron"] = rep.tetrahedron.pass;
             d["all_pass"] = rep.all_pass();
             return d;
           })
      .def("is_isomorphic", [](const FiniteKBiquandle& a, const FiniteKBiquandle& b) {
        return is_isomorphic(a, b);
      });

  mod.def("gaussian", &gaussian, py::arg("k"));
  mod.def("trivial_biquandle", &FiniteKBiquandle::trivial, py::arg("k"), py::arg("m"));
  mod.def(
      "involution_biquandle",
      [](int m, const std::vector<std::pair<int, int>>& transpositions, int k) {
        return involution_kbiquandle(Involution(m, transpositions), k);
      },
      py::arg("m"), py::arg("transpositions"), py::arg("k"));
  mod.def(
      "conditional_involution",
      [](int m, const std::vector<std::pair<int, int>>& transpositions,
         const std::vector<std::vector<int>>& mu, int k) {
        Involution tau(m, transpositions);
        std::set<std::vector<int>> members(mu.begin(), mu.end());
        return conditional_involution(tau, MultiplicitySet(k, tau.t(), members), k);
      },
      py::arg("m"), py::arg("transpositions"), py::arg("mu"), py::arg("k"));
  mod.def("biquandle_from_json", &biquandle_from_json, py::arg("text"),
          py::arg("skip_axioms") = false);

  mod.def(
      "enumerate_biquandles",
      [](int m, int k, bool nontrivial, int jobs) {
        EnumerateOptions opts;
        opts.nontrivial_only = nontrivial;
        opts.jobs = jobs;
        auto res = enumerate_kbiquandles(m, k, opts);
        py::list entries;
        for (size_t i = 0; i < res.entries.size(); ++i) {
          py::dict e;
          e["biquandle"] = res.entries[i];
          e["tag"] = tag_name(res.tags[i]);
          entries.append(e);
        }
        return entries;
      },
      py::arg("m"), py::arg("k"), py::arg("nontrivial") = false, py::arg("jobs") = 1);

  mod.def("propagate",
          [](const FreeKBraidWord& w, const FiniteKBiquandle& B, const Tuple& chi) {
            return propagate(w, B, chi).chi_out;
          });
  mod.def("binding_number", &binding_number);
  mod.def("count_colorings", &count_colorings);
  mod.def("hom_count", [](const FreeKBraidWord& w, const FiniteKBiquandle& B) {
    return hom_count(fundamental_presentation(w), B);
  });

  py::class_<VSSBWord>(mod, "BraidWord")
      .def(py::init(
               [](const std::string& text, int n) { return parse_vssb(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_readonly("n", &VSSBWord::n)
      .def("__len__", [](const VSSBWord& w) { return w.letters.size(); })
      .def("__str__", &VSSBWord::str)
      .def("__repr__",
           [](const VSSBWord& w) {
             return "BraidWord('" + w.str() + "', n=" + std::to_string(w.n) + ")";
           })
      .def("concat", &VSSBWord::concat)
      .def("phi", [](const VSSBWord& w) { return phi(w); })
      .def("rho", [](const VSSBWord& w) { return rho(w).str(); })
      .def("is_pure", [](const VSSBWord& w) { return is_pure(w); })
      .def("invariant",
           [](const VSSBWord& w, const FiniteKBiquandle& B, const Tuple& chi1,
              const Tuple& chi2) { return vssb_invariant(w, B, chi1, chi2); });

  mod.def(
      "verify_relations",
      [](int n, const std::string& family) {
        RelationFamily fam;
        if (family == "A") fam = RelationFamily::A;
        else if (family == "R") fam = RelationFamily::R;
        else if (family == "V") fam = RelationFamily::V;
        else if (family == "AV") fam = RelationFamily::AV;
        else throw std::invalid_argument("unknown family: " + family);
        auto rrep = check_rho_respects(n, fam);
        auto prep = check_phi_well_defined(n, fam);
        py::dict d;
        d["relations"] = rrep.total;
        d["rho_pass"] = rrep.pass();
        d["phi_failures"] = prep.failures;
        d["phi_unknowns"] = prep.unknowns;
        d["multiplicativity_pass"] = prep.multiplicativity_pass;
        d["pass"] = rrep.pass() && prep.pass();
        return d;
      },
      py::arg("n"), py::arg("family"));
}
