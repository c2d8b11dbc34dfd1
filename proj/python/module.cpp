#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "bvs/plabic3d.hpp"
#include "bvs/seeds.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace bvs;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

py::list matrix(const RationalMatrix& m) {
  py::list rows;
  for (const auto& row : m) {
    py::list out;
    for (const auto& x : row) out.append(fraction(x));
    rows.append(out);
  }
  return rows;
}

py::dict seed_dict(const Seed& s) {
  py::dict d;
  py::list vars;
  for (const Poly& p : s.variables) vars.append(p.to_string());
  d["indices"] = s.indices;
  d["variables"] = vars;
  d["frozen"] = s.frozen;
  d["epsilon"] = matrix(s.epsilon);
  return d;
}

MoveKind move_kind(const std::string& s) { return parse_move_kind(s); }

}  // namespace

PYBIND11_MODULE(bvseed, m) {
  m.doc() = "Cluster seeds of double braid varieties";

  py::register_exception<SeedError>(m, "SeedError", PyExc_ValueError);

  m.def(
      "to_single",
      [](const DoubleBraidWord& b, const std::string& cartan) { return to_single(cli::parse_cartan(cartan), b); },
      py::arg("word"), py::arg("cartan") = "A2");
  m.def(
      "solid_indices",
      [](const DoubleBraidWord& b, const std::string& cartan) { return solid_indices(cli::parse_cartan(cartan), b); },
      py::arg("word"), py::arg("cartan") = "A2");
  m.def(
      "seed",
      [](const DoubleBraidWord& b, const std::string& cartan) { return seed_dict(make_seed(cli::parse_cartan(cartan), b)); },
      py::arg("word"), py::arg("cartan") = "A2");
  m.def(
      "seed_json",
      [](const DoubleBraidWord& b, const std::string& cartan, bool opposite) {
        return seed_json(make_seed(cli::parse_cartan(cartan), b), opposite);
      },
      py::arg("word"), py::arg("cartan") = "A2", py::arg("opposite_quiver") = false);
  m.def(
      "mutate",
      [](const DoubleBraidWord& b, int e, const std::string& cartan) {
        return seed_dict(mutate(make_seed(cli::parse_cartan(cartan), b), e));
      },
      py::arg("word"), py::arg("index"), py::arg("cartan") = "A2");
  m.def(
      "exchange_forms",
      [](const DoubleBraidWord& b, const std::string& cartan) {
        SeedPipeline p = build_pipeline(cli::parse_cartan(cartan), b);
        return py::make_tuple(matrix(weave_exchange(p)), matrix(deodhar_exchange(p)));
      },
      py::arg("word"), py::arg("cartan") = "A2", "(weave form, Deodhar form) as Fraction matrices");
  m.def(
      "verify",
      [](const DoubleBraidWord& b, const std::string& cartan, int points, unsigned long seed) {
        std::mt19937_64 rng(seed);
        VerifyOptions opt;
        opt.points = points;
        VerifyReport r = verify_main_theorem(cli::parse_cartan(cartan), b, rng, opt);
        py::dict d;
        d["ok"] = r.ok();
        d["tori"] = r.tori;
        d["variables"] = r.vars;
        d["cross_route"] = r.cross_route;
        d["forms"] = r.forms;
        d["torus_points"] = r.torus_points;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("word"), py::arg("cartan") = "A2", py::arg("points") = 20, py::arg("seed") = 1);
  m.def(
      "check_move",
      [](const DoubleBraidWord& b, const std::string& kind, int position, const std::string& cartan) {
        MoveReport r = check_move(cli::parse_cartan(cartan), b, move_kind(kind), position);
        py::dict d;
        d["word"] = r.move.word;
        d["expected"] = r.expected;
        d["mutation_index"] = r.mutation_index;
        d["verified"] = r.verified;
        return d;
      },
      py::arg("word"), py::arg("kind"), py::arg("position") = 1, py::arg("cartan") = "A2");
  m.def(
      "plabic_solidity", [](const DoubleBraidWord& b, int rank) { return scan_solidity({rank, b}); }, py::arg("word"),
      py::arg("rank"));
  m.def(
      "compile_plabic",
      [](const DoubleBraidWord& b, int rank) {
        Weave w = compile_weave({rank, b});
        std::vector<Word> slices;
        for (int d = 0; d <= w.depth(); ++d) slices.push_back(w.slice_word(d));
        return slices;
      },
      py::arg("word"), py::arg("rank"), "slice words of the compiled weave, depth 0 first");
  m.def(
      "slice_pairing_matrix",
      [](const IntMatrix& a, const std::vector<long>& d, const Word& word) {
        return slice_pairing_matrix(cartan_from_matrix(a, d), word);
      },
      py::arg("cartan_matrix"), py::arg("symmetrizers"), py::arg("word"));
}
