#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ntdice/dice.hpp"
#include "ntdice/error.hpp"
#include "ntdice/factorization.hpp"
#include "ntdice/tournament.hpp"

namespace py = pybind11;
using namespace ntdice;

namespace {

py::object to_fraction(const Probability& p) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(p.numerator(), p.denominator());
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  return edges;
}

std::vector<std::pair<int, int>> edge_tuples(const Tournament& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : t.edges()) out.emplace_back(e.from, e.to);
  return out;
}

py::dict matchup_dict(const Matchup& m) {
  py::dict d;
  d["wins"] = py::make_tuple(m.wins_a_over_b, m.wins_b_over_a);
  d["probability"] = to_fraction(m.probability_a_beats_b);
  return d;
}

TournamentFormat tournament_format(const std::string& name) {
  if (name == "json") return TournamentFormat::Json;
  if (name == "matrix") return TournamentFormat::Matrix;
  throw py::value_error("format must be 'json' or 'matrix'");
}

DiceFormat dice_format(const std::string& name) {
  if (name == "json") return DiceFormat::Json;
  if (name == "csv") return DiceFormat::Csv;
  if (name == "table") return DiceFormat::Table;
  throw py::value_error("format must be 'json', 'csv' or 'table'");
}

}  // namespace

PYBIND11_MODULE(ntdice, m) {
  m.doc() = "Construct sets of dice realizing any tournament and verify them exactly";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Tournament>(m, "Tournament")
      .def_property_readonly("n", &Tournament::n)
      .def("beats", &Tournament::beats, py::arg("i"), py::arg("j"))
      .def("out_degree", &Tournament::out_degree)
      .def("edges", &edge_tuples, "Edges (winner, loser) in lexicographic pair order")
      .def(py::self == py::self)
      .def("__repr__", [](const Tournament& t) { return "<Tournament n=" + std::to_string(t.n()) + ">"; });

  m.def("from_edges", [](int n, const std::vector<std::pair<int, int>>& beats) {
    return from_edges(n, to_edges(beats));
  }, py::arg("n"), py::arg("beats"));
  m.def("transitive", &transitive, py::arg("n"));
  m.def("almost_transitive", &almost_transitive, py::arg("n"));
  m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
  m.def("paley", &paley, py::arg("p"));
  m.def("parse_tournament", [](const std::string& text, const std::string& format) {
    return parse_tournament(text, tournament_format(format));
  }, py::arg("text"), py::arg("format") = "json");
  m.def("serialize_tournament", [](const Tournament& t, const std::string& format) {
    return serialize(t, tournament_format(format));
  }, py::arg("t"), py::arg("format") = "json");

  py::class_<OneFactorization>(m, "OneFactorization")
      .def_property_readonly("n", &OneFactorization::n)
      .def_property_readonly("parity", [](const OneFactorization& f) {
        return f.parity() == Parity::Odd ? "odd" : "even";
      })
      .def_property_readonly("rounds", [](const OneFactorization& f) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& r : f.rounds()) {
          auto& row = out.emplace_back();
          for (const auto& p : r) row.emplace_back(p.lo, p.hi);
        }
        return out;
      })
      .def("table", [](const OneFactorization& f) { return serialize(f, FactorFormat::Table); });

  m.def("odd_rounds", &odd_rounds, py::arg("n"));
  m.def("even_rounds", &even_rounds, py::arg("n"));
  m.def("position_of", [](const OneFactorization& f, int round, int vertex) {
    return position_of(f, round, vertex).column;
  }, py::arg("f"), py::arg("round"), py::arg("vertex"), "Column of the vertex in the round, or None");
  m.def("verify_partition", [](const OneFactorization& f) {
    const auto r = verify_partition(f);
    py::dict d;
    d["ok"] = r.ok();
    d["partition"] = r.partition_ok;
    d["matchings"] = r.matchings_ok;
    d["coverage"] = r.coverage_ok;
    d["twice_per_column"] = r.twice_per_column_ok;
    d["failures"] = r.failures;
    return d;
  });
  m.def("left_count", [](const OneFactorization& f, int w, int x) {
    const auto c = left_count(f, w, x);
    return py::make_tuple(c.less, c.greater, c.ties);
  }, py::arg("f"), py::arg("w"), py::arg("x"), "(less, greater, ties)");

  py::class_<DiceSet>(m, "DiceSet")
      .def(py::init([](std::vector<Die> dice) { return make_dice_set(std::move(dice)); }), py::arg("dice"))
      .def_readonly("n", &DiceSet::n)
      .def_readonly("sides", &DiceSet::k)
      .def_readonly("dice", &DiceSet::dice)
      .def(py::self == py::self)
      .def("__repr__", [](const DiceSet& d) {
        return "<DiceSet n=" + std::to_string(d.n) + " sides=" + std::to_string(d.k) + ">";
      });

  m.def("build_dice", &build_dice, py::arg("t"));
  m.def("dominance", &dominance, py::arg("dice"));
  m.def("face_wins", [](const Die& a, const Die& b) { return face_wins(a, b); });
  m.def("matchup", [](const Die& a, const Die& b) { return matchup_dict(matchup(a, b)); });
  m.def("is_balanced", &is_balanced);
  m.def("compact_labels", &compact_labels);
  m.def("side_count", &side_count);
  m.def("verify", [](const DiceSet& d, const Tournament& t) {
    const auto r = verify(d, t);
    py::dict out;
    out["realized"] = r.realized;
    out["balanced"] = r.balance_ok;
    out["failures"] = r.failures;
    return out;
  });
  m.def("guaranteed_wins_audit", [](const DiceSet& d, const Tournament& t) {
    const auto r = guaranteed_wins_audit(d, t);
    py::dict out;
    out["ok"] = r.ok;
    out["loser_wins"] = r.expected_loser_wins;
    out["winner_wins"] = r.expected_winner_wins;
    out["failures"] = r.failures;
    return out;
  });
  m.def("serialize_dice", [](const DiceSet& d, const std::string& format) {
    return serialize(d, dice_format(format));
  }, py::arg("dice"), py::arg("format") = "json");
  m.def("parse_dice", [](const std::string& text, const std::string& format) {
    return parse_dice(text, dice_format(format));
  }, py::arg("text"), py::arg("format") = "json");
}
