#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "relpoly/error.hpp"
#include "relpoly/io.hpp"
#include "relpoly/polyhedra.hpp"
#include "relpoly/repmod.hpp"
#include "relpoly/tiling.hpp"

namespace py = pybind11;
using namespace relpoly;

namespace {

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw Error(ErrorCode::InvalidArgument, "booleans are not numbers");
  return parse_rational(py::str(h).cast<std::string>());
}

Entry to_entry(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return io::parse_entry(h.cast<std::string>(), {});
  return Entry(to_rational(h));
}

WeightVector to_weight(const py::sequence& xs) {
  WeightVector w;
  for (const auto& x : xs) w.components.push_back(to_rational(x));
  return w;
}

// Rows listed top first; entries are ints, Fractions or rational strings.
Pattern pattern_from_rows(const std::vector<py::sequence>& rows) {
  std::vector<std::vector<Entry>> out;
  for (const auto& r : rows) {
    std::vector<Entry> row;
    for (const auto& e : r) row.push_back(to_entry(e));
    out.push_back(std::move(row));
  }
  return Pattern::from_rows(out);
}

py::list pattern_rows(const Pattern& x) {
  py::list rows;
  for (int k = x.n(); k >= 1; --k) {
    py::list row;
    for (const Entry& e : x.row(k)) {
      if (e.is_rational())
        row.append(fraction(e.rational()));
      else
        row.append(e.to_string());
    }
    rows.append(row);
  }
  return rows;
}

StandardVariant variant_of(const std::string& name) {
  if (name == "plus") return StandardVariant::Plus;
  if (name == "minus") return StandardVariant::Minus;
  if (name == "both") return StandardVariant::Both;
  if (name == "empty") return StandardVariant::Empty;
  throw Error(ErrorCode::InvalidArgument, "variant must be plus, minus, both or empty");
}

Slice slice_of(const std::string& name) {
  if (name == "full") return Slice::Full;
  if (name == "top") return Slice::Top;
  if (name == "weight") return Slice::TopWeight;
  throw Error(ErrorCode::InvalidArgument, "slice must be full, top or weight");
}

py::dict lincomb_dict(const LinComb& v) {
  py::dict out;
  for (const auto& [m, c] : v.terms()) out[py::str(io::format_pattern_line(m))] = fraction(c);
  return out;
}

LinComb lincomb_of(const py::dict& terms) {
  LinComb v;
  for (const auto& [key, value] : terms) v.add(io::parse_pattern_line(key.cast<std::string>()), to_rational(value));
  return v;
}

py::dict point_set(const IntegralPointSet& s) {
  py::dict out;
  out["count"] = s.count;
  py::list points;
  for (const auto& p : s.points) points.append(io::format_pattern_line(p));
  out["points"] = points;
  return out;
}

}  // namespace

PYBIND11_MODULE(_relpoly, m) {
  m.doc() = "Relation sets, tilings and Gelfand-Tsetlin type polyhedra";

  static py::exception<Error> error_type(m, "RelpolyError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<RelationSet>(m, "RelationSet")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, int, int>>& arrows) {
             std::vector<Relation> rel;
             for (auto [i, j, r, s] : arrows) rel.push_back({{i, j}, {r, s}});
             return RelationSet(n, std::move(rel));
           }),
           py::arg("n"), py::arg("relations"))
      .def_property_readonly("n", &RelationSet::n)
      .def_property_readonly("relations",
                             [](const RelationSet& c) {
                               std::vector<std::tuple<int, int, int, int>> out;
                               for (const auto& r : c.relations())
                                 out.emplace_back(r.src.row, r.src.col, r.dst.row, r.dst.col);
                               return out;
                             })
      .def("reaches", [](const RelationSet& c, std::pair<int, int> a,
                         std::pair<int, int> b) { return c.reaches({a.first, a.second}, {b.first, b.second}); })
      .def("to_text", &io::format_relations)
      .def("__len__", &RelationSet::size)
      .def("__eq__", [](const RelationSet& a, const RelationSet& b) { return a == b; })
      .def("__repr__", [](const RelationSet& c) {
        return "RelationSet(n=" + std::to_string(c.n()) + ", " + std::to_string(c.size()) + " relations)";
      });

  py::class_<Pattern>(m, "Pattern")
      .def(py::init(&pattern_from_rows), py::arg("rows"))
      .def_property_readonly("n", &Pattern::n)
      .def_property_readonly("rows", &pattern_rows)
      .def("to_text", &io::format_pattern)
      .def("__str__", &io::format_pattern_line)
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__repr__", [](const Pattern& x) { return "Pattern(" + io::format_pattern_line(x) + ")"; });

  m.def("standard_set", [](int n, int k, const std::string& variant) { return standard_set(n, k, variant_of(variant)); },
        py::arg("n"), py::arg("k"), py::arg("variant") = "both");
  m.def("parse_relations", &io::parse_relations, py::arg("text"));
  m.def("parse_pattern", &io::parse_pattern, py::arg("text"));
  m.def("parse_pattern_line", [](const std::string& text) { return io::parse_pattern_line(text); });

  m.def("is_reduced", [](const RelationSet& c) { return is_reduced(c).reduced; });
  m.def("is_top_connected", &is_top_connected);
  m.def("check_admissible", [](const RelationSet& c) {
    auto adm = check_admissible(c);
    py::dict out;
    out["status"] = std::string(to_string(adm.status));
    if (adm.witness)
      out["witness"] = py::make_tuple(py::make_tuple(adm.witness->first.row, adm.witness->first.col),
                                      py::make_tuple(adm.witness->second.row, adm.witness->second.col));
    if (!adm.reason.empty()) out["reason"] = adm.reason;
    return out;
  });

  m.def("tiling", [](const RelationSet& c, const Pattern& x) {
    auto t = compute_tiling(c, x);
    py::list tiles;
    for (const auto& tile : t.tiles) {
      py::list vs;
      for (VertexId v : tile) vs.append(py::make_tuple(v.row, v.col));
      tiles.append(vs);
    }
    py::dict out;
    out["tiles"] = tiles;
    out["lambda1_free_count"] = t.lambda1_free_count;
    return out;
  });
  m.def("tiling_matrix", [](const RelationSet& c, const Pattern& x) { return tiling_matrix(c, x).a; });
  m.def("min_face_dims", [](const RelationSet& c, const Pattern& x) {
    auto d = min_face_dims(c, x);
    return py::make_tuple(d.d, d.s, d.r);
  });
  m.def("min_face_dims_plus", [](const RelationSet& c, const Pattern& x) -> py::object {
    auto plus = min_face_dims_plus(c, x);
    if (const auto* p = std::get_if<PlusFaceDims>(&plus)) return py::make_tuple(p->s, p->r);
    return py::none();
  });
  m.def(
      "face_dim_oracle",
      [](const RelationSet& c, const Pattern& x, const std::string& slice, bool plus) {
        return face_dim_oracle(system_at(c, x, slice_of(slice), plus), x);
      },
      py::arg("c"), py::arg("x"), py::arg("slice") = "full", py::arg("plus") = false);

  m.def("is_polytope", [](const RelationSet& c) { return is_polytope(c).bounded; });
  m.def(
      "enumerate_integral",
      [](const RelationSet& c, const Pattern& l, std::optional<std::size_t> limit) {
        return point_set(enumerate_integral(c, l, {limit}));
      },
      py::arg("c"), py::arg("l"), py::arg("limit") = py::none());
  m.def(
      "enumerate_integral_weight",
      [](const RelationSet& c, const Pattern& l, const py::sequence& mu, std::optional<std::size_t> limit) {
        return point_set(enumerate_integral_weight(c, l, to_weight(mu), {limit}));
      },
      py::arg("c"), py::arg("l"), py::arg("mu"), py::arg("limit") = py::none());
  m.def("constant_column_pattern", [](const py::sequence& lam) { return constant_column_pattern(to_weight(lam)); });
  m.def("weyl_dim", [](const py::sequence& lam) { return py::int_(py::str(weyl_dim(to_weight(lam)).get_str())); });

  m.def(
      "act",
      [](const RelationSet& c, const Pattern& l, std::pair<int, int> generator, const py::dict& terms, bool strict,
         bool force) {
        auto g = GeneratorId::from_matrix_unit(generator.first, generator.second, c.n());
        auto result = act_in_basis(c, l, g, lincomb_of(terms),
                                   ActOptions{!force, strict ? LeakPolicy::Strict : LeakPolicy::Truncate});
        return lincomb_dict(result.value);
      },
      py::arg("c"), py::arg("l"), py::arg("generator"), py::arg("terms"), py::arg("strict") = false,
      py::arg("force") = false);
  m.def("check_commutators", [](const RelationSet& c, const Pattern& l, const std::vector<Pattern>& sample) {
    auto report = check_commutators(c, l, sample);
    py::list failures;
    for (const auto& f : report.failures) failures.append(py::make_tuple(f.identity, io::format_pattern_line(f.vector)));
    py::dict out;
    out["checks"] = report.checks;
    out["failures"] = failures;
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
