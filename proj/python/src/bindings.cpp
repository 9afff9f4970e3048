#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "cwforest/classical.hpp"
#include "cwforest/error.hpp"
#include "cwforest/forest.hpp"
#include "cwforest/matrix.hpp"
#include "cwforest/verify.hpp"

namespace py = pybind11;
using namespace cwforest;

namespace {

py::object to_py_int(const BigInt& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

BigInt to_bigint(const py::int_& x) { return BigInt(py::str(py::handle(x)).cast<std::string>()); }

// Accepts int, str ("a" or "a/b") or anything with integer numerator and
// denominator attributes, such as fractions.Fraction.
Rational to_rational(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) {
    return Rational::parse(obj.cast<std::string>());
  }
  if (py::isinstance<py::bool_>(obj)) {
    throw DomainError("booleans are not rationals");
  }
  if (py::isinstance<py::int_>(obj)) {
    return Rational::make(to_bigint(obj.cast<py::int_>()), BigInt(1));
  }
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return Rational::make(to_bigint(obj.attr("numerator").cast<py::int_>()),
                          to_bigint(obj.attr("denominator").cast<py::int_>()));
  }
  throw DomainError("cannot interpret " + py::repr(obj).cast<std::string>() + " as a positive rational");
}

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(q.numer()), to_py_int(q.denom()));
}

py::list to_fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const Rational& q : values) {
    out.append(to_fraction(q));
  }
  return out;
}

py::tuple to_tuple(const Mat2& m) {
  return py::make_tuple(py::make_tuple(to_py_int(m.a11()), to_py_int(m.a12())),
                        py::make_tuple(to_py_int(m.a21()), to_py_int(m.a22())));
}

py::dict to_dict(const VerificationReport& r) {
  py::dict d;
  d["claim"] = std::string(to_string(r.claim));
  d["u"] = to_py_int(r.u);
  d["v"] = to_py_int(r.v);
  if (r.root) {
    d["root"] = to_fraction(*r.root);
  }
  d["bound"] = r.bound;
  d["passed"] = r.passed;
  d["checked_count"] = r.checked_count;
  if (r.first_failure) {
    d["first_failure"] = *r.first_failure;
  }
  return d;
}

ForestConfig config(const py::int_& u, const py::int_& v) { return ForestConfig(to_bigint(u), to_bigint(v)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of the forests of rational trees generated by L_u and R_v";

  py::register_exception<LimitError>(m, "LimitError", PyExc_RuntimeError);

  m.def("height", [](const py::object& q) { return to_py_int(height(to_rational(q))); });
  m.def("continued_fraction", [](const py::object& q) {
    py::list out;
    for (const BigInt& t : continued_fraction(to_rational(q))) {
      out.append(to_py_int(t));
    }
    return out;
  });

  m.def("mat_L", [](const py::int_& u) { return to_tuple(mat_L(to_bigint(u))); });
  m.def("mat_R", [](const py::int_& v) { return to_tuple(mat_R(to_bigint(v))); });
  m.def(
      "word_to_matrix",
      [](const std::string& word, const py::int_& u, const py::int_& v) {
        return to_tuple(word_to_matrix(PathWord::parse(word), to_bigint(u), to_bigint(v)));
      },
      py::arg("word"), py::arg("u"), py::arg("v"));
  m.def(
      "freeness_probe",
      [](const py::int_& u, const py::int_& v, std::size_t max_length) {
        FreenessReport r = freeness_probe(to_bigint(u), to_bigint(v), max_length);
        py::dict d;
        d["distinct"] = r.distinct;
        d["word_count"] = r.word_count;
        d["max_length"] = r.max_length;
        d["collision"] = r.collision ? py::object(py::make_tuple(r.collision->first.to_string(),
                                                                 r.collision->second.to_string()))
                                     : py::object(py::none());
        return d;
      },
      py::arg("u"), py::arg("v"), py::arg("max_length"));

  m.def(
      "children",
      [](const py::int_& u, const py::int_& v, const py::object& w) {
        Children c = children(config(u, v), to_rational(w));
        return py::make_tuple(to_fraction(c.left), to_fraction(c.right));
      },
      py::arg("u"), py::arg("v"), py::arg("w"));
  m.def(
      "vertex_at",
      [](const py::int_& u, const py::int_& v, const py::object& root, std::size_t row_n, const py::int_& index) {
        return to_fraction(vertex_at(config(u, v), to_rational(root), TreeAddress(row_n, to_bigint(index))));
      },
      py::arg("u"), py::arg("v"), py::arg("root"), py::arg("row"), py::arg("index"));
  m.def(
      "row",
      [](const py::int_& u, const py::int_& v, const py::object& root, std::size_t n, std::size_t max_row) {
        return to_fractions(row(config(u, v), to_rational(root), n, max_row));
      },
      py::arg("u"), py::arg("v"), py::arg("root"), py::arg("n"), py::arg("max_row") = kDefaultMaxRow);
  m.def(
      "is_orphan", [](const py::int_& u, const py::int_& v, const py::object& q) {
        return is_orphan(config(u, v), to_rational(q));
      },
      py::arg("u"), py::arg("v"), py::arg("q"));
  m.def(
      "parent",
      [](const py::int_& u, const py::int_& v, const py::object& q) -> py::object {
        auto step = parent(config(u, v), to_rational(q));
        if (!step) {
          return py::none();
        }
        return py::make_tuple(to_fraction(step->parent), step->side == Letter::L ? "L" : "R");
      },
      py::arg("u"), py::arg("v"), py::arg("q"));
  m.def(
      "decompose",
      [](const py::int_& u, const py::int_& v, const py::object& q) {
        Location loc = decompose(config(u, v), to_rational(q));
        py::dict d;
        d["root"] = to_fraction(loc.root);
        d["path"] = loc.word.to_string();
        d["row"] = loc.address.row();
        d["index"] = to_py_int(loc.address.index());
        return d;
      },
      py::arg("u"), py::arg("v"), py::arg("q"));

  m.def(
      "cw_vertex",
      [](std::size_t row_n, const py::int_& index) {
        return to_fraction(classical::cw_vertex(TreeAddress(row_n, to_bigint(index))));
      },
      py::arg("row"), py::arg("index"));
  m.def("newman_successor", [](const py::object& q) { return to_fraction(classical::newman_successor(to_rational(q))); });
  m.def("cw_row_of", [](const py::object& q) { return to_py_int(classical::cw_row_of(to_rational(q))); });
  m.def("check_denominator_chain", [](std::size_t n) { return classical::check_denominator_chain(n); });

  m.def(
      "verify_symmetry",
      [](const py::int_& u, const py::int_& v, const py::object& z, std::size_t max_row) {
        return to_dict(verify_symmetry(to_bigint(u), to_bigint(v), to_rational(z), max_row));
      },
      py::arg("u"), py::arg("v"), py::arg("z"), py::arg("max_row"));
  m.def(
      "verify_self_symmetry",
      [](const py::int_& u, std::size_t max_row) { return to_dict(verify_self_symmetry(to_bigint(u), max_row)); },
      py::arg("u"), py::arg("max_row"));
  m.def(
      "verify_partition",
      [](const py::int_& u, const py::int_& v, std::uint64_t height_bound) {
        return to_dict(verify_partition(to_bigint(u), to_bigint(v), height_bound));
      },
      py::arg("u"), py::arg("v"), py::arg("height_bound"));
  m.def(
      "verify_range",
      [](const py::int_& u, const py::int_& v, std::uint64_t height_bound) {
        return to_dict(verify_range(to_bigint(u), to_bigint(v), height_bound));
      },
      py::arg("u"), py::arg("v"), py::arg("height_bound"));
  m.def(
      "verify_freeness",
      [](const py::int_& u, const py::int_& v, std::size_t max_length) {
        return to_dict(verify_freeness(to_bigint(u), to_bigint(v), max_length));
      },
      py::arg("u"), py::arg("v"), py::arg("max_length"));
}
