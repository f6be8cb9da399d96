// Python bindings for the chevalley core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chevalley/adjoint.hpp"
#include "chevalley/checks.hpp"
#include "chevalley/chevalley_group.hpp"
#include "chevalley/lie_closure.hpp"
#include "chevalley/serialize.hpp"

namespace py = pybind11;
using namespace chevalley;

namespace {

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(to_py(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::tuple to_py(const Root& r) { return py::tuple(py::cast(r.coords)); }

Root to_root(const std::vector<int>& coords) { return Root{coords}; }

std::string type_name(const RootSystem& rs) {
  const auto [t, r] = identify_type(rs);
  return std::string(1, t) + std::to_string(r);
}

SignFunction sign_from(const RootSystem& rs, const std::optional<std::string>& eps) {
  if (!eps) return two_colorings(rs.cartan()).first;
  return SignFunction::parse(rs.cartan(), *eps);
}

IntMatrix generator(const RootSystem& rs, const std::string& name) {
  if (name == "omega") return build_omega(rs);
  if (name.size() >= 2 && (name[0] == 'e' || name[0] == 'f' || name[0] == 'h')) {
    std::size_t i = 0;
    try {
      i = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw UsageError("unknown generator '" + name + "'");
    }
    if (i == 0 || i > rs.rank()) throw UsageError("generator index out of range in '" + name + "'");
    if (name[0] == 'e') return build_e(rs, i - 1);
    if (name[0] == 'f') return build_f(rs, i - 1);
    return build_h(rs, i - 1);
  }
  throw UsageError("unknown generator '" + name + "' (use e<i>, f<i>, h<i> or omega)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chevalley bases and Chevalley groups from a Cartan matrix";

  static py::exception<Error> error(m, "ChevalleyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidCartan& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UnknownRoot& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& type) { return RootSystem(CartanMatrix::from_type(type)); }),
           py::arg("type"))
      .def_static(
          "from_cartan",
          [](const std::vector<std::vector<long>>& rows) { return RootSystem(CartanMatrix::from_entries(rows)); },
          py::arg("cartan"))
      .def_property_readonly("type", &type_name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("num_positive", &RootSystem::num_positive)
      .def_property_readonly("cartan", [](const RootSystem& rs) { return rs.cartan().rows(); })
      .def_property_readonly("symmetrizer", [](const RootSystem& rs) { return rs.cartan().symmetrizer(); })
      .def_property_readonly("roots",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (const Root& r : rs.roots()) out.append(to_py(r));
                               return out;
                             })
      .def("__len__", &RootSystem::size)
      .def("__contains__", [](const RootSystem& rs, const std::vector<int>& c) { return rs.contains(Root{c}); })
      .def("pairing", [](const RootSystem& rs, const std::vector<int>& b, const std::vector<int>& a) {
        return rs.pairing(to_root(b), to_root(a));
      })
      .def("root_string",
           [](const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
             const RootString s = rs.root_string(to_root(a), to_root(b));
             return py::make_tuple(s.p, s.q);
           })
      .def("reflect", [](const RootSystem& rs, std::size_t i,
                         const std::vector<int>& b) { return to_py(rs.reflect(i - 1, to_root(b))); })
      .def("weyl_word",
           [](const RootSystem& rs, const std::vector<int>& a) {
             const WeylWord w = rs.weyl_word(to_root(a));
             std::vector<std::size_t> word;
             for (std::size_t i : w.word) word.push_back(i + 1);
             return py::make_tuple(word, w.base + 1);
           })
      .def("to_json", [](const RootSystem& rs, bool pairings) { return root_system_to_json(rs, pairings).dump(); },
           py::arg("pairings") = false)
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + type_name(rs) + "')"; });

  m.def(
      "adjoint_matrix", [](const RootSystem& rs, const std::string& gen) { return to_py(generator(rs, gen)); },
      py::arg("rs"), py::arg("generator"), "Matrix of e<i>, f<i>, h<i> or omega on the adjoint model.");

  m.def(
      "model_basis",
      [](const RootSystem& rs) { return ModelBasis(rs).legend(rs); }, py::arg("rs"),
      "Labels of the basis of the adjoint model in matrix order.");

  m.def(
      "lie_algebra_dimension", [](const RootSystem& rs) { return generate_lie_algebra(rs).dimension(); },
      py::arg("rs"));

  py::class_<ChevalleyBasis>(m, "ChevalleyBasis")
      .def_property_readonly("epsilon", [](const ChevalleyBasis& b) { return b.epsilon().to_string(); });

  m.def(
      "chevalley_basis",
      [](const RootSystem& rs, const std::optional<std::string>& eps) {
        return build_chevalley_basis(rs, sign_from(rs, eps));
      },
      py::arg("rs"), py::arg("epsilon") = py::none());

  m.def(
      "root_vector",
      [](const RootSystem& rs, const ChevalleyBasis& b, const std::vector<int>& alpha) {
        return to_py(b.e(rs.index_of(to_root(alpha))));
      },
      py::arg("rs"), py::arg("basis"), py::arg("alpha"));

  m.def(
      "structure_constants",
      [](const RootSystem& rs, const ChevalleyBasis& b) {
        py::dict out;
        for (const auto& [key, n] : structure_constants(rs, b).entries) {
          out[py::make_tuple(to_py(rs.root(key.first)), to_py(rs.root(key.second)))] = to_py(n);
        }
        return out;
      },
      py::arg("rs"), py::arg("basis"), "N[(alpha, beta)] with [e_alpha, e_beta] = N e_(alpha+beta).");

  m.def(
      "g2_table", [](const RootSystem& rs, const ChevalleyBasis& b) { return g2_table(rs, b); }, py::arg("rs"),
      py::arg("basis"));

  m.def(
      "group_order",
      [](const RootSystem& rs, std::uint64_t q, std::optional<std::uint64_t> cap) {
        GroupEnumeration g = [&] {
          py::gil_scoped_release release;
          return generate_group_bfs(rs, RingSpec::prime_field(q), cap.value_or(default_bfs_cap()));
        }();
        return g.order();
      },
      py::arg("rs"), py::arg("q"), py::arg("cap") = py::none(), "Order of G over GF(q) by breadth-first search.");

  m.def(
      "order_formula",
      [](const RootSystem& rs, std::uint64_t q) {
        const auto [t, r] = identify_type(rs);
        return to_py(classical_order_oracle(t, r, q));
      },
      py::arg("rs"), py::arg("q"));

  m.def(
      "verify",
      [](const RootSystem& rs, std::uint64_t seed) {
        VerifyOptions options;
        options.seed = seed;
        py::list out;
        for (const CheckResult& r : run_verification(rs, options)) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("rs"), py::arg("seed") = 1, "(name, passed, detail) for every check.");
}
