#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mcq/charney.hpp"
#include "mcq/chowfy.hpp"
#include "mcq/errors.hpp"
#include "mcq/eulerian.hpp"
#include "mcq/matroid.hpp"
#include "mcq/permstat.hpp"
#include "mcq/qsym.hpp"
#include "mcq/rankselect.hpp"
#include "mcq/verify.hpp"

namespace py = pybind11;
using namespace mcq;

namespace {

py::object py_int(const Int& v) {
    // arbitrary precision: round-trip through the decimal string
    return py::int_(py::str(v.str()));
}

py::list qpoly_py(const QPoly& p) {
    py::list out;
    for (const auto& [e, c] : p.coeffs()) out.append(py::make_tuple(e, py_int(c)));
    return out;
}

py::list laurent_py(const LaurentQT& f) {
    py::list out;
    for (const auto& [t, c] : f.coeffs()) out.append(py::make_tuple(t, qpoly_py(c)));
    return out;
}

py::list qsym_py(const QSymElem& x) {
    py::list out;
    for (const auto& [deg, terms] : x.graded())
        for (const auto& [s, c] : terms)
            out.append(py::make_tuple(deg, subset_to_list(s), laurent_py(c)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_mcq, m) {
    m.doc() = "Exact Hilbert/Frobenius series and Charney-Davis quantities of "
              "Chow rings of matroids";

    py::register_exception<identity_error>(m, "IdentityError");
    py::register_exception<validation_error>(m, "ValidationError");
    py::register_exception<resource_error>(m, "ResourceError");

    py::class_<MatroidFlats>(m, "Matroid")
        .def_property_readonly("ground", &MatroidFlats::ground)
        .def_property_readonly("rank", &MatroidFlats::rank)
        .def("num_flats",
             [](const MatroidFlats& mm) { return mm.flats().size(); })
        .def("hilb",
             [](const MatroidFlats& mm, bool aug) { return laurent_py(hilb(mm, aug)); },
             py::arg("aug") = false)
        .def("hilb_str",
             [](const MatroidFlats& mm, bool aug) { return hilb(mm, aug).str(); },
             py::arg("aug") = false)
        .def("cd",
             [](const MatroidFlats& mm, bool aug) { return py_int(cd(mm, aug)); },
             py::arg("aug") = false)
        .def("flag_h",
             [](const MatroidFlats& mm, const std::vector<int>& s) {
                 return py_int(flag_h(mm, list_to_subset(s)));
             })
        .def("cd_character",
             [](const MatroidFlats& mm, const std::string& cycles, bool aug) {
                 return py_int(cd_character(mm, parse_cycles(cycles, mm.ground()), aug));
             },
             py::arg("cycles"), py::arg("aug") = false);

    m.def("uniform_matroid", &uniform_matroid, py::arg("r"), py::arg("n"));
    m.def("matroid_from_json", &from_flats_json, py::arg("text"));
    m.def("matroid_from_file", &from_flats_file, py::arg("path"));

    m.def("hilb_q_uniform",
          [](int r, int n, bool aug) { return laurent_py(hilb_q_uniform(r, n, aug)); },
          py::arg("r"), py::arg("n"), py::arg("aug") = false);
    m.def("hilb_q_uniform_str",
          [](int r, int n, bool aug) { return hilb_q_uniform(r, n, aug).str(); },
          py::arg("r"), py::arg("n"), py::arg("aug") = false);
    m.def("grfrob_uniform",
          [](int r, int n, bool aug) { return qsym_py(grfrob_uniform(r, n, aug)); },
          py::arg("r"), py::arg("n"), py::arg("aug") = false);
    m.def("grfrob_uniform_latex",
          [](int r, int n, bool aug) { return grfrob_uniform(r, n, aug).latex(); },
          py::arg("r"), py::arg("n"), py::arg("aug") = false);

    m.def("eulerian_A", [](int n, bool q) {
              return (q ? eulerian_A_q(n) : eulerian_A(n)).str();
          },
          py::arg("n"), py::arg("q") = false);
    m.def("eulerian_d", [](int n, bool q) {
              return (q ? eulerian_d_q(n) : eulerian_d(n)).str();
          },
          py::arg("n"), py::arg("q") = false);
    m.def("eulerian_binomial", [](int n, bool q) {
              return (q ? eulerian_binomial_q(n) : eulerian_binomial(n)).str();
          },
          py::arg("n"), py::arg("q") = false);

    m.def("cd_report", [](int r, int n, bool aug) {
              auto rep = cd_report(r, n, aug);
              py::dict d;
              d["r"] = rep.r;
              d["n"] = rep.n;
              d["augmented"] = rep.augmented;
              d["eval"] = qpoly_py(rep.eval);
              d["descents"] = qpoly_py(rep.descents);
              d["secant"] = qpoly_py(rep.secant);
              d["determinant"] = qpoly_py(rep.determinant);
              d["normalized"] = qpoly_py(rep.normalized);
              d["normalized_str"] = rep.normalized.str();
              d["agreement"] = rep.agreement;
              return d;
          },
          py::arg("r"), py::arg("n"), py::arg("aug") = false);

    m.def("verify", [](const std::string& suite, int max_n) {
              py::list out;
              bool all_pass = true;
              for (const auto& rep : run_suites(suite, max_n))
                  for (const auto& c : rep.checks) {
                      py::dict d;
                      d["suite"] = rep.suite;
                      d["name"] = c.name;
                      d["pass"] = c.pass;
                      d["detail"] = c.detail;
                      d["ms"] = c.ms;
                      out.append(d);
                      all_pass = all_pass && c.pass;
                  }
              return py::make_tuple(all_pass, out);
          },
          py::arg("suite") = "all", py::arg("max_n") = 6);
}
