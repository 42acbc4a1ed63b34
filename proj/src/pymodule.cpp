#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levigon/cycles.hpp"
#include "levigon/gf.hpp"
#include "levigon/levi.hpp"
#include "levigon/plane.hpp"
#include "levigon/poly.hpp"
#include "levigon/quasigon.hpp"

namespace py = pybind11;
using namespace levigon;

namespace {

py::object to_pyint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

BigInt from_pyint(const py::object& v) {
    return BigInt(py::str(v).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_levigon, m) {
    m.doc() = "exact cycle counting in Levi graphs of finite projective planes";

    py::class_<Plane>(m, "Plane")
        .def_readonly("n", &Plane::n)
        .def_readonly("N", &Plane::N)
        .def("lines", [](const Plane& p) { return p.lines; })
        .def("point_lines", [](const Plane& p) { return p.point_lines; })
        .def("line_through", &Plane::line_through)
        .def("__repr__", [](const Plane& p) {
            return "Plane(order=" + std::to_string(p.n) + ", N=" + std::to_string(p.N) + ")";
        });

    m.def(
        "make_plane",
        [](int p, int e) { return build_pg2(Field::make(p, e)); },
        py::arg("p"), py::arg("e") = 1, "construct PG(2, p^e)");
    m.def("load_plane", &load_plane, py::arg("path"));
    m.def("save_plane", &save_plane, py::arg("plane"), py::arg("path"));
    m.def("dual_plane", &dual_plane, py::arg("plane"));

    m.def(
        "levi_girth",
        [](const Plane& p) {
            const GirthResult g = girth(build_levi(p).g);
            return g.has_cycle ? g.girth : 0;
        },
        py::arg("plane"));

    m.def(
        "closed_walks_formula",
        [](int n, int k) { return to_pyint(closed_walks_formula(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "closed_walks_direct",
        [](const Plane& p, int k) { return to_pyint(closed_walks_direct(build_levi(p).g, k)); },
        py::arg("plane"), py::arg("k"));

    m.def(
        "count_gons",
        [](const Plane& p, int k, int threads) { return to_pyint(count_gons(p, k, threads).count); },
        py::arg("plane"), py::arg("k"), py::arg("threads") = 0,
        "exact number of 2k-cycles in the Levi graph, counted plane-natively");
    m.def(
        "count_cycles",
        [](const Plane& p, int L, int threads) {
            return to_pyint(count_cycles_graph(build_levi(p).g, L, threads).count);
        },
        py::arg("plane"), py::arg("L"), py::arg("threads") = 0,
        "exact number of L-cycles of the Levi graph via the graph-generic counter");

    m.def(
        "census",
        [](const Plane& p, int k, int threads, long long budget) {
            const Census c = census(p, k, threads, BigInt(budget));
            py::dict q;
            for (int j = 1; j <= c.k; ++j) q[py::int_(j)] = to_pyint(c.Q[j]);
            py::dict out;
            out["n"] = c.n;
            out["k"] = c.k;
            out["Q"] = q;
            out["A_k"] = to_pyint(c.A);
            out["B_k"] = to_pyint(c.B);
            return out;
        },
        py::arg("plane"), py::arg("k"), py::arg("threads") = 0, py::arg("budget") = 1000000000LL);

    m.def(
        "fit_coefficients",
        [](const std::vector<std::pair<int, py::object>>& samples) {
            SampleSet s;
            for (const auto& [n, cnt] : samples) s.push_back({n, from_pyint(cnt)});
            const RationalPolynomial poly = fit_exact(s, static_cast<int>(s.size()) - 1);
            std::vector<std::string> out;
            for (size_t i = 0; i < poly.c.size(); ++i) out.push_back(rat_str(poly.c[i]));
            return out;
        },
        py::arg("samples"),
        "interpolate (n, count) samples exactly; coefficients low power first, as p/q strings");

    m.def("table1_row", [](int k) {
        std::vector<std::string> out;
        for (const auto& r : table1_row(k)) out.push_back(rat_str(r));
        return out;
    });
    m.def(
        "theorem5_cap", [](long long v, int k) { return rat_str(theorem5_cap(v, k)); }, py::arg("v"),
        py::arg("k"));
}
