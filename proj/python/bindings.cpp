#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "pretzelkh/diagram.hpp"
#include "pretzelkh/formulas.hpp"
#include "pretzelkh/khovanov.hpp"
#include "pretzelkh/lee.hpp"
#include "pretzelkh/scan.hpp"
#include "pretzelkh/turner.hpp"

namespace py = pybind11;
using namespace pkh;

namespace {

std::map<std::pair<int, int>, long long> dims_to_map(const BigradedDims& d) { return d.ranks; }

}  // namespace

PYBIND11_MODULE(_pretzelkh, m) {
    m.doc() = "exact Khovanov/Lee homology of pretzel and (2,n)-torus links";

    py::class_<LinkDiagram>(m, "LinkDiagram")
        .def_property_readonly("crossing_count", &LinkDiagram::crossing_count)
        .def_property_readonly("edge_count", &LinkDiagram::edge_count)
        .def_property_readonly("free_loop_count", &LinkDiagram::free_loop_count)
        .def_property_readonly("component_count", &LinkDiagram::component_count)
        .def_property_readonly("writhe", &LinkDiagram::writhe)
        .def_property_readonly("n_plus", &LinkDiagram::n_plus)
        .def_property_readonly("n_minus", &LinkDiagram::n_minus)
        .def("to_json", [](const LinkDiagram& d) { return diagram_to_json(d); })
        .def("__repr__", [](const LinkDiagram& d) {
            std::ostringstream os;
            os << "LinkDiagram(crossings=" << d.crossing_count()
               << ", components=" << d.component_count() << ", writhe=" << d.writhe() << ")";
            return os.str();
        });

    m.def("pretzel", &pretzel_diagram, py::arg("p"), py::arg("q"), py::arg("r"),
          py::arg("orientation") = OrientationChoice{});
    m.def("torus2", &torus2_diagram, py::arg("n"), py::arg("orientation") = OrientationChoice{});
    m.def("diagram_from_json", &diagram_from_json, py::arg("text"));
    m.def("mirror", &mirror, py::arg("diagram"));
    m.def("signature", &signature, py::arg("diagram"));

    m.def(
        "khovanov_homology",
        [](const LinkDiagram& d, int max_crossings) {
            return dims_to_map(homology_dims(d, CubeOptions{max_crossings, 1}));
        },
        py::arg("diagram"), py::arg("max_crossings") = 22,
        "rational Khovanov homology ranks keyed by (i, j)");

    m.def(
        "lee_homology",
        [](const LinkDiagram& d, int max_crossings) {
            return lee_homology_rank(d, CubeOptions{max_crossings, 1});
        },
        py::arg("diagram"), py::arg("max_crossings") = 22,
        "Lee homology ranks keyed by homological degree");

    m.def(
        "s_invariant",
        [](const LinkDiagram& d, int max_crossings) {
            auto r = s_invariant(d, CubeOptions{max_crossings, 1});
            return py::make_tuple(r.s, r.s_min, r.s_max);
        },
        py::arg("diagram"), py::arg("max_crossings") = 22,
        "(s, s_min, s_max) of a knot diagram");

    m.def(
        "jones",
        [](const LinkDiagram& d, int max_crossings) {
            return jones_kauffman(d, max_crossings).str();
        },
        py::arg("diagram"), py::arg("max_crossings") = 22,
        "unnormalized Jones polynomial in q, as a string");

    m.def(
        "kh_formula",
        [](int p, int r, bool allow_p7) {
            return (r == 0 ? kh_formula_pq0(p, allow_p7) : kh_formula_pqr(p, r, allow_p7)).str();
        },
        py::arg("p"), py::arg("r") = 0, py::arg("allow_p7") = false,
        "closed-form Poincare polynomial of KH(P(p,-(p-2),-r)) in q, t");

    m.def(
        "predict_s",
        [](int p, int q, int r) {
            auto pred = predict_s(p, q, r);
            py::dict out;
            out["exact"] = pred.exact ? py::object(py::int_(*pred.exact)) : py::none();
            out["interval"] = pred.interval
                                  ? py::object(py::make_tuple(pred.interval->first,
                                                              pred.interval->second))
                                  : py::none();
            out["case"] = pred.case_tag;
            out["sigma"] = pred.sigma ? py::object(py::int_(*pred.sigma)) : py::none();
            out["alternating"] = pred.alternating;
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "classification-table prediction for the s invariant of P(p,q,r)");

    m.def(
        "turner_e1",
        [](const LinkDiagram& d, const std::vector<int>& order, const std::vector<int>& js,
           int max_crossings) {
            auto seq = build_sequence(d, order);
            auto pages = e1_pages(seq, js, CubeOptions{max_crossings, 1});
            py::list out;
            for (auto& pg : pages) {
                py::dict entry;
                entry["j"] = pg.j;
                py::dict cells;
                for (auto& [st, cell] : pg.cells)
                    cells[py::make_tuple(st.first, st.second)] =
                        py::make_tuple(cell.rank, cell.leaf, cell.leaf_i, cell.leaf_j);
                entry["cells"] = cells;
                out.append(entry);
            }
            return out;
        },
        py::arg("diagram"), py::arg("order"), py::arg("js"), py::arg("max_crossings") = 22,
        "E1 pages of the resolution spectral sequence for the given quantum degrees");
}
