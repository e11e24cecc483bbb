#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isienergy/bounds.hpp"
#include "isienergy/coulson.hpp"
#include "isienergy/equienergetic.hpp"
#include "isienergy/graph.hpp"
#include "isienergy/isi.hpp"
#include "isienergy/spectral.hpp"
#include "isienergy/trees.hpp"

namespace py = pybind11;
using namespace isienergy;

namespace {

std::vector<std::vector<double>> matrix_rows(const SymmetricMatrix& M) {
    int n = M.order();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = M(i, j);
    return rows;
}

py::dict summary_dict(const IsiSummary& s) {
    py::dict d;
    d["n"] = s.n;
    d["m"] = s.m;
    d["q"] = s.q;
    d["theta"] = s.theta;
    d["isi_index"] = s.isi_index;
    d["energy"] = s.energy;
    d["spectrum"] = s.spectrum.values;
    py::list mults, values;
    for (const auto& grp : s.spectrum.grouped()) {
        values.append(grp.value);
        mults.append(grp.multiplicity);
    }
    d["grouped_spectrum"] = values;
    d["multiplicities"] = mults;
    return d;
}

py::dict check_dict(const BoundCheck& c) {
    py::dict d;
    d["name"] = c.name;
    d["lower"] = c.lower ? py::object(py::float_(*c.lower)) : py::none();
    d["value"] = c.value;
    d["upper"] = c.upper ? py::object(py::float_(*c.upper)) : py::none();
    d["holds"] = c.holds;
    d["slack"] = c.slack;
    d["hypothesis_ok"] = c.hypothesis_ok;
    d["not_applicable"] = c.not_applicable;
    d["equality"] = c.equality;
    return d;
}

py::dict pair_dict(const EquienergeticPair& p) {
    py::dict d;
    d["g1"] = p.g1;
    d["g2"] = p.g2;
    d["energy1"] = p.energy1;
    d["energy2"] = p.energy2;
    d["cospectral"] = p.cospectral;
    d["equienergetic"] = p.equienergetic;
    d["construction"] = p.construction;
    d["classification"] = p.classification;
    d["spectrum1"] = p.spectrum1.values;
    d["spectrum2"] = p.spectrum2.values;
    return d;
}

CharPolyCoeffs coeffs_of(const Graph& g) { return char_poly_coeffs(isi_spectrum(g)); }

QuadratureConfig quad_config(double target_tol, int max_panels) {
    QuadratureConfig cfg;
    cfg.target_tol = target_tol;
    cfg.max_panels = max_panels;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Inverse-sum-indeg (ISI) matrices, spectra and energies of simple graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("star_graph", &star_graph);
    m.def("empty_graph", &empty_graph);
    m.def("petersen_graph", &petersen_graph);
    m.def("prism_graph", &prism_graph);
    m.def("circulant_graph", &circulant_graph);

    m.def("disjoint_union", &disjoint_union);
    m.def("complement", &complement);
    m.def("line_graph", &line_graph);
    m.def("iterated_line_graph", &iterated_line_graph, py::arg("g"), py::arg("i"),
          py::arg("max_vertices") = 10000);

    m.def("is_connected", &is_connected);
    m.def("connected_components", &connected_components);
    m.def("diameter",
          [](const Graph& g) -> py::object {
              auto d = diameter(g);
              return d ? py::object(py::int_(*d)) : py::none();
          });
    m.def("is_bipartite", &is_bipartite);
    m.def("bipartition",
          [](const Graph& g) -> py::object {
              auto p = bipartition(g);
              return p ? py::object(py::cast(*p)) : py::none();
          });
    m.def("regular_degree",
          [](const Graph& g) -> py::object {
              auto k = regular_degree(g);
              return k ? py::object(py::int_(*k)) : py::none();
          });

    m.def("parse_graph6", &parse_graph6);
    m.def("write_graph6", &write_graph6);
    m.def("parse_edge_list", &parse_edge_list);
    m.def("write_edge_list", &write_edge_list);

    m.def("isi_matrix", [](const Graph& g) { return matrix_rows(isi_matrix(g)); });
    m.def("adjacency_matrix",
          [](const Graph& g) { return matrix_rows(adjacency_matrix(g)); });
    m.def("isi_index", &isi_index);
    m.def("q_value", &q_value);
    m.def("isi_spectrum", [](const Graph& g) { return isi_spectrum(g).values; });
    m.def("adjacency_spectrum",
          [](const Graph& g) { return adjacency_spectrum(g).values; });
    m.def("isi_energy", &isi_energy);
    m.def("adjacency_energy", &adjacency_energy);
    m.def("isi_summary", [](const Graph& g) { return summary_dict(isi_summary(g)); });
    m.def("component_energy_sum", &component_energy_sum);
    m.def("complement_bipartite_energy", &complement_bipartite_energy);
    m.def("cycle_energy_formula", &cycle_energy_formula);
    m.def("closed_form_energy_regular",
          [](const Graph& g) -> py::object {
              auto e = closed_form_energy_regular(g);
              return e ? py::object(py::float_(*e)) : py::none();
          });
    m.def("char_poly_coeffs", [](const Graph& g) { return coeffs_of(g).b; });
    m.def(
        "spectra_equal",
        [](const std::vector<double>& a, const std::vector<double>& b, double tol) {
            return spectra_equal(Spectrum::from_values(a), Spectrum::from_values(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8);

    m.def(
        "check_trace_identities",
        [](const Graph& g, double tol) {
            auto r = check_trace_identities(g, tol);
            py::dict d;
            d["eigenvalue_sum"] = r.eigenvalue_sum;
            d["square_sum_residual"] = r.square_sum_residual;
            d["sum_ok"] = r.sum_ok;
            d["square_sum_ok"] = r.square_sum_ok;
            return d;
        },
        py::arg("g"), py::arg("tol") = 1e-8);
    m.def(
        "even_energy_decomposition",
        [](const Graph& g, double tol) {
            auto r = even_energy_decomposition(g, tol);
            py::dict d;
            d["positive_sum"] = r.positive_sum;
            d["energy"] = r.energy;
            d["identity_residual"] = r.identity_residual;
            d["identity_ok"] = r.identity_ok;
            d["near_integer"] = r.near_integer;
            d["nearest_integer"] = r.nearest_integer;
            d["integer_is_even"] = r.integer_is_even;
            return d;
        },
        py::arg("g"), py::arg("tol") = 1e-7);
    m.def(
        "detect_complete_bipartite_union_shape",
        [](const Graph& g, double tol) {
            return detect_complete_bipartite_union_shape(isi_spectrum(g), tol);
        },
        py::arg("g"), py::arg("tol") = 1e-7);

    m.def("run_all_bounds", [](const Graph& g) {
        auto report = run_all_bounds(g);
        py::dict d;
        d["graph"] = report.graph_id;
        py::list checks;
        for (const auto& c : report.checks) checks.append(check_dict(c));
        d["checks"] = checks;
        return d;
    });

    m.def(
        "coulson_energy",
        [](const Graph& g, double tol, int panels) {
            return coulson_energy(coeffs_of(g), quad_config(tol, panels));
        },
        py::arg("g"), py::arg("target_tol") = 1e-6, py::arg("max_panels") = 20000);
    m.def(
        "coulson_energy_logform",
        [](const Graph& g, double tol, int panels) {
            return coulson_energy_logform(coeffs_of(g), quad_config(tol, panels));
        },
        py::arg("g"), py::arg("target_tol") = 1e-6, py::arg("max_panels") = 20000);
    m.def(
        "coulson_energy_corollary_form",
        [](const Graph& g, double tol, int panels) {
            return coulson_energy_corollary_form(coeffs_of(g), quad_config(tol, panels));
        },
        py::arg("g"), py::arg("target_tol") = 1e-6, py::arg("max_panels") = 20000);

    m.def("free_trees", [](int n) { return free_trees(n); });
    m.def(
        "check_conjecture",
        [](int n, double tol, bool full_ranking) {
            auto r = check_conjecture(n, tol, full_ranking);
            py::dict d;
            d["n"] = r.n;
            d["tree_count"] = r.tree_count;
            d["min_energy"] = r.min_energy;
            d["max_energy"] = r.max_energy;
            d["argmin"] = r.argmin_graph6;
            d["argmax"] = r.argmax_graph6;
            d["star_is_min"] = r.star_is_min;
            d["path_is_max"] = r.path_is_max;
            d["tie_at_min"] = r.tie_at_min;
            d["tie_at_max"] = r.tie_at_max;
            d["min_gap"] = r.min_gap;
            d["max_gap"] = r.max_gap;
            if (r.full_ranking) {
                py::list ranking;
                for (const auto& [g6, e] : *r.full_ranking)
                    ranking.append(py::make_tuple(g6, e));
                d["ranking"] = ranking;
            }
            return d;
        },
        py::arg("n"), py::arg("tol") = 1e-9, py::arg("full_ranking") = false);

    m.def("build_L2_pair",
          [](const Graph& g1, const Graph& g2) { return pair_dict(build_L2_pair(g1, g2)); });
    m.def(
        "build_Lm_pair",
        [](const Graph& g1, const Graph& g2, int mth) {
            return pair_dict(build_Lm_pair(g1, g2, mth));
        },
        py::arg("g1"), py::arg("g2"), py::arg("mth"));
    m.def(
        "verify_pair",
        [](const Graph& g1, const Graph& g2, double tol) {
            return pair_dict(verify_pair(g1, g2, tol));
        },
        py::arg("g1"), py::arg("g2"), py::arg("tol") = 1e-8);
}
