#include "isienergy/isi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace isienergy {

namespace {

double isi_weight(int di, int dj) {
    return static_cast<double>(di) * dj / (static_cast<double>(di) + dj);
}

}  // namespace

SymmetricMatrix isi_matrix(const Graph& g) {
    int n = g.vertex_count();
    SymmetricMatrix S(n);
    const auto& deg = g.degrees();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (v > u) S.set(u, v, isi_weight(deg[u], deg[v]));
    return S;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    int n = g.vertex_count();
    SymmetricMatrix A(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (v > u) A.set(u, v, 1.0);
    return A;
}

double isi_index(const Graph& g) {
    double total = 0;
    const auto& deg = g.degrees();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) total += isi_weight(deg[u], deg[v]);
    return total;
}

double q_value(const Graph& g) {
    double total = 0;
    const auto& deg = g.degrees();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) {
                double w = isi_weight(deg[u], deg[v]);
                total += 2 * w * w;
            }
    return total;
}

Spectrum isi_spectrum(const Graph& g, const EigenOptions& opts) {
    return eigenvalues_symmetric(isi_matrix(g), opts);
}

Spectrum adjacency_spectrum(const Graph& g, const EigenOptions& opts) {
    return eigenvalues_symmetric(adjacency_matrix(g), opts);
}

double spectrum_energy(const Spectrum& s) {
    double e = 0;
    for (double v : s.values) e += std::abs(v);
    return e;
}

double isi_energy(const Graph& g) { return spectrum_energy(isi_spectrum(g)); }

double adjacency_energy(const Graph& g) { return spectrum_energy(adjacency_spectrum(g)); }

double determinant_from_spectrum(const Spectrum& s) {
    int n = s.size();
    int negatives = 0;
    for (double v : s.values) {
        if (v == 0.0) return 0.0;
        if (v < 0) ++negatives;
    }
    double sign = (negatives % 2 == 0) ? 1.0 : -1.0;
    if (n <= 30) {
        double p = 1.0;
        for (double v : s.values) p *= v;
        return p;
    }
    double log_abs = 0;
    for (double v : s.values) log_abs += std::log(std::abs(v));
    return sign * std::exp(log_abs);
}

IsiSummary isi_summary(const Graph& g) {
    IsiSummary s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.q = q_value(g);
    s.isi_index = isi_index(g);
    s.spectrum = isi_spectrum(g);
    s.energy = spectrum_energy(s.spectrum);
    s.theta = determinant_from_spectrum(s.spectrum);
    return s;
}

std::string isi_summary_json(const IsiSummary& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["q"] = s.q;
    j["theta"] = s.theta;
    j["isi_index"] = s.isi_index;
    j["energy"] = s.energy;
    auto groups = s.spectrum.grouped();
    std::vector<double> values;
    std::vector<int> mults;
    for (const auto& grp : groups) {
        values.push_back(grp.value);
        mults.push_back(grp.multiplicity);
    }
    j["spectrum"] = values;
    j["multiplicities"] = mults;
    return j.dump();
}

double cycle_energy_formula(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    double pi = std::numbers::pi;
    if (n % 4 == 0) return 4.0 / std::tan(pi / n);
    if (n % 4 == 2) return 4.0 / std::sin(pi / n);
    return 2.0 / std::sin(pi / (2.0 * n));
}

std::optional<double> closed_form_energy(const GraphFamily& f) {
    switch (f.tag) {
        case FamilyTag::cycle:
            return cycle_energy_formula(f.n);
        case FamilyTag::complete:
            return static_cast<double>(f.n - 1) * (f.n - 1);
        case FamilyTag::complete_bipartite: {
            double mn = static_cast<double>(f.m) * f.n;
            return 2.0 * std::pow(mn, 1.5) / (f.m + f.n);
        }
        case FamilyTag::star: {
            double k = f.n - 1;
            return 2.0 * std::pow(k, 1.5) / f.n;
        }
        case FamilyTag::empty:
            return 0.0;
        case FamilyTag::path:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> closed_form_energy_regular(const Graph& g) {
    auto k = regular_degree(g);
    if (!k) return std::nullopt;
    if (*k == 0) return 0.0;
    return (*k / 2.0) * adjacency_energy(g);
}

double complement_bipartite_energy(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("requires m,n >= 1");
    return static_cast<double>(m) * m + static_cast<double>(n) * n - 2.0 * (m + n - 1);
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : vertices)
        for (int v : g.neighbors(u))
            if (v > u && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph::from_edge_list(static_cast<int>(vertices.size()), edges);
}

}  // namespace

double component_energy_sum(const Graph& g) {
    double total = 0;
    for (const auto& comp : connected_components(g))
        total += isi_energy(induced_subgraph(g, comp));
    return total;
}

TraceIdentityReport check_trace_identities(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    auto spec = isi_spectrum(g);
    TraceIdentityReport r;
    double sq = 0;
    for (double v : spec.values) {
        r.eigenvalue_sum += v;
        sq += v * v;
    }
    r.square_sum_residual = sq - q_value(g);
    r.sum_ok = std::abs(r.eigenvalue_sum) <= tol;
    r.square_sum_ok = std::abs(r.square_sum_residual) <= tol;
    return r;
}

EvenEnergyReport even_energy_decomposition(const Graph& g, double tol) {
    auto spec = isi_spectrum(g);
    EvenEnergyReport r;
    for (double v : spec.values) {
        if (v > tol) r.positive_sum += v;
        r.energy += std::abs(v);
    }
    r.identity_residual = std::abs(r.energy - 2 * r.positive_sum);
    r.identity_ok = r.identity_residual <= tol * std::max(1, g.vertex_count());
    r.nearest_integer = std::llround(r.energy);
    r.near_integer = std::abs(r.energy - static_cast<double>(r.nearest_integer)) <= tol;
    r.integer_is_even = r.near_integer && r.nearest_integer % 2 == 0;
    return r;
}

bool detect_complete_bipartite_union_shape(const Spectrum& spec, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    double lo = 0, hi = 0;
    int count = 0;
    for (double v : spec.values) {
        double a = std::abs(v);
        if (a <= tol) continue;
        if (count == 0) {
            lo = hi = a;
        } else {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        ++count;
    }
    return count >= 2 && hi - lo <= tol;
}

}  // namespace isienergy
