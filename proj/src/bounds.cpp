#include "isienergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "isienergy/isi.hpp"

namespace isienergy {

namespace {

constexpr double kRankTol = 1e-12;

double compare_tol(double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); }

void finalize(BoundCheck& c) {
    c.holds = true;
    double slack = std::numeric_limits<double>::infinity();
    if (c.lower) {
        if (*c.lower > c.value + compare_tol(*c.lower)) c.holds = false;
        slack = std::min(slack, c.value - *c.lower);
    }
    if (c.upper) {
        if (c.value > *c.upper + compare_tol(*c.upper)) c.holds = false;
        slack = std::min(slack, *c.upper - c.value);
    }
    c.slack = std::isfinite(slack) ? slack : 0.0;
}

// shared per-graph quantities so run_all_bounds solves the spectrum once
struct Context {
    int n;
    int m;
    double q;
    double det_pow;  // |Theta|^(2/n)
    double energy;
    bool connected;
    Spectrum spectrum;

    explicit Context(const Graph& g)
        : n(g.vertex_count()),
          m(g.edge_count()),
          q(q_value(g)),
          connected(is_connected(g)),
          spectrum(isi_spectrum(g)) {
        det_pow = det_power_from_spectrum(spectrum);
        energy = spectrum_energy(spectrum);
    }
};

BoundCheck trace_bound_impl(const Context& ctx) {
    BoundCheck c;
    c.name = "trace_square_complete_max";
    c.value = ctx.q;
    c.upper = ctx.n * std::pow(ctx.n - 1.0, 3) / 4.0;
    c.hypothesis_ok = ctx.connected;
    c.equality = (2 * ctx.m == ctx.n * (ctx.n - 1));
    finalize(c);
    return c;
}

std::vector<BoundCheck> eigenvalue_bounds_impl(const Context& ctx) {
    const int n = ctx.n;
    const double q = ctx.q;
    const auto& tau = ctx.spectrum.values;
    std::vector<BoundCheck> checks;

    BoundCheck first;
    first.name = "tau1_from_q";
    first.value = tau.front();
    first.lower = std::sqrt(q / (static_cast<double>(n) * (n - 1)));
    first.upper = std::sqrt((n - 1.0) * q / n);
    finalize(first);
    checks.push_back(std::move(first));

    for (int k = 2; k <= n - 1; ++k) {
        BoundCheck mid;
        mid.name = "tau" + std::to_string(k) + "_from_q";
        mid.value = tau[k - 1];
        mid.lower = -std::sqrt((k - 1.0) * q / (static_cast<double>(n) * (n - k + 1)));
        mid.upper = std::sqrt((n - k) * q / (static_cast<double>(k) * n));
        finalize(mid);
        checks.push_back(std::move(mid));
    }

    BoundCheck last;
    last.name = "tau_min_from_q";
    last.value = tau.back();
    last.lower = -std::sqrt((n - 1.0) * q / n);
    last.upper = -std::sqrt(q / (static_cast<double>(n) * (n - 1)));
    finalize(last);
    checks.push_back(std::move(last));
    return checks;
}

std::vector<BoundCheck> connected_eigenvalue_bounds_impl(const Context& ctx) {
    const int n = ctx.n;
    const double complete_energy = (n - 1.0) * (n - 1.0);
    const double cube = std::pow(n - 1.0, 3);
    const auto& tau = ctx.spectrum.values;
    std::vector<BoundCheck> checks;

    BoundCheck first;
    first.name = "tau1_complete_cap";
    first.value = tau.front();
    first.lower = std::sqrt(ctx.q / (static_cast<double>(n) * (n - 1)));
    first.upper = complete_energy;
    first.hypothesis_ok = ctx.connected;
    finalize(first);
    checks.push_back(std::move(first));

    for (int k = 2; k <= n - 1; ++k) {
        BoundCheck mid;
        mid.name = "tau" + std::to_string(k) + "_complete_cap";
        mid.value = tau[k - 1];
        mid.lower = -std::sqrt((k - 1.0) * cube / (4.0 * (n - k + 1)));
        mid.upper = std::sqrt((n - k) * cube / (4.0 * k));
        mid.hypothesis_ok = ctx.connected;
        finalize(mid);
        checks.push_back(std::move(mid));
    }

    BoundCheck last;
    last.name = "tau_min_complete_cap";
    last.value = tau.back();
    last.lower = -complete_energy;
    last.upper = -std::sqrt(ctx.q / (static_cast<double>(n) * (n - 1)));
    last.hypothesis_ok = ctx.connected;
    finalize(last);
    checks.push_back(std::move(last));
    return checks;
}

std::vector<BoundCheck> det_energy_bounds_impl(const Context& ctx) {
    std::vector<BoundCheck> checks;

    BoundCheck upper;
    upper.name = "energy_upper_sqrt_nq";
    upper.value = ctx.energy;
    upper.upper = std::sqrt(ctx.n * ctx.q);
    finalize(upper);
    checks.push_back(std::move(upper));

    // The stated lower bound n|Theta|^(2/n) <= E; its derivation only
    // supports E^2 >= n|Theta|^(2/n), so both readings are reported.
    BoundCheck stated;
    stated.name = "energy_lower_det_stated";
    stated.value = ctx.energy;
    stated.lower = ctx.n * ctx.det_pow;
    finalize(stated);
    checks.push_back(std::move(stated));

    BoundCheck geometric;
    geometric.name = "energy_lower_det_geometric";
    geometric.value = ctx.energy;
    geometric.lower = std::sqrt(ctx.n * ctx.det_pow);
    finalize(geometric);
    checks.push_back(std::move(geometric));
    return checks;
}

BoundCheck mcclelland_bounds_impl(const Context& ctx) {
    BoundCheck c;
    c.name = "energy_mcclelland";
    c.value = ctx.energy;
    c.lower = std::sqrt(ctx.q + ctx.n * (ctx.n - 1.0) * ctx.det_pow);
    c.upper = std::sqrt((ctx.n - 1.0) * ctx.q + ctx.n * ctx.det_pow);
    finalize(c);
    return c;
}

BoundCheck degree_bounds_impl(const Context& ctx, const Graph& g) {
    BoundCheck c;
    c.name = "energy_degree";
    c.value = ctx.energy;
    if (ctx.m == 0) {
        c.not_applicable = true;
        c.slack = 0;
        return c;
    }
    const auto& deg = g.degrees();
    double dmin = *std::min_element(deg.begin(), deg.end());
    double dmax = *std::max_element(deg.begin(), deg.end());
    c.lower = std::sqrt(ctx.m * dmin * dmin / 2.0 + ctx.n * (ctx.n - 1.0) * ctx.det_pow);
    c.upper = std::sqrt(ctx.m * (ctx.n - 1.0) * dmax * dmax / 2.0 + ctx.n * ctx.det_pow);
    finalize(c);
    return c;
}

}  // namespace

double det_power_from_spectrum(const Spectrum& s) {
    int n = s.size();
    if (n == 0) return 0;
    double log_sum = 0;
    for (double v : s.values) {
        if (std::abs(v) < kRankTol) return 0.0;
        log_sum += std::log(std::abs(v));
    }
    return std::exp(2.0 * log_sum / n);
}

BoundCheck trace_bound(const Graph& g) { return trace_bound_impl(Context(g)); }

std::vector<BoundCheck> eigenvalue_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("eigenvalue bounds require n >= 2");
    return eigenvalue_bounds_impl(Context(g));
}

std::vector<BoundCheck> connected_eigenvalue_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("eigenvalue bounds require n >= 2");
    return connected_eigenvalue_bounds_impl(Context(g));
}

std::vector<BoundCheck> det_energy_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("energy bounds require n >= 2");
    return det_energy_bounds_impl(Context(g));
}

BoundCheck mcclelland_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("energy bounds require n >= 2");
    return mcclelland_bounds_impl(Context(g));
}

BoundCheck degree_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("energy bounds require n >= 2");
    return degree_bounds_impl(Context(g), g);
}

BoundReport run_all_bounds(const Graph& g) {
    Context ctx(g);
    BoundReport report;
    report.graph_id = write_graph6(g);
    report.checks.push_back(trace_bound_impl(ctx));
    if (ctx.n >= 2) {
        for (auto& c : eigenvalue_bounds_impl(ctx)) report.checks.push_back(std::move(c));
        for (auto& c : connected_eigenvalue_bounds_impl(ctx))
            report.checks.push_back(std::move(c));
        for (auto& c : det_energy_bounds_impl(ctx)) report.checks.push_back(std::move(c));
        report.checks.push_back(mcclelland_bounds_impl(ctx));
        report.checks.push_back(degree_bounds_impl(ctx, g));
    }
    return report;
}

namespace {

nlohmann::json check_to_json(const BoundCheck& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["lower"] = c.lower ? nlohmann::json(*c.lower) : nlohmann::json(nullptr);
    j["value"] = c.value;
    j["upper"] = c.upper ? nlohmann::json(*c.upper) : nlohmann::json(nullptr);
    j["holds"] = c.holds;
    j["slack"] = c.slack;
    j["hypothesis_ok"] = c.hypothesis_ok;
    if (c.not_applicable) j["not_applicable"] = true;
    if (c.equality) j["equality"] = true;
    return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& r) {
    nlohmann::json j;
    j["graph"] = r.graph_id;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
    return j.dump();
}

std::string bound_report_csv(const BoundReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "graph,name,lower,value,upper,holds,slack,hypothesis_ok,not_applicable\n";
    for (const auto& c : r.checks) {
        out << r.graph_id << "," << c.name << ",";
        if (c.lower) out << *c.lower;
        out << "," << c.value << ",";
        if (c.upper) out << *c.upper;
        out << "," << (c.holds ? 1 : 0) << "," << c.slack << ","
            << (c.hypothesis_ok ? 1 : 0) << "," << (c.not_applicable ? 1 : 0) << "\n";
    }
    return out.str();
}

}  // namespace isienergy
