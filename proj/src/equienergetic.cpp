#include "isienergy/equienergetic.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "isienergy/isi.hpp"

namespace isienergy {

namespace {

constexpr double kSpectralTol = 1e-8;
constexpr double kEnergyTol = 1e-6;

void classify(EquienergeticPair& p, double tol) {
    p.cospectral = spectra_equal(p.spectrum1, p.spectrum2, tol);
    p.equienergetic = std::abs(p.energy1 - p.energy2) <= tol;
    if (p.cospectral)
        p.classification = "cospectral";
    else if (p.equienergetic)
        p.classification = "equienergetic-noncospectral";
    else
        p.classification = "neither";
}

EquienergeticPair make_pair(Graph g1, Graph g2, std::string construction, double tol) {
    EquienergeticPair p;
    p.g1 = std::move(g1);
    p.g2 = std::move(g2);
    p.spectrum1 = isi_spectrum(p.g1);
    p.spectrum2 = isi_spectrum(p.g2);
    p.energy1 = spectrum_energy(p.spectrum1);
    p.energy2 = spectrum_energy(p.spectrum2);
    p.construction = std::move(construction);
    classify(p, tol);
    return p;
}

// same n, same degree k >= 3, A-noncospectral
void check_regular_pair_hypothesis(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("inputs have different orders (" +
                                    std::to_string(g1.vertex_count()) + " vs " +
                                    std::to_string(g2.vertex_count()) + ")");
    auto k1 = regular_degree(g1);
    auto k2 = regular_degree(g2);
    if (!k1 || !k2) throw std::invalid_argument("both inputs must be regular");
    if (*k1 != *k2)
        throw std::invalid_argument("inputs have different degrees (" +
                                    std::to_string(*k1) + " vs " + std::to_string(*k2) +
                                    ")");
    if (*k1 < 3)
        throw std::invalid_argument(
            "construction requires k >= 3 (the iterated line-graph energy "
            "formula degenerates below that)");
    if (spectra_equal(adjacency_spectrum(g1), adjacency_spectrum(g2), kSpectralTol))
        throw std::invalid_argument("inputs are A-cospectral");
}

}  // namespace

EquienergeticPair build_L2_pair(const Graph& g1, const Graph& g2) {
    check_regular_pair_hypothesis(g1, g2);
    double n = g1.vertex_count();
    double k = *regular_degree(g1);

    auto pair = make_pair(iterated_line_graph(g1, 2), iterated_line_graph(g2, 2),
                          "L2-of-regular", kSpectralTol);

    double expected = 2.0 * n * k * (2 * k - 3) * (k - 2);
    if (std::abs(pair.energy1 - expected) > kEnergyTol ||
        std::abs(pair.energy2 - expected) > kEnergyTol)
        throw std::runtime_error(
            "iterated line-graph energies disagree with the closed form " +
            std::to_string(expected));
    return pair;
}

EquienergeticPair build_Lm_pair(const Graph& g1, const Graph& g2, int mth,
                                int max_vertices) {
    if (mth < 2) throw std::invalid_argument("iteration count must be >= 2");
    check_regular_pair_hypothesis(g1, g2);
    if (mth == 2) return build_L2_pair(g1, g2);
    return make_pair(iterated_line_graph(g1, mth, max_vertices),
                     iterated_line_graph(g2, mth, max_vertices), "Lm-of-regular",
                     kSpectralTol);
}

EquienergeticPair pad_with_isolated(const EquienergeticPair& pair, int r) {
    if (r < 1) throw std::invalid_argument("padding count must be positive");
    Graph pad = empty_graph(r);
    auto padded = make_pair(disjoint_union(pair.g1, pad), disjoint_union(pair.g2, pad),
                            "isolated-padding", kSpectralTol);
    return padded;
}

EquienergeticPair verify_pair(const Graph& g1, const Graph& g2, double tol) {
    if (g1.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("equienergetic comparison requires equal orders");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    return make_pair(g1, g2, "external", tol);
}

std::string pair_json(const EquienergeticPair& p) {
    nlohmann::json j;
    j["g1"] = write_graph6(p.g1);
    j["g2"] = write_graph6(p.g2);
    j["n"] = p.g1.vertex_count();
    j["energy1"] = p.energy1;
    j["energy2"] = p.energy2;
    j["cospectral"] = p.cospectral;
    j["equienergetic"] = p.equienergetic;
    j["construction"] = p.construction;
    j["classification"] = p.classification;
    j["spectrum1"] = p.spectrum1.values;
    j["spectrum2"] = p.spectrum2.values;
    return j.dump();
}

}  // namespace isienergy
