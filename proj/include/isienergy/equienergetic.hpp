#ifndef ISIENERGY_EQUIENERGETIC_HPP
#define ISIENERGY_EQUIENERGETIC_HPP

#include <string>

#include "isienergy/graph.hpp"
#include "isienergy/spectral.hpp"

namespace isienergy {

/// A candidate or verified pair of same-order graphs compared by ISI
/// energy and S-spectrum.
struct EquienergeticPair {
    Graph g1, g2;
    Spectrum spectrum1, spectrum2;
    double energy1 = 0, energy2 = 0;
    bool cospectral = false;
    bool equienergetic = false;
    std::string construction;    // L2-of-regular | Lm-of-regular | isolated-padding | external
    std::string classification;  // equienergetic-noncospectral | cospectral | neither
};

// Twice-iterated line graphs of two same-order k-regular A-noncospectral
// graphs (k >= 3). Both energies are checked against the closed form
// 2nk(2k-3)(k-2) within 1e-6; a violation throws std::runtime_error.
// Hypothesis failures (unequal n or k, k < 3, A-cospectral inputs) throw
// std::invalid_argument with a diagnosis.
EquienergeticPair build_L2_pair(const Graph& g1, const Graph& g2);

// m-fold iterated construction, mth >= 2; the graph-core size cap applies
// to every intermediate graph.
EquienergeticPair build_Lm_pair(const Graph& g1, const Graph& g2, int mth,
                                int max_vertices = 10000);

// Pads both sides with r isolated vertices; energies are unchanged and
// each spectrum gains exactly r zeros.
EquienergeticPair pad_with_isolated(const EquienergeticPair& pair, int r);

// Computes both energies and spectra and classifies the pair. Requires
// equal vertex counts.
EquienergeticPair verify_pair(const Graph& g1, const Graph& g2, double tol = 1e-8);

std::string pair_json(const EquienergeticPair& p);

}  // namespace isienergy

#endif
