#ifndef ISIENERGY_ISI_HPP
#define ISIENERGY_ISI_HPP

#include <optional>
#include <string>

#include "isienergy/graph.hpp"
#include "isienergy/spectral.hpp"

namespace isienergy {

// S(G): entry d_i*d_j/(d_i+d_j) on adjacent pairs, 0 elsewhere (zero diagonal).
SymmetricMatrix isi_matrix(const Graph& g);
SymmetricMatrix adjacency_matrix(const Graph& g);

// Sum over edges of d_i*d_j/(d_i+d_j).
double isi_index(const Graph& g);

// Q = 2 * sum over adjacent i<j of (d_i*d_j/(d_i+d_j))^2, computed from the
// degree data so it can cross-check the spectral trace identity.
double q_value(const Graph& g);

Spectrum isi_spectrum(const Graph& g, const EigenOptions& opts = {});
Spectrum adjacency_spectrum(const Graph& g, const EigenOptions& opts = {});

double spectrum_energy(const Spectrum& s);  // sum |tau_i|

double isi_energy(const Graph& g);
double adjacency_energy(const Graph& g);

// Signed product of eigenvalues; |det| accumulated in the log domain for
// n > 30 to avoid overflow/underflow.
double determinant_from_spectrum(const Spectrum& s);

/// Per-graph bundle of the ISI quantities.
struct IsiSummary {
    int n = 0;
    int m = 0;
    double q = 0;
    double theta = 0;       // det S(G)
    double isi_index = 0;
    double energy = 0;      // sum |tau_i|
    Spectrum spectrum;
};

IsiSummary isi_summary(const Graph& g);

// JSON object {n, m, q, theta, isi_index, energy, spectrum:[...], multiplicities:[...]}.
std::string isi_summary_json(const IsiSummary& s);

// Closed-form adjacency energy of C_n: 4*cot(pi/n) when n = 0 mod 4,
// 4*csc(pi/n) when n = 2 mod 4, 2*csc(pi/2n) when n odd.
double cycle_energy_formula(int n);

// Closed-form ISI energies by family; nullopt when the family has no
// closed form here (paths).
std::optional<double> closed_form_energy(const GraphFamily& f);

// Family-independent route: k-regular graphs have E_ISI = (k/2) * E_A.
// nullopt when g is not regular.
std::optional<double> closed_form_energy_regular(const Graph& g);

// E_ISI of the complement of K_{m,n}: m^2 + n^2 - 2(m+n-1).
double complement_bipartite_energy(int m, int n);

// Sum of per-component ISI energies.
double component_energy_sum(const Graph& g);

struct TraceIdentityReport {
    double eigenvalue_sum = 0;       // should be 0
    double square_sum_residual = 0;  // sum tau^2 - Q
    bool sum_ok = false;
    bool square_sum_ok = false;
};

TraceIdentityReport check_trace_identities(const Graph& g, double tol);

struct EvenEnergyReport {
    double positive_sum = 0;      // P = sum of eigenvalues > tol
    double energy = 0;
    double identity_residual = 0; // |energy - 2P|
    bool identity_ok = false;
    bool near_integer = false;
    long long nearest_integer = 0;
    bool integer_is_even = false;
};

// Requires at least one edge.
EvenEnergyReport even_energy_decomposition(const Graph& g, double tol = 1e-7);

// True iff the eigenvalues with |tau| > tol all share one absolute value
// (within tol) and number at least 2; the S-spectrum shape of a union of
// complete bipartite graphs.
bool detect_complete_bipartite_union_shape(const Spectrum& spec, double tol = 1e-7);

}  // namespace isienergy

#endif
