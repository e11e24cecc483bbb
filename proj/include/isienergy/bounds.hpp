#ifndef ISIENERGY_BOUNDS_HPP
#define ISIENERGY_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "isienergy/graph.hpp"
#include "isienergy/spectral.hpp"

namespace isienergy {

/// One named inequality check. holds uses the hybrid tolerance
/// lhs <= rhs + 1e-9 * max(1, |rhs|); slack is the distance to the
/// nearest bound (negative when violated).
struct BoundCheck {
    std::string name;
    std::optional<double> lower;
    double value = 0;
    std::optional<double> upper;
    bool holds = true;
    double slack = 0;
    bool hypothesis_ok = true;   // theorem hypothesis satisfied by the input
    bool not_applicable = false; // check vacuous for this graph (e.g. m = 0)
    bool equality = false;       // used by the trace maximum check
};

struct BoundReport {
    std::string graph_id;  // graph6 encoding of the input
    std::vector<BoundCheck> checks;
};

// |Theta|^(2/n) via exp((2/n) * sum ln|tau_i|); any |tau_i| < 1e-12 makes
// the matrix rank-deficient and the result exactly 0.
double det_power_from_spectrum(const Spectrum& s);

// Q <= n(n-1)^3/4 with equality exactly on complete graphs. Connectivity
// is the hypothesis; a disconnected input is evaluated anyway with
// hypothesis_ok = false.
BoundCheck trace_bound(const Graph& g);

// Two-sided bounds on tau_1, tau_n and the middle eigenvalues in terms
// of Q. Requires n >= 2.
std::vector<BoundCheck> eigenvalue_bounds(const Graph& g);

// Bounds for connected graphs: tau_1 <= (n-1)^2 and middle-eigenvalue
// bounds with the (n-1)^3/4 factor.
std::vector<BoundCheck> connected_eigenvalue_bounds(const Graph& g);

// E <= sqrt(nQ) plus two determinant lower bounds: the stated form
// n|Theta|^(2/n) <= E (known to fail, e.g. on K_3) and the geometric
// form sqrt(n|Theta|^(2/n)) <= E, reported side by side.
std::vector<BoundCheck> det_energy_bounds(const Graph& g);

// sqrt(Q + n(n-1)|Theta|^(2/n)) <= E <= sqrt((n-1)Q + n|Theta|^(2/n)).
BoundCheck mcclelland_bounds(const Graph& g);

// sqrt(m*delta^2/2 + n(n-1)|Theta|^(2/n)) <= E <=
// sqrt(m(n-1)*Delta^2/2 + n|Theta|^(2/n)); not applicable when m = 0.
BoundCheck degree_bounds(const Graph& g);

// All applicable checks; individual hypothesis violations are recorded
// per check and never abort the batch.
BoundReport run_all_bounds(const Graph& g);

std::string bound_report_json(const BoundReport& r);
std::string bound_report_csv(const BoundReport& r);  // one row per check

}  // namespace isienergy

#endif
