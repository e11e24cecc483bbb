#ifndef ISIENERGY_COULSON_HPP
#define ISIENERGY_COULSON_HPP

#include <stdexcept>

#include "isienergy/spectral.hpp"

namespace isienergy {

/// Improper-integral evaluation parameters. The default tan_map rule
/// substitutes lambda = tan(theta) so no truncation is needed; the
/// truncated rule integrates [0, cutoff] and adds an analytic tail term.
struct QuadratureConfig {
    enum class Rule { tan_map, truncated };

    double cutoff = 0;        // truncated rule only; 0 = choose from a root bound
    int max_panels = 20000;   // adaptive refinement budget, must be >= 16
    double target_tol = 1e-6; // absolute tolerance on the returned energy
    Rule rule = Rule::tan_map;
};

/// Value of the characteristic polynomial on the imaginary axis.
struct ImagAxisPolyValue {
    double real_part;
    double imag_part;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double best, double residual)
        : std::runtime_error(msg), best_estimate(best), residual(residual) {}

    double best_estimate;
    double residual;
};

// Phi(i*lambda) via the even/odd coefficient split, Horner in lambda^2:
//   Re = sum_j (-1)^j b_{n-2j} lambda^{2j},
//   Im = sum_j (-1)^j b_{n-2j-1} lambda^{2j+1}.
ImagAxisPolyValue eval_char_poly_imag(const CharPolyCoeffs& coeffs, double lambda);

// Exact term-by-term derivative; result is not monic (leading n*b_0).
std::vector<double> char_poly_derivative(const CharPolyCoeffs& coeffs);

// Pointwise integrands, defined for any real lambda (all are even).
// Used by the energy integrals below and exposed for direct checks.
double coulson_integrand(const CharPolyCoeffs& coeffs, double lambda);
double coulson_log_integrand(const CharPolyCoeffs& coeffs, double lambda);
double coulson_corollary_integrand(const CharPolyCoeffs& coeffs, double lambda);

// (1/pi) * Int (n - i*lambda*Phi'(i*lambda)/Phi(i*lambda)) dlambda over
// the real line. Throws QuadratureError (carrying the best estimate and
// residual) when the panel budget is exhausted before target_tol.
double coulson_energy(const CharPolyCoeffs& coeffs, const QuadratureConfig& cfg = {});

// (1/2pi) * Int lambda^-2 * log[(sum (-1)^i b_2i lambda^2i)^2 +
// (sum (-1)^i b_{2i+1} lambda^{2i+1})^2] dlambda.
double coulson_energy_logform(const CharPolyCoeffs& coeffs, const QuadratureConfig& cfg = {});

// (1/pi) * Int lambda^-2 * ln|lambda^n Phi(i/lambda)| dlambda. The
// logarithm is taken of the modulus: the argument is complex in general
// and only its modulus reproduces the energy (it matches the squared-sum
// integrand above, evaluated by a different route).
double coulson_energy_corollary_form(const CharPolyCoeffs& coeffs,
                                     const QuadratureConfig& cfg = {});

}  // namespace isienergy

#endif
