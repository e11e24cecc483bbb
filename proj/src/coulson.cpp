#include "isienergy/coulson.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

namespace isienergy {

namespace {

using cplx = std::complex<double>;

// 15-point Kronrod rule with embedded 7-point Gauss (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(mid);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double fsum = f(mid - x) + f(mid + x);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    return {kronrod, std::abs(kronrod - gauss)};
}

// Globally adaptive bisection, worst panel first. breakpoints seeds the
// initial subdivision so that narrow features (eigenvalues much smaller
// than the interval) are sampled and become visible to the error estimate.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_panels,
                          const std::vector<double>& breakpoints = {}) {
    struct Panel {
        double a, b, integral, error;
        bool operator<(const Panel& other) const { return error < other.error; }
    };

    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > edges.back() && x < b) edges.push_back(x);
    edges.push_back(b);

    std::priority_queue<Panel> queue;
    double total = 0, total_err = 0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto r = gauss_kronrod_15(f, edges[i], edges[i + 1]);
        queue.push({edges[i], edges[i + 1], r.integral, r.error});
        total += r.integral;
        total_err += r.error;
        ++panels;
    }

    while (total_err > abs_tol) {
        if (panels >= max_panels)
            throw QuadratureError("quadrature: panel budget " + std::to_string(max_panels) +
                                      " exhausted before reaching tolerance",
                                  total, total_err);
        Panel worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        auto left = gauss_kronrod_15(f, worst.a, mid);
        auto right = gauss_kronrod_15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.integral, left.error});
        queue.push({mid, worst.b, right.integral, right.error});
        ++panels;
    }
    return total;
}

void validate(const CharPolyCoeffs& coeffs, const QuadratureConfig& cfg) {
    if (coeffs.b.empty() || coeffs.b[0] != 1.0)
        throw std::invalid_argument("characteristic polynomial must be monic");
    if (cfg.max_panels < 16) throw std::invalid_argument("panel budget must be >= 16");
    if (cfg.target_tol <= 0) throw std::invalid_argument("target tolerance must be positive");
    for (double c : coeffs.b)
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite coefficient");
}

// Number of trailing coefficients that vanish relative to the largest;
// equals the multiplicity of the zero root up to rank tolerance.
int trailing_zero_count(const std::vector<double>& b) {
    double scale = 0;
    for (double c : b) scale = std::max(scale, std::abs(c));
    int z = 0;
    for (auto it = b.rbegin(); it != b.rend() && std::abs(*it) <= 1e-12 * scale; ++it) ++z;
    return std::min<int>(z, static_cast<int>(b.size()) - 1);
}

// Horner for sum_{i=0..n} b[i] * x^{n-i} (descending powers, b ascending index).
cplx horner_descending(const std::vector<double>& b, cplx x) {
    cplx acc = b.front();
    for (std::size_t i = 1; i < b.size(); ++i) acc = acc * x + b[i];
    return acc;
}

double fujiwara_root_bound(const std::vector<double>& b) {
    double best = 0;
    for (std::size_t i = 1; i < b.size(); ++i)
        best = std::max(best, std::pow(std::abs(b[i]), 1.0 / static_cast<double>(i)));
    return 2.0 * best;
}

// geometric ladder of lambda values mapped through atan, reaching down to
// eigenvalue scale 1e-8 and out into the decay region
std::vector<double> theta_breakpoints() {
    std::vector<double> thetas;
    for (double lam : {1e-8, 1e-6, 1e-4, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0, 1e3, 1e6})
        thetas.push_back(std::atan(lam));
    return thetas;
}

}  // namespace

ImagAxisPolyValue eval_char_poly_imag(const CharPolyCoeffs& coeffs, double lambda) {
    const auto& b = coeffs.b;
    const int n = coeffs.degree();
    const double l2 = lambda * lambda;

    // Re = sum_j (-1)^j b_{n-2j} l^{2j}: Horner in l^2, highest j first.
    double re = 0;
    for (int j = n / 2; j >= 0; --j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        re = re * l2 + sign * b[n - 2 * j];
    }
    double im = 0;
    if (n >= 1) {
        for (int j = (n - 1) / 2; j >= 0; --j) {
            double sign = (j % 2 == 0) ? 1.0 : -1.0;
            im = im * l2 + sign * b[n - 2 * j - 1];
        }
        im *= lambda;
    }
    return {re, im};
}

std::vector<double> char_poly_derivative(const CharPolyCoeffs& coeffs) {
    const int n = coeffs.degree();
    std::vector<double> d;
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back((n - i) * coeffs.b[i]);
    return d;  // coefficients of x^{n-1-i}, i = 0..n-1
}

double coulson_integrand(const CharPolyCoeffs& coeffs, double lambda) {
    if (coeffs.degree() == 0) return 0;

    // Zero eigenvalues contribute nothing to the integrand and their
    // x^z factor cancels exactly: n - x Phi'/Phi = q - x psi'/psi with
    // Phi = x^z psi, q = n - z. Working with psi keeps Phi(i*lambda)
    // from underflowing at small lambda on rank-deficient inputs.
    const int z = trailing_zero_count(coeffs.b);
    const std::vector<double> b(coeffs.b.begin(), coeffs.b.end() - z);
    const int q = static_cast<int>(b.size()) - 1;
    if (q == 0) return 0;

    if (std::abs(lambda) <= 1.0) {
        // q - Re[i*l*psi'(i*l)/psi(i*l)] with both polynomials evaluated
        // directly on the imaginary axis.
        CharPolyCoeffs reduced{b};
        auto p = eval_char_poly_imag(reduced, lambda);
        std::vector<double> dcoeffs;
        dcoeffs.reserve(q);
        for (int i = 0; i < q; ++i) dcoeffs.push_back((q - i) * b[i]);
        // reuse the even/odd splitter: it only assumes descending powers
        auto d = eval_char_poly_imag(CharPolyCoeffs{dcoeffs}, lambda);
        double denom = p.real_part * p.real_part + p.imag_part * p.imag_part;
        double num = lambda * (d.real_part * p.imag_part - d.imag_part * p.real_part);
        return q - num / denom;
    }

    // For |lambda| > 1 rewrite with w = 1/(i*lambda):
    //   q - i*l*psi'/psi = (sum i*b_i w^i) / (sum b_i w^i),
    // which avoids forming lambda^q.
    cplx w = cplx(0, -1.0 / lambda);
    cplx num = 0, den = 0;
    for (int i = q; i >= 0; --i) {
        num = num * w + static_cast<double>(i) * b[i];
        den = den * w + b[i];
    }
    return (num / den).real();
}

namespace {

// log(A^2 + B^2) with A, B the even/odd coefficient sums; stable both at
// lambda -> 0 (log1p form against cancellation) and for large lambda
// (dominant power of lambda factored out before the log).
double log_squared_modulus(const CharPolyCoeffs& coeffs, double lambda) {
    const auto& b = coeffs.b;
    const int n = coeffs.degree();
    const double l2 = lambda * lambda;

    if (std::abs(lambda) <= 1.0) {
        // u = A - b_0 keeps the constant term out of the sum
        double u = 0;
        for (int j = n / 2; j >= 1; --j) {
            double sign = (j % 2 == 0) ? 1.0 : -1.0;
            u = u * l2 + sign * b[2 * j];
        }
        u *= l2;
        double B = 0;
        if (n >= 1) {
            for (int j = (n - 1) / 2; j >= 0; --j) {
                double sign = (j % 2 == 0) ? 1.0 : -1.0;
                B = B * l2 + sign * b[2 * j + 1];
            }
            B *= lambda;
        }
        return std::log1p(u * (u + 2.0) + B * B);
    }

    // Trailing zero coefficients (zero eigenvalues) drop out of A and B, so
    // work with the reduced degree q; the highest surviving power is
    // lambda^q with coefficient b_q != 0, which keeps the factored inner
    // sums away from underflow.
    const int q = n - trailing_zero_count(b);
    const double u = 1.0 / l2;
    const int I = q / 2, J = (q - 1) / 2;
    double At = b[0];
    for (int i = 1; i <= I; ++i) {
        double sign = (i % 2 == 0) ? 1.0 : -1.0;
        At = At * u + sign * b[2 * i];
    }
    double Bt = 0;
    if (q >= 1) {
        Bt = b[1];
        for (int i = 1; i <= J; ++i) {
            double sign = (i % 2 == 0) ? 1.0 : -1.0;
            Bt = Bt * u + sign * b[2 * i + 1];
        }
    }
    // A = l^{2I} At(u), B = l^{2J+1} Bt(u); the smaller-degree square picks
    // up one factor of u relative to l^{2q}.
    double inner = (q % 2 == 0) ? At * At + u * Bt * Bt : u * At * At + Bt * Bt;
    return 2.0 * q * std::log(std::abs(lambda)) + std::log(inner);
}

}  // namespace

double coulson_log_integrand(const CharPolyCoeffs& coeffs, double lambda) {
    if (lambda == 0) {
        // continuous extension: log(A^2+B^2) ~ (b_1^2 - 2 b_2) l^2
        const auto& b = coeffs.b;
        if (coeffs.degree() < 2) return coeffs.degree() < 1 ? 0 : b[1] * b[1];
        return b[1] * b[1] - 2 * b[2];
    }
    return log_squared_modulus(coeffs, lambda) / (lambda * lambda);
}

double coulson_corollary_integrand(const CharPolyCoeffs& coeffs, double lambda) {
    const auto& b = coeffs.b;
    const int n = coeffs.degree();
    if (n == 0) return 0;
    if (lambda == 0) {
        double b2 = n >= 2 ? b[2] : 0;
        return 0.5 * (b[1] * b[1] - 2 * b2);
    }

    double log_mod;  // ln |lambda^n Phi(i/lambda)|
    if (std::abs(lambda) <= 1.0) {
        // lambda^n Phi(i/lambda) = i^n sum_j b_j (-i*lambda)^j; split off
        // the constant 1 so the modulus is log1p-stable near 0.
        cplx y(0, -lambda);
        cplx s = 0;  // s = sum_{j>=1} b_j y^j
        for (int j = n; j >= 1; --j) s = (s + b[j]) * y;
        log_mod = 0.5 * std::log1p(2.0 * s.real() + std::norm(s));
    } else {
        // ln lambda^n |Phi(i/lambda)| with the zero-root factor stripped
        // so Phi(i/lambda) cannot underflow for large lambda.
        int z = trailing_zero_count(b);
        std::vector<double> reduced(b.begin(), b.end() - z);
        cplx x(0, 1.0 / lambda);
        cplx psi = horner_descending(reduced, x);
        log_mod = (n - z) * std::log(std::abs(lambda)) + std::log(std::abs(psi));
    }
    return log_mod / (lambda * lambda);
}

double coulson_energy(const CharPolyCoeffs& coeffs, const QuadratureConfig& cfg) {
    validate(coeffs, cfg);
    const int n = coeffs.degree();
    if (n == 0) return 0;
    const double pi = std::numbers::pi;

    if (cfg.rule == QuadratureConfig::Rule::truncated) {
        double cutoff = cfg.cutoff > 0
                            ? cfg.cutoff
                            : 1000.0 * std::max(1.0, fujiwara_root_bound(coeffs.b));
        auto f = [&](double lam) { return coulson_integrand(coeffs, lam); };
        std::vector<double> seeds;
        for (double lam : {1e-8, 1e-6, 1e-4, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0, 1e3, 1e6})
            seeds.push_back(lam);
        double body =
            adaptive_integrate(f, 0.0, cutoff, cfg.target_tol, cfg.max_panels, seeds);
        // integrand ~ Q/lambda^2 with Q = -2 b_2, so the tail adds Q/cutoff
        double q = n >= 2 ? -2.0 * coeffs.b[2] : 0.0;
        return (2.0 / pi) * (body + q / cutoff);
    }

    auto g = [&](double theta) {
        double lam = std::tan(theta);
        double sec2 = 1.0 + lam * lam;
        return coulson_integrand(coeffs, lam) * sec2;
    };
    return (2.0 / pi) * adaptive_integrate(g, 0.0, pi / 2, cfg.target_tol,
                                           cfg.max_panels, theta_breakpoints());
}

double coulson_energy_logform(const CharPolyCoeffs& coeffs, const QuadratureConfig& cfg) {
    validate(coeffs, cfg);
    if (coeffs.degree() == 0) return 0;
    const double pi = std::numbers::pi;
    auto g = [&](double theta) {
        double lam = std::tan(theta);
        double s = std::sin(theta);
        return log_squared_modulus(coeffs, lam) / (s * s);
    };
    return (1.0 / pi) * adaptive_integrate(g, 0.0, pi / 2, cfg.target_tol,
                                           cfg.max_panels, theta_breakpoints());
}

double coulson_energy_corollary_form(const CharPolyCoeffs& coeffs,
                                     const QuadratureConfig& cfg) {
    validate(coeffs, cfg);
    if (coeffs.degree() == 0) return 0;
    const double pi = std::numbers::pi;
    auto g = [&](double theta) {
        double lam = std::tan(theta);
        double sec2 = 1.0 + lam * lam;
        return coulson_corollary_integrand(coeffs, lam) * sec2;
    };
    return (2.0 / pi) * adaptive_integrate(g, 0.0, pi / 2, cfg.target_tol,
                                           cfg.max_panels, theta_breakpoints());
}

}  // namespace isienergy
