#include "isienergy/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace isienergy {

double SymmetricMatrix::trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            double v = (*this)(i, j);
            s += v * v;
        }
    return std::sqrt(s);
}

std::vector<Spectrum::Group> Spectrum::grouped() const {
    std::vector<Group> groups;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && std::abs(values[j] - values[i]) <= grouping_tol) {
            sum += values[j];
            ++j;
        }
        groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return groups;
}

Spectrum Spectrum::from_values(std::vector<double> v, double grouping_tol) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    return Spectrum{std::move(v), grouping_tol};
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = a[static_cast<std::size_t>(i) * n + j];
            s += 2 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymmetricMatrix& M, const EigenOptions& opts) {
    int n = M.order();
    if (opts.tol <= 0) throw std::invalid_argument("eigensolver tolerance must be positive");

    // private working copy, full storage
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = M(i, j);
            if (!std::isfinite(v)) throw std::invalid_argument("matrix has non-finite entry");
            a[static_cast<std::size_t>(i) * n + j] = v;
        }

    double norm = M.frobenius_norm();
    double threshold = opts.tol * norm;
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sweep = 0;
    while (off_diagonal_norm(a, n) > threshold) {
        if (++sweep > opts.max_sweeps)
            throw std::runtime_error("Jacobi eigensolver did not converge in " +
                                     std::to_string(opts.max_sweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double app = at(p, p), aqq = at(q, q);
                double theta = (aqq - app) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(p, k) = at(k, p);
                    at(k, q) = s * akp + c * akq;
                    at(q, k) = at(k, q);
                }
            }
    }

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = at(i, i);
    return Spectrum::from_values(std::move(values));
}

CharPolyCoeffs char_poly_coeffs(const Spectrum& spectrum) {
    // expand prod (x - tau_j) one root at a time
    std::vector<double> b{1.0};
    for (double tau : spectrum.values) {
        std::vector<double> nb(b.size() + 1, 0.0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            nb[i] += b[i];
            nb[i + 1] -= b[i] * tau;
        }
        b = std::move(nb);
    }
    return CharPolyCoeffs{std::move(b)};
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    return true;
}

}  // namespace isienergy
