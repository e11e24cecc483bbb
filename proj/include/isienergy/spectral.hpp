#ifndef ISIENERGY_SPECTRAL_HPP
#define ISIENERGY_SPECTRAL_HPP

#include <stdexcept>
#include <vector>

namespace isienergy {

/// Real symmetric matrix, upper triangle (with diagonal) stored once.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {
        if (n < 0) throw std::invalid_argument("matrix order must be non-negative");
    }

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[index(i, j)]; }
    void set(int i, int j, double v) { a_[index(i, j)] = v; }

    double trace() const;
    double frobenius_norm() const;

private:
    std::size_t index(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(j) * (j + 1) / 2 + i;
    }

    int n_;
    std::vector<double> a_;
};

struct EigenOptions {
    double tol = 1e-12;   // relative off-diagonal Frobenius target
    int max_sweeps = 100;
};

/// Eigenvalues sorted non-increasing, with a grouped multiplicity view.
struct Spectrum {
    std::vector<double> values;   // non-increasing
    double grouping_tol = 1e-8;

    struct Group {
        double value;
        int multiplicity;
    };

    // Merges maximal runs of values within grouping_tol of the run's first
    // value; each group reports the mean and the multiplicity.
    std::vector<Group> grouped() const;

    int size() const { return static_cast<int>(values.size()); }

    static Spectrum from_values(std::vector<double> v, double grouping_tol = 1e-8);
};

// Cyclic Jacobi rotations. Terminates when the off-diagonal Frobenius norm
// drops below opts.tol times the Frobenius norm of M; throws
// std::runtime_error after opts.max_sweeps sweeps without convergence,
// std::invalid_argument on non-finite entries.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& M, const EigenOptions& opts = {});

/// Monic characteristic polynomial x^n + b_1 x^(n-1) + ... + b_n,
/// coefficients b[0]=1, b[1], ..., b[n].
struct CharPolyCoeffs {
    std::vector<double> b;

    int degree() const { return static_cast<int>(b.size()) - 1; }
};

// Coefficients from the full spectrum via the stable iterative product
// expansion of prod(x - tau_j). b_i = (-1)^i e_i(tau).
CharPolyCoeffs char_poly_coeffs(const Spectrum& spectrum);

// True iff same length and elementwise |a_i - b_i| <= tol (both sorted
// non-increasing already).
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace isienergy

#endif
