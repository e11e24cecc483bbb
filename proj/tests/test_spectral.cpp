#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "isienergy/graph.hpp"
#include "isienergy/isi.hpp"
#include "isienergy/spectral.hpp"

using namespace isienergy;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("2x2 and small closed-form spectra") {
    SymmetricMatrix m(2);
    m.set(0, 1, 0.5);
    auto spec = eigenvalues_symmetric(m);
    CHECK(spec.values[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spec.values[1] == doctest::Approx(-0.5).epsilon(1e-12));

    // K_{1,2} = P3: +-(mn)^{3/2}/(m+n) with m=1, n=2, and a zero
    auto p3 = isi_spectrum(path_graph(3));
    double a = std::pow(2.0, 1.5) / 3.0;
    CHECK(std::abs(p3.values[0] - a) < 1e-12);
    CHECK(std::abs(p3.values[1]) < 1e-12);
    CHECK(std::abs(p3.values[2] + a) < 1e-12);
}

TEST_CASE("P4 spectrum regression: tau2 = 1/3") {
    auto spec = isi_spectrum(path_graph(4));
    std::vector<double> expected{4.0 / 3, 1.0 / 3, -1.0 / 3, -4.0 / 3};
    CHECK(max_abs_diff(spec.values, expected) < 1e-10);
    // second-largest eigenvalue is 1/3, not 4/3 (4/3 is the largest)
    CHECK(spec.values[1] == doctest::Approx(1.0 / 3).epsilon(1e-10));
    CHECK(spec.values[1] > 0);
}

TEST_CASE("closed-form spectra of K_n and K_{m,n} up to n = 50") {
    for (int n : {2, 3, 10, 25, 50}) {
        auto spec = isi_spectrum(complete_graph(n));
        CHECK(std::abs(spec.values[0] - (n - 1.0) * (n - 1.0) / 2.0) < 1e-9);
        for (int i = 1; i < n; ++i)
            CHECK(std::abs(spec.values[i] - (1.0 - n) / 2.0) < 1e-9);
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {3, 3}, {5, 12}, {20, 20}}) {
        auto spec = isi_spectrum(complete_bipartite_graph(m, n));
        double peak = std::pow(static_cast<double>(m) * n, 1.5) / (m + n);
        CHECK(std::abs(spec.values.front() - peak) < 1e-9);
        CHECK(std::abs(spec.values.back() + peak) < 1e-9);
        for (int i = 1; i < m + n - 1; ++i) CHECK(std::abs(spec.values[i]) < 1e-9);
    }
}

TEST_CASE("eigenvalue sums match trace and Frobenius norm") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 12;
        Graph g = testing::random_graph(n, 0.5, rng);
        auto M = isi_matrix(g);
        auto spec = eigenvalues_symmetric(M);
        double sum = std::accumulate(spec.values.begin(), spec.values.end(), 0.0);
        double sq = 0;
        for (double v : spec.values) sq += v * v;
        CHECK(std::abs(sum - M.trace()) < 1e-9 * n);
        double frob = M.frobenius_norm();
        CHECK(std::abs(sq - frob * frob) < 1e-8 * n);
    }
}

TEST_CASE("sorted spectrum is invariant under vertex relabeling") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + trial % 17;
        Graph g = testing::random_graph(n, 0.45, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto s1 = isi_spectrum(g);
        auto s2 = isi_spectrum(permute_vertices(g, perm));
        CHECK(max_abs_diff(s1.values, s2.values) < 1e-10);
    }
}

TEST_CASE("eigensolver input validation") {
    SymmetricMatrix bad(2);
    bad.set(0, 1, std::nan(""));
    CHECK_THROWS_AS(eigenvalues_symmetric(bad), std::invalid_argument);
    SymmetricMatrix ok(3);
    CHECK_THROWS_AS(eigenvalues_symmetric(ok, {.tol = -1}), std::invalid_argument);

    // zero matrix converges instantly
    auto spec = eigenvalues_symmetric(SymmetricMatrix(4));
    CHECK(spec.values == std::vector<double>(4, 0.0));
}

TEST_CASE("characteristic polynomial from the spectrum") {
    auto half = Spectrum::from_values({0.5, -0.5});
    auto c = char_poly_coeffs(half);
    CHECK(c.b.size() == 3);
    CHECK(c.b[0] == 1.0);
    CHECK(std::abs(c.b[1]) < 1e-15);
    CHECK(c.b[2] == doctest::Approx(-0.25));

    auto p4 = char_poly_coeffs(isi_spectrum(path_graph(4)));
    CHECK(std::abs(p4.b[1]) < 1e-12);
    CHECK(p4.b[2] == doctest::Approx(-17.0 / 9).epsilon(1e-10));
    CHECK(std::abs(p4.b[3]) < 1e-12);
    CHECK(p4.b[4] == doctest::Approx(16.0 / 81).epsilon(1e-10));

    auto zeros = char_poly_coeffs(Spectrum::from_values({0, 0, 0}));
    CHECK(zeros.b == std::vector<double>{1, 0, 0, 0});
}

TEST_CASE("char poly invariants: b1 = 0 and (-1)^n b_n = det") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 9;
        Graph g = testing::random_graph(n, 0.5, rng);
        auto spec = isi_spectrum(g);
        auto c = char_poly_coeffs(spec);
        CHECK(std::abs(c.b[1]) < 1e-9);
        double det = determinant_from_spectrum(spec);
        double sign = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(sign * c.b[n] == doctest::Approx(det).epsilon(1e-8));
    }
}

TEST_CASE("spectra_equal and cospectrality examples") {
    auto k3 = isi_spectrum(complete_graph(3));
    CHECK(spectra_equal(k3, k3, 1e-10));

    // two 3-regular 6-vertex graphs that are not S-cospectral
    CHECK_FALSE(spectra_equal(isi_spectrum(complete_bipartite_graph(3, 3)),
                              isi_spectrum(prism_graph()), 1e-8));

    CHECK_FALSE(spectra_equal(
        isi_spectrum(star_graph(5)),
        isi_spectrum(disjoint_union(empty_graph(1), star_graph(4))), 1e-8));

    CHECK_FALSE(spectra_equal(k3, isi_spectrum(complete_graph(4)), 1e-8));
}

TEST_CASE("multiplicity grouping") {
    auto spec = isi_spectrum(complete_graph(5));
    auto groups = spec.grouped();
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].value == doctest::Approx(8.0));
    CHECK(groups[0].multiplicity == 1);
    CHECK(groups[1].value == doctest::Approx(-2.0));
    CHECK(groups[1].multiplicity == 4);
    int total = 0;
    for (const auto& grp : groups) total += grp.multiplicity;
    CHECK(total == spec.size());
}
