#include "subzeta/intmat.hpp"

#include <doctest.h>

#include <random>

using namespace subzeta;

namespace {

IntMat random_matrix(std::mt19937& rng, int r, int c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

std::vector<mpz_class> mpz_vec(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Cofactor expansion along the first row; exponential, for small oracles only.
mpz_class det_cofactor(const IntMat& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    mpz_class s = 0;
    for (int j = 0; j < n; ++j) {
        IntMat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        mpz_class term = m(0, j) * det_cofactor(minor);
        s += (j % 2 ? -term : term);
    }
    return s;
}

}  // namespace

TEST_SUITE("intlinalg") {
    TEST_CASE("snf, adjugate and det examples") {
        auto d = snf(IntMat{{2, 0, 0}, {0, 1, 0}, {0, 0, 4}});
        CHECK(d == mpz_vec({1, 2, 4}));
        CHECK(adjugate(IntMat{{1, 1}, {0, 2}}) == IntMat{{2, -1}, {0, 1}});
        CHECK(det(IntMat{{8, 0}, {0, 32}}) == 256);
        CHECK(det(IntMat{{1, 2}, {2, 4}}) == 0);
    }

    TEST_CASE("valuation examples") {
        CHECK(valuation(IntMat{{2, 4}, {8, 2}}, 2) == 1);
        CHECK(valuation(IntMat::identity(3), 5) == 0);
        CHECK(valuation(IntMat(2, 2), 3) == kInfiniteValuation);
        CHECK(valuation(mpz_class(48), 2) == 4);
    }

    TEST_CASE("saturate examples") {
        CHECK(saturate(IntMat{{2, 0}}) == IntMat{{1, 0}});
        CHECK(saturate(IntMat{{1, 1}, {1, -1}}) == IntMat::identity(2));
        CHECK(snf(IntMat{{1, 1}, {1, -1}}) == mpz_vec({1, 2}));
        CHECK(same_lattice(saturate(IntMat{{1, 2}, {0, 1}}), IntMat{{1, 2}, {0, 1}}));
    }

    TEST_CASE("kernel examples") {
        CHECK(kernel_int(IntMat{{0, 1}, {0, 0}}) == IntMat{{0, 1}});
        CHECK(kernel_int(IntMat(2, 2)) == IntMat::identity(2));
        CHECK(kernel_int(IntMat{{2, 1}, {1, 1}}).rows() == 0);
    }

    TEST_CASE("hnf shape") {
        IntMat h = hnf(IntMat{{4, 6}, {2, 3}, {0, 5}});
        CHECK(h.is_upper_triangular());
        for (int j = 0; j < h.rows(); ++j) {
            CHECK(h(j, j) > 0);
            for (int i = 0; i < j; ++i) CHECK((h(i, j) >= 0 && h(i, j) < h(j, j)));
        }
    }

    TEST_CASE("property: adjugate identity and det oracle") {
        std::mt19937 rng(1);
        for (int it = 0; it < 60; ++it) {
            int n = 1 + it % 5;
            IntMat m = random_matrix(rng, n, n, it % 3 == 0 ? 1 : 6);
            mpz_class d = det(m);
            CHECK(d == det_cofactor(m));
            CHECK(m * adjugate(m) == d * IntMat::identity(n));
            CHECK(adjugate(m) * m == d * IntMat::identity(n));
        }
    }

    TEST_CASE("property: hnf preserves the row span") {
        std::mt19937 rng(2);
        std::uniform_int_distribution<int> coef(-4, 4);
        for (int it = 0; it < 40; ++it) {
            int n = 2 + it % 4;
            IntMat m = random_matrix(rng, n + it % 2, n, 9);
            IntMat h = hnf(m);
            CHECK(same_lattice(h, m));
            // random combinations of m lie in span(h) and vice versa
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<mpz_class> x(m.rows()), y(h.rows());
                for (auto& e : x) e = coef(rng);
                for (auto& e : y) e = coef(rng);
                CHECK(solve_left(h, row_times(x, m), nullptr));
                CHECK(solve_left(m, row_times(y, h), nullptr));
            }
            if (m.rows() == n && det(m) != 0) CHECK(det(h) == abs(det(m)));
        }
    }

    TEST_CASE("property: snf divisibility and transforms") {
        std::mt19937 rng(3);
        for (int it = 0; it < 40; ++it) {
            int r = 1 + it % 4, c = 1 + (it / 4) % 4;
            IntMat m = random_matrix(rng, r, c, 7);
            SnfResult s = snf_with_transforms(m);
            for (size_t i = 0; i + 1 < s.d.size(); ++i)
                if (s.d[i] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
            IntMat d(r, c);
            for (size_t i = 0; i < s.d.size(); ++i) d(i, i) = s.d[i];
            CHECK(s.u * m * s.v == d);
            CHECK(s.v * s.v_inv == IntMat::identity(c));
            CHECK(abs(det(s.u)) == 1);
            if (r == c && det(m) != 0) {
                mpz_class prod = 1;
                for (const auto& x : s.d) prod *= x;
                CHECK(prod == abs(det(m)));
            }
        }
    }

    TEST_CASE("property: saturate is idempotent with trivial invariant factors") {
        std::mt19937 rng(4);
        for (int it = 0; it < 30; ++it) {
            int n = 2 + it % 4;
            IntMat m = random_matrix(rng, 1 + it % n, n, 5);
            if (m.is_zero()) continue;
            IntMat s = saturate(m);
            CHECK(saturate(s) == s);
            for (const auto& x : snf(s)) CHECK(x == 1);
            // m lies inside its saturation
            for (int i = 0; i < m.rows(); ++i) CHECK(solve_left(s, m.row(i), nullptr));
        }
    }

    TEST_CASE("property: kernel rows annihilate and are saturated") {
        std::mt19937 rng(6);
        for (int it = 0; it < 30; ++it) {
            int r = 2 + it % 4, c = 1 + it % 3;
            IntMat m = random_matrix(rng, r, c, 3);
            IntMat k = kernel_int(m);
            if (k.rows() == 0) continue;
            CHECK((k * m).is_zero());
            CHECK(saturate(k) == hnf(k));
        }
    }
}
