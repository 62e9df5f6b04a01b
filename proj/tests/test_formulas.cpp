#include "oracle.hpp"

#include "subzeta/catalog.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/formulas.hpp"
#include "subzeta/lattice_enum.hpp"

#include <doctest.h>

using namespace subzeta;

namespace {

const RatFun2 q = RatFun2::monomial(1, 1, 0);
const RatFun2 t = RatFun2::monomial(1, 0, 1);
const RatFun2 one = RatFun2(1);

QPoly qp(std::vector<long> c) {
    std::vector<mpq_class> v(c.begin(), c.end());
    return QPoly(v);
}

long binom(int a, int b) {
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace

TEST_SUITE("formulas") {
    TEST_CASE("zeta_c1 examples") {
        CHECK(zeta_c1(1) == one / (one - t));
        CHECK(zeta_c1(2) == one / ((one - t) * (one - q * t)));
        auto s = series_in_t(zeta_c1(2), 3);
        CHECK(s[3] == qp({1, 1, 1, 1}));
        CHECK(count_sublattices(2, Prime(2), 3) == 15);
    }

    TEST_CASE("Gaussian binomials") {
        CHECK(gaussian_binomial(2, 1) == qp({1, 1}));
        CHECK(gaussian_binomial(4, 2) == qp({1, 1, 2, 1, 1}));
        CHECK(gaussian_binomial(4, 2).eval(1) == 6);
        CHECK(gaussian_multinomial(3, {1, 2}) == qp({1, 1}) * qp({1, 1, 1}));
        CHECK(gaussian_multinomial(3, {1, 2}).eval(1) == 6);
        CHECK(gaussian_multinomial(5, {}) == qp({1}));
        CHECK(gaussian_binomial(2, 3).is_zero());
        CHECK_THROWS(gaussian_multinomial(3, {2, 1}));
    }

    TEST_CASE("property: Gaussian binomial identities") {
        for (int a = 0; a <= 9; ++a)
            for (int b = 0; b <= a; ++b) {
                QPoly g = gaussian_binomial(a, b);
                CHECK(g.eval(1) == binom(a, b));
                for (const auto& c : g.coeffs()) CHECK(c >= 0);
                CHECK(g.reversed(g.degree()) == g);
                CHECK(g.degree() == b * (a - b));
                if (a >= 1 && b >= 1 && b < a)  // q-Pascal
                    CHECK(g == gaussian_binomial(a - 1, b - 1) + gaussian_binomial(a - 1, b).shifted(b));
                if (b >= 1 && b < a) CHECK(gaussian_multinomial(a, {b}) == g);
            }
    }

    TEST_CASE("abelian-by-inert examples") {
        CHECK(zeta_abelian_inert(1) == one / ((one - t) * (one - q * t * t)));
        auto s = series_in_t(zeta_abelian_inert(1), 4);
        CHECK(s[4] == qp({1, 1, 1}));
        CHECK(s[2] == qp({1, 1}));
    }

    TEST_CASE("property: product formula matches sublattice counts") {
        for (int n = 1; n <= 4; ++n) {
            auto s = series_in_t(zeta_c1(n), 4);
            for (long p : {2L, 3L})
                for (int k = 0; k <= 4; ++k) CHECK(s[k].eval(p) == mpq_class(count_sublattices(n, Prime(p), k)));
        }
    }

    TEST_CASE("property: abelian-by-inert formula matches the membership oracle") {
        for (int n = 1; n <= 2; ++n) {
            EndoSetup e = m_f(Partition({n}));
            int K = n == 1 ? 6 : 3;
            auto s = series_in_t(zeta_abelian_inert(n), K);
            for (long p : {2L, 3L})
                for (int k = 0; k <= K; ++k)
                    CHECK_MESSAGE(s[k].eval(p) == mpq_class(oracle::count_invariant(e, p, k)), "n=" << n << " p=" << p << " k=" << k);
        }
    }

    TEST_CASE("functional equation shapes") {
        CHECK(fe_shape_rectangle(4, 1, 0) == FEShape{-1, 10, 14});
        CHECK(fe_shape_abelian(1) == FEShape{1, 1, 3});
        CHECK(fe_shape_free(2, 2) == FEShape{-1, 3, 5});
        CHECK(fe_shape_main(3, {3, 1}) == FEShape{-1, 3, 4});
        CHECK(fe_shape_sut(3, Partition({1, 1, 1})) == FEShape{-1, 3, 3});
        for (int n = 1; n <= 5; ++n) CHECK(fe_shape_main(2 * n, {2 * n, n}) == fe_shape_abelian(n));
        CHECK(to_string(FEShape{-1, 3, 5}) == "(-1, 3, 5)");
    }
}
