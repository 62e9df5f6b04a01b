#include "subzeta/errors.hpp"
#include "subzeta/ratfun.hpp"

#include <doctest.h>

#include <random>

using namespace subzeta;

namespace {

const RatFun2 q = RatFun2::monomial(1, 1, 0);
const RatFun2 t = RatFun2::monomial(1, 0, 1);
const RatFun2 one = RatFun2(1);

QPoly qp(std::vector<long> c) {
    std::vector<mpq_class> v(c.begin(), c.end());
    return QPoly(v);
}

Poly2 random_poly(std::mt19937& rng, int dq, int dt, bool unit_constant) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Poly2 p;
    for (int b = 0; b <= dt; ++b)
        for (int a = 0; a <= dq; ++a) p += Poly2::monomial(coef(rng), a, b);
    if (unit_constant) {
        p -= Poly2::monomial(p.coeff(0, 0), 0, 0);
        for (int a = 1; a <= dq; ++a) p -= Poly2::monomial(p.coeff(a, 0), a, 0);
        p += Poly2(1);
    }
    return p;
}

RatFun2 random_series_ratfun(std::mt19937& rng) {
    return RatFun2(random_poly(rng, 2, 2, false), random_poly(rng, 2, 2, true));
}

}  // namespace

TEST_SUITE("ratfun") {
    TEST_CASE("normalize cancels common factors") {
        CHECK(RatFun2(Poly2::monomial(1, 1, 1) - Poly2::monomial(1, 0, 1), Poly2::monomial(1, 1, 0) - Poly2(1)) == t);
        CHECK((one - t * t) / (one - t) == one + t);
        CHECK((one - q * t) / (one - q * t) == one);
        CHECK(normalize((one - t * t) / (one - t)) == one + t);
    }

    TEST_CASE("zero denominator is rejected") { CHECK_THROWS(RatFun2(Poly2(1), Poly2())); }

    TEST_CASE("canonical denominator has positive lex leading coefficient") {
        RatFun2 f = one / (t - one);
        CHECK(f.den().lex_leading() > 0);
        CHECK(f == -one / (one - t));
    }

    TEST_CASE("substitute_inverse examples") {
        CHECK(substitute_inverse(one / (one - t)) == -t / (one - t));
        RatFun2 f = one / ((one - t) * (one - q * t * t));
        CHECK(substitute_inverse(f) == q * t * t * t / ((one - t) * (one - q * t * t)));
        CHECK(substitute_inverse(q) == one / q);
        CHECK(substitute_inverse(substitute_inverse(f)) == f);
    }

    TEST_CASE("series_in_t examples") {
        auto s = series_in_t(one / ((one - t) * (one - q * t)), 2);
        REQUIRE(s.size() == 3);
        CHECK(s[0] == qp({1}));
        CHECK(s[1] == qp({1, 1}));
        CHECK(s[2] == qp({1, 1, 1}));
        CHECK(s[2].eval(2) == 7);
        auto g = series_in_t(one / (one - t), 3);
        for (const auto& c : g) CHECK(c == qp({1}));
        auto h = series_in_t(one / ((one - t) * (one - q * t * t)), 2);
        CHECK(h[0] == qp({1}));
        CHECK(h[1] == qp({1}));
        CHECK(h[2] == qp({1, 1}));
    }

    TEST_CASE("series_in_t needs an expansion at t = 0") {
        CHECK_THROWS_AS(series_in_t(one / t, 2), PreconditionError);
        CHECK_THROWS_AS(series_in_t(one / (q - q * t), 2), PreconditionError);
    }

    TEST_CASE("degrees and leading limit") {
        CHECK(deg_t(one / ((one - t) * (one - q * t))) == -2);
        RatFun2 f = one / ((one - t) * (one - q * t * t));
        CHECK(deg_t(f) == -3);
        CHECK(leading_limit(f, 3) == RatFun1(QPoly(1), qp({0, 1})));
        CHECK(deg_q(one / ((one - t) * (one - q * t))) == -1);
        CHECK_THROWS(leading_limit(f, 2));
    }

    TEST_CASE("string form peels (1 - q^a t^b) factors") {
        CHECK((one / ((one - t) * (one - q * t * t))).to_string() == "1/((1-t)*(1-q*t^2))");
    }

    TEST_CASE("property: substitute_inverse is an involution") {
        std::mt19937 rng(17);
        for (int it = 0; it < 40; ++it) {
            RatFun2 f = random_series_ratfun(rng);
            CHECK(substitute_inverse(substitute_inverse(f)) == f);
        }
    }

    TEST_CASE("property: series of a product is the Cauchy product") {
        std::mt19937 rng(23);
        const int K = 6;
        for (int it = 0; it < 25; ++it) {
            RatFun2 f = random_series_ratfun(rng), g = random_series_ratfun(rng);
            auto sf = series_in_t(f, K), sg = series_in_t(g, K), sfg = series_in_t(f * g, K);
            for (int k = 0; k <= K; ++k) {
                QPoly c;
                for (int i = 0; i <= k; ++i) c += sf[i] * sg[k - i];
                CHECK(c == sfg[k]);
            }
        }
    }

    TEST_CASE("property: value-equal inputs share a canonical form") {
        std::mt19937 rng(5);
        for (int it = 0; it < 30; ++it) {
            Poly2 a = random_poly(rng, 2, 2, false), b = random_poly(rng, 2, 2, true), c = random_poly(rng, 1, 1, true);
            RatFun2 x(a, b), y(a * c, b * c);
            CHECK(x == y);
            CHECK(normalize(x) == x);
            CHECK((x + y) - y == x);
            if (!x.is_zero()) CHECK((x * y) / x == y);
        }
    }

    TEST_CASE("property: leading limit equals the ratio of top t coefficients") {
        std::mt19937 rng(11);
        int checked = 0;
        for (int it = 0; it < 40; ++it) {
            RatFun2 f = random_series_ratfun(rng);
            if (f.is_zero()) continue;
            int B = -deg_t(f);
            const Poly2& n = f.num();
            const Poly2& d = f.den();
            RatFun1 expect(n.coeff_t(n.deg_t()), d.coeff_t(d.deg_t()));
            CHECK(leading_limit(f, B) == expect);
            ++checked;
        }
        CHECK(checked > 20);
    }
}
