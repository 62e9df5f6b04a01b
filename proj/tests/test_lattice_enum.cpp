#include "oracle.hpp"

#include "subzeta/catalog.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/lattice_enum.hpp"

#include <doctest.h>

#include <set>

using namespace subzeta;

namespace {

CountOptions pruned() {
    CountOptions o;
    o.strategy = Strategy::pruned;
    return o;
}

CountOptions threads(int t) {
    CountOptions o;
    o.threads = t;
    return o;
}

}  // namespace

TEST_SUITE("lattice_enum") {
    TEST_CASE("primes are validated") {
        CHECK_THROWS_AS(Prime(1), PreconditionError);
        CHECK_THROWS_AS(Prime(9), PreconditionError);
        CHECK(Prime(19).value() == 19);
    }

    TEST_CASE("enumerate_sublattices examples") {
        auto l = enumerate_sublattices(2, Prime(2), 1);
        std::set<std::string> got;
        for (const auto& m : l) got.insert(m.to_string());
        std::set<std::string> want{IntMat{{2, 0}, {0, 1}}.to_string(), IntMat{{1, 0}, {0, 2}}.to_string(),
                                   IntMat{{1, 1}, {0, 2}}.to_string()};
        CHECK(got == want);
        CHECK(enumerate_sublattices(2, Prime(2), 2).size() == 7);
        auto z = enumerate_sublattices(4, Prime(5), 0);
        REQUIRE(z.size() == 1);
        CHECK(z[0] == IntMat::identity(4));
    }

    TEST_CASE("enumeration matches the oracle and the product formula") {
        for (int n = 1; n <= 4; ++n)
            for (long p : {2L, 3L, 5L}) {
                auto s = oracle::product_series(n, p, 4);
                for (int k = 0; k <= 4; ++k) {
                    std::uint64_t o = 0;
                    if (n <= 3 || p == 2) {
                        oracle::each_hnf(n, p, k, [&](const oracle::Mat&) { ++o; });
                        CHECK(o == static_cast<std::uint64_t>(s[k]));
                    }
                    CHECK(count_sublattices(n, Prime(p), k) == static_cast<std::uint64_t>(s[k]));
                }
            }
    }

    TEST_CASE("enumerated lattices are distinct HNFs of the right index") {
        auto l = enumerate_sublattices(3, Prime(2), 3);
        std::set<std::string> seen;
        for (const auto& m : l) {
            CHECK(hnf(m) == m);
            CHECK(det(m) == 8);
            seen.insert(m.to_string());
        }
        CHECK(seen.size() == l.size());
    }

    TEST_CASE("is_invariant examples") {
        EndoSetup h = heisenberg();
        CHECK_FALSE(is_invariant(IntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, h));
        CHECK(is_invariant(IntMat{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, h));
        for (const auto& name : {"heisenberg", "fil4", "g66", "maximal:4"}) {
            EndoSetup e = lookup(name);
            CHECK(is_invariant(mpz_class(3) * IntMat::identity(e.rank()), e));
        }
    }

    TEST_CASE("count_invariant examples") {
        EndoSetup h = heisenberg();
        CHECK(count_invariant(h, Prime(2), 1) == 3);
        CHECK(count_invariant(h, Prime(2), 2) == 7);
        CHECK(count_invariant(h, Prime(2), 3) == 19);
        CHECK(count_invariant(m_f(Partition({1})), Prime(3), 2) == 4);
        CHECK(count_invariant(abelian(2), Prime(2), 2) == 7);
    }

    TEST_CASE("Heisenberg counts follow the hand-derived polynomials") {
        EndoSetup h = heisenberg();
        for (long p : {2L, 3L, 5L, 7L}) {
            auto z = zeta_series_bruteforce(h, Prime(p), 3);
            CHECK(z[1] == std::uint64_t(p + 1));
            CHECK(z[2] == std::uint64_t(p * p + p + 1));
            CHECK(z[3] == std::uint64_t(p * p * p + 2 * p * p + p + 1));
        }
    }

    TEST_CASE("property: invariance agrees with the membership oracle") {
        for (const auto& name : {"heisenberg", "fil4", "g66", "l:3,2", "mf:1,1", "u:2,1", "free:3,2"}) {
            EndoSetup e = lookup(name);
            auto gens = oracle::generators(e);
            int K = e.rank() <= 4 ? 3 : 2;
            for (long p : {2L, 3L})
                for (int k = 0; k <= K; ++k) {
                    std::uint64_t o = 0;
                    oracle::each_hnf(e.rank(), p, k, [&](const oracle::Mat& m) { o += oracle::invariant(m, gens); });
                    CHECK_MESSAGE(count_invariant(e, Prime(p), k) == o, name << " p=" << p << " k=" << k);
                    CHECK_MESSAGE(count_invariant(e, Prime(p), k, pruned()) == o, name << " p=" << p << " k=" << k);
                }
        }
    }

    TEST_CASE("property: pruned and exhaustive strategies agree") {
        for (const auto& name : {"heisenberg", "maximal:4", "grenham:2", "l:2,1", "mf:2", "u:3", "abelian:3", "fil4"}) {
            EndoSetup e = lookup(name);
            for (long p : {2L, 3L, 5L})
                for (int k = 0; k <= (p == 2 ? 4 : 2); ++k)
                    CHECK_MESSAGE(count_invariant(e, Prime(p), k) == count_invariant(e, Prime(p), k, pruned()),
                                  name << " p=" << p << " k=" << k);
        }
    }

    TEST_CASE("property: counts do not depend on the thread count") {
        EndoSetup e = maximal_class(4);
        for (int k = 0; k <= 4; ++k) {
            auto a = count_invariant(e, Prime(2), k, threads(1));
            CHECK(count_invariant(e, Prime(2), k, threads(3)) == a);
            CountOptions o = pruned();
            o.threads = 4;
            CHECK(count_invariant(e, Prime(2), k, o) == a);
        }
    }

    TEST_CASE("property: invariance is homothety invariant") {
        EndoSetup e = g66();
        for (const auto& m : enumerate_sublattices(6, Prime(2), 2))
            CHECK(is_invariant(m, e) == is_invariant(mpz_class(2) * m, e));
    }

    TEST_CASE("elementary divisor types") {
        DivisorType a = elementary_divisor_type(IntMat{{4, 0, 0}, {0, 2, 0}, {0, 0, 1}}, Prime(2));
        CHECK(a.I == std::vector<int>{1, 2});
        CHECK(a.r[1] == 1);
        CHECK(a.r[2] == 1);
        CHECK(a.r[3] == 0);
        DivisorType b = elementary_divisor_type(mpz_class(2) * IntMat::identity(3), Prime(2));
        CHECK(b.I.empty());
        CHECK(b.r[3] == 1);
        DivisorType c = elementary_divisor_type(IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}, Prime(2));
        CHECK(c.I == std::vector<int>{2});
        CHECK(c.r[2] == 1);
        CHECK(c.r[3] == 0);
        CHECK_THROWS(elementary_divisor_type(IntMat{{3, 0}, {0, 1}}, Prime(2)));
    }

    TEST_CASE("property: index and r_n from the divisor type") {
        for (const auto& m : enumerate_sublattices(3, Prime(2), 4)) {
            DivisorType d = elementary_divisor_type(m, Prime(2));
            int exp = 3 * d.r[3];
            for (int i : d.I) exp += i * d.r[i];
            CHECK(det(m) == mpz_class(1) << exp);
            CHECK(d.r[3] == valuation(m, 2));
        }
    }

    TEST_CASE("delta matrices") {
        CHECK(delta_matrix(heisenberg(), Prime(2)) == IntMat{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
        CHECK(det(delta_matrix(heisenberg(), Prime(2))) == 4);
        IntMat d4 = delta_matrix(maximal_class(4), Prime(3));
        std::vector<long> want{27, 27, 9, 3, 1};
        for (int i = 0; i < 5; ++i) CHECK(d4(i, i) == want[i]);
        CHECK(delta_matrix(abelian(3), Prime(5)) == IntMat::identity(3));
        GeneratorSetup g;
        g.rank = 3;
        g.generators = heisenberg().generators();
        g.generator_labels = {"a", "b"};
        g.grading = std::vector<int>{1, 2};
        CHECK_THROWS_AS(delta_matrix(EndoSetup{g}, Prime(2)), GradingError);
        CHECK_NOTHROW(delta_matrix(fil4(), Prime(2)));
    }

    TEST_CASE("worked example weights") {
        EndoSetup h = heisenberg();
        IntMat m1{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
        IntMat m2m{{1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
        CHECK(m_tilde1(m1, h, Prime(2)) == 1);
        CHECK(m_tilde1(m2m, h, Prime(2)) == 1);
        CHECK(m_tilde1_closed_form(m1, h, Prime(2)) == 1);
        CHECK(m_tilde1_closed_form(m2m, h, Prime(2)) == 1);
        CHECK(m2(m1, h, Prime(2)) == 1);
        CHECK(m2(m2m, h, Prime(2)) == 0);
        CHECK(weight_w(m1, h, Prime(2)) == 0);
        CHECK(weight_w(m2m, h, Prime(2)) == 1);
        // M1 delta = 2 I is not maximal, M2 delta is
        IntMat d = delta_matrix(h, Prime(2));
        CHECK(valuation(m1 * d, 2) == 1);
        CHECK(valuation(m2m * d, 2) == 0);
    }

    TEST_CASE("property: m~1 and m2 closed forms, bounds and minimality") {
        struct Case {
            const char* name;
            long p;
            int K;
        };
        for (const auto& c : {Case{"heisenberg", 2, 4}, Case{"heisenberg", 3, 3}, Case{"maximal:3", 2, 3},
                              Case{"grenham:2", 2, 2}, Case{"mf:1", 3, 4}, Case{"u:3", 2, 3}, Case{"free:2,3", 2, 1}}) {
            EndoSetup e = lookup(c.name);
            Prime p(c.p);
            IntMat d = delta_matrix(e, p);
            int checked = 0;
            for (int k = 0; k <= c.K; ++k)
                for (const auto& m : enumerate_sublattices(e.rank(), p, k)) {
                    int mt = m_tilde1(m, e, p);
                    CHECK(mt == m_tilde1_closed_form(m, e, p));
                    CHECK(m2(m, e, p) == m2_closed_form(m, e, p));
                    DivisorType ty = elementary_divisor_type(m, p);
                    CHECK(mt <= ty.sum_r());
                    CHECK(weight_w(m, e, p) >= 0);
                    bool inv = is_invariant(m, e);
                    CHECK((mt == 0) == inv);
                    if (inv) CHECK(weight_w(m, e, p) == 0);
                    // M0 delta^mt invariant, M0 delta^(mt-1) not
                    IntMat x = m;
                    for (int j = 0; j < mt; ++j) x = x * d;
                    CHECK(is_invariant(x, e));
                    if (mt > 0) {
                        IntMat y = m;
                        for (int j = 0; j + 1 < mt; ++j) y = y * d;
                        CHECK_FALSE(is_invariant(y, e));
                    }
                    ++checked;
                }
            CHECK(checked > 0);
        }
    }

    TEST_CASE("A-triangle series examples") {
        // independent oracle: xi-identity inverted from brute-force counts
        for (long p : {2L, 3L}) {
            EndoSetup h = heisenberg();
            const int K = 4;
            auto zeta = zeta_series_bruteforce(h, Prime(p), K);
            // A = zeta (1 - t^3)(1 - t^3) / (1 - t), n = 3, c = 2, S = n - N_1 = 1
            std::vector<std::int64_t> z(zeta.begin(), zeta.end());
            std::vector<std::int64_t> f(K + 1, 0);
            f[0] = 1;
            f[3] = -1;
            z = oracle::series_mul(oracle::series_mul(z, f), f);
            z = oracle::series_mul(z, oracle::geometric(1, 1, K));
            auto a = a_triangle_series(h, Prime(p), K);
            for (int k = 0; k <= K; ++k) CHECK(static_cast<std::int64_t>(a[k]) == z[k]);
            if (p == 2) CHECK(a == std::vector<std::uint64_t>{1, 4, 11, 28, 65});
        }
        CHECK_THROWS_AS(verify_xi_identity(abelian(2), Prime(2), 2), PreconditionError);
    }

    TEST_CASE("xi identity") {
        CHECK(verify_xi_identity(heisenberg(), Prime(2), 4).ok);
        CHECK(verify_xi_identity(heisenberg(), Prime(3), 3).ok);
        CHECK(verify_xi_identity(maximal_class(3), Prime(2), 3).ok);
        CHECK(verify_xi_identity(maximal_class(3), Prime(3), 2).ok);
        CHECK(verify_xi_identity(grenham(2), Prime(2), 2).ok);
        CHECK(verify_xi_identity(maximal_class(4), Prime(2), 2).ok);
    }

    TEST_CASE("delta stability") {
        CHECK(check_delta_stability(heisenberg(), Prime(2), 4).ok);
        CHECK(check_delta_stability(m_f(Partition({1})), Prime(2), 5).ok);
        StabilityReport z = check_delta_stability(abelian(3), Prime(2), 2);
        CHECK(z.ok);
        CHECK(z.checked == 1 + 7 + 35);
    }
}
