#include "subzeta/algebras.hpp"
#include "subzeta/catalog.hpp"
#include "subzeta/errors.hpp"
#include "subzeta/lattice_enum.hpp"

#include <doctest.h>

using namespace subzeta;

namespace {

std::vector<std::string> catalog_sample() {
    return {"heisenberg", "fil4",      "g66",       "abelian:3", "l:2",     "l:3,2",    "l:3,3",   "l:2,1,1",
            "maximal:4",  "grenham:2", "mf:1",      "mf:2,1",    "u:3",     "u:2,1",    "free:2,3", "free:3,2",
            "free:4,2"};
}

// Rows from index `from` of the identity.
IntMat trailing_identity(int n, int from) {
    IntMat m(n - from, n);
    for (int i = from; i < n; ++i) m(i - from, i) = 1;
    return m;
}

int nonzero_entries(const IntMat& m) {
    int c = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c += m(i, j) != 0;
    return c;
}

}  // namespace

TEST_SUITE("algebras") {
    TEST_CASE("adjoint generators of the Heisenberg lattice") {
        BracketTable t(3);
        t.set(0, 1, 2, 1);
        auto ad = adjoint_generators(t.build({"x", "y", "z"}));
        REQUIRE(ad.size() == 3);
        CHECK(nonzero_entries(ad[0]) == 1);
        CHECK(abs(ad[0](1, 2)) == 1);
        CHECK(ad[2].is_zero());
    }

    TEST_CASE("abelian lattices have zero adjoints") {
        LieLattice l(3, std::vector<long>(27, 0));
        for (const auto& m : adjoint_generators(l)) CHECK(m.is_zero());
        CHECK(abelian(3).generators().empty());
    }

    TEST_CASE("fil4 generators have the expected support") {
        EndoSetup f = fil4();
        REQUIRE(f.generators().size() == 2);
        const IntMat& c2 = f.generators()[1];
        CHECK(c2(2, 4) != 0);  // x2 -> x4 under ad(x1)
        CHECK(c2(0, 2) != 0);  // z -> x2
        CHECK(nonzero_entries(c2) == 2);
    }

    TEST_CASE("invalid structure constants are rejected") {
        std::vector<long> c(27, 0);
        c[(0 * 3 + 1) * 3 + 2] = 1;  // [e0,e1] = e2 without the antisymmetric entry
        CHECK_THROWS_AS(LieLattice(3, c), InvalidAlgebraError);
        // [e0,e1] = e1 and [e0,e2] = e0 on a rank 3 lattice fails Jacobi
        BracketTable t(3);
        t.set(0, 1, 1, 1);
        t.set(0, 2, 0, 1);
        t.set(1, 2, 1, 1);
        CHECK_THROWS_AS(t.build(), InvalidAlgebraError);
    }

    TEST_CASE("non-nilpotent generators are rejected") {
        GeneratorSetup g;
        g.rank = 2;
        g.generators = {IntMat{{0, 1}, {1, 0}}};
        g.generator_labels = {"swap"};
        CHECK_THROWS_AS(EndoSetup{g}, InvalidAlgebraError);
    }

    TEST_CASE("centralizer series examples") {
        CentralData h = centralizer_series(heisenberg());
        CHECK(h.c == 2);
        CHECK(h.coranks == std::vector<int>{3, 2, 0});
        CHECK(same_lattice(h.z[1], IntMat{{0, 0, 1}}));

        CentralData g = centralizer_series(g66());
        CHECK(g.c == 3);
        CHECK(same_lattice(g.z[1], trailing_identity(6, 4)));
        CHECK(same_lattice(g.z[2], trailing_identity(6, 2)));

        CentralData f = centralizer_series(fil4());
        CHECK(f.c == 4);
        CHECK(f.z_ranks == std::vector<int>{0, 1, 2, 3, 5});
    }

    TEST_CASE("cocentral basis examples") {
        CHECK(cocentral_basis(heisenberg()) == IntMat::identity(3));
        CHECK(cocentral_basis(g66()) == IntMat::identity(6));
        // basis (z, x, y)
        BracketTable t(3);
        t.set(1, 2, 0, 1);
        LieLattice l = t.build({"z", "x", "y"});
        GeneratorSetup g;
        g.rank = 3;
        auto ad = adjoint_generators(l);
        g.generators = {ad[1], ad[2]};
        g.generator_labels = {"ad(x)", "ad(y)"};
        g.basis_labels = l.labels();
        EndoSetup e(g);
        IntMat u = cocentral_basis(e);
        CHECK(abs(det(u)) == 1);
        CHECK(same_lattice(u.rows_range(2, 3), IntMat{{1, 0, 0}}));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK((u(i, j) == 0 || abs(u(i, j)) == 1));
    }

    TEST_CASE("condition verdicts") {
        CHECK(check_condition(heisenberg()).ok);
        ConditionVerdict f = check_condition(fil4());
        REQUIRE_FALSE(f.ok);
        CHECK(f.violation->generator == 2);
        CHECK(f.violation->row == 3);
        CHECK(f.violation->col == 5);
        ConditionVerdict g = check_condition(g66());
        REQUIRE_FALSE(g.ok);
        CHECK(g.violation->generator == 3);
        CHECK(g.violation->block_row == 1);
        CHECK(g.violation->block_col == 3);
    }

    TEST_CASE("condition needs a consistent grading") {
        GeneratorSetup g;
        g.rank = 3;
        g.generators = heisenberg().generators();
        g.generator_labels = {"a", "b"};
        CHECK_THROWS_AS(check_condition(EndoSetup(g)), GradingError);
        g.grading = std::vector<int>{1, 2};
        CHECK_THROWS_AS(check_condition(EndoSetup(g)), GradingError);
    }

    TEST_CASE("Witt ranks") {
        CHECK(witt_ranks(2, 2) == std::vector<std::int64_t>{3, 2, 0});
        CHECK(witt_ranks(3, 2) == std::vector<std::int64_t>{5, 3, 2, 0});
        CHECK(witt_ranks(1, 4) == std::vector<std::int64_t>{4, 0});
        CHECK(witt_ranks(4, 3) == std::vector<std::int64_t>{32, 14, 6, 3, 0});
    }

    TEST_CASE("free nilpotent lattices") {
        FreeNilpotent f22 = free_nilpotent_lattice(2, 2);
        CHECK(f22.lattice.rank() == 3);
        CHECK(abs(f22.lattice.constant(0, 1, 2)) == 1);
        FreeNilpotent f32 = free_nilpotent_lattice(3, 2);
        CHECK(f32.weights == std::vector<int>{1, 1, 2, 3, 3});
        FreeNilpotent f23 = free_nilpotent_lattice(2, 3);
        CHECK(f23.weights == std::vector<int>{1, 1, 1, 2, 2, 2});
        CHECK_THROWS_AS(free_nilpotent_lattice(4, 3), PreconditionError);
    }

    TEST_CASE("catalog constructors") {
        EndoSetup l2 = l_lambda(Partition({2}));
        CHECK(l2.rank() == 3);
        CHECK(centralizer_series(l2).coranks == std::vector<int>{3, 2, 0});
        EndoSetup mf1 = m_f(Partition({1}));
        CHECK(mf1.rank() == 2);
        REQUIRE(mf1.generators().size() == 1);
        CHECK(mf1.generators()[0] == IntMat{{0, 1}, {0, 0}});
        EndoSetup u3 = u_lambda(Partition({3}));
        CHECK(u3.rank() == 3);
        CHECK(u3.grading() == std::vector<int>{1, 1, 1});
        REQUIRE(u3.generators().size() == 2);
        IntMat e12{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, e23{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}};
        CHECK(u3.generators()[0] == e12);
        CHECK(u3.generators()[1] == e23);
        CHECK(e12 * e23 == IntMat{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
    }

    TEST_CASE("catalog lookup errors") {
        CHECK_THROWS_AS(lookup("nonsense"), UnknownNameError);
        CHECK_THROWS_AS(lookup("l:2,3"), InvalidPartitionError);
        CHECK_THROWS_AS(lookup("maximal"), UnknownNameError);
        CHECK_THROWS_AS(lookup("heisenberg:2"), UnknownNameError);
    }

    TEST_CASE("property: Z_i C lies in Z_{i-1}") {
        for (const auto& name : catalog_sample()) {
            EndoSetup e = lookup(name);
            CentralData cd = centralizer_series(e);
            CHECK(cd.coranks.front() == e.rank());
            CHECK(cd.coranks.back() == 0);
            for (int i = 1; i <= cd.c; ++i) {
                CHECK(cd.z_ranks[i] > cd.z_ranks[i - 1]);
                for (const auto& c : e.generators()) {
                    IntMat img = cd.z[i] * c;
                    for (int r = 0; r < img.rows(); ++r) CHECK(solve_left(cd.z[i - 1], img.row(r), nullptr));
                }
            }
        }
    }

    TEST_CASE("property: Witt ranks match computed coranks") {
        for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
            CentralData cd = centralizer_series(free_nilpotent(c, d));
            auto w = witt_ranks(c, d);
            REQUIRE(cd.coranks.size() == w.size());
            for (size_t i = 0; i < w.size(); ++i) CHECK(cd.coranks[i] == w[i]);
        }
    }

    TEST_CASE("property: delta scales generators by p when the condition holds") {
        for (const auto& name : catalog_sample()) {
            EndoSetup e = lookup(name);
            if (!e.grading() || !check_condition(e).ok) continue;
            for (long p : {2L, 3L}) {
                IntMat d = delta_matrix(e, Prime(p));
                IntMat da = adjugate(d);
                mpz_class dd = det(d);
                for (const auto& c : e.generators()) CHECK(d * c * da == (mpz_class(p) * dd) * c);
                CentralData cd = centralizer_series(e);
                long sum = 0;
                for (int i = 1; i < cd.c; ++i) sum += cd.coranks[i];
                mpz_class expect;
                mpz_ui_pow_ui(expect.get_mpz_t(), p, sum);
                CHECK(dd == expect);
            }
        }
    }

    TEST_CASE("property: cocentral bases are unimodular and aligned") {
        for (const auto& name : catalog_sample()) {
            EndoSetup e = lookup(name);
            CentralData cd = centralizer_series(e);
            IntMat u = cocentral_basis(e, cd);
            CHECK(abs(det(u)) == 1);
            for (int i = 0; i <= cd.c; ++i) {
                int n = e.rank(), from = cd.coranks[i];
                if (from == n) continue;
                CHECK(same_lattice(u.rows_range(from, n), cd.z[i]));
            }
            CentralData rb = centralizer_series(e.rebased(u));
            for (int i = 0; i <= rb.c; ++i)
                if (rb.coranks[i] < e.rank()) CHECK(same_lattice(rb.z[i], trailing_identity(e.rank(), rb.coranks[i])));
        }
    }
}
