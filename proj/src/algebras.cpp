#include "subzeta/algebras.hpp"

#include "subzeta/errors.hpp"

#include <numeric>

namespace subzeta {

namespace {

std::vector<std::string> default_labels(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

IntMat unimodular_inverse(const IntMat& u) {
    mpz_class d = det(u);
    if (d != 1 && d != -1) fail_precondition("basis change is not unimodular");
    return d * adjugate(u);
}

// Rows e_from..e_{n-1} of the identity.
IntMat trailing_coordinates(int n, int from) {
    IntMat m(n - from, n);
    for (int i = from; i < n; ++i) m(i - from, i) = 1;
    return m;
}

}  // namespace

LieLattice::LieLattice(int rank, std::vector<long> constants, std::vector<std::string> labels)
    : n_(rank), c_(std::move(constants)), labels_(std::move(labels)) {
    size_t n = static_cast<size_t>(n_);
    if (n_ < 0 || c_.size() != n * n * n) throw InvalidAlgebraError("structure constant array has the wrong size");
    if (labels_.empty()) labels_ = default_labels("e", n_);
    if (static_cast<int>(labels_.size()) != n_) throw InvalidAlgebraError("label count differs from rank");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (constant(i, j, k) != -constant(j, i, k))
                    throw InvalidAlgebraError("bracket is not antisymmetric at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")");
    // [[a,b],c] expanded through the constants
    auto double_bracket = [&](int a, int b, int c, int k) {
        __int128 s = 0;
        for (int m = 0; m < n_; ++m) {
            long x = constant(a, b, m);
            if (x) s += static_cast<__int128>(x) * constant(m, c, k);
        }
        return s;
    };
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int l = j + 1; l < n_; ++l)
                for (int k = 0; k < n_; ++k)
                    if (double_bracket(i, j, l, k) + double_bracket(j, l, i, k) + double_bracket(l, i, j, k) != 0)
                        throw InvalidAlgebraError("Jacobi identity fails for (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + "," + std::to_string(l + 1) + ")");
}

std::vector<mpz_class> LieLattice::bracket(const std::vector<mpz_class>& u, const std::vector<mpz_class>& v) const {
    std::vector<mpz_class> r(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (v[j] == 0) continue;
            mpz_class f = u[i] * v[j];
            for (int k = 0; k < n_; ++k)
                if (long c = constant(i, j, k)) r[k] += f * c;
        }
    }
    return r;
}

void BracketTable::set(int i, int j, int k, long c) {
    size_t n = static_cast<size_t>(n_);
    c_[(i * n + j) * n + k] = c;
    c_[(j * n + i) * n + k] = -c;
}

LieLattice BracketTable::build(std::vector<std::string> labels) const { return LieLattice(n_, c_, std::move(labels)); }

std::vector<IntMat> adjoint_generators(const LieLattice& l) {
    int n = l.rank();
    std::vector<IntMat> out;
    for (int k = 0; k < n; ++k) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = l.constant(i, k, j);
        out.push_back(m);
    }
    return out;
}

EndoSetup::EndoSetup(GeneratorSetup g) : s_(std::move(g)) {
    int n = s_.rank;
    if (n <= 0) throw InvalidAlgebraError("rank must be positive");
    for (const auto& m : s_.generators)
        if (m.rows() != n || m.cols() != n) throw InvalidAlgebraError("generator shape differs from rank");
    if (s_.generator_labels.empty()) s_.generator_labels = default_labels("C", static_cast<int>(s_.generators.size()));
    if (s_.basis_labels.empty()) s_.basis_labels = default_labels("e", n);
    if (s_.generator_labels.size() != s_.generators.size() || static_cast<int>(s_.basis_labels.size()) != n)
        throw InvalidAlgebraError("label count mismatch");
    if (s_.grading) {
        int sum = 0;
        for (int b : *s_.grading) {
            if (b <= 0) throw GradingError("grading blocks must be positive");
            sum += b;
        }
        if (sum != n) throw GradingError("grading block sizes do not sum to the rank");
    }
    // L E^j spans all words of length j applied to L
    IntMat span = IntMat::identity(n);
    for (int step = 0; step < n && span.rows() > 0; ++step) {
        IntMat next(0, n);
        for (const auto& m : s_.generators) next = vstack(next, span * m);
        span = next.rows() ? hnf(next) : next;
    }
    if (span.rows() > 0) throw InvalidAlgebraError("operators are not nilpotent");
}

EndoSetup EndoSetup::rebased(const IntMat& u) const {
    IntMat inv = unimodular_inverse(u);
    GeneratorSetup g = s_;
    for (auto& m : g.generators) m = u * m * inv;
    g.grading.reset();
    bool perm = true;
    std::vector<std::string> labels(rank());
    for (int i = 0; i < rank() && perm; ++i) {
        int hit = -1;
        for (int j = 0; j < rank(); ++j) {
            if (u(i, j) == 0) continue;
            if (u(i, j) != 1 || hit >= 0) {
                perm = false;
                break;
            }
            hit = j;
        }
        if (hit < 0) perm = false;
        if (perm) labels[i] = s_.basis_labels[hit];
    }
    g.basis_labels = perm ? labels : default_labels("f", rank());
    return EndoSetup(std::move(g));
}

CentralData centralizer_series(const EndoSetup& e) {
    int n = e.rank();
    CentralData cd;
    cd.z.push_back(IntMat(0, n));
    cd.z_ranks.push_back(0);
    while (cd.z_ranks.back() < n) {
        const IntMat& b = cd.z.back();
        int r = b.rows();
        IntMat u = vstack(complement(b), b);
        IntMat proj = unimodular_inverse(u).cols_range(0, n - r);
        IntMat big(n, 0);
        for (const auto& m : e.generators()) big = hstack(big, m * proj);
        IntMat k = kernel_int(big);
        if (k.rows() <= r) throw InvalidAlgebraError("upper centralizer series stalls; operators are not nilpotent");
        cd.z.push_back(k);
        cd.z_ranks.push_back(k.rows());
    }
    cd.c = static_cast<int>(cd.z.size()) - 1;
    for (int r : cd.z_ranks) cd.coranks.push_back(n - r);
    return cd;
}

IntMat cocentral_basis(const EndoSetup& e, const CentralData& cd) {
    int n = e.rank();
    bool standard = true;
    for (int i = 0; i <= cd.c && standard; ++i)
        standard = same_lattice(cd.z[i], trailing_coordinates(n, cd.coranks[i]));
    if (standard) return IntMat::identity(n);
    IntMat rows = cd.z[1];
    for (int i = 1; i < cd.c; ++i) {
        const IntMat& a = cd.z[i + 1];
        IntMat x(cd.z[i].rows(), a.rows());
        for (int r = 0; r < cd.z[i].rows(); ++r) {
            std::vector<mpz_class> coords;
            if (!solve_left(a, cd.z[i].row(r), &coords)) fail_precondition("centralizer chain is not nested");
            x.set_row(r, coords);
        }
        rows = vstack(complement(x) * a, rows);
    }
    return rows;
}

IntMat cocentral_basis(const EndoSetup& e) { return cocentral_basis(e, centralizer_series(e)); }

std::vector<int> block_of_position(const std::vector<int>& grading) {
    std::vector<int> out;
    for (size_t b = 0; b < grading.size(); ++b)
        for (int i = 0; i < grading[b]; ++i) out.push_back(static_cast<int>(b) + 1);
    return out;
}

ConditionVerdict check_condition(const EndoSetup& e) {
    if (!e.grading()) throw GradingError("no grading supplied for '" + e.name() + "'");
    const std::vector<int>& g = *e.grading();
    int n = e.rank();
    CentralData cd = centralizer_series(e);
    int c = static_cast<int>(g.size());
    if (cd.c != c)
        throw GradingError("grading has " + std::to_string(c) + " blocks but the class is " + std::to_string(cd.c));
    // Z_i must be the sum of the last i blocks.
    for (int i = 0; i <= c; ++i) {
        int lead = std::accumulate(g.begin(), g.begin() + (c - i), 0);
        if (!same_lattice(cd.z[i], trailing_coordinates(n, lead)))
            throw GradingError("grading is inconsistent with Z_" + std::to_string(i));
    }
    std::vector<int> block = block_of_position(g);
    ConditionVerdict v;
    for (size_t k = 0; k < e.generators().size(); ++k) {
        const IntMat& m = e.generators()[k];
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
                if (m(r, s) == 0 || block[s] == block[r] + 1) continue;
                v.violation = Violation{static_cast<int>(k) + 1, block[r], block[s], r + 1, s + 1, m(r, s)};
                return v;
            }
    }
    v.ok = true;
    return v;
}

std::vector<std::int64_t> witt_ranks(int c, int d) {
    if (c < 1 || d < 1) fail_precondition("witt_ranks needs c >= 1 and d >= 1");
    auto mobius = [](int k) {
        int m = 1;
        for (int p = 2; p * p <= k; ++p) {
            if (k % p) continue;
            k /= p;
            if (k % p == 0) return 0;
            m = -m;
        }
        return k > 1 ? -m : m;
    };
    std::vector<mpz_class> w(c + 1, 0);
    for (int j = 1; j <= c; ++j) {
        mpz_class s = 0;
        for (int k = 1; k <= j; ++k) {
            if (j % k) continue;
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), d, j / k);
            s += mobius(k) * pw;
        }
        w[j] = s / j;
    }
    std::vector<std::int64_t> n(c + 1, 0);
    for (int i = 0; i <= c; ++i) {
        mpz_class s = 0;
        for (int j = 1; j <= c - i; ++j) s += w[j];
        if (!s.fits_slong_p()) fail_precondition("Witt rank overflows 64 bits");
        n[i] = s.get_si();
    }
    return n;
}

}  // namespace subzeta
