#include "subzeta/lattice_enum.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace subzeta {

namespace {

using i128 = __int128;

std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, p, &r)) fail_precondition("prime power exceeds 64 bits");
    }
    return r;
}

// Runs work(shard) for shard in [0, shards) on a pool; results land in per-shard slots.
template <class R = std::uint64_t, class F>
std::vector<R> run_shards(size_t shards, int threads, F work) {
    std::vector<R> out(shards);
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (!failed) {
            size_t s = next.fetch_add(1);
            if (s >= shards) return;
            try {
                out[s] = work(s);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
            }
        }
    };
    int t = std::max(1, std::min<int>(threads, static_cast<int>(shards)));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
    std::uint64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

// Odometer over the off-diagonal entries of HNFs with a fixed diagonal.
class HnfOdometer {
public:
    HnfOdometer(int n, const std::vector<std::int64_t>& diag) : n_(n), a_(static_cast<size_t>(n) * n, 0) {
        for (int i = 0; i < n; ++i) a_[i * n + i] = diag[i];
        for (int j = 1; j < n; ++j)
            if (diag[j] > 1)
                for (int i = 0; i < j; ++i) slots_.push_back(i * n + j), bound_.push_back(diag[j]);
    }
    const std::int64_t* data() const { return a_.data(); }
    bool next() {
        for (size_t s = 0; s < slots_.size(); ++s) {
            if (++a_[slots_[s]] < bound_[s]) return true;
            a_[slots_[s]] = 0;
        }
        return false;
    }

private:
    int n_;
    std::vector<std::int64_t> a_;
    std::vector<int> slots_;
    std::vector<std::int64_t> bound_;
};

// Generators as int64 matrices, or empty optional when an entry does not fit.
std::optional<std::vector<std::vector<std::int64_t>>> small_generators(const EndoSetup& e) {
    int n = e.rank();
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& m : e.generators()) {
        if (m.is_zero()) continue;
        std::vector<std::int64_t> g(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!m(i, j).fits_sint_p()) return std::nullopt;
                g[i * n + j] = m(i, j).get_si();
            }
        out.push_back(std::move(g));
    }
    return out;
}

i128 mod(i128 x, i128 m) {
    x %= m;
    return x < 0 ? x + m : x;
}

// Adjugate test for an upper triangular HNF with small entries. Returns nullopt on overflow.
std::optional<bool> small_invariant(const HnfRef& h, const std::vector<std::vector<std::int64_t>>& gens,
                                    std::vector<i128>& adj, std::vector<i128>& y) {
    int n = h.n();
    i128 det = 1;
    for (int i = 0; i < n; ++i) det *= h(i, i);
    if (det == 1) return true;
    // M X = det I with X upper triangular, solved bottom-up.
    for (int i = n - 1; i >= 0; --i) {
        adj[i * n + i] = det / h(i, i);
        for (int j = i + 1; j < n; ++j) {
            i128 s = 0;
            for (int l = i + 1; l <= j; ++l) {
                i128 t;
                if (__builtin_mul_overflow(static_cast<i128>(h(i, l)), adj[l * n + j], &t)) return std::nullopt;
                if (__builtin_add_overflow(s, t, &s)) return std::nullopt;
            }
            adj[i * n + j] = -s / h(i, i);
        }
        for (int j = 0; j < i; ++j) adj[i * n + j] = 0;
    }
    for (auto& x : adj) x = mod(x, det);
    for (const auto& g : gens) {
        // y = M C mod det
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                i128 s = 0;
                for (int l = i; l < n; ++l) s += static_cast<i128>(h(i, l)) * g[l * n + j];
                y[i * n + j] = mod(s, det);
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                i128 s = 0;
                for (int l = 0; l <= j; ++l) s = (s + y[i * n + l] * adj[l * n + j]) % det;
                if (s != 0) return false;
            }
    }
    return true;
}

// Invariant completions, rows built from the bottom. Generators must be strictly upper triangular.
class PrunedCounter {
public:
    PrunedCounter(int n, const std::vector<std::int64_t>& diag, const std::vector<std::vector<std::int64_t>>& gens)
        : n_(n), d_(diag), gens_(gens), a_(static_cast<size_t>(n) * n, 0), v_(n), tail_(n + 1, 1) {
        for (int i = n - 1; i >= 0; --i) tail_[i] = tail_[i + 1] * d_[i];
    }

    std::uint64_t run() { return rows_from(n_ - 1); }

private:
    std::uint64_t rows_from(int i) {
        if (i < 0) return 1;
        int n = n_;
        std::int64_t* row = &a_[i * n];
        std::fill(row, row + n, 0);
        row[i] = d_[i];
        std::uint64_t total = 0;
        while (true) {
            if (admissible(i)) total += rows_from(i - 1);
            int j = i + 1;
            for (; j < n; ++j) {
                if (++row[j] < d_[j]) break;
                row[j] = 0;
            }
            if (j == n) break;
        }
        return total;
    }

    // row_i C lies in the span of rows i+1..n for each generator, tested modulo prod_{j>i} d_j.
    bool admissible(int i) {
        int n = n_;
        std::int64_t m = tail_[i + 1];
        if (m == 1) return true;
        const std::int64_t* row = &a_[i * n];
        for (const auto& g : gens_) {
            for (int s = i + 1; s < n; ++s) {
                i128 acc = 0;
                for (int l = i; l < s; ++l) acc += static_cast<i128>(row[l]) * g[l * n + s];
                v_[s] = static_cast<std::int64_t>(mod(acc, m));
            }
            for (int j = i + 1; j < n; ++j) {
                if (v_[j] % d_[j] != 0) return false;
                std::int64_t f = v_[j] / d_[j];
                if (f == 0) continue;
                const std::int64_t* rj = &a_[j * n];
                for (int s = j; s < n; ++s)
                    v_[s] = static_cast<std::int64_t>(mod(static_cast<i128>(v_[s]) - static_cast<i128>(f) * rj[s], m));
            }
        }
        return true;
    }

    int n_;
    std::vector<std::int64_t> d_;
    const std::vector<std::vector<std::int64_t>>& gens_;
    std::vector<std::int64_t> a_, v_, tail_;
};

std::vector<std::int64_t> diagonal_of(const std::vector<int>& comp, std::int64_t p) {
    std::vector<std::int64_t> d;
    for (int a : comp) d.push_back(ipow(p, a));
    return d;
}

std::uint64_t count_invariant_exhaustive(const EndoSetup& e, Prime p, int k, int threads) {
    int n = e.rank();
    auto comps = compositions(k, n);
    auto gens = small_generators(e);
    auto per = run_shards(comps.size(), threads, [&](size_t s) -> std::uint64_t {
        std::vector<std::int64_t> diag = diagonal_of(comps[s], p.value());
        HnfOdometer od(n, diag);
        std::vector<i128> adj(static_cast<size_t>(n) * n), y(static_cast<size_t>(n) * n);
        std::uint64_t cnt = 0;
        do {
            HnfRef h(n, od.data());
            std::optional<bool> fast;
            if (gens) fast = small_invariant(h, *gens, adj, y);
            if (fast ? *fast : is_invariant(h.to_intmat(), e)) ++cnt;
        } while (od.next());
        return cnt;
    });
    return sum(per);
}

std::uint64_t count_invariant_pruned(const EndoSetup& e, Prime p, int k, int threads) {
    EndoSetup base = e.rebased(cocentral_basis(e));
    int n = base.rank();
    for (const auto& g : base.generators())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                if (g(i, j) != 0) throw Error("cocentral generators are not strictly upper triangular");
    auto gens = small_generators(base);
    if (!gens) fail_precondition("pruned strategy needs generator entries that fit in 32 bits");
    std::int64_t pk = ipow(p.value(), k);
    if (pk > (std::int64_t{1} << 40)) fail_precondition("pruned strategy needs p^k below 2^40");
    auto comps = compositions(k, n);
    auto per = run_shards(comps.size(), threads, [&](size_t s) -> std::uint64_t {
        PrunedCounter pc(n, diagonal_of(comps[s], p.value()), *gens);
        return pc.run();
    });
    return sum(per);
}

}  // namespace

Prime::Prime(long p) : p_(p) {
    if (p < 2 || p >= (1L << 31)) fail_precondition("p must be a prime below 2^31, got " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) fail_precondition(std::to_string(p) + " is not prime");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SUBZETA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

IntMat HnfRef::to_intmat() const {
    IntMat m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
    return m;
}

std::vector<std::vector<int>> compositions(int k, int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0 || k < 0) return out;
    std::vector<int> cur(n, 0);
    cur[n - 1] = k;
    // Lexicographic order via recursion on the leading part.
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            cur[pos] = a;
            rec(pos + 1, left - a);
        }
    };
    rec(0, k);
    return out;
}

void for_each_sublattice(int n, Prime p, int k, const std::function<void(const HnfRef&)>& visit) {
    for (const auto& comp : compositions(k, n)) {
        HnfOdometer od(n, diagonal_of(comp, p.value()));
        do visit(HnfRef(n, od.data()));
        while (od.next());
    }
}

std::vector<IntMat> enumerate_sublattices(int n, Prime p, int k) {
    std::vector<IntMat> out;
    for_each_sublattice(n, p, k, [&](const HnfRef& h) { out.push_back(h.to_intmat()); });
    return out;
}

std::uint64_t count_sublattices(int n, Prime p, int k, const CountOptions& opt) {
    auto comps = compositions(k, n);
    auto per = run_shards(comps.size(), resolve_threads(opt.threads), [&](size_t s) -> std::uint64_t {
        HnfOdometer od(n, diagonal_of(comps[s], p.value()));
        std::uint64_t c = 0;
        do ++c;
        while (od.next());
        return c;
    });
    return sum(per);
}

bool is_invariant(const IntMat& m, const EndoSetup& e) {
    if (!m.is_square() || m.rows() != e.rank()) fail_precondition("lattice basis has the wrong shape");
    mpz_class d = abs(det(m));
    if (d == 0) fail_precondition("lattice basis is singular");
    if (d == 1) return true;
    IntMat adj = adjugate(m);
    for (const auto& c : e.generators()) {
        IntMat z = m * c * adj;
        for (int i = 0; i < z.rows(); ++i)
            for (int j = 0; j < z.cols(); ++j)
                if (!mpz_divisible_p(z(i, j).get_mpz_t(), d.get_mpz_t())) return false;
    }
    return true;
}

std::uint64_t count_invariant(const EndoSetup& e, Prime p, int k, const CountOptions& opt) {
    if (k < 0) fail_precondition("k must be nonnegative");
    int threads = resolve_threads(opt.threads);
    return opt.strategy == Strategy::pruned ? count_invariant_pruned(e, p, k, threads)
                                            : count_invariant_exhaustive(e, p, k, threads);
}

std::vector<std::uint64_t> zeta_series_bruteforce(const EndoSetup& e, Prime p, int K, const CountOptions& opt) {
    std::vector<std::uint64_t> out;
    for (int k = 0; k <= K; ++k) out.push_back(count_invariant(e, p, k, opt));
    return out;
}

int DivisorType::sum_r() const {
    int s = 0;
    for (int i : I) s += r[i];
    return s;
}

DivisorType elementary_divisor_type(const IntMat& m, Prime p) {
    std::vector<mpz_class> d = snf(m);
    int n = m.rows();
    if (!m.is_square() || static_cast<int>(d.size()) != n || d.back() == 0)
        fail_precondition("elementary divisor type needs a square nonsingular matrix");
    std::vector<int> f;
    for (const auto& x : d) {
        int v = valuation(x, p.mpz());
        mpz_class rest = x;
        for (int i = 0; i < v; ++i) rest /= p.mpz();
        if (rest != 1) fail_precondition("index is not a power of p");
        f.push_back(v);
    }
    std::sort(f.rbegin(), f.rend());
    DivisorType t;
    t.r.assign(n + 1, 0);
    for (int i = 1; i < n; ++i)
        if (f[i - 1] > f[i]) {
            t.I.push_back(i);
            t.r[i] = f[i - 1] - f[i];
        }
    t.r[n] = f[n - 1];
    return t;
}


namespace {

struct GradedShape {
    int n = 0, c = 0;
    std::vector<int> blocks;
};

GradedShape graded_shape(const EndoSetup& e) {
    if (!e.grading()) throw GradingError("'" + e.name() + "' has no grading");
    CentralData cd = centralizer_series(e);
    GradedShape g{e.rank(), cd.c, *e.grading()};
    if (static_cast<int>(g.blocks.size()) != cd.c) throw GradingError("grading block count differs from the class");
    for (int i = 0; i <= cd.c; ++i) {
        int lead = 0;
        for (int j = 0; j < cd.c - i; ++j) lead += g.blocks[j];
        if (lead != cd.coranks[i])
            throw GradingError("block sizes disagree with the centralizer corank N_" + std::to_string(i));
    }
    return g;
}

IntMat maximal_rep(const IntMat& m, Prime p) {
    int v = valuation(m, p.mpz());
    if (v == kInfiniteValuation) fail_precondition("zero matrix has no maximal representative");
    if (v == 0) return m;
    mpz_class s;
    mpz_pow_ui(s.get_mpz_t(), p.mpz().get_mpz_t(), v);
    IntMat r = m;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) mpz_divexact(r(i, j).get_mpz_t(), m(i, j).get_mpz_t(), s.get_mpz_t());
    return r;
}

// Decomposition M0 = U^{-1} D alpha^{-1} with D nonincreasing.
struct AlphaData {
    IntMat alpha, alpha_adj;
    DivisorType type;
    std::vector<int> g;  // g[i] = sum of r_iota over iota in I with iota >= i
    std::vector<int> h;  // h[i] = sum of r_iota over iota in I with iota < i
};

AlphaData alpha_data(const IntMat& m0, Prime p) {
    int n = m0.rows();
    SnfResult s = snf_with_transforms(m0);
    AlphaData a;
    a.alpha = IntMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.alpha(i, j) = s.v(i, n - 1 - j);
    a.alpha_adj = adjugate(a.alpha);
    a.type = elementary_divisor_type(m0, p);
    a.g.assign(n + 2, 0);
    a.h.assign(n + 2, 0);
    for (int i = n; i >= 1; --i) a.g[i] = a.g[i + 1] + (i < n ? a.type.r[i] : 0);
    for (int i = 2; i <= n + 1; ++i) a.h[i] = a.h[i - 1] + (i - 1 < n ? a.type.r[i - 1] : 0);
    return a;
}

// Mirrors the fast filter used by enumeration, falling back to bignums.
class InvarianceFilter {
public:
    explicit InvarianceFilter(const EndoSetup& e)
        : e_(e), gens_(small_generators(e)), adj_(static_cast<size_t>(e.rank()) * e.rank()), y_(adj_.size()) {}
    bool operator()(const HnfRef& h) {
        if (gens_) {
            if (auto r = small_invariant(h, *gens_, adj_, y_)) return *r;
        }
        return is_invariant(h.to_intmat(), e_);
    }

private:
    const EndoSetup& e_;
    std::optional<std::vector<std::vector<std::int64_t>>> gens_;
    std::vector<i128> adj_, y_;
};

bool divisible_by_p(const HnfRef& h, std::int64_t p) {
    for (int i = 0; i < h.n(); ++i)
        for (int j = i; j < h.n(); ++j)
            if (h(i, j) % p != 0) return false;
    return true;
}

}  // namespace

IntMat delta_matrix(const EndoSetup& e, Prime p) {
    GradedShape g = graded_shape(e);
    std::vector<mpz_class> d;
    for (int b = 1; b <= g.c; ++b) {
        mpz_class x;
        mpz_pow_ui(x.get_mpz_t(), p.mpz().get_mpz_t(), g.c - b);
        for (int i = 0; i < g.blocks[b - 1]; ++i) d.push_back(x);
    }
    return IntMat::diagonal(d);
}

int m_tilde1(const IntMat& m, const EndoSetup& e, Prime p) {
    IntMat m0 = maximal_rep(m, p);
    IntMat delta = delta_matrix(e, p);
    int bound = elementary_divisor_type(m0, p).sum_r();
    IntMat x = m0;
    for (int k = 0; k <= bound; ++k) {
        if (is_invariant(x, e)) return k;
        x = x * delta;
    }
    throw Error("no m <= " + std::to_string(bound) + " makes M delta^m invariant");
}

int m_tilde1_closed_form(const IntMat& m, const EndoSetup& e, Prime p) {
    graded_shape(e);
    IntMat m0 = maximal_rep(m, p);
    int n = m0.rows();
    AlphaData a = alpha_data(m0, p);
    // val[i][rho] = min over generators sigma of v((alpha_adj C_sigma alpha[i])_rho), 1-based
    std::vector<std::vector<int>> val(n + 1, std::vector<int>(n + 1, kInfiniteValuation));
    for (int i = 1; i <= n; ++i) {
        IntMat col = a.alpha.cols_range(i - 1, i);
        for (const auto& c : e.generators()) {
            IntMat r = a.alpha_adj * (c * col);
            for (int rho = 1; rho <= n; ++rho) val[i][rho] = std::min(val[i][rho], valuation(r(rho - 1, 0), p.mpz()));
        }
    }
    int sumr = a.type.sum_r();
    int m1 = sumr;
    for (int i = 1; i <= n; ++i)
        for (int r = 1; r <= n; ++r) {
            int v1 = kInfiniteValuation;
            for (int iota = 1; iota <= i; ++iota)
                for (int rho = r; rho <= n; ++rho) v1 = std::min(v1, val[iota][rho]);
            if (v1 != kInfiniteValuation) m1 = std::min(m1, a.g[r] + a.h[i] + v1);
        }
    return sumr - m1;
}

int m2(const IntMat& m, const EndoSetup& e, Prime p) {
    GradedShape g = graded_shape(e);
    IntMat m0 = maximal_rep(m, p);
    int n = m0.rows();
    return valuation(m0.cols_range(n - g.blocks.back(), n), p.mpz());
}

int m2_closed_form(const IntMat& m, const EndoSetup& e, Prime p) {
    GradedShape g = graded_shape(e);
    IntMat m0 = maximal_rep(m, p);
    int n = m0.rows();
    AlphaData a = alpha_data(m0, p);
    int n1 = n - g.blocks.back();
    int sumr = a.type.sum_r();
    int best = sumr;
    for (int r = 1; r <= n; ++r) {
        int v2 = kInfiniteValuation;
        for (int rho = r; rho <= n; ++rho)
            for (int sigma = n1 + 1; sigma <= n; ++sigma)
                v2 = std::min(v2, valuation(a.alpha_adj(rho - 1, sigma - 1), p.mpz()));
        if (v2 != kInfiniteValuation) best = std::min(best, a.g[r] + v2);
    }
    return best;
}

int weight_w(const IntMat& m, const EndoSetup& e, Prime p) {
    GradedShape g = graded_shape(e);
    return (g.c - 1) * m_tilde1(m, e, p) - m2(m, e, p);
}

std::vector<std::uint64_t> a_triangle_series(const EndoSetup& e, Prime p, int K, const CountOptions& opt) {
    GradedShape g = graded_shape(e);
    int n = g.n;
    std::vector<std::pair<int, std::vector<int>>> shards;
    for (int k = 0; k <= K; ++k)
        for (auto& comp : compositions(k, n)) shards.emplace_back(k, comp);
    auto per = run_shards<std::vector<std::uint64_t>>(shards.size(), resolve_threads(opt.threads), [&](size_t s) {
        std::vector<std::uint64_t> coef(K + 1, 0);
        auto [k, comp] = shards[s];
        HnfOdometer od(n, diagonal_of(comp, p.value()));
        do {
            HnfRef h(n, od.data());
            if (k > 0 && divisible_by_p(h, p.value())) continue;
            int w = weight_w(h.to_intmat(), e, p);
            long deg = k + static_cast<long>(n) * w;
            if (deg <= K) ++coef[deg];
        } while (od.next());
        return coef;
    });
    std::vector<std::uint64_t> out(K + 1, 0);
    for (const auto& v : per)
        for (int j = 0; j <= K; ++j) out[j] += v[j];
    return out;
}

XiReport verify_xi_identity(const EndoSetup& e, Prime p, int K, const CountOptions& opt) {
    GradedShape g = graded_shape(e);
    if (g.c < 2) fail_precondition("the xi identity needs class at least 2");
    CentralData cd = centralizer_series(e);
    int n = g.n, S = 0;
    for (int i = 1; i < g.c; ++i) S += n - cd.coranks[i];
    // (1 - t^S) / ((1 - t^n)(1 - t^((c-1)n))) as an integer series
    std::vector<std::int64_t> pre(K + 1, 0);
    for (int a = 0; a * n <= K; ++a)
        for (int b = 0; a * n + b * (g.c - 1) * n <= K; ++b) pre[a * n + b * (g.c - 1) * n] += 1;
    std::vector<std::int64_t> num(K + 1, 0);
    for (int j = 0; j <= K; ++j) num[j] = pre[j] - (j >= S ? pre[j - S] : 0);
    XiReport rep;
    rep.zeta = zeta_series_bruteforce(e, p, K, opt);
    rep.a_triangle = a_triangle_series(e, p, K, opt);
    rep.rhs.assign(K + 1, 0);
    for (int i = 0; i <= K; ++i)
        for (int j = 0; i + j <= K; ++j) rep.rhs[i + j] += num[i] * static_cast<std::int64_t>(rep.a_triangle[j]);
    rep.ok = true;
    for (int j = 0; j <= K; ++j)
        if (static_cast<std::int64_t>(rep.zeta[j]) != rep.rhs[j]) {
            rep.ok = false;
            rep.first_mismatch = j;
            break;
        }
    return rep;
}

StabilityReport check_delta_stability(const EndoSetup& e, Prime p, int K, const CountOptions& opt) {
    GradedShape g = graded_shape(e);
    IntMat delta = delta_matrix(e, p);
    IntMat delta2 = delta * delta;
    int n = g.n;
    std::vector<std::vector<int>> shards;
    for (int k = 0; k <= K; ++k)
        for (auto& comp : compositions(k, n)) shards.push_back(comp);
    auto per = run_shards<std::pair<std::uint64_t, std::string>>(
        shards.size(), resolve_threads(opt.threads), [&](size_t s) {
            std::pair<std::uint64_t, std::string> res{0, ""};
            HnfOdometer od(n, diagonal_of(shards[s], p.value()));
            InvarianceFilter inv(e);
            do {
                HnfRef h(n, od.data());
                if (!inv(h)) continue;
                ++res.first;
                IntMat m = h.to_intmat();
                IntMat md = m * delta;
                int v0 = valuation(m, p.mpz());
                if (valuation(md, p.mpz()) != v0 || !is_invariant(md, e)) {
                    res.second = "v(M delta) != v(M) or M delta not invariant for M = " + m.to_string();
                    return res;
                }
                if (v0 == 0 && valuation(m * delta2, p.mpz()) != 0) {
                    res.second = "M delta^2 not maximal for M = " + m.to_string();
                    return res;
                }
            } while (od.next());
            return res;
        });
    StabilityReport rep;
    rep.ok = true;
    for (const auto& [cnt, wit] : per) {
        rep.checked += cnt;
        if (!wit.empty() && rep.ok) {
            rep.ok = false;
            rep.witness = wit;
        }
    }
    return rep;
}

}  // namespace subzeta
