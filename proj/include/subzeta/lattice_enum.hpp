#pragma once

#include "subzeta/algebras.hpp"
#include "subzeta/intmat.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace subzeta {

class Prime {
public:
    // Throws PreconditionError unless p is a prime below 2^31.
    explicit Prime(long p);
    long value() const { return p_; }
    mpz_class mpz() const { return mpz_class(p_); }

private:
    long p_;
};

enum class Strategy {
    exhaustive,  // adjugate test on every HNF
    pruned,      // bottom-up rows in a cocentral basis, exact early rejection
};

struct CountOptions {
    int threads = 0;  // 0: SUBZETA_THREADS or hardware concurrency
    Strategy strategy = Strategy::exhaustive;
};

int resolve_threads(int requested);

// View of an upper triangular HNF with small entries.
class HnfRef {
public:
    HnfRef(int n, const std::int64_t* a) : n_(n), a_(a) {}
    int n() const { return n_; }
    std::int64_t operator()(int i, int j) const { return a_[i * n_ + j]; }
    IntMat to_intmat() const;

private:
    int n_;
    const std::int64_t* a_;
};

// Weak compositions of k into n parts, lexicographic.
std::vector<std::vector<int>> compositions(int k, int n);

// Every HNF of index p^k in Z^n, one composition of exponents at a time.
void for_each_sublattice(int n, Prime p, int k, const std::function<void(const HnfRef&)>& visit);
std::vector<IntMat> enumerate_sublattices(int n, Prime p, int k);
// Counts by visiting every HNF, sharded over compositions.
std::uint64_t count_sublattices(int n, Prime p, int k, const CountOptions& opt = {});

// M C adj(M) is divisible by det M for every generator C; M square of full rank.
bool is_invariant(const IntMat& m, const EndoSetup& e);

std::uint64_t count_invariant(const EndoSetup& e, Prime p, int k, const CountOptions& opt = {});
// a_{p^0}, ..., a_{p^K}
std::vector<std::uint64_t> zeta_series_bruteforce(const EndoSetup& e, Prime p, int K, const CountOptions& opt = {});

// Sorted exponents f_1 >= ... >= f_n of the elementary divisors; I = {i < n : f_i > f_{i+1}},
// r_i = f_i - f_{i+1} for i in I, r_n = f_n.
struct DivisorType {
    std::vector<int> I;  // 1-based, increasing
    std::vector<int> r;  // r[1..n], zero outside I and n
    int sum_r() const;   // sum over I only
};
DivisorType elementary_divisor_type(const IntMat& m, Prime p);

// diag(p^(c-1) x n_1, ..., p x n_{c-1}, 1 x n_c); throws GradingError if the grading disagrees with
// the centralizer coranks.
IntMat delta_matrix(const EndoSetup& e, Prime p);

// Smallest m >= 0 with M0 delta^m invariant, M0 the maximal representative of M.
int m_tilde1(const IntMat& m, const EndoSetup& e, Prime p);
// Same quantity from the elementary divisor decomposition M0 = D alpha^{-1}.
int m_tilde1_closed_form(const IntMat& m, const EndoSetup& e, Prime p);
// Minimal valuation of the last n_c columns of the maximal representative.
int m2(const IntMat& m, const EndoSetup& e, Prime p);
int m2_closed_form(const IntMat& m, const EndoSetup& e, Prime p);
// (c - 1) m~1 - m2
int weight_w(const IntMat& m, const EndoSetup& e, Prime p);

// Coefficients of t^0..t^K of the sum of t^(k + n w) over all maximal HNFs of index p^k.
std::vector<std::uint64_t> a_triangle_series(const EndoSetup& e, Prime p, int K, const CountOptions& opt = {});

struct XiReport {
    bool ok = false;
    int first_mismatch = -1;
    std::vector<std::uint64_t> zeta, a_triangle;
    std::vector<std::int64_t> rhs;
};
// zeta = (1 - t^S) / ((1 - t^n)(1 - t^((c-1) n))) A with S = sum_{i<c} (n - N_i), coefficients up to K.
XiReport verify_xi_identity(const EndoSetup& e, Prime p, int K, const CountOptions& opt = {});

struct StabilityReport {
    bool ok = false;
    std::uint64_t checked = 0;
    std::string witness;
};
// v(M) = v(M delta) for invariant HNFs of index <= p^K; M0 delta^m stays maximal for m = 1, 2.
StabilityReport check_delta_stability(const EndoSetup& e, Prime p, int K, const CountOptions& opt = {});

}  // namespace subzeta
