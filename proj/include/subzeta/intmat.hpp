#pragma once

#include <gmpxx.h>

#include <climits>
#include <initializer_list>
#include <string>
#include <vector>

namespace subzeta {

// Dense integer matrix, row-major. Vectors are rows; matrices act on the right.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(int n);
    static IntMat diagonal(const std::vector<mpz_class>& d);

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const mpz_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    std::vector<mpz_class> row(int i) const;
    void set_row(int i, const std::vector<mpz_class>& v);
    IntMat rows_range(int begin, int end) const;
    IntMat cols_range(int begin, int end) const;
    IntMat transpose() const;
    bool is_zero() const;
    bool is_upper_triangular() const;
    mpz_class max_abs() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row_i += f * row_j
    void add_row_multiple(int i, int j, const mpz_class& f);
    void add_col_multiple(int i, int j, const mpz_class& f);
    void negate_row(int i);
    void negate_col(int j);

    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend IntMat operator+(const IntMat& a, const IntMat& b);
    friend IntMat operator-(const IntMat& a, const IntMat& b);
    friend IntMat operator*(const mpz_class& s, const IntMat& a);
    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    std::string to_string() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<mpz_class> a_;
};

IntMat vstack(const IntMat& top, const IntMat& bottom);
IntMat hstack(const IntMat& left, const IntMat& right);
std::vector<mpz_class> row_times(const std::vector<mpz_class>& v, const IntMat& m);

// Row-style Hermite normal form of the row span: nonzero rows only, echelon with positive
// pivots and entries above each pivot reduced into [0, pivot).
IntMat hnf(const IntMat& m);

struct HnfTransform {
    IntMat h;  // same shape as input; zero rows at the bottom
    IntMat u;  // unimodular, u * input = h
    int rank = 0;
};
HnfTransform hnf_with_transform(const IntMat& m);

struct SnfResult {
    std::vector<mpz_class> d;  // min(rows, cols) entries; d[i] | d[i+1], zeros last
    IntMat u, v, v_inv;        // u * m * v = diag(d), all unimodular
};
SnfResult snf_with_transforms(const IntMat& m);
std::vector<mpz_class> snf(const IntMat& m);

mpz_class det(const IntMat& m);
IntMat adjugate(const IntMat& m);

inline constexpr int kInfiniteValuation = INT_MAX;
int valuation(const mpz_class& x, const mpz_class& p);
int valuation(const IntMat& m, const mpz_class& p);

// Basis (in HNF) of the saturation of the row span.
IntMat saturate(const IntMat& rows);
// Saturated basis of the left kernel {x : x m = 0}.
IntMat kernel_int(const IntMat& m);
// Rows q such that [q; b] is unimodular; b must be a saturated basis.
IntMat complement(const IntMat& b);
// Integer x with x a = v, a of full row rank; false when no integral solution exists.
bool solve_left(const IntMat& a, const std::vector<mpz_class>& v, std::vector<mpz_class>* x);
// Row spans coincide.
bool same_lattice(const IntMat& a, const IntMat& b);

}  // namespace subzeta
