#include "subzeta/intmat.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <sstream>

namespace subzeta {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw ParseError("ragged matrix literal");
        for (long x : row) a_.emplace_back(x);
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::diagonal(const std::vector<mpz_class>& d) {
    int n = static_cast<int>(d.size());
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

std::vector<mpz_class> IntMat::row(int i) const {
    return {a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_};
}

void IntMat::set_row(int i, const std::vector<mpz_class>& v) {
    for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

IntMat IntMat::rows_range(int begin, int end) const {
    IntMat m(end - begin, c_);
    for (int i = begin; i < end; ++i)
        for (int j = 0; j < c_; ++j) m(i - begin, j) = (*this)(i, j);
    return m;
}

IntMat IntMat::cols_range(int begin, int end) const {
    IntMat m(r_, end - begin);
    for (int i = 0; i < r_; ++i)
        for (int j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
    return m;
}

IntMat IntMat::transpose() const {
    IntMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

bool IntMat::is_upper_triangular() const {
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < std::min(i, c_); ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

mpz_class IntMat::max_abs() const {
    mpz_class m = 0;
    for (const auto& x : a_)
        if (abs(x) > m) m = abs(x);
    return m;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMat::add_row_multiple(int i, int j, const mpz_class& f) {
    if (f == 0) return;
    for (int k = 0; k < c_; ++k) (*this)(i, k) += f * (*this)(j, k);
}

void IntMat::add_col_multiple(int i, int j, const mpz_class& f) {
    if (f == 0) return;
    for (int k = 0; k < r_; ++k) (*this)(k, i) += f * (*this)(k, j);
}

void IntMat::negate_row(int i) {
    for (int k = 0; k < c_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMat::negate_col(int j) {
    for (int k = 0; k < r_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.c_ != b.r_) fail_precondition("matrix product shape mismatch");
    IntMat m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const mpz_class& x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) fail_precondition("matrix sum shape mismatch");
    IntMat m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) fail_precondition("matrix difference shape mismatch");
    IntMat m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

IntMat operator*(const mpz_class& s, const IntMat& a) {
    IntMat m = a;
    for (auto& x : m.a_) x *= s;
    return m;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMat vstack(const IntMat& top, const IntMat& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) fail_precondition("vstack column mismatch");
    IntMat m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
    return m;
}

IntMat hstack(const IntMat& left, const IntMat& right) {
    if (left.rows() != right.rows()) fail_precondition("hstack row mismatch");
    IntMat m(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
        for (int j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
    }
    return m;
}

std::vector<mpz_class> row_times(const std::vector<mpz_class>& v, const IntMat& m) {
    std::vector<mpz_class> r(m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

HnfTransform hnf_with_transform(const IntMat& m) {
    HnfTransform t{m, IntMat::identity(m.rows()), 0};
    IntMat& h = t.h;
    IntMat& u = t.u;
    int rows = m.rows(), r = 0;
    for (int col = 0; col < m.cols() && r < rows; ++col) {
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i)
                if (h(i, col) != 0 && (best < 0 || abs(h(i, col)) < abs(h(best, col)))) best = i;
            if (best < 0) break;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h(i, col) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (int i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    t.rank = r;
    return t;
}

IntMat hnf(const IntMat& m) {
    HnfTransform t = hnf_with_transform(m);
    return t.h.rows_range(0, t.rank);
}

SnfResult snf_with_transforms(const IntMat& m) {
    IntMat a = m;
    int R = m.rows(), C = m.cols();
    SnfResult s{{}, IntMat::identity(R), IntMat::identity(C), IntMat::identity(C)};
    auto col_add = [&](int i, int j, const mpz_class& f) {
        a.add_col_multiple(i, j, f);
        s.v.add_col_multiple(i, j, f);
        s.v_inv.add_row_multiple(j, i, -f);
    };
    auto col_swap = [&](int i, int j) {
        a.swap_cols(i, j);
        s.v.swap_cols(i, j);
        s.v_inv.swap_rows(i, j);
    };
    auto row_add = [&](int i, int j, const mpz_class& f) {
        a.add_row_multiple(i, j, f);
        s.u.add_row_multiple(i, j, f);
    };
    auto row_swap = [&](int i, int j) {
        a.swap_rows(i, j);
        s.u.swap_rows(i, j);
    };
    int n = std::min(R, C);
    for (int t = 0; t < n; ++t) {
        int bi = -1, bj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a(i, j) != 0 && (bi < 0 || abs(a(i, j)) < abs(a(bi, bj)))) bi = i, bj = j;
        if (bi < 0) break;
        row_swap(t, bi);
        col_swap(t, bj);
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < R; ++i) {
                if (a(i, t) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (a(i, t) != 0) {
                    row_swap(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (a(t, j) == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (a(t, j) != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            int bad = -1;
            for (int i = t + 1; i < R && bad < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_add(t, bad, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            s.u.negate_row(t);
        }
    }
    for (int t = 0; t < n; ++t) s.d.push_back(a(t, t));
    return s;
}

std::vector<mpz_class> snf(const IntMat& m) { return snf_with_transforms(m).d; }

mpz_class det(const IntMat& m) {
    if (!m.is_square()) fail_precondition("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

IntMat minor_without(const IntMat& m, int r, int c) {
    int n = m.rows();
    IntMat s(n - 1, n - 1);
    for (int i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0, jj = 0; j < n; ++j) {
            if (j == c) continue;
            s(ii, jj++) = m(i, j);
        }
        ++ii;
    }
    return s;
}

}  // namespace

IntMat adjugate(const IntMat& m) {
    if (!m.is_square()) fail_precondition("adjugate of a non-square matrix");
    int n = m.rows();
    if (n == 0) return {};
    if (n == 1) return IntMat::identity(1);
    mpz_class d = det(m);
    IntMat adj(n, n);
    if (d == 0) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class c = det(minor_without(m, j, i));
                adj(i, j) = ((i + j) % 2) ? mpz_class(-c) : c;
            }
        return adj;
    }
    // adj = d * m^{-1} via Gauss-Jordan over Q
    std::vector<mpq_class> a(static_cast<size_t>(n) * 2 * n);
    auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<size_t>(i) * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = m(i, j);
        at(i, n + i) = 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (at(p, k) == 0) ++p;
        if (p != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(k, j));
        mpq_class inv = 1 / at(k, k);
        for (int j = 0; j < 2 * n; ++j) at(k, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || at(i, k) == 0) continue;
            mpq_class f = at(i, k);
            for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class x = at(i, n + j) * d;
            adj(i, j) = x.get_num();
        }
    return adj;
}

int valuation(const mpz_class& x, const mpz_class& p) {
    if (x == 0) return kInfiniteValuation;
    mpz_class y;
    return static_cast<int>(mpz_remove(y.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const IntMat& m, const mpz_class& p) {
    int v = kInfiniteValuation;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v = std::min(v, valuation(m(i, j), p));
    return v;
}

IntMat kernel_int(const IntMat& m) {
    HnfTransform t = hnf_with_transform(m);
    if (t.rank == m.rows()) return IntMat(0, m.rows());
    return hnf(t.u.rows_range(t.rank, m.rows()));
}

IntMat saturate(const IntMat& rows) {
    int n = rows.cols();
    if (rows.rows() == 0 || rows.is_zero()) return IntMat(0, n);
    IntMat ann = kernel_int(rows.transpose());
    if (ann.rows() == 0) return IntMat::identity(n);
    return kernel_int(ann.transpose());
}

IntMat complement(const IntMat& b) {
    int n = b.cols(), r = b.rows();
    if (r == 0) return IntMat::identity(n);
    SnfResult s = snf_with_transforms(b);
    for (const auto& d : s.d)
        if (d != 1) fail_precondition("complement needs a saturated basis");
    return s.v_inv.rows_range(r, n);
}

bool solve_left(const IntMat& a, const std::vector<mpz_class>& v, std::vector<mpz_class>* x) {
    HnfTransform t = hnf_with_transform(a);
    std::vector<mpz_class> y(a.rows(), 0), rem = v;
    int col = 0;
    for (int i = 0; i < t.rank; ++i) {
        while (t.h(i, col) == 0) ++col;
        if (rem[col] % t.h(i, col) != 0) return false;
        y[i] = rem[col] / t.h(i, col);
        for (int j = col; j < a.cols(); ++j) rem[j] -= y[i] * t.h(i, j);
    }
    for (const auto& e : rem)
        if (e != 0) return false;
    if (x) *x = row_times(y, t.u);
    return true;
}

bool same_lattice(const IntMat& a, const IntMat& b) { return hnf(a) == hnf(b); }

}  // namespace subzeta
