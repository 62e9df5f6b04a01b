#pragma once

#include "subzeta/qpoly.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace subzeta {

// Polynomial in Q[q, t] stored as coefficients in Q[q] of t^0, t^1, ...
class Poly2 {
public:
    Poly2() = default;
    Poly2(const QPoly& t0) { if (!t0.is_zero()) c_.push_back(t0); }
    Poly2(long c) : Poly2(QPoly(c)) {}
    explicit Poly2(std::vector<QPoly> by_t);

    // c * q^a * t^b with a, b >= 0
    static Poly2 monomial(const mpq_class& c, int a, int b);

    bool is_zero() const { return c_.empty(); }
    int deg_t() const { return static_cast<int>(c_.size()) - 1; }
    // -1 for zero
    int deg_q() const;
    int low_t() const;
    const QPoly& coeff_t(int j) const;
    const std::vector<QPoly>& by_t() const { return c_; }
    mpq_class coeff(int a, int b) const { return coeff_t(b)[a]; }

    // Leading coefficient for lex order with q > t.
    mpq_class lex_leading() const;
    // Monic gcd in Q[q] of the t-coefficients.
    QPoly content() const;

    QPoly eval_t(const mpq_class& t) const;
    QPoly eval_q(const mpq_class& q) const;
    // q^A t^B p(1/q, 1/t) with A = deg_q, B = deg_t
    Poly2 reversed() const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2 operator-() const;
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const QPoly& b);
    friend Poly2 operator*(const Poly2& a, const mpq_class& s);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

    // Multiply by q^a t^b.
    Poly2 shifted(int a, int b) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<QPoly> c_;
};

// Remainder of a * lc_t(b)^(deg_t a - deg_t b + 1) by b in t.
Poly2 pseudo_rem(const Poly2& a, const Poly2& b);
// Throws PreconditionError unless b divides a in Q[q, t].
Poly2 exact_div(const Poly2& a, const Poly2& b);
Poly2 exact_div(const Poly2& a, const QPoly& b);
// Divisibility test; on success *quot holds a / b.
bool divides(const Poly2& b, const Poly2& a, Poly2* quot = nullptr);
// gcd in Q[q, t], normalized to a primitive integer polynomial with positive lex leading coefficient.
Poly2 gcd(const Poly2& a, const Poly2& b);

// Element of Q(q, t). Canonical form: coprime numerator and denominator, denominator an
// integer-primitive polynomial with positive lex (q > t) leading coefficient.
class RatFun2 {
public:
    RatFun2() : num_(0), den_(1) {}
    RatFun2(long c) : num_(c), den_(1) {}
    RatFun2(const Poly2& p) : num_(p), den_(1) { normalize_scale(); }
    RatFun2(const Poly2& num, const Poly2& den);

    // c * q^a * t^b with a, b of any sign
    static RatFun2 monomial(const mpq_class& c, int a, int b);

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun2 operator-() const;
    friend RatFun2 operator+(const RatFun2& a, const RatFun2& b);
    friend RatFun2 operator-(const RatFun2& a, const RatFun2& b);
    friend RatFun2 operator*(const RatFun2& a, const RatFun2& b);
    friend RatFun2 operator/(const RatFun2& a, const RatFun2& b);
    RatFun2& operator+=(const RatFun2& o) { return *this = *this + o; }
    RatFun2& operator*=(const RatFun2& o) { return *this = *this * o; }
    friend bool operator==(const RatFun2& a, const RatFun2& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalize_scale();
    Poly2 num_, den_;
};

RatFun2 pow(const RatFun2& f, int e);
RatFun2 normalize(const RatFun2& f);
// f(1/q, 1/t); an involution.
RatFun2 substitute_inverse(const RatFun2& f);
// Coefficients in Q[q] of t^0..t^K. Requires den(q, 0) to be a nonzero constant.
std::vector<QPoly> series_in_t(const RatFun2& f, int K);
int deg_t(const RatFun2& f);
int deg_q(const RatFun2& f);
// Ratio of the top t-coefficients; requires deg_t(f) == -B.
RatFun1 leading_limit(const RatFun2& f, int B);
// f(q, t0) as a function of q; throws if the denominator vanishes identically there.
RatFun1 eval_t(const RatFun2& f, const mpq_class& t0);
// f(q0, t) as a function of t.
RatFun1 eval_q(const RatFun2& f, const mpq_class& q0);

}  // namespace subzeta
