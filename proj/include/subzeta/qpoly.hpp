#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subzeta {

// Dense univariate polynomial over Q. Coefficient vector has no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    QPoly(const mpq_class& constant);
    QPoly(long constant) : QPoly(mpq_class(constant)) {}
    explicit QPoly(std::vector<mpq_class> coeffs);

    static QPoly monomial(const mpq_class& c, int degree);
    // 1 - X^a
    static QPoly one_minus_power(int a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Smallest exponent with nonzero coefficient; -1 for zero.
    int low_degree() const;
    const mpq_class& operator[](int i) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& leading() const;

    mpq_class eval(const mpq_class& x) const;
    // X^d * p(1/X); requires d >= degree().
    QPoly reversed(int d) const;
    QPoly monic() const;
    // Primitive integer multiple with positive leading coefficient.
    QPoly primitive() const;
    QPoly derivative() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const mpq_class& s);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    // Multiply by X^k (k >= 0).
    QPoly shifted(int k) const;

    std::string to_string(std::string_view var = "X") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
// Throws PreconditionError unless b divides a.
QPoly exact_div(const QPoly& a, const QPoly& b);
// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);
QPoly pow(const QPoly& a, int e);

// Univariate rational function. Canonical: coprime, monic denominator.
class RatFun1 {
public:
    RatFun1() : num_(0), den_(1) {}
    RatFun1(const QPoly& p) : num_(p), den_(1) {}
    RatFun1(long c) : num_(c), den_(1) {}
    RatFun1(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun1 operator-() const;
    friend RatFun1 operator+(const RatFun1& a, const RatFun1& b);
    friend RatFun1 operator-(const RatFun1& a, const RatFun1& b);
    friend RatFun1 operator*(const RatFun1& a, const RatFun1& b);
    friend RatFun1 operator/(const RatFun1& a, const RatFun1& b);
    RatFun1& operator+=(const RatFun1& o) { return *this = *this + o; }
    RatFun1& operator*=(const RatFun1& o) { return *this = *this * o; }
    friend bool operator==(const RatFun1& a, const RatFun1& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // f(1/X)
    RatFun1 at_inverse() const;
    // Throws PreconditionError when the denominator vanishes at x.
    mpq_class eval(const mpq_class& x) const;
    // Power series coefficients 0..K; requires den(0) != 0.
    std::vector<mpq_class> series(int K) const;
    // deg num - deg den
    int degree() const { return num_.degree() - den_.degree(); }

    // Denominator shown as a product of (1-X^a) factors when possible.
    std::string to_string(std::string_view var = "X") const;

private:
    QPoly num_, den_;
};

}  // namespace subzeta
