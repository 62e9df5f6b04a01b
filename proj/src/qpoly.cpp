#include "subzeta/qpoly.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <map>

namespace subzeta {

namespace {

const mpq_class kZero(0);

std::string coeff_term(const mpq_class& c, std::string_view var, int e, bool first) {
    std::string out;
    mpq_class a = abs(c);
    if (c < 0)
        out += "-";
    else if (!first)
        out += "+";
    bool unit = (a == 1);
    if (!unit || e == 0) out += a.get_str();
    if (e > 0) {
        if (!unit) out += "*";
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

QPoly::QPoly(const mpq_class& constant) {
    if (constant != 0) c_.push_back(constant);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly QPoly::monomial(const mpq_class& c, int degree) {
    QPoly p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, mpq_class(0));
    p.c_[degree] = c;
    return p;
}

QPoly QPoly::one_minus_power(int a) { return QPoly(1) - monomial(1, a); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

const mpq_class& QPoly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpq_class& QPoly::leading() const { return c_.empty() ? kZero : c_.back(); }

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::reversed(int d) const {
    if (is_zero()) return {};
    if (d < degree()) fail_precondition("QPoly::reversed: degree bound too small");
    std::vector<mpq_class> r(d + 1, mpq_class(0));
    for (int i = 0; i <= degree(); ++i) r[d - i] = c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    QPoly r = *this;
    mpq_class lc = leading();
    for (auto& x : r.c_) x /= lc;
    return r;
}

QPoly QPoly::primitive() const {
    if (is_zero()) return {};
    mpz_class l(1), g(0);
    for (const auto& x : c_) l = lcm(l, mpz_class(x.get_den()));
    for (const auto& x : c_) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
    mpq_class s(l, g);
    if (leading() < 0) s = -s;
    return *this * s;
}

QPoly QPoly::derivative() const {
    std::vector<mpq_class> r;
    for (int i = 1; i <= degree(); ++i) r.push_back(c_[i] * i);
    return QPoly(std::move(r));
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly QPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    QPoly r;
    r.c_.assign(k, mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::string QPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i] == 0) continue;
        out += coeff_term(c_[i], var, i, first);
        first = false;
    }
    return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) fail_precondition("QPoly division by zero");
    std::vector<mpq_class> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {QPoly(), a};
    std::vector<mpq_class> q(da - db + 1, mpq_class(0));
    const mpq_class& lb = b.leading();
    for (int i = da; i >= db; --i) {
        if (r[i] == 0) continue;
        mpq_class f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    r.resize(db > 0 ? db : 0);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail_precondition("QPoly exact division has a remainder");
    return q;
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.primitive();
    }
    return a.monic();
}

QPoly pow(const QPoly& a, int e) {
    QPoly r(1), base = a;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFun1::RatFun1(QPoly num, QPoly den) {
    if (den.is_zero()) fail_precondition("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = QPoly();
        den_ = QPoly(1);
        return;
    }
    QPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    mpq_class lc = den.leading();
    num_ = num * (1 / lc);
    den_ = den * (1 / lc);
}

RatFun1 RatFun1::operator-() const { return RatFun1(-num_, den_); }

RatFun1 operator+(const RatFun1& a, const RatFun1& b) {
    if (a.den_ == b.den_) return RatFun1(a.num_ + b.num_, a.den_);
    return RatFun1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun1 operator-(const RatFun1& a, const RatFun1& b) { return a + (-b); }

RatFun1 operator*(const RatFun1& a, const RatFun1& b) {
    return RatFun1(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun1 operator/(const RatFun1& a, const RatFun1& b) {
    if (b.is_zero()) fail_precondition("division by the zero rational function");
    return RatFun1(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun1 RatFun1::at_inverse() const {
    int dn = num_.degree(), dd = den_.degree();
    if (is_zero()) return *this;
    QPoly n = num_.reversed(dn), d = den_.reversed(dd);
    // f(1/X) = X^(dd-dn) * rev(num)/rev(den)
    if (dd >= dn) return RatFun1(n.shifted(dd - dn), d);
    return RatFun1(n, d.shifted(dn - dd));
}

mpq_class RatFun1::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) fail_precondition("rational function has a pole at the evaluation point");
    return num_.eval(x) / d;
}

std::vector<mpq_class> RatFun1::series(int K) const {
    if (den_[0] == 0) fail_precondition("series expansion needs a nonzero constant term in the denominator");
    std::vector<mpq_class> c(K + 1, mpq_class(0));
    for (int j = 0; j <= K; ++j) {
        mpq_class acc = num_[j];
        for (int i = 1; i <= std::min(j, den_.degree()); ++i) acc -= den_[i] * c[j - i];
        c[j] = acc / den_[0];
    }
    return c;
}

std::string RatFun1::to_string(std::string_view var) const {
    QPoly rest = den_;
    std::map<int, int> factors;
    for (int a = rest.degree(); a >= 1 && rest.degree() > 0; --a) {
        QPoly f = QPoly::one_minus_power(a);
        while (rest.degree() >= a) {
            auto [q, r] = divmod(rest, f);
            if (!r.is_zero()) break;
            rest = q;
            ++factors[a];
        }
    }
    QPoly num = num_;
    std::vector<std::string> parts;
    for (auto [a, e] : factors) {
        std::string s = "(" + QPoly::one_minus_power(a).to_string(var) + ")";
        if (e > 1) s += "^" + std::to_string(e);
        parts.push_back(s);
    }
    if (rest.degree() > 0) {
        QPoly pr = rest.primitive();
        mpq_class s = exact_div(rest, pr)[0];
        num *= 1 / s;
        parts.push_back("(" + pr.to_string(var) + ")");
    } else {
        num *= 1 / rest[0];
    }
    std::string ns = num.to_string(var);
    size_t terms = 0;
    for (const auto& c : num.coeffs()) terms += (c != 0);
    if (parts.empty()) return ns;
    if (terms > 1) ns = "(" + ns + ")";
    std::string ds;
    for (size_t i = 0; i < parts.size(); ++i) ds += (i ? "*" : "") + parts[i];
    if (parts.size() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace subzeta
