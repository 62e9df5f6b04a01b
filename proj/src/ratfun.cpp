#include "subzeta/ratfun.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace subzeta {

namespace {

const QPoly kZeroQ;

std::string q_power(int a) {
    if (a == 0) return "";
    return a == 1 ? "q" : "q^" + std::to_string(a);
}

std::string t_power(int b) {
    if (b == 0) return "";
    return b == 1 ? "t" : "t^" + std::to_string(b);
}

}  // namespace

Poly2::Poly2(std::vector<QPoly> by_t) : c_(std::move(by_t)) { trim(); }

Poly2 Poly2::monomial(const mpq_class& c, int a, int b) {
    if (c == 0) return {};
    std::vector<QPoly> v(b + 1);
    v[b] = QPoly::monomial(c, a);
    return Poly2(std::move(v));
}

void Poly2::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly2::deg_q() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

int Poly2::low_t() const {
    for (size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return static_cast<int>(j);
    return -1;
}

const QPoly& Poly2::coeff_t(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return kZeroQ;
    return c_[j];
}

mpq_class Poly2::lex_leading() const {
    int dq = deg_q();
    for (int j = deg_t(); j >= 0; --j)
        if (c_[j].degree() == dq) return c_[j].leading();
    return 0;
}

QPoly Poly2::content() const {
    QPoly g;
    for (const auto& p : c_) {
        g = gcd(g, p);
        if (g.degree() == 0) break;
    }
    return g;
}

QPoly Poly2::eval_t(const mpq_class& t) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * QPoly(t) + *it;
    return acc;
}

QPoly Poly2::eval_q(const mpq_class& q) const {
    std::vector<mpq_class> v;
    for (const auto& p : c_) v.push_back(p.eval(q));
    return QPoly(std::move(v));
}

Poly2 Poly2::reversed() const {
    if (is_zero()) return {};
    int A = deg_q(), B = deg_t();
    std::vector<QPoly> v(B + 1);
    for (int j = 0; j <= B; ++j)
        if (!c_[j].is_zero()) v[B - j] = c_[j].reversed(A);
    return Poly2(std::move(v));
}

Poly2& Poly2::operator+=(const Poly2& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<QPoly> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly2(std::move(v));
}

Poly2 operator*(const Poly2& a, const QPoly& b) {
    std::vector<QPoly> v;
    for (const auto& p : a.c_) v.push_back(p * b);
    return Poly2(std::move(v));
}

Poly2 operator*(const Poly2& a, const mpq_class& s) { return a * QPoly(s); }

Poly2 Poly2::shifted(int a, int b) const {
    if (is_zero()) return {};
    std::vector<QPoly> v(b);
    for (const auto& p : c_) v.push_back(p.shifted(a));
    return Poly2(std::move(v));
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int j = 0; j <= deg_t(); ++j) {
        const QPoly& p = c_[j];
        for (int i = 0; i <= p.degree(); ++i) {
            const mpq_class& c = p[i];
            if (c == 0) continue;
            mpq_class a = abs(c);
            if (c < 0)
                out += "-";
            else if (!first)
                out += "+";
            first = false;
            std::string mono = q_power(i);
            std::string tp = t_power(j);
            if (!mono.empty() && !tp.empty()) mono += "*";
            mono += tp;
            if (mono.empty())
                out += a.get_str();
            else if (a == 1)
                out += mono;
            else
                out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

Poly2 pseudo_rem(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) fail_precondition("pseudo-remainder by zero");
    Poly2 r = a;
    int db = b.deg_t();
    const QPoly& lb = b.coeff_t(db);
    while (!r.is_zero() && r.deg_t() >= db) {
        int dr = r.deg_t();
        QPoly lr = r.coeff_t(dr);
        r = r * lb - (b * lr).shifted(0, dr - db);
    }
    return r;
}

bool divides(const Poly2& b, const Poly2& a, Poly2* quot) {
    if (b.is_zero()) fail_precondition("division by the zero polynomial");
    Poly2 r = a;
    int db = b.deg_t();
    const QPoly& lb = b.coeff_t(db);
    std::vector<QPoly> q(std::max(0, a.deg_t() - db + 1));
    while (!r.is_zero()) {
        int dr = r.deg_t();
        if (dr < db) return false;
        auto [f, rem] = divmod(r.coeff_t(dr), lb);
        if (!rem.is_zero()) return false;
        q[dr - db] += f;
        r -= (b * f).shifted(0, dr - db);
    }
    if (quot) *quot = Poly2(std::move(q));
    return true;
}

Poly2 exact_div(const Poly2& a, const Poly2& b) {
    Poly2 q;
    if (!divides(b, a, &q)) fail_precondition("Poly2 exact division has a remainder");
    return q;
}

Poly2 exact_div(const Poly2& a, const QPoly& b) {
    std::vector<QPoly> v;
    for (const auto& p : a.by_t()) v.push_back(exact_div(p, b));
    return Poly2(std::move(v));
}

namespace {

// Rational scale making p integral, primitive, with positive lex leading coefficient.
mpq_class primitive_scale(const Poly2& p) {
    mpz_class l(1), g(0);
    for (const auto& c : p.by_t())
        for (const auto& x : c.coeffs())
            if (x != 0) l = lcm(l, mpz_class(x.get_den()));
    for (const auto& c : p.by_t())
        for (const auto& x : c.coeffs())
            if (x != 0) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
    mpq_class s(l, g);
    s.canonicalize();
    if (p.lex_leading() < 0) s = -s;
    return s;
}

Poly2 primitive_t(const Poly2& p) {
    if (p.is_zero()) return p;
    QPoly c = p.content();
    Poly2 r = c.degree() > 0 ? exact_div(p, c) : p;
    return r * primitive_scale(r);
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b * primitive_scale(b);
    if (b.is_zero()) return a * primitive_scale(a);
    QPoly ca = a.content(), cb = b.content();
    QPoly gc = gcd(ca, cb);
    Poly2 x = exact_div(a, ca), y = exact_div(b, cb);
    if (x.deg_t() < y.deg_t()) std::swap(x, y);
    while (!y.is_zero() && y.deg_t() > 0) {
        Poly2 r = pseudo_rem(x, y);
        x = std::move(y);
        y = primitive_t(r);
    }
    Poly2 g = y.is_zero() ? primitive_t(x) : Poly2(1);
    g = g * gc;
    return g * primitive_scale(g);
}

RatFun2::RatFun2(const Poly2& num, const Poly2& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail_precondition("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly2(1);
        return;
    }
    Poly2 g = gcd(num_, den_);
    if (!(g == Poly2(1))) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    normalize_scale();
}

void RatFun2::normalize_scale() {
    mpq_class s = primitive_scale(den_);
    if (s != 1) {
        num_ = num_ * s;
        den_ = den_ * s;
    }
}

RatFun2 RatFun2::monomial(const mpq_class& c, int a, int b) {
    Poly2 n = Poly2::monomial(c, std::max(a, 0), std::max(b, 0));
    Poly2 d = Poly2::monomial(1, std::max(-a, 0), std::max(-b, 0));
    return RatFun2(n, d);
}

RatFun2 RatFun2::operator-() const {
    RatFun2 r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun2(a.num_ + b.num_, a.den_);
    return RatFun2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun2 operator-(const RatFun2& a, const RatFun2& b) { return a + (-b); }

RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
    if (a.is_zero() || b.is_zero()) return RatFun2();
    // Cross-cancel first to keep the gcd small.
    Poly2 g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly2 n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    Poly2 d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    return RatFun2(n, d);
}

RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
    if (b.is_zero()) fail_precondition("division by the zero rational function");
    return a * RatFun2(b.den_, b.num_);
}

RatFun2 pow(const RatFun2& f, int e) {
    if (e < 0) return pow(RatFun2(1) / f, -e);
    RatFun2 r(1), base = f;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatFun2 normalize(const RatFun2& f) { return RatFun2(f.num(), f.den()); }

RatFun2 substitute_inverse(const RatFun2& f) {
    if (f.is_zero()) return f;
    const Poly2 &n = f.num(), &d = f.den();
    int aq = d.deg_q() - n.deg_q();
    int at = d.deg_t() - n.deg_t();
    // f(1/q,1/t) = q^aq t^at rev(n)/rev(d)
    RatFun2 base(n.reversed(), d.reversed());
    return base * RatFun2::monomial(1, aq, at);
}

std::vector<QPoly> series_in_t(const RatFun2& f, int K) {
    const Poly2& d = f.den();
    const QPoly& d0 = d.coeff_t(0);
    if (d0.is_zero() || !d0.is_constant())
        fail_precondition("series_in_t needs a nonzero constant denominator term at t = 0");
    mpq_class inv = 1 / d0[0];
    std::vector<QPoly> c(K + 1);
    for (int j = 0; j <= K; ++j) {
        QPoly acc = f.num().coeff_t(j);
        for (int i = 1; i <= std::min(j, d.deg_t()); ++i) acc -= d.coeff_t(i) * c[j - i];
        c[j] = acc * inv;
    }
    return c;
}

int deg_t(const RatFun2& f) { return f.num().deg_t() - f.den().deg_t(); }

int deg_q(const RatFun2& f) { return f.num().deg_q() - f.den().deg_q(); }

RatFun1 leading_limit(const RatFun2& f, int B) {
    if (f.is_zero() || deg_t(f) != -B)
        fail_precondition("leading_limit: t-degree is not -" + std::to_string(B));
    return RatFun1(f.num().coeff_t(f.num().deg_t()), f.den().coeff_t(f.den().deg_t()));
}

RatFun1 eval_t(const RatFun2& f, const mpq_class& t0) {
    QPoly d = f.den().eval_t(t0);
    if (d.is_zero()) fail_precondition("denominator vanishes identically at the given t");
    return RatFun1(f.num().eval_t(t0), d);
}

RatFun1 eval_q(const RatFun2& f, const mpq_class& q0) {
    QPoly d = f.den().eval_q(q0);
    if (d.is_zero()) fail_precondition("denominator vanishes identically at the given q");
    return RatFun1(f.num().eval_q(q0), d);
}

std::string RatFun2::to_string() const {
    // Peel off binomials 1 - q^a t^b, largest first; display only.
    Poly2 rest = den_;
    std::map<std::pair<int, int>, int> factors;
    for (int b = rest.deg_t(); b >= 1; --b) {
        for (int a = rest.deg_q(); a >= 0; --a) {
            Poly2 bin = Poly2(1) - Poly2::monomial(1, a, b);
            Poly2 q;
            while (rest.deg_t() >= b && divides(bin, rest, &q)) {
                rest = q;
                ++factors[{b, a}];
            }
        }
    }
    Poly2 num = num_;
    std::vector<std::string> parts;
    for (auto [ba, e] : factors) {
        Poly2 bin = Poly2(1) - Poly2::monomial(1, ba.second, ba.first);
        std::string s = "(" + bin.to_string() + ")";
        if (e > 1) s += "^" + std::to_string(e);
        parts.push_back(s);
    }
    bool const_rest = rest.deg_t() == 0 && rest.deg_q() == 0;
    if (const_rest) {
        num = num * (1 / rest.coeff(0, 0));
    } else {
        mpq_class s = primitive_scale(rest);
        num = num * s;
        parts.push_back("(" + (rest * s).to_string() + ")");
    }
    std::string ns = num.to_string();
    int terms = 0;
    for (const auto& c : num.by_t())
        for (const auto& x : c.coeffs()) terms += (x != 0);
    if (parts.empty()) return ns;
    if (terms > 1) ns = "(" + ns + ")";
    std::string ds;
    for (size_t i = 0; i < parts.size(); ++i) ds += (i ? "*" : "") + parts[i];
    if (parts.size() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace subzeta
