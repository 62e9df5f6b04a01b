#include "subzeta/funeq.hpp"

#include "subzeta/errors.hpp"

#include <algorithm>
#include <set>

namespace subzeta {

namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

// Single term c q^a t^b.
bool as_monomial(const Poly2& p, mpq_class* c, int* a, int* b) {
    int found = 0;
    for (int j = 0; j <= p.deg_t(); ++j)
        for (int i = 0; i <= p.coeff_t(j).degree(); ++i)
            if (p.coeff(i, j) != 0) {
                if (++found > 1) return false;
                *c = p.coeff(i, j);
                *a = i;
                *b = j;
            }
    return found == 1;
}

bool as_monomial(const QPoly& p, mpq_class* c, int* a) {
    if (p.is_zero()) return false;
    int low = p.low_degree();
    if (low != p.degree()) return false;
    *c = p.leading();
    *a = low;
    return true;
}

// Multiplicity of (1 - t) in p.
int multiplicity_at_t1(Poly2 p) {
    Poly2 lin = Poly2(1) - Poly2::monomial(1, 0, 1);
    int m = 0;
    Poly2 q;
    while (!p.is_zero() && divides(lin, p, &q)) {
        p = q;
        ++m;
    }
    return m;
}

}  // namespace

FunEqVerdict check_funeq(const RatFun2& w, const FEShape& shape) {
    if (w.is_zero()) fail_precondition("check_funeq needs a nonzero function");
    FunEqVerdict v;
    v.ratio = substitute_inverse(w) / w;
    RatFun2 expected = RatFun2::monomial(shape.sign, static_cast<int>(shape.qexp), static_cast<int>(shape.texp));
    v.ok = v.ratio == expected;
    return v;
}

std::optional<FEShape> detect_fe_shape(const RatFun2& w) {
    if (w.is_zero()) return std::nullopt;
    RatFun2 ratio = substitute_inverse(w) / w;
    mpq_class cn, cd;
    int an, bn, ad, bd;
    if (!as_monomial(ratio.num(), &cn, &an, &bn) || !as_monomial(ratio.den(), &cd, &ad, &bd)) return std::nullopt;
    mpq_class c = cn / cd;
    if (c != 1 && c != -1) return std::nullopt;
    return FEShape{c > 0 ? 1 : -1, an - ad, bn - bd};
}

DegreeReport check_degree_conjecture(const RatFun2& w, int n, const std::vector<std::int64_t>& coranks) {
    if (w.is_zero()) fail_precondition("check_degree_conjecture needs a nonzero function");
    DegreeReport r;
    std::int64_t B = 0;
    for (auto x : coranks) B += x;
    r.deg_t = deg_t(w);
    r.deg_q = deg_q(w);
    r.expected_deg_t = -B;
    r.expected_deg_q = -choose2(n);
    r.deg_t_ok = r.deg_t == r.expected_deg_t;
    r.deg_q_ok = r.deg_q == r.expected_deg_q;
    if (r.deg_t_ok) {
        r.limit = leading_limit(w, static_cast<int>(B));
        // (-1)^n q^{-C(n,2)}
        RatFun1 expected(QPoly(n % 2 ? -1 : 1), QPoly::monomial(1, static_cast<int>(choose2(n))));
        r.limit_ok = *r.limit == expected;
    }
    return r;
}

S0Report check_s0(const RatFun2& w, int n) {
    if (w.is_zero()) fail_precondition("check_s0 needs a nonzero function");
    int order = multiplicity_at_t1(w.den()) - multiplicity_at_t1(w.num());
    if (order != 1) fail_precondition("pole order at t = 1 is " + std::to_string(order) + ", not 1");
    RatFun2 shifted = w * RatFun2(Poly2(1) - Poly2::monomial(1, 0, 1));
    S0Report r;
    r.value = eval_t(shifted, 1);
    QPoly den(1);
    for (int i = 1; i < n; ++i) den *= QPoly::one_minus_power(i);
    r.expected = RatFun1(QPoly(1), den);
    r.ok = r.value == r.expected;
    return r;
}

QPoly interpolate_uniform(const std::vector<std::pair<long, mpq_class>>& samples, int degree_bound) {
    if (degree_bound < 0) fail_precondition("degree bound must be nonnegative");
    if (static_cast<int>(samples.size()) < degree_bound + 1)
        fail_precondition("interpolation is underdetermined: " + std::to_string(samples.size()) + " samples for degree " +
                          std::to_string(degree_bound));
    std::vector<std::pair<long, mpq_class>> s = samples;
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i].first == s[i - 1].first) fail_precondition("repeated interpolation point " + std::to_string(s[i].first));
    int m = degree_bound + 1;
    // Newton divided differences on the first m points.
    std::vector<mpq_class> dd;
    for (int i = 0; i < m; ++i) dd.push_back(s[i].second);
    for (int j = 1; j < m; ++j)
        for (int i = m - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (s[i].first - s[i - j].first);
    QPoly poly(dd[m - 1]);
    for (int i = m - 2; i >= 0; --i) poly = poly * QPoly(std::vector<mpq_class>{-s[i].first, 1}) + QPoly(dd[i]);
    for (size_t i = m; i < s.size(); ++i)
        if (poly.eval(s[i].first) != s[i].second)
            fail_precondition("samples are not polynomial of degree <= " + std::to_string(degree_bound) +
                              ": residual at p = " + std::to_string(s[i].first));
    return poly;
}

std::optional<std::pair<int, int>> check_palindromy_T(const RatFun1& h) {
    if (h.is_zero()) fail_precondition("check_palindromy_T needs a nonzero function");
    RatFun1 ratio = h.at_inverse() / h;
    mpq_class cn, cd;
    int an, ad;
    if (!as_monomial(ratio.num(), &cn, &an) || !as_monomial(ratio.den(), &cd, &ad)) return std::nullopt;
    mpq_class c = cn / cd;
    if (c != 1 && c != -1) return std::nullopt;
    return std::make_pair(c > 0 ? 1 : -1, an - ad);
}

}  // namespace subzeta
