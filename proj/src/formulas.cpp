#include "subzeta/formulas.hpp"

#include "subzeta/algebras.hpp"
#include "subzeta/errors.hpp"

namespace subzeta {

namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

// Substitute X -> 1/q into p and return it as a rational function in q.
RatFun2 at_q_inverse(const QPoly& p) {
    RatFun2 r;
    for (int i = 0; i <= p.degree(); ++i)
        if (p[i] != 0) r += RatFun2::monomial(p[i], -i, 0);
    return r;
}

}  // namespace

RatFun2 zeta_c1(int n) {
    if (n < 1) fail_precondition("zeta_c1 needs n >= 1");
    Poly2 den(1);
    for (int i = 0; i < n; ++i) den = den * (Poly2(1) - Poly2::monomial(1, i, 1));
    return RatFun2(Poly2(1), den);
}

QPoly gaussian_binomial(int a, int b) {
    if (b < 0 || b > a) return QPoly();
    QPoly num(1), den(1);
    for (int i = 1; i <= b; ++i) {
        num *= QPoly::one_minus_power(a - b + i);
        den *= QPoly::one_minus_power(i);
    }
    return exact_div(num, den);
}

QPoly gaussian_multinomial(int n, const std::vector<int>& I) {
    QPoly r(1);
    for (size_t j = 0; j < I.size(); ++j) {
        if (I[j] <= 0 || I[j] >= n || (j && I[j] <= I[j - 1]))
            fail_precondition("gaussian_multinomial needs 0 < i_1 < ... < i_l < n");
        int upper = j + 1 < I.size() ? I[j + 1] : n;
        r *= gaussian_binomial(upper, I[j]);
    }
    return r;
}

RatFun2 zeta_abelian_inert(int n) {
    if (n < 1) fail_precondition("zeta_abelian_inert needs n >= 1");
    auto x = [&](int j) { return RatFun2::monomial(1, j * (2 * n - j), n + j); };
    auto geometric_ratio = [&](int j) { return x(j) / (RatFun2(1) - x(j)); };
    std::vector<RatFun2> ratio;
    for (int j = 1; j < n; ++j) ratio.push_back(geometric_ratio(j));
    RatFun2 sum;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> I;
        RatFun2 term(1);
        for (int j = 1; j < n; ++j)
            if (mask & (1u << (j - 1))) {
                I.push_back(j);
                term = term * ratio[j - 1];
            }
        sum += at_q_inverse(gaussian_multinomial(n, I)) * term;
    }
    return zeta_c1(n) * (RatFun2(1) / (RatFun2(1) - x(n))) * sum;
}

FEShape fe_shape_main(int n, const std::vector<std::int64_t>& coranks) {
    FEShape s;
    s.sign = n % 2 ? -1 : 1;
    s.qexp = choose2(n);
    for (auto x : coranks) s.texp += x;
    return s;
}

FEShape fe_shape_free(int c, int d) {
    std::vector<std::int64_t> w = witt_ranks(c, d);
    std::vector<std::int64_t> head(w.begin(), w.end() - 1);
    return fe_shape_main(static_cast<int>(w[0]), head);
}

FEShape fe_shape_rectangle(int c, int r1, int r2) {
    std::int64_t n = 1 + static_cast<std::int64_t>(c) * r1 + r2;
    return {n % 2 ? -1 : 1, choose2(n), c + choose2(c + 1) * r1 + r2};
}

FEShape fe_shape_abelian(int n) { return {1, choose2(2 * n), 3 * n}; }

FEShape fe_shape_sut(int n, const Partition& lambda) {
    FEShape s;
    s.sign = n % 2 ? -1 : 1;
    s.qexp = choose2(n);
    for (int l : lambda.parts()) s.texp += choose2(l + 1);
    return s;
}

std::string to_string(const FEShape& s) {
    return "(" + std::to_string(s.sign) + ", " + std::to_string(s.qexp) + ", " + std::to_string(s.texp) + ")";
}

}  // namespace subzeta
