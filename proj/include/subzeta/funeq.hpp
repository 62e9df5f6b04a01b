#pragma once

#include "subzeta/formulas.hpp"
#include "subzeta/qpoly.hpp"
#include "subzeta/ratfun.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subzeta {

struct FunEqVerdict {
    bool ok = false;
    RatFun2 ratio;  // W(1/q, 1/t) / W(q, t)
};
FunEqVerdict check_funeq(const RatFun2& w, const FEShape& shape);

// The ratio, when it is a signed monomial.
std::optional<FEShape> detect_fe_shape(const RatFun2& w);

struct DegreeReport {
    bool deg_t_ok = false;
    bool limit_ok = false;
    bool deg_q_ok = false;
    int deg_t = 0, deg_q = 0;
    std::int64_t expected_deg_t = 0, expected_deg_q = 0;
    std::optional<RatFun1> limit;
    bool ok() const { return deg_t_ok && limit_ok && deg_q_ok; }
};
// deg_t W = -sum N_i, lim_{t->inf} t^{sum N_i} W = (-1)^n q^{-C(n,2)}, deg_q W = -C(n,2);
// coranks = N_0..N_{c-1}.
DegreeReport check_degree_conjecture(const RatFun2& w, int n, const std::vector<std::int64_t>& coranks);

struct S0Report {
    bool ok = false;
    RatFun1 value;     // ((1 - t) W)(t = 1)
    RatFun1 expected;  // 1 / prod_{i=1}^{n-1} (1 - q^i)
};
// Throws PreconditionError unless W has a simple pole at t = 1.
S0Report check_s0(const RatFun2& w, int n);

// Polynomial of degree <= bound through the first bound + 1 samples; the rest are residual checks.
// Throws PreconditionError on too few samples, repeated points, or a nonzero residual.
QPoly interpolate_uniform(const std::vector<std::pair<long, mpq_class>>& samples, int degree_bound);

// H(1/T) / H(T) as (sign, k) when it equals sign * T^k.
std::optional<std::pair<int, int>> check_palindromy_T(const RatFun1& h);

}  // namespace subzeta
