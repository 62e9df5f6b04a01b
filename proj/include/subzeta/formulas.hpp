#pragma once

#include "subzeta/partition.hpp"
#include "subzeta/qpoly.hpp"
#include "subzeta/ratfun.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace subzeta {

// prod_{i=0}^{n-1} 1 / (1 - q^i t)
RatFun2 zeta_c1(int n);

// Gaussian binomial [a choose b] in X.
QPoly gaussian_binomial(int a, int b);
// Chain product of Gaussian binomials over 0 < i_1 < ... < i_l < n with i_{l+1} = n.
QPoly gaussian_multinomial(int n, const std::vector<int>& I);

// Ideal zeta function of the abelian-by-inert rank 2n matrix algebra: zeta_c1(n) / (1 - x_n) times
// the sum over I in [n-1] of binom(n, I)(q^-1) prod_{i in I} x_i / (1 - x_i), x_j = q^{j(2n-j)} t^{n+j}.
RatFun2 zeta_abelian_inert(int n);

// W(1/q, 1/t) = sign q^qexp t^texp W(q, t)
struct FEShape {
    int sign = 1;
    std::int64_t qexp = 0;
    std::int64_t texp = 0;
    friend bool operator==(const FEShape&, const FEShape&) = default;
};

FEShape fe_shape_main(int n, const std::vector<std::int64_t>& coranks);
FEShape fe_shape_free(int c, int d);
FEShape fe_shape_rectangle(int c, int r1, int r2);
FEShape fe_shape_abelian(int n);
FEShape fe_shape_sut(int n, const Partition& lambda);

std::string to_string(const FEShape& s);

}  // namespace subzeta
