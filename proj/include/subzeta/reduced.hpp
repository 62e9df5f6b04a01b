#pragma once

#include "subzeta/partition.hpp"
#include "subzeta/qpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace subzeta {

// Coordinates (n_0, n_11..n_1lambda_1, n_21, ...). Throws PreconditionError on dimension mismatch.
bool cone_contains(const Partition& lambda, const std::vector<long>& v);
bool interior_contains(const Partition& lambda, const std::vector<long>& v);
int cone_dimension(const Partition& lambda);

struct ConeSeries {
    RatFun1 exact;  // in T
    std::vector<mpq_class> coefficients(int K) const { return exact.series(K); }
};

// Sum of T^{|v|} over lattice points of the cone.
ConeSeries hilbert_series_exact(const Partition& lambda);
// Lattice-point counts by coordinate sum 0..K, by direct enumeration.
std::vector<std::uint64_t> hilbert_series_truncated(const Partition& lambda, int K);

// Interior points minimal for gamma >= beta iff gamma - beta lies in the cone, searched in [1, bound]^dim.
// bound = 0 means lambda_1 + 1.
std::vector<std::vector<long>> minimal_interior_vectors(const Partition& lambda, int bound = 0);

struct ReducedFEReport {
    bool near_rectangle = false;
    std::optional<std::pair<int, int>> found;     // (sign, k) from palindromy
    std::optional<std::pair<int, int>> expected;  // (-1)^{1+c r1+r2}, c + C(c+1,2) r1 + r2
    bool ok = false;                              // existence matches and values agree
};
ReducedFEReport check_reduced_fe(const Partition& lambda);

}  // namespace subzeta
