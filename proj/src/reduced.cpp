#include "subzeta/reduced.hpp"

#include "subzeta/errors.hpp"
#include "subzeta/funeq.hpp"

#include <functional>
#include <map>

namespace subzeta {

namespace {

// sum_j coef[j] * u^j with u = T^a
using QuasiGeometric = std::map<int, RatFun1>;

RatFun1 inv_one_minus_power(int a) { return RatFun1(QPoly(1), QPoly::one_minus_power(a)); }

QuasiGeometric multiply(const QuasiGeometric& x, const QuasiGeometric& y) {
    QuasiGeometric r;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            auto [it, fresh] = r.try_emplace(i + j, a * b);
            if (!fresh) it->second += a * b;
        }
    return r;
}

// Generating function of one chain of length len given n_0 = a.
QuasiGeometric chain_series(int len) {
    if (len == 1) return {{0, inv_one_minus_power(1)}};
    // [m + j choose j]_T as a polynomial in u = T^m
    int j = len - 2;
    std::vector<RatFun1> g{RatFun1(1)};
    for (int i = 1; i <= j; ++i) {
        RatFun1 scale = inv_one_minus_power(i);
        RatFun1 shift = -RatFun1(QPoly::monomial(1, i));
        std::vector<RatFun1> next(g.size() + 1);
        for (size_t k = 0; k < g.size(); ++k) {
            next[k] += g[k];
            next[k + 1] += g[k] * shift;
        }
        for (auto& x : next) x = x * scale;
        g = std::move(next);
    }
    // sum_{m=0}^{a} T^{2m} T^{km} = (1 - T^{k+2} u^{k+2}) / (1 - T^{k+2})
    QuasiGeometric out;
    RatFun1 first = inv_one_minus_power(1);
    for (size_t k = 0; k < g.size(); ++k) {
        if (g[k].is_zero()) continue;
        int e = static_cast<int>(k) + 2;
        RatFun1 base = g[k] * first * inv_one_minus_power(e);
        out[0] += base;
        out[e] += -(base * RatFun1(QPoly::monomial(1, e)));
    }
    return out;
}

void check_dimension(const Partition& lambda, const std::vector<long>& v) {
    if (static_cast<int>(v.size()) != cone_dimension(lambda))
        fail_precondition("vector has dimension " + std::to_string(v.size()) + ", cone has " +
                          std::to_string(cone_dimension(lambda)));
}

bool chain_ok(const Partition& lambda, const std::vector<long>& v, bool strict) {
    check_dimension(lambda, v);
    long lo = strict ? 1 : 0;
    if (v[0] < lo) return false;
    size_t pos = 1;
    for (int len : lambda.parts()) {
        const long* c = &v[pos];
        if (c[0] < lo) return false;
        for (int j = 1; j < len; ++j) {
            long bound = j == 1 ? std::min(v[0], c[0]) : c[j - 1];
            if (c[j] < lo || (strict ? c[j] >= bound : c[j] > bound)) return false;
        }
        pos += len;
    }
    return true;
}

}  // namespace

int cone_dimension(const Partition& lambda) { return 1 + lambda.size(); }

bool cone_contains(const Partition& lambda, const std::vector<long>& v) { return chain_ok(lambda, v, false); }

bool interior_contains(const Partition& lambda, const std::vector<long>& v) { return chain_ok(lambda, v, true); }

ConeSeries hilbert_series_exact(const Partition& lambda) {
    if (lambda.length() == 0) throw InvalidPartitionError("empty partition");
    QuasiGeometric total{{0, RatFun1(1)}};
    for (int len : lambda.parts()) total = multiply(total, chain_series(len));
    // sum over n_0 = a of T^a u^j
    RatFun1 h;
    for (const auto& [j, coef] : total) h += coef * inv_one_minus_power(j + 1);
    return {h};
}

std::vector<std::uint64_t> hilbert_series_truncated(const Partition& lambda, int K) {
    std::vector<std::uint64_t> out(K + 1, 0);
    int dim = cone_dimension(lambda);
    std::vector<long> v(dim, 0);
    std::vector<int> chain_start;
    int pos = 1;
    for (int len : lambda.parts()) chain_start.push_back(pos), pos += len;
    // Coordinates filled in order; bound of each comes from the chain inequalities.
    std::vector<long> cap(dim, -1);  // -1: free
    std::function<void(int, long)> rec = [&](int idx, long used) {
        if (idx == dim) {
            ++out[used];
            return;
        }
        long hi = K - used;
        int chain = -1, offset = 0;
        for (size_t c = 0; c < chain_start.size(); ++c)
            if (idx >= chain_start[c]) chain = static_cast<int>(c), offset = idx - chain_start[c];
        if (chain >= 0 && offset >= 1) {
            long b = offset == 1 ? std::min(v[0], v[idx - 1]) : v[idx - 1];
            hi = std::min(hi, b);
        }
        for (long x = 0; x <= hi; ++x) {
            v[idx] = x;
            rec(idx + 1, used + x);
        }
        v[idx] = 0;
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<long>> minimal_interior_vectors(const Partition& lambda, int bound) {
    if (bound <= 0) bound = lambda.largest() + 1;
    int dim = cone_dimension(lambda);
    std::vector<std::vector<long>> pts;
    std::vector<long> v(dim, 0);
    std::vector<int> chain_offset(dim, 0);
    int pos = 1;
    for (int len : lambda.parts())
        for (int j = 0; j < len; ++j) chain_offset[pos++] = j;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == dim) {
            pts.push_back(v);
            return;
        }
        long hi = bound;
        if (idx > 0 && chain_offset[idx] >= 1)
            hi = (chain_offset[idx] == 1 ? std::min(v[0], v[idx - 1]) : v[idx - 1]) - 1;
        for (long x = 1; x <= hi; ++x) {
            v[idx] = x;
            rec(idx + 1);
        }
    };
    rec(0);
    std::vector<std::vector<long>> out;
    std::vector<long> diff(dim);
    for (const auto& g : pts) {
        bool minimal = true;
        for (const auto& b : pts) {
            if (&b == &g) continue;
            for (int i = 0; i < dim; ++i) diff[i] = g[i] - b[i];
            if (cone_contains(lambda, diff)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(g);
    }
    return out;
}

ReducedFEReport check_reduced_fe(const Partition& lambda) {
    ReducedFEReport r;
    NearRectangle nr;
    r.near_rectangle = near_rectangle(lambda, &nr);
    r.found = check_palindromy_T(hilbert_series_exact(lambda).exact);
    if (r.near_rectangle) {
        int l = 1 + nr.c * nr.r1 + nr.r2;
        int k = nr.c + nr.c * (nr.c + 1) / 2 * nr.r1 + nr.r2;
        r.expected = std::make_pair(l % 2 ? -1 : 1, k);
    }
    r.ok = r.found.has_value() == r.near_rectangle && (!r.near_rectangle || r.found == r.expected);
    return r;
}

}  // namespace subzeta
