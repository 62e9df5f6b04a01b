#include "subzeta/partition.hpp"

#include "subzeta/errors.hpp"

#include <charconv>
#include <functional>
#include <numeric>

namespace subzeta {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw InvalidPartitionError("partition parts must be positive");
        if (i && p_[i] > p_[i - 1]) throw InvalidPartitionError("partition parts must be nonincreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    if (s.empty()) throw InvalidPartitionError("empty partition");
    while (pos <= s.size()) {
        size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidPartitionError("malformed partition '" + s + "'");
        parts.push_back(v);
        pos = end + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < p_.size(); ++i) out += (i ? "," : "") + std::to_string(p_[i]);
    return out + ")";
}

bool near_rectangle(const Partition& lambda, NearRectangle* out) {
    const auto& p = lambda.parts();
    if (p.empty()) return false;
    NearRectangle nr;
    nr.c = p.front();
    size_t i = 0;
    while (i < p.size() && p[i] == nr.c) ++i;
    nr.r1 = static_cast<int>(i);
    while (i < p.size() && p[i] == 1) ++i;
    if (i != p.size()) return false;
    nr.r2 = static_cast<int>(p.size()) - nr.r1;
    if (nr.c == 1) nr.r2 = 0;
    if (out) *out = nr;
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n, n);
    return out;
}

}  // namespace subzeta
