#pragma once

#include <string>
#include <vector>

namespace subzeta {

// Nonincreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    // Throws InvalidPartitionError unless parts are positive and nonincreasing.
    explicit Partition(std::vector<int> parts);
    // "3,2,1"; throws InvalidPartitionError.
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int size() const;
    int largest() const { return p_.empty() ? 0 : p_.front(); }
    int operator[](int i) const { return p_[i]; }
    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> p_;
};

// lambda = (c^r1, 1^r2). All-ones partitions normalize to c = 1, r1 = r, r2 = 0.
struct NearRectangle {
    int c = 0, r1 = 0, r2 = 0;
};
bool near_rectangle(const Partition& lambda, NearRectangle* out = nullptr);

std::vector<Partition> partitions_of(int n);

}  // namespace subzeta
