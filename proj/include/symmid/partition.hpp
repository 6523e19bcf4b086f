#ifndef SYMMID_PARTITION_HPP
#define SYMMID_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace symmid {

// Integer partition: weakly decreasing positive parts, trailing zeros stripped.
// The ambient number of variables is deliberately not stored; operations that
// depend on it take n as an explicit parameter, so the same partition can be
// reused across ambient rings.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);        // input must be weakly decreasing, >= 0
    static Partition sorted(std::vector<int> values);  // sorts descending first

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }  // number of nonzero parts
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    int sum() const;
    // 0-based part access; parts past the end are 0.
    int nth(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    // Conjugate entry x'_v for v >= 1: the number of parts >= v.
    int count_parts_ge(int v) const;

    Partition conjugate() const;
    Partition truncate_columns(int c) const;  // x(c): every part capped at c
    Partition strip_columns(int r) const;     // x - x(r)

    std::vector<int> padded(std::size_t n) const;

    bool operator==(const Partition&) const = default;
    // Lexicographic; used for deterministic container ordering only. The
    // componentwise and dominance orders live in the free functions below.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

bool leq(const Partition& x, const Partition& y);            // x_i <= y_i for all i
Partition sup(const Partition& x, const Partition& y);       // componentwise max
bool dominance_leq(const Partition& x, const Partition& y);  // x_1+...+x_i <= y_1+...+y_i for all i

// All distinct rearrangements of x zero-padded to length n, in lexicographically
// increasing order. Throws DomainError if x has more than n parts.
std::vector<std::vector<int>> orbit(const Partition& x, int n);
long long orbit_size(const Partition& x, int n);

// Partitions with at most max_len parts, every part <= max_part, and the first
// forced_prefix parts equal to max_part, in lexicographically decreasing order.
std::vector<Partition> enumerate_box_partitions(int max_part, int max_len, int forced_prefix);

// Partitions of size exactly s with at most max_len parts.
std::vector<Partition> partitions_of(int s, int max_len);

// Sorts an exponent vector into a partition. Entries must be >= 0.
Partition sorted_descending(const std::vector<int>& exponents);

long long binomial(long long a, long long b);  // 0 when b < 0 or b > a

} // namespace symmid

#endif
