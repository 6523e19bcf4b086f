#include "symmid/partition.hpp"

#include <algorithm>
#include <numeric>

#include "symmid/errors.hpp"

namespace symmid {

namespace {

void strip_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    strip_trailing_zeros(parts_);
}

Partition Partition::sorted(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    return Partition(std::move(values));
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::count_parts_ge(int v) const {
    if (v <= 0) throw DomainError("count_parts_ge expects v >= 1");
    int count = 0;
    for (int p : parts_) {
        if (p >= v)
            ++count;
        else
            break;
    }
    return count;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(static_cast<std::size_t>(first()));
    for (int v = 1; v <= first(); ++v) conj.push_back(count_parts_ge(v));
    return Partition(std::move(conj));
}

Partition Partition::truncate_columns(int c) const {
    if (c < 0) throw DomainError("truncate_columns expects c >= 0");
    std::vector<int> out;
    out.reserve(parts_.size());
    for (int p : parts_) out.push_back(std::min(p, c));
    return Partition(std::move(out));
}

Partition Partition::strip_columns(int r) const {
    if (r < 0) throw DomainError("strip_columns expects r >= 0");
    std::vector<int> out;
    out.reserve(parts_.size());
    for (int p : parts_) out.push_back(std::max(p - r, 0));
    return Partition(std::move(out));
}

std::vector<int> Partition::padded(std::size_t n) const {
    std::vector<int> out = parts_;
    if (out.size() > n) throw DomainError("partition has more parts than the ambient length");
    out.resize(n, 0);
    return out;
}

bool leq(const Partition& x, const Partition& y) {
    std::size_t len = std::max(x.length(), y.length());
    for (std::size_t i = 0; i < len; ++i)
        if (x.nth(i) > y.nth(i)) return false;
    return true;
}

Partition sup(const Partition& x, const Partition& y) {
    std::size_t len = std::max(x.length(), y.length());
    std::vector<int> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = std::max(x.nth(i), y.nth(i));
    return Partition(std::move(out));
}

bool dominance_leq(const Partition& x, const Partition& y) {
    std::size_t len = std::max(x.length(), y.length());
    long long px = 0, py = 0;
    for (std::size_t i = 0; i < len; ++i) {
        px += x.nth(i);
        py += y.nth(i);
        if (px > py) return false;
    }
    return true;
}

std::vector<std::vector<int>> orbit(const Partition& x, int n) {
    if (n <= 0) throw DomainError("orbit expects n >= 1");
    if (x.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient length");
    std::vector<int> v = x.padded(static_cast<std::size_t>(n));
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

long long orbit_size(const Partition& x, int n) {
    if (n <= 0) throw DomainError("orbit_size expects n >= 1");
    if (x.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient length");
    // n! / prod(multiplicity!) computed as a product of binomials
    long long result = 1;
    long long remaining = n;
    std::size_t i = 0;
    while (i < x.length()) {
        std::size_t j = i;
        while (j < x.length() && x.nth(j) == x.nth(i)) ++j;
        result *= binomial(remaining, static_cast<long long>(j - i));
        remaining -= static_cast<long long>(j - i);
        i = j;
    }
    // the zero parts fill the rest: binomial(remaining, remaining) == 1
    return result;
}

namespace {

void enumerate_box_rec(std::vector<int>& prefix, int max_part, int max_len,
                       std::vector<Partition>& out) {
    int bound = prefix.empty() ? max_part : std::min(max_part, prefix.back());
    if (static_cast<int>(prefix.size()) < max_len) {
        for (int v = bound; v >= 1; --v) {
            prefix.push_back(v);
            enumerate_box_rec(prefix, max_part, max_len, out);
            prefix.pop_back();
        }
    }
    out.push_back(Partition(prefix));
}

} // namespace

std::vector<Partition> enumerate_box_partitions(int max_part, int max_len, int forced_prefix) {
    if (max_part < 0 || max_len < 0 || forced_prefix < 0)
        throw DomainError("enumerate_box_partitions expects nonnegative arguments");
    if (forced_prefix > max_len)
        throw DomainError("forced_prefix exceeds max_len");
    std::vector<int> prefix(static_cast<std::size_t>(max_part > 0 ? forced_prefix : 0), max_part);
    std::vector<Partition> out;
    enumerate_box_rec(prefix, max_part, max_len, out);
    return out;
}

namespace {

void partitions_of_rec(int remaining, int max_part, int max_len, std::vector<int>& prefix,
                       std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    if (max_len == 0) return;
    for (int v = std::min(max_part, remaining); v >= 1; --v) {
        prefix.push_back(v);
        partitions_of_rec(remaining - v, v, max_len - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int s, int max_len) {
    if (s < 0 || max_len < 0) throw DomainError("partitions_of expects nonnegative arguments");
    std::vector<int> prefix;
    std::vector<Partition> out;
    partitions_of_rec(s, s, max_len, prefix, out);
    return out;
}

Partition sorted_descending(const std::vector<int>& exponents) {
    for (int e : exponents)
        if (e < 0) throw DomainError("exponent vector entries must be nonnegative");
    return Partition::sorted(exponents);
}

long long binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long result = 1;
    for (long long i = 1; i <= b; ++i) result = result * (a - b + i) / i;
    return result;
}

} // namespace symmid
