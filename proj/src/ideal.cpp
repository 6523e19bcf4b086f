#include "symmid/ideal.hpp"

#include <algorithm>

#include "symmid/errors.hpp"

namespace symmid {

std::vector<Partition> minimalize(std::vector<Partition> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Partition> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && leq(gens[j], gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

Ideal::Ideal(int n, std::vector<Partition> generators) : n_(n) {
    if (n <= 0) throw DomainError("ideal requires n >= 1");
    for (const Partition& g : generators)
        if (g.length() > static_cast<std::size_t>(n))
            throw DomainError("generator has more parts than the ambient n");
    std::vector<Partition> input = generators;
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());
    gens_ = minimalize(std::move(generators));
    input_was_antichain_ = (gens_ == input);
}

int Ideal::max_first_part() const {
    int w = 0;
    for (const Partition& g : gens_) w = std::max(w, g.first());
    return w;
}

bool Ideal::contains_partition(const Partition& x) const {
    for (const Partition& g : gens_)
        if (leq(g, x)) return true;
    return false;
}

bool Ideal::contains_exponent(const std::vector<int>& u) const {
    if (u.size() != static_cast<std::size_t>(n_))
        throw DomainError("exponent vector length must equal n");
    return contains_partition(sorted_descending(u));
}

bool Ideal::subset_of(const Ideal& other) const {
    if (n_ != other.n_) throw DomainError("ideal comparison requires equal n");
    for (const Partition& g : gens_)
        if (!other.contains_partition(g)) return false;
    return true;
}

Ideal Ideal::sum(const Ideal& other) const {
    if (n_ != other.n_) throw DomainError("ideal sum requires equal n");
    std::vector<Partition> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(n_, std::move(gens));
}

Ideal Ideal::intersect(const Ideal& other) const {
    if (n_ != other.n_) throw DomainError("ideal intersection requires equal n");
    std::vector<Partition> gens;
    for (const Partition& a : gens_)
        for (const Partition& b : other.gens_) {
            Partition s = sup(a, b);
            // sups with more than n parts fall outside P_n and contribute nothing
            if (s.length() <= static_cast<std::size_t>(n_)) gens.push_back(std::move(s));
        }
    return Ideal(n_, std::move(gens));
}

Ideal Ideal::saturate(int p) const {
    if (p < 0 || p > n_) throw DomainError("saturation level must satisfy 0 <= p <= n");
    std::vector<Partition> gens;
    gens.reserve(gens_.size());
    for (const Partition& g : gens_) {
        // keep exactly the columns of height > p
        int c = 0;
        while (g.count_parts_ge(c + 1) > p) ++c;
        gens.push_back(g.truncate_columns(c));
    }
    return Ideal(n_, std::move(gens));
}

Ideal::DimensionData Ideal::small_dimension_data() const {
    if (is_zero() || is_unit())
        throw DomainError("dimension data requires a proper nonzero ideal");
    int p = n_ + 1;
    for (const Partition& g : gens_) p = std::min(p, static_cast<int>(g.length()));
    return DimensionData{p, p - 1, n_ - p + 1};
}

std::vector<long long> Ideal::quotient_hilbert_function(int degree_bound) const {
    if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
    std::vector<long long> hf(static_cast<std::size_t>(degree_bound) + 1, 0);
    for (int t = 0; t <= degree_bound; ++t)
        for (const Partition& lam : partitions_of(t, n_))
            if (!contains_partition(lam)) hf[static_cast<std::size_t>(t)] += orbit_size(lam, n_);
    return hf;
}

Ideal succ_ideal(const Partition& z, int l, int n) {
    if (l < 0 || l >= n) throw DomainError("succ requires 0 <= l <= n-1");
    if (z.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient n");
    std::vector<Partition> gens;
    // minimal partition >= z strictly bigger in row i, for each i > l (1-based)
    for (int i = l + 1; i <= n; ++i) {
        int v = z.nth(static_cast<std::size_t>(i - 1)) + 1;
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            int zj = z.nth(static_cast<std::size_t>(j - 1));
            parts.push_back(j <= i ? std::max(zj, v) : zj);
        }
        gens.push_back(Partition(std::move(parts)));
    }
    return Ideal(n, std::move(gens));
}

YFamily y_family(const Partition& z, int l, int n) {
    if (l < 0 || l >= n) throw DomainError("y_family requires 0 <= l <= n-1");
    if (z.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient n");
    if (z.nth(0) != z.nth(static_cast<std::size_t>(l)))
        throw DomainError("y_family requires z_1 = ... = z_{l+1}");
    std::vector<Partition> rest;
    for (int i = l + 2; i <= n; ++i) {
        int prev = z.nth(static_cast<std::size_t>(i - 2));
        int cur = z.nth(static_cast<std::size_t>(i - 1));
        if (prev > cur)
            rest.push_back(Partition(std::vector<int>(static_cast<std::size_t>(i), cur + 1)));
    }
    std::vector<Partition> all = rest;
    all.push_back(Partition(std::vector<int>(static_cast<std::size_t>(l) + 1, z.first() + 1)));
    return YFamily{Ideal(n, std::move(all)), Ideal(n, std::move(rest))};
}

} // namespace symmid
