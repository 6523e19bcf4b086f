#include "symmid/ext_invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "symmid/errors.hpp"

namespace symmid {

namespace {

int total_degree(const std::vector<int>& deg) {
    return std::accumulate(deg.begin(), deg.end(), 0);
}

// Number of rows of maximal parts: z_1 = ... = z_p > z_{p+1}, with p = n for
// the empty partition.
int top_block(const Partition& z, int n) {
    if (z.empty()) return n;
    return z.count_parts_ge(z.first());
}

void append_compositions(const std::vector<int>& support, int budget,
                         const std::vector<int>& base, long long mult,
                         MultigradedCharacter& out) {
    // distribute up to `budget` across `support` with every chosen entry >= 1
    std::vector<int> deg = base;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx == support.size()) {
            out.add(deg, mult);
            return;
        }
        int slots_after = static_cast<int>(support.size() - idx - 1);
        for (int v = 1; v + slots_after <= remaining; ++v) {
            deg[static_cast<std::size_t>(support[idx])] += v;
            self(self, idx + 1, remaining - v);
            deg[static_cast<std::size_t>(support[idx])] -= v;
        }
    };
    rec(rec, 0, budget);
}

void for_each_subset(int size, const std::vector<int>& ground,
                     const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(subset.size()) == size) {
            fn(subset);
            return;
        }
        for (std::size_t i = start; i < ground.size(); ++i) {
            subset.push_back(ground[i]);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

long long MultigradedCharacter::multiplicity(const std::vector<int>& deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? 0 : it->second;
}

void MultigradedCharacter::add(const std::vector<int>& deg, long long mult) {
    if (deg.size() != static_cast<std::size_t>(n_))
        throw DomainError("character degree length must equal n");
    if (mult <= 0) throw DomainError("character multiplicities must be positive");
    int t = total_degree(deg);
    if (t < lo_ || t > hi_)
        throw TheoremViolation("character term outside its completeness window");
    terms_[deg] += mult;
}

void MultigradedCharacter::merge(const MultigradedCharacter& other) {
    if (n_ != other.n_) throw DomainError("character merge requires equal n");
    lo_ = std::min(lo_, other.lo_);
    hi_ = std::min(hi_, other.hi_);
    for (const auto& [deg, mult] : other.terms_)
        if (total_degree(deg) <= hi_) terms_[deg] += mult;
    std::erase_if(terms_, [this](const auto& kv) { return total_degree(kv.first) > hi_; });
}

InvariantReport invariants(const Ideal& x) {
    if (x.is_unit() || x.is_zero())
        throw DomainError("invariants require a proper nonzero ideal");
    std::vector<ZPair> zs = z_set(x);
    if (zs.empty()) throw TheoremViolation("empty z-set for a proper nonzero ideal");
    InvariantReport report;
    report.reg = 0;
    report.pdim = 0;
    for (const ZPair& p : zs) {
        report.reg = std::max(report.reg, p.z.sum() + p.l + 1);
        report.pdim = std::max(report.pdim, x.n() - 1 - p.l);
    }
    for (const ZPair& p : zs) {
        if (p.z.sum() + p.l + 1 == report.reg) report.reg_witnesses.push_back(p);
        if (x.n() - 1 - p.l == report.pdim) report.pdim_witnesses.push_back(p);
    }
    report.depth = x.n() - report.pdim - 1;
    return report;
}

std::pair<int, int> jzl_invariants(const Partition& z, int l, int n) {
    if (l < 0 || l >= n) throw DomainError("level must satisfy 0 <= l <= n-1");
    if (z.nth(0) != z.nth(static_cast<std::size_t>(l)))
        throw DomainError("jzl_invariants requires z_1 = ... = z_{l+1}");
    return {z.sum() + l, n - l};
}

MultigradedCharacter ext_character_Ip(int l, int n, int vbound) {
    if (l < 0 || l >= n) throw DomainError("level must satisfy 0 <= l <= n-1");
    if (vbound < 0) throw DomainError("vbound must be nonnegative");
    MultigradedCharacter out(n, -n, vbound - n);
    std::vector<int> ground(static_cast<std::size_t>(n));
    std::iota(ground.begin(), ground.end(), 0);
    std::vector<int> base(static_cast<std::size_t>(n), -1);
    for (int s = 0; s <= std::min(l, vbound); ++s) {
        long long mult = binomial(n - 1 - s, l - s);
        if (mult == 0) continue;
        for_each_subset(s, ground, [&](const std::vector<int>& support) {
            append_compositions(support, vbound, base, mult, out);
        });
    }
    return out;
}

MultigradedCharacter ext_character_Jzl(const Partition& z, int l, int n, int vbound) {
    if (l < 0 || l >= n) throw DomainError("level must satisfy 0 <= l <= n-1");
    if (vbound < 0) throw DomainError("vbound must be nonnegative");
    if (z.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient n");
    int p = top_block(z, n);
    if (p < l + 1) throw DomainError("ext_character_Jzl requires z_1 = ... = z_{l+1}");
    int c = z.first();
    MultigradedCharacter out(n, -(z.sum() + n), vbound - z.sum() - n);
    for (const std::vector<int>& u : orbit(z, n)) {
        std::vector<int> lambda;
        for (int j = 0; j < n; ++j)
            if (u[static_cast<std::size_t>(j)] == c) lambda.push_back(j);
        std::vector<int> base(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) base[static_cast<std::size_t>(j)] = -u[static_cast<std::size_t>(j)] - 1;
        for (int s = 0; s <= std::min(l, vbound); ++s) {
            long long mult = binomial(p - 1 - s, l - s);
            if (mult == 0) continue;
            for_each_subset(s, lambda, [&](const std::vector<int>& support) {
                append_compositions(support, vbound, base, mult, out);
            });
        }
    }
    return out;
}

MultigradedCharacter ext_character_quotient(const Ideal& x, int j, int vbound) {
    if (x.is_unit()) throw DomainError("ext character is undefined for the unit ideal");
    if (vbound < 0) throw DomainError("vbound must be nonnegative");
    std::vector<MultigradedCharacter> parts;
    for (const ZPair& pair : z_set(x))
        if (x.n() - pair.l == j)
            parts.push_back(ext_character_Jzl(pair.z, pair.l, x.n(), vbound));
    if (parts.empty()) {
        // Ext^j vanishes identically; the window is nominal.
        return MultigradedCharacter(x.n(), -x.n(), vbound - x.n());
    }
    MultigradedCharacter out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out.merge(parts[i]);
    return out;
}

ExtMapDecomposition ext_map_decomposition(const Ideal& x, const Ideal& y, int j) {
    if (!x.subset_of(y)) throw DomainError("ext_map_decomposition requires I_X inside I_Y");
    std::vector<ZPair> zx = x.is_unit() ? std::vector<ZPair>{} : z_set(x);
    std::vector<ZPair> zy = y.is_unit() ? std::vector<ZPair>{} : z_set(y);
    auto level_match = [&](const ZPair& p) { return x.n() - p.l == j; };
    auto contains = [](const std::vector<ZPair>& v, const ZPair& p) {
        return std::find(v.begin(), v.end(), p) != v.end();
    };
    ExtMapDecomposition out;
    for (const ZPair& p : zy) {
        if (!level_match(p)) continue;
        (contains(zx, p) ? out.im : out.ker).push_back(p);
    }
    for (const ZPair& p : zx)
        if (level_match(p) && !contains(zy, p)) out.coker.push_back(p);
    return out;
}

CohenMacaulayReport is_cohen_macaulay(const Ideal& x) {
    if (x.is_unit() || x.is_zero())
        throw DomainError("cohen_macaulay test requires a proper nonzero ideal");
    CohenMacaulayReport report;
    Ideal::DimensionData dd = x.small_dimension_data();
    report.p = dd.p;
    report.dim = dd.dim;
    report.equal_first_parts = true;
    for (const Partition& g : x.generators())
        if (g.nth(0) != g.nth(static_cast<std::size_t>(dd.p - 1))) report.equal_first_parts = false;
    report.uniform_level = true;
    for (const ZPair& pair : z_set(x)) {
        if (std::find(report.levels.begin(), report.levels.end(), pair.l) == report.levels.end())
            report.levels.push_back(pair.l);
        if (pair.l != dd.dim) report.uniform_level = false;
    }
    std::sort(report.levels.begin(), report.levels.end());
    if (report.equal_first_parts != report.uniform_level)
        throw TheoremViolation("cohen-macaulay conditions disagree");
    report.cohen_macaulay = report.equal_first_parts;
    report.unmixed = (x.saturate(dd.p - 1) == x);
    return report;
}

std::vector<Ideal> sequentially_cm_filtration(const Ideal& x) {
    if (x.is_unit() || x.is_zero())
        throw DomainError("filtration requires a proper nonzero ideal");
    int p = x.small_dimension_data().p;
    std::vector<Ideal> chain;
    chain.reserve(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i <= p; ++i) chain.push_back(x.saturate(i));
    return chain;
}

std::vector<long long> hilbert_function_Jzl(const Partition& z, int l, int n, int degree_bound) {
    if (l < 0 || l >= n) throw DomainError("level must satisfy 0 <= l <= n-1");
    if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
    int p = top_block(z, n);
    if (l >= p) throw DomainError("hilbert_function_Jzl requires l < p");
    long long orbits = orbit_size(z, n);
    int shift = z.sum();
    std::vector<long long> hf(static_cast<std::size_t>(degree_bound) + 1, 0);
    for (int t = shift; t <= degree_bound; ++t) {
        int s = t - shift;
        // monomials on p variables supported on at most l of them
        long long count = 0;
        if (s == 0) {
            count = 1;
        } else {
            for (int j = 1; j <= std::min(l, p); ++j)
                count += binomial(p, j) * binomial(s - 1, j - 1);
        }
        hf[static_cast<std::size_t>(t)] = orbits * count;
    }
    return hf;
}

} // namespace symmid
