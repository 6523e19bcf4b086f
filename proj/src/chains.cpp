#include "symmid/chains.hpp"

#include <algorithm>

#include "symmid/errors.hpp"
#include "symmid/ext_invariants.hpp"

namespace symmid {

Ideal truncate_to_n(const std::vector<Partition>& x, int n) {
    if (n <= 0) throw DomainError("truncate_to_n requires n >= 1");
    std::vector<Partition> gens;
    for (const Partition& p : x)
        if (p.length() <= static_cast<std::size_t>(n)) gens.push_back(p);
    return Ideal(n, std::move(gens));
}

ChainProfile chain_profile(const std::vector<Partition>& x) {
    if (x.empty()) throw DomainError("chain profile requires a nonempty set");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].empty()) throw DomainError("chain generators must be nonempty partitions");
        for (std::size_t j = 0; j < x.size(); ++j)
            if (i != j && leq(x[i], x[j]))
                throw DomainError("chain profile requires pairwise incomparable partitions");
    }
    ChainProfile profile;
    profile.x = x;
    std::sort(profile.x.begin(), profile.x.end());
    profile.m = 0;
    profile.w = x.front().first();
    profile.big_w = 0;
    for (const Partition& p : x) {
        profile.m = std::max(profile.m, static_cast<int>(p.length()));
        profile.w = std::min(profile.w, p.first());
        profile.big_w = std::max(profile.big_w, p.first());
    }
    std::vector<Partition> stripped;
    for (const Partition& p : x) stripped.push_back(p.strip_columns(profile.w - 1));
    profile.y = minimalize(std::move(stripped));
    // C is evaluated at n = m and audited for constancy on a small window
    profile.c = invariants(truncate_to_n(profile.y, profile.m)).reg;
    for (int n = profile.m + 1; n <= profile.m + 3; ++n)
        if (invariants(truncate_to_n(profile.y, n)).reg != profile.c)
            throw TheoremViolation("stabilized chain constant is not constant near n = m");
    profile.threshold =
        std::max(profile.m, (profile.m - 1) * (profile.big_w - profile.w + 2) - profile.c);
    return profile;
}

ChainReg reg_chain(const ChainProfile& profile, int n, bool verify) {
    if (n < profile.m)
        throw DomainError("reg_chain requires n >= m; below m the chain ideal degenerates");
    if (n >= profile.threshold) {
        ChainReg out{(profile.w - 1) * n + profile.c, true};
        if (verify) {
            int exact = invariants(truncate_to_n(profile.x, n)).reg;
            if (exact != out.value)
                throw TheoremViolation("chain formula disagrees with exact regularity");
        }
        return out;
    }
    return ChainReg{invariants(truncate_to_n(profile.x, n)).reg, false};
}

} // namespace symmid
