#include "symmid/zset.hpp"

#include <algorithm>

#include "symmid/errors.hpp"

namespace symmid {

namespace {

bool satisfies_window(const Partition& x, const Partition& z, int c, int l) {
    return leq(x.truncate_columns(c), z) && x.count_parts_ge(c + 1) <= l + 1;
}

// deterministic output order: (c, l, z)
void sort_pairs(std::vector<ZPair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const ZPair& a, const ZPair& b) {
        if (a.c() != b.c()) return a.c() < b.c();
        if (a.l != b.l) return a.l < b.l;
        return a.z < b.z;
    });
}

void check_level(int l, int n) {
    if (l < 0 || l >= n) throw DomainError("pair level must satisfy 0 <= l <= n-1");
}

} // namespace

bool zpair_member(const ZPair& pair, const Ideal& x) {
    check_level(pair.l, x.n());
    if (pair.z.length() > static_cast<std::size_t>(x.n()))
        throw DomainError("pair partition has more parts than the ambient n");
    int c = pair.c();
    bool found = false;
    for (const Partition& g : x.generators()) {
        if (!satisfies_window(g, pair.z, c, pair.l)) continue;
        if (g.count_parts_ge(c + 1) != pair.l + 1) return false;
        found = true;
    }
    return found;
}

std::vector<ZPair> z_set(const Ideal& x) {
    if (x.is_unit()) throw DomainError("z_set is undefined for the unit ideal");
    std::vector<ZPair> out;
    // Condition (2) forces x'_{c+1} = l+1 >= 1 for some generator, so x_1 >= c+1
    // and the widths c are bounded by W-1; a test asserts that widening this
    // bound adds no members.
    int w = x.max_first_part();
    for (int c = 0; c < w; ++c)
        for (int l = 0; l < x.n(); ++l)
            for (const Partition& z : enumerate_box_partitions(c, x.n(), l + 1)) {
                if (z.first() != c) continue;
                ZPair pair{z, l};
                if (zpair_member(pair, x)) out.push_back(std::move(pair));
            }
    sort_pairs(out);
    return out;
}

std::vector<ZPair> z_set_singleton(const Partition& x, int n) {
    if (x.empty()) throw DomainError("z_set_singleton requires a nonempty partition");
    if (x.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient n");
    std::vector<ZPair> out;
    for (int c = 0; c < x.first(); ++c) {
        int l = x.count_parts_ge(c + 1) - 1;
        Partition xc = x.truncate_columns(c);
        for (const Partition& z : enumerate_box_partitions(c, n, c > 0 ? 1 : 0)) {
            if (z.first() != c) continue;
            if (leq(xc, z)) out.push_back(ZPair{z, l});
        }
    }
    sort_pairs(out);
    return out;
}

bool zpair_member_via_lattice(const ZPair& pair, const Ideal& x) {
    check_level(pair.l, x.n());
    YFamily fam = y_family(pair.z, pair.l, x.n());
    if (!x.subset_of(fam.y)) return false;
    // Generators that fit under z while exceeding the (l+1)-fold rectangle
    // exist only when z_{l+2} = z_1; they witness neither membership
    // condition, so the reduced family gains the (l+2)-fold rectangle.
    Ideal reduced = fam.yprime;
    int c = pair.c();
    if (pair.l + 2 <= x.n() && pair.z.nth(static_cast<std::size_t>(pair.l) + 1) == c)
        reduced = reduced.sum(
            Ideal(x.n(), {Partition(std::vector<int>(static_cast<std::size_t>(pair.l) + 2, c + 1))}));
    return !x.subset_of(reduced);
}

bool admits_socle_embedding(const Partition& z, int l, const Ideal& x) {
    check_level(l, x.n());
    YFamily fam = y_family(z, l, x.n());
    return x.subset_of(fam.y) && succ_ideal(z, l, x.n()).subset_of(x);
}

std::vector<ZPair> z_set_unrestricted(const Ideal& x) {
    if (x.is_unit()) throw DomainError("z_set is undefined for the unit ideal");
    std::vector<ZPair> out;
    int w = x.max_first_part();
    for (int c = 0; c < w; ++c)
        for (int l = 0; l < x.n(); ++l)
            for (const Partition& z : enumerate_box_partitions(c, x.n(), c > 0 ? 1 : 0)) {
                if (z.first() != c) continue;
                ZPair pair{z, l};
                if (zpair_member(pair, x)) out.push_back(std::move(pair));
            }
    sort_pairs(out);
    return out;
}

} // namespace symmid
