#ifndef SYMMID_ZSET_HPP
#define SYMMID_ZSET_HPP

#include <vector>

#include "symmid/ideal.hpp"
#include "symmid/partition.hpp"

namespace symmid {

// A pair (z, l) indexing one building block of the quotient by a symmetric
// ideal; c = z_1 is the width of z. Members of z_set satisfy z_1 = ... = z_{l+1}.
struct ZPair {
    Partition z;
    int l = 0;

    int c() const { return z.first(); }
    bool operator==(const ZPair&) const = default;
    auto operator<=>(const ZPair&) const = default;
};

// Membership test straight from the two defining conditions, with c = z_1:
// (1) some generator x has x(c) <= z and x'_{c+1} <= l+1;
// (2) every such generator has x'_{c+1} = l+1.
bool zpair_member(const ZPair& pair, const Ideal& x);

// The full set Z(X), ordered by (c, l, z). X must not be the unit ideal.
std::vector<ZPair> z_set(const Ideal& x);

// Direct construction for a single-orbit ideal; agrees with z_set({x}).
std::vector<ZPair> z_set_singleton(const Partition& x, int n);

// Membership via the ideal-lattice characterization: I_X lies inside the
// rectangle family of (z,l) but not inside the reduced family. Requires
// z_1 = ... = z_{l+1}; agrees with zpair_member on that domain.
bool zpair_member_via_lattice(const ZPair& pair, const Ideal& x);

// True when the subquotient attached to (z,l) embeds equivariantly into the
// quotient by I_X: the rectangle family contains I_X and I_X contains succ(z,l).
bool admits_socle_embedding(const Partition& z, int l, const Ideal& x);

// Debug enumeration that drops the z_1 = ... = z_{l+1} candidate restriction;
// must return the same set as z_set.
std::vector<ZPair> z_set_unrestricted(const Ideal& x);

} // namespace symmid

#endif
