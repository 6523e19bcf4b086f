#ifndef SYMMID_BETTI_HPP
#define SYMMID_BETTI_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "symmid/ideal.hpp"

namespace symmid {

// An explicit (not necessarily symmetric) monomial ideal: exponent vectors of
// the minimal generators.
struct MonomialIdeal {
    int n = 0;
    std::vector<std::vector<int>> gens;  // minimal under divisibility, sorted
};

// Expands the generator orbits of a symmetric ideal into explicit monomials.
MonomialIdeal expand_orbits(const Ideal& x);

MonomialIdeal make_monomial_ideal(int n, std::vector<std::vector<int>> gens);

// Graded Betti numbers of the ideal over GF(p), computed from the reduced
// simplicial homology of the upper Koszul complexes at the lcm-lattice
// multidegrees. entries holds the usual table layout: (column i, row j) with
// j = degree - i.
struct BettiTable {
    int field_char = 2;
    std::map<std::pair<int, int>, long long> entries;
    std::map<std::pair<int, std::vector<int>>, long long> multigraded;

    int reg() const;   // max row index
    int pdim() const;  // max column index
    long long entry(int i, int j) const;
    long long multigraded_entry(int i, const std::vector<int>& b) const;
};

inline constexpr std::size_t kDefaultLatticeCap = std::size_t(1) << 20;

BettiTable betti_numbers(const MonomialIdeal& ideal, int field_char = 2,
                         std::size_t lattice_cap = kDefaultLatticeCap);

std::pair<int, int> oracle_invariants(const MonomialIdeal& ideal, int field_char = 2);

} // namespace symmid

#endif
