#ifndef SYMMID_CHAINS_HPP
#define SYMMID_CHAINS_HPP

#include <vector>

#include "symmid/ideal.hpp"
#include "symmid/partition.hpp"

namespace symmid {

// Restriction of a partition set to ambient dimension n: keeps the partitions
// with at most n parts. May be the zero ideal.
Ideal truncate_to_n(const std::vector<Partition>& x, int n);

// Constants controlling the regularity of the family n -> I_{X_n}.
struct ChainProfile {
    std::vector<Partition> x;  // pairwise incomparable defining set
    int m = 0;                 // maximal number of parts
    int w = 0;                 // minimal first part
    int big_w = 0;             // maximal first part
    std::vector<Partition> y;  // minimalized set of column-stripped partitions
    int c = 0;                 // stabilized regularity of I_{Y_n}
    int threshold = 0;         // max(m, (m-1)(W-w+2) - C)
};

// Computes the profile; the constancy of C is audited on a window of ambient
// dimensions and a violation is a TheoremViolation.
ChainProfile chain_profile(const std::vector<Partition>& x);

struct ChainReg {
    int value = 0;
    bool formula = false;  // true when produced by (w-1)n + C rather than exact search
};

// Regularity of I_{X_n} for n >= m: the linear formula above the threshold,
// exact evaluation below it. With verify set, formula values are re-derived
// exactly and compared.
ChainReg reg_chain(const ChainProfile& profile, int n, bool verify = false);

} // namespace symmid

#endif
