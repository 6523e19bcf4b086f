#ifndef SYMMID_EXT_INVARIANTS_HPP
#define SYMMID_EXT_INVARIANTS_HPP

#include <map>
#include <utility>
#include <vector>

#include "symmid/ideal.hpp"
#include "symmid/zset.hpp"

namespace symmid {

// A multigraded character truncated by total degree: the recorded terms are
// complete for every total degree in [lo, hi]. The Ext modules here are
// infinite dimensional, so every character carries its completeness window
// and consumers must not read beyond it.
class MultigradedCharacter {
public:
    MultigradedCharacter(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {}

    int n() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    long long multiplicity(const std::vector<int>& deg) const;

    void add(const std::vector<int>& deg, long long mult);

    // Accumulates another character; the completeness window shrinks to the
    // degrees where both summands are complete, and terms above it are dropped.
    void merge(const MultigradedCharacter& other);

private:
    int n_;
    int lo_;
    int hi_;
    std::map<std::vector<int>, long long> terms_;
};

struct InvariantReport {
    int reg = 0;   // regularity of the ideal (quotient value is reg - 1)
    int pdim = 0;  // projective dimension of the ideal (quotient value is pdim + 1)
    int depth = 0; // depth of the quotient, n - pdim - 1
    std::vector<ZPair> reg_witnesses;
    std::vector<ZPair> pdim_witnesses;
};

// Regularity and projective dimension of I_X as maxima over z_set(X).
InvariantReport invariants(const Ideal& x);

// (regularity, projective dimension) of the subquotient attached to (z,l).
std::pair<int, int> jzl_invariants(const Partition& z, int l, int n);

// Character of Ext^{n-l}(S/I_{l+1}, S), complete for source degrees |t| <= vbound.
MultigradedCharacter ext_character_Ip(int l, int n, int vbound);

// Character of Ext^{n-l}(J_{z,l}, S) for z_1 = ... = z_p > z_{p+1}, p >= l+1.
MultigradedCharacter ext_character_Jzl(const Partition& z, int l, int n, int vbound);

// Character of Ext^j(S/I_X, S): the sum over pairs in z_set(X) with n-l = j.
MultigradedCharacter ext_character_quotient(const Ideal& x, int j, int vbound);

// For I_X inside I_Y, splits the map Ext^j(S/I_Y,S) -> Ext^j(S/I_X,S) into the
// pairs carrying its kernel, image and cokernel.
struct ExtMapDecomposition {
    std::vector<ZPair> ker;    // Z(Y) \ Z(X)
    std::vector<ZPair> im;     // Z(Y) intersect Z(X)
    std::vector<ZPair> coker;  // Z(X) \ Z(Y)
};
ExtMapDecomposition ext_map_decomposition(const Ideal& x, const Ideal& y, int j);

struct CohenMacaulayReport {
    bool cohen_macaulay = false;
    bool equal_first_parts = false;  // every generator has x_1 = ... = x_p
    bool uniform_level = false;      // every pair in Z(X) has l = dim(S/I)
    bool unmixed = false;            // saturate(p-1) leaves the ideal unchanged
    int p = 0;
    int dim = 0;
    std::vector<int> levels;  // distinct l values observed in Z(X)
};

// Evaluates the two combinatorial Cohen-Macaulay conditions independently and
// requires them to agree; disagreement is a TheoremViolation.
CohenMacaulayReport is_cohen_macaulay(const Ideal& x);

// The saturation chain [X^{:0}, X^{:1}, ..., X^{:p}], ending at the unit ideal.
std::vector<Ideal> sequentially_cm_filtration(const Ideal& x);

// Hilbert function of the subquotient attached to (z,l) in degrees 0..bound.
std::vector<long long> hilbert_function_Jzl(const Partition& z, int l, int n, int degree_bound);

} // namespace symmid

#endif
