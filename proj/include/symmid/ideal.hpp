#ifndef SYMMID_IDEAL_HPP
#define SYMMID_IDEAL_HPP

#include <vector>

#include "symmid/partition.hpp"

namespace symmid {

// Keeps the minimal elements of a set of partitions under the componentwise
// order; the result is a sorted antichain generating the same ideal.
std::vector<Partition> minimalize(std::vector<Partition> gens);

// A symmetric monomial ideal in n variables, described by the canonical
// antichain of partitions whose orbits generate it. The zero ideal has no
// generators; the unit ideal is generated by the empty partition.
class Ideal {
public:
    Ideal(int n, std::vector<Partition> generators);
    static Ideal zero(int n) { return Ideal(n, {}); }
    static Ideal unit(int n) { return Ideal(n, {Partition{}}); }

    int n() const { return n_; }
    const std::vector<Partition>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
    // False when the constructor had to remove redundant generators; loaders
    // surface this as a warning.
    bool input_was_antichain() const { return input_was_antichain_; }
    int max_first_part() const;  // W = max x_1 over generators, 0 for the zero ideal

    bool contains_partition(const Partition& x) const;        // e^x in I
    bool contains_exponent(const std::vector<int>& u) const;  // u nonnegative, length n
    bool subset_of(const Ideal& other) const;

    Ideal sum(const Ideal& other) const;
    Ideal intersect(const Ideal& other) const;
    Ideal saturate(int p) const;  // I : I_p^infinity, by stripping columns of height <= p

    struct DimensionData {
        int p;      // minimal number of parts over the generators
        int dim;    // dim(S/I) = p - 1
        int codim;  // n - p + 1
    };
    DimensionData small_dimension_data() const;

    // Hilbert function of S/I in total degrees 0..degree_bound.
    std::vector<long long> quotient_hilbert_function(int degree_bound) const;

    bool operator==(const Ideal& other) const {
        return n_ == other.n_ && gens_ == other.gens_;
    }

private:
    int n_ = 0;
    std::vector<Partition> gens_;
    bool input_was_antichain_ = true;
};

// The ideal generated by succ(z,l): partitions obtained from z by growing it
// in row l+1 or below.
Ideal succ_ideal(const Partition& z, int l, int n);

// The rectangle families attached to a pair (z,l) with z_1 = ... = z_{l+1};
// yprime omits the leading (l+1) x (z_1+1) rectangle.
struct YFamily {
    Ideal y;
    Ideal yprime;
};
YFamily y_family(const Partition& z, int l, int n);

} // namespace symmid

#endif
