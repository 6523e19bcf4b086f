#ifndef SYMMID_POWERS_HPP
#define SYMMID_POWERS_HPP

#include <utility>
#include <vector>

#include "symmid/ideal.hpp"
#include "symmid/partition.hpp"

namespace symmid {

// The conjugate of w written as (n^{a0}, h_1^{a1}, ..., h_k^{ak}) with
// n > h_1 > ... > h_k > 0.
struct StaircaseProfile {
    int a0 = 0;
    std::vector<std::pair<int, int>> steps;  // (h_t, a_t)
};
StaircaseProfile staircase_profile(const Partition& w, int n);

// Constant term of the eventual linear function for the regularity of powers.
int b_const(const Partition& w, int n);

// Ball-packing feasibility: d*n balls, d of each weight w_i, into n bins of
// exactly d balls each; bins r+1..n are capped by the capacities, the first r
// are unconstrained.
struct BallPackingProblem {
    int n = 0;
    int d = 0;
    Partition capacities;
    Partition weights;
    int r = 0;
};

// counts[i][j] = number of balls of weight w_{j+1} placed in bin i+1; every
// row and every column sums to d.
struct BinAssignment {
    std::vector<std::vector<long long>> counts;
};

struct FeasibilityResult {
    bool feasible = false;
    BinAssignment assignment;  // valid only when feasible
};

FeasibilityResult bp_feasible(const BallPackingProblem& prob);

// Exact-fill variant: is there an assignment whose bin weights equal x exactly?
bool bp_exact_fill(int d, const Partition& x, const Partition& w, int n);

// All dominant sums of d elements of the orbit of w, computed by iterated
// orbit sums and audited member-by-member against the exact-fill encoding.
std::vector<Partition> powers_support(const Partition& w, int d, int n);

int reg_power_exact(const Partition& w, int d, int n);

// d*|w| + b(w); guaranteed to equal the exact value only for large d.
int asymptotic_reg(const Partition& w, int n, int d);

bool is_symmetric_shifted(const Ideal& x);
bool is_symmetric_strongly_shifted(const Ideal& x);

// Single generating degree r and regularity exactly r.
bool has_linear_resolution(const Ideal& x);

} // namespace symmid

#endif
