#include "symmid/powers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "symmid/errors.hpp"
#include "symmid/ext_invariants.hpp"

namespace symmid {

StaircaseProfile staircase_profile(const Partition& w, int n) {
    if (w.empty()) throw DomainError("staircase profile requires a nonempty partition");
    if (w.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient n");
    Partition conj = w.conjugate();
    StaircaseProfile profile;
    std::size_t i = 0;
    while (i < conj.length()) {
        int h = conj.nth(i);
        std::size_t j = i;
        while (j < conj.length() && conj.nth(j) == h) ++j;
        int a = static_cast<int>(j - i);
        if (h == n)
            profile.a0 = a;
        else
            profile.steps.emplace_back(h, a);
        i = j;
    }
    return profile;
}

int b_const(const Partition& w, int n) {
    StaircaseProfile profile = staircase_profile(w, n);
    int b = 0;
    int prev = n;  // h_0 = n
    for (auto [h, a] : profile.steps) {
        b += (prev - h) * (a - 1);
        prev = h;
    }
    if (!profile.steps.empty()) {
        auto [hk, ak] = profile.steps.back();
        b += (hk - 1) * (ak - 1);
    }
    return b;
}

namespace {

// Shared backtracking engine over weight classes. Bins are processed from the
// last (smallest capacity) upward; failed (bin, remaining-counts) states are
// memoized. Bounds are inclusive weight windows per bin.
struct PackingSearch {
    int d;
    std::vector<long long> values;       // distinct weight values, descending
    std::vector<int> totals;             // balls available per class
    std::vector<long long> lower;        // per-bin weight lower bound
    std::vector<long long> upper;        // per-bin weight upper bound
    std::set<std::pair<int, std::vector<int>>> failed;
    std::vector<std::vector<int>> chosen;  // per bin, counts per class

    bool solve(int bin, std::vector<int>& remaining) {
        if (bin < 0) return true;
        auto key = std::make_pair(bin, remaining);
        if (failed.count(key)) return false;
        if (!min_load_fits(bin, remaining)) {
            failed.insert(std::move(key));
            return false;
        }
        std::vector<int> counts(values.size(), 0);
        if (try_bin(bin, 0, d, 0, counts, remaining)) return true;
        failed.insert(std::move(key));
        return false;
    }

    bool min_load_fits(int bin, const std::vector<int>& remaining) const {
        // the d lightest remaining balls are the cheapest possible load
        long long load = 0;
        int need = d;
        for (std::size_t s = values.size(); s-- > 0 && need > 0;) {
            int take = std::min(need, remaining[s]);
            load += take * values[s];
            need -= take;
        }
        return load <= upper[static_cast<std::size_t>(bin)];
    }

    bool try_bin(int bin, std::size_t cls, int need, long long load, std::vector<int>& counts,
                 std::vector<int>& remaining) {
        if (load > upper[static_cast<std::size_t>(bin)]) return false;
        if (cls == values.size()) {
            if (need != 0 || load < lower[static_cast<std::size_t>(bin)]) return false;
            chosen[static_cast<std::size_t>(bin)] = counts;
            if (solve(bin - 1, remaining)) return true;
            return false;
        }
        int max_take = std::min(need, remaining[cls]);
        for (int k = max_take; k >= 0; --k) {
            counts[cls] = k;
            remaining[cls] -= k;
            if (try_bin(bin, cls + 1, need - k, load + k * values[cls], counts, remaining))
                return true;
            remaining[cls] += k;
            counts[cls] = 0;
        }
        return false;
    }
};

struct ClassData {
    std::vector<long long> values;
    std::vector<int> totals;
    std::vector<std::vector<int>> slots;  // original weight indexes per class
};

ClassData weight_classes(const Partition& w, int n, int d) {
    ClassData data;
    std::vector<int> padded = w.padded(static_cast<std::size_t>(n));
    int i = 0;
    while (i < n) {
        int j = i;
        while (j < n && padded[static_cast<std::size_t>(j)] == padded[static_cast<std::size_t>(i)]) ++j;
        data.values.push_back(padded[static_cast<std::size_t>(i)]);
        data.totals.push_back((j - i) * d);
        std::vector<int> slot;
        for (int t = i; t < j; ++t) slot.push_back(t);
        data.slots.push_back(std::move(slot));
        i = j;
    }
    return data;
}

// Expands per-class counts into the n x n ball-index matrix: within each class
// the balls are spread greedily so that every weight index receives exactly d.
BinAssignment expand_assignment(const std::vector<std::vector<int>>& per_class,
                                const ClassData& classes, int n, int d) {
    BinAssignment out;
    out.counts.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (std::size_t s = 0; s < classes.slots.size(); ++s) {
        std::size_t slot = 0;
        long long filled = 0;
        for (int bin = 0; bin < n; ++bin) {
            int todo = per_class[static_cast<std::size_t>(bin)][s];
            while (todo > 0) {
                long long room = d - filled;
                long long take = std::min<long long>(todo, room);
                out.counts[static_cast<std::size_t>(bin)][static_cast<std::size_t>(classes.slots[s][slot])] += take;
                todo -= static_cast<int>(take);
                filled += take;
                if (filled == d) {
                    ++slot;
                    filled = 0;
                }
            }
        }
    }
    return out;
}

constexpr long long kNoCap = std::numeric_limits<long long>::max() / 4;

} // namespace

FeasibilityResult bp_feasible(const BallPackingProblem& prob) {
    if (prob.n <= 0 || prob.d <= 0) throw DomainError("ball packing requires n >= 1 and d >= 1");
    if (prob.r < 0 || prob.r > prob.n) throw DomainError("feasibility level must satisfy 0 <= r <= n");
    if (prob.weights.length() > static_cast<std::size_t>(prob.n) ||
        prob.capacities.length() > static_cast<std::size_t>(prob.n))
        throw DomainError("weights and capacities must fit in n slots");
    ClassData classes = weight_classes(prob.weights, prob.n, prob.d);
    PackingSearch search;
    search.d = prob.d;
    search.values = classes.values;
    search.totals = classes.totals;
    search.chosen.assign(static_cast<std::size_t>(prob.n), {});
    for (int bin = 0; bin < prob.n; ++bin) {
        search.lower.push_back(0);
        search.upper.push_back(bin < prob.r ? kNoCap
                                            : prob.capacities.nth(static_cast<std::size_t>(bin)));
    }
    std::vector<int> remaining = classes.totals;
    FeasibilityResult result;
    result.feasible = search.solve(prob.n - 1, remaining);
    if (result.feasible)
        result.assignment = expand_assignment(search.chosen, classes, prob.n, prob.d);
    return result;
}

bool bp_exact_fill(int d, const Partition& x, const Partition& w, int n) {
    if (n <= 0 || d <= 0) throw DomainError("ball packing requires n >= 1 and d >= 1");
    if (x.length() > static_cast<std::size_t>(n) || w.length() > static_cast<std::size_t>(n))
        throw DomainError("weights and bin targets must fit in n slots");
    if (x.sum() != d * w.sum()) return false;
    ClassData classes = weight_classes(w, n, d);
    PackingSearch search;
    search.d = d;
    search.values = classes.values;
    search.totals = classes.totals;
    search.chosen.assign(static_cast<std::size_t>(n), {});
    for (int bin = 0; bin < n; ++bin) {
        long long target = x.nth(static_cast<std::size_t>(bin));
        search.lower.push_back(target);
        search.upper.push_back(target);
    }
    std::vector<int> remaining = classes.totals;
    return search.solve(n - 1, remaining);
}

std::vector<Partition> powers_support(const Partition& w, int d, int n) {
    if (w.empty()) throw DomainError("powers_support requires a nonempty partition");
    if (d <= 0) throw DomainError("powers_support requires d >= 1");
    if (w.length() > static_cast<std::size_t>(n))
        throw DomainError("partition has more parts than the ambient n");
    std::vector<std::vector<int>> orb = orbit(w, n);
    std::set<Partition> current = {w};
    for (int step = 2; step <= d; ++step) {
        std::set<Partition> next;
        for (const Partition& x : current) {
            std::vector<int> base = x.padded(static_cast<std::size_t>(n));
            for (const std::vector<int>& u : orb) {
                std::vector<int> sum = base;
                for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(i)];
                next.insert(Partition::sorted(std::move(sum)));
            }
        }
        current = std::move(next);
    }
    std::vector<Partition> out(current.begin(), current.end());
    // audit: every member must be realizable as an exact bin fill
    for (const Partition& x : out)
        if (!bp_exact_fill(d, x, w, n))
            throw TheoremViolation("orbit-sum support member failed the exact-fill audit");
    std::sort(out.begin(), out.end(), std::greater<Partition>());
    return out;
}

int reg_power_exact(const Partition& w, int d, int n) {
    return invariants(Ideal(n, powers_support(w, d, n))).reg;
}

int asymptotic_reg(const Partition& w, int n, int d) {
    if (d <= 0) throw DomainError("asymptotic_reg requires d >= 1");
    return d * w.sum() + b_const(w, n);
}

namespace {

// e^x * (e_k / e_t) as a partition; t, k are 1-based positions in the sorted
// exponent vector.
Partition move_box(const Partition& x, int t, int k, int n) {
    std::vector<int> v = x.padded(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(t - 1)] -= 1;
    v[static_cast<std::size_t>(k - 1)] += 1;
    return Partition::sorted(std::move(v));
}

} // namespace

bool is_symmetric_shifted(const Ideal& x) {
    if (x.is_unit() || x.is_zero()) return true;
    int n = x.n();
    for (const Partition& g : x.generators())
        for (int k = 2; k <= n; ++k) {
            // moves within the same orbit are automatic; only drops >= 2 matter
            if (g.first() - g.nth(static_cast<std::size_t>(k - 1)) < 2) continue;
            if (!x.contains_partition(move_box(g, 1, k, n))) return false;
        }
    return true;
}

bool is_symmetric_strongly_shifted(const Ideal& x) {
    if (x.is_unit() || x.is_zero()) return true;
    int n = x.n();
    int max_degree = 0;
    for (const Partition& g : x.generators()) max_degree = std::max(max_degree, g.sum());
    // membership of the moved monomial is degree preserving, so monomials up
    // to the maximal generator degree decide the property
    for (int s = 1; s <= max_degree; ++s)
        for (const Partition& m : partitions_of(s, n)) {
            if (!x.contains_partition(m)) continue;
            for (int t = 1; t < n; ++t)
                for (int k = t + 1; k <= n; ++k) {
                    if (m.nth(static_cast<std::size_t>(t - 1)) <= m.nth(static_cast<std::size_t>(k - 1)))
                        continue;
                    if (!x.contains_partition(move_box(m, t, k, n))) return false;
                }
        }
    return true;
}

bool has_linear_resolution(const Ideal& x) {
    if (x.is_unit()) throw DomainError("linear resolution test requires a proper ideal");
    if (x.is_zero()) return false;
    int r = x.generators().front().sum();
    for (const Partition& g : x.generators())
        if (g.sum() != r) return false;
    return invariants(x).reg == r;
}

} // namespace symmid
