#include "symmid/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "symmid/errors.hpp"

namespace symmid {

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void check_field(int p) {
    if (p == 0)
        throw DomainError("characteristic 0 is not supported; pick a prime field");
    if (!is_prime(p)) throw DomainError("field characteristic must be prime");
}

long long mod_pow(long long base, long long exp, long long p) {
    long long out = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) out = out * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return out;
}

std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t words = rows.front().size();
    for (std::size_t word = 0; word < words; ++word)
        for (int bit = 0; bit < 64; ++bit) {
            std::uint64_t mask = std::uint64_t(1) << bit;
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(rows[pivot][word] & mask)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != rank && (rows[r][word] & mask))
                    for (std::size_t ww = 0; ww < words; ++ww) rows[r][ww] ^= rows[rank][ww];
            ++rank;
            if (rank == rows.size()) return rank;
        }
    return rank;
}

std::size_t rank_gfp(std::vector<std::vector<long long>> rows, long long p) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        long long inv = mod_pow((rows[rank][col] % p + p) % p, p - 2, p);
        for (std::size_t c = col; c < cols; ++c)
            rows[rank][c] = (rows[rank][c] % p + p) % p * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            long long factor = (rows[r][col] % p + p) % p;
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Rank of the boundary map from faces of cardinality s to cardinality s-1.
std::size_t boundary_rank(const std::vector<std::uint32_t>& source,
                          const std::vector<std::uint32_t>& target, int p) {
    if (source.empty() || target.empty()) return 0;
    std::map<std::uint32_t, std::size_t> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) target_index[target[i]] = i;
    if (p == 2) {
        std::size_t words = (target.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(source.size(),
                                                     std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < source.size(); ++r) {
            std::uint32_t face = source[r];
            for (std::uint32_t rest = face; rest != 0; rest &= rest - 1) {
                std::uint32_t vertex = rest & ~(rest - 1);
                std::size_t c = target_index.at(face ^ vertex);
                rows[r][c / 64] ^= std::uint64_t(1) << (c % 64);
            }
        }
        return rank_gf2(std::move(rows));
    }
    std::vector<std::vector<long long>> rows(source.size(),
                                             std::vector<long long>(target.size(), 0));
    for (std::size_t r = 0; r < source.size(); ++r) {
        std::uint32_t face = source[r];
        int position = 0;
        for (std::uint32_t rest = face; rest != 0; rest &= rest - 1, ++position) {
            std::uint32_t vertex = rest & ~(rest - 1);
            std::size_t c = target_index.at(face ^ vertex);
            rows[r][c] = (position % 2 == 0) ? 1 : p - 1;
        }
    }
    return rank_gfp(std::move(rows), p);
}

} // namespace

MonomialIdeal make_monomial_ideal(int n, std::vector<std::vector<int>> gens) {
    if (n <= 0) throw DomainError("monomial ideal requires n >= 1");
    for (const std::vector<int>& g : gens) {
        if (g.size() != static_cast<std::size_t>(n))
            throw DomainError("generator length must equal n");
        for (int e : g)
            if (e < 0) throw DomainError("generator exponents must be nonnegative");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::vector<int>> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    return MonomialIdeal{n, std::move(minimal)};
}

MonomialIdeal expand_orbits(const Ideal& x) {
    if (x.is_unit()) throw DomainError("orbit expansion requires a proper ideal");
    std::vector<std::vector<int>> gens;
    for (const Partition& g : x.generators())
        for (std::vector<int>& u : orbit(g, x.n())) gens.push_back(std::move(u));
    return make_monomial_ideal(x.n(), std::move(gens));
}

int BettiTable::reg() const {
    int out = 0;
    for (const auto& [key, value] : entries)
        if (value > 0) out = std::max(out, key.second);
    return out;
}

int BettiTable::pdim() const {
    int out = 0;
    for (const auto& [key, value] : entries)
        if (value > 0) out = std::max(out, key.first);
    return out;
}

long long BettiTable::entry(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

long long BettiTable::multigraded_entry(int i, const std::vector<int>& b) const {
    auto it = multigraded.find({i, b});
    return it == multigraded.end() ? 0 : it->second;
}

BettiTable betti_numbers(const MonomialIdeal& ideal, int field_char, std::size_t lattice_cap) {
    check_field(field_char);
    if (ideal.gens.empty()) throw DomainError("betti numbers require a nonzero ideal");
    for (const std::vector<int>& g : ideal.gens)
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }))
            throw DomainError("betti numbers require a proper ideal");
    int n = ideal.n;
    if (n > 24) throw ResourceError("too many variables for the homology oracle");

    // lcm lattice: closure of the generators under pairwise lcm
    std::set<std::vector<int>> lattice(ideal.gens.begin(), ideal.gens.end());
    std::vector<std::vector<int>> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& b : frontier)
            for (const std::vector<int>& g : ideal.gens) {
                std::vector<int> l(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    l[static_cast<std::size_t>(i)] =
                        std::max(b[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i)]);
                if (lattice.insert(l).second) {
                    if (lattice.size() > lattice_cap)
                        throw ResourceError("lcm lattice exceeds the configured cap");
                    next.push_back(std::move(l));
                }
            }
        frontier = std::move(next);
    }

    auto in_ideal = [&](const std::vector<int>& v) {
        for (const std::vector<int>& g : ideal.gens)
            if (divides(g, v)) return true;
        return false;
    };

    BettiTable table;
    table.field_char = field_char;
    for (const std::vector<int>& b : lattice) {
        std::uint32_t support = 0;
        for (int i = 0; i < n; ++i)
            if (b[static_cast<std::size_t>(i)] > 0) support |= std::uint32_t(1) << i;
        // upper Koszul complex at b: squarefree gamma with e^{b-gamma} in I
        std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(n) + 1);
        for (std::uint32_t mask = support;; mask = (mask - 1) & support) {
            std::vector<int> v = b;
            for (int i = 0; i < n; ++i)
                if (mask & (std::uint32_t(1) << i)) v[static_cast<std::size_t>(i)] -= 1;
            if (in_ideal(v))
                faces[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
            if (mask == 0) break;
        }
        int degree = std::accumulate(b.begin(), b.end(), 0);
        std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 2, 0);
        for (int s = 1; s <= n; ++s)
            ranks[static_cast<std::size_t>(s)] =
                boundary_rank(faces[static_cast<std::size_t>(s)],
                              faces[static_cast<std::size_t>(s - 1)], field_char);
        for (int i = 0; i <= n; ++i) {
            long long betti = static_cast<long long>(faces[static_cast<std::size_t>(i)].size()) -
                              static_cast<long long>(ranks[static_cast<std::size_t>(i)]) -
                              static_cast<long long>(ranks[static_cast<std::size_t>(i) + 1]);
            if (betti > 0) {
                table.multigraded[{i, b}] = betti;
                table.entries[{i, degree - i}] += betti;
            }
        }
    }
    return table;
}

std::pair<int, int> oracle_invariants(const MonomialIdeal& ideal, int field_char) {
    BettiTable table = betti_numbers(ideal, field_char);
    return {table.reg(), table.pdim()};
}

} // namespace symmid
