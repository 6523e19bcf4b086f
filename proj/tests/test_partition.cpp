#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "symmid/errors.hpp"
#include "symmid/partition.hpp"

using namespace symmid;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

Partition random_partition(std::mt19937_64& rng, int max_part, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> part_dist(0, max_part);
    std::vector<int> parts(static_cast<std::size_t>(len_dist(rng)));
    for (int& p : parts) p = part_dist(rng);
    return Partition::sorted(std::move(parts));
}

} // namespace

TEST_CASE("conjugate on examples") {
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(P({3, 3}).conjugate() == P({2, 2, 2}));
}

TEST_CASE("conjugate is an involution") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        Partition x = random_partition(rng, 10, 10);
        CHECK(x.conjugate().conjugate() == x);
    }
}

TEST_CASE("column truncation") {
    CHECK(P({4, 2, 1}).truncate_columns(2) == P({2, 2, 1}));
    CHECK(P({4, 2, 1}).truncate_columns(0) == Partition{});
    CHECK(P({2, 1, 1}).truncate_columns(1) == P({1, 1, 1}));
}

TEST_CASE("column stripping") {
    CHECK(P({3, 3}).strip_columns(1) == P({2, 2}));
    CHECK(P({2, 1, 1}).strip_columns(1) == P({1}));
    CHECK(P({4, 2, 1}).strip_columns(0) == P({4, 2, 1}));
}

TEST_CASE("truncation and stripping split the size") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        Partition x = random_partition(rng, 8, 8);
        std::uniform_int_distribution<int> c_dist(0, 9);
        int c = c_dist(rng);
        CHECK(x.truncate_columns(c).sum() + x.strip_columns(c).sum() == x.sum());
        // conjugate of x - x(r) drops the first r conjugate entries
        Partition conj = x.conjugate();
        std::vector<int> tail;
        for (std::size_t i = static_cast<std::size_t>(c); i < conj.length(); ++i)
            tail.push_back(conj.nth(i));
        CHECK(x.strip_columns(c).conjugate() == Partition(tail));
    }
}

TEST_CASE("componentwise order and sup") {
    CHECK(leq(P({1, 1}), P({2, 1})));
    CHECK_FALSE(leq(P({2}), P({1, 1})));
    CHECK(leq(Partition{}, P({5, 3})));
    CHECK(sup(P({3, 1}), P({2, 2})) == P({3, 2}));
    CHECK(sup(P({2, 1}), Partition{}) == P({2, 1}));
    CHECK(sup(P({2, 1, 1}), P({4, 2})) == P({4, 2, 1}));
}

TEST_CASE("sup is a join") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Partition x = random_partition(rng, 6, 6);
        Partition y = random_partition(rng, 6, 6);
        Partition z = random_partition(rng, 6, 6);
        CHECK(sup(x, y) == sup(y, x));
        CHECK(sup(sup(x, y), z) == sup(x, sup(y, z)));
        CHECK(sup(x, x) == x);
        CHECK(leq(x, sup(x, y)));
        CHECK(leq(y, sup(x, y)));
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({3, 3}), P({6, 3})));
    CHECK_FALSE(dominance_leq(P({6, 3}), P({3, 3})));
    CHECK(dominance_leq(P({4, 2, 1}), P({4, 2, 1})));
}

TEST_CASE("dominance is a partial order on partitions of equal size") {
    for (int s = 0; s <= 9; ++s) {
        std::vector<Partition> all = partitions_of(s, 4);
        for (const Partition& x : all) {
            CHECK(dominance_leq(x, x));
            for (const Partition& y : all) {
                if (dominance_leq(x, y) && dominance_leq(y, x)) CHECK(x == y);
                for (const Partition& z : all)
                    if (dominance_leq(x, y) && dominance_leq(y, z)) CHECK(dominance_leq(x, z));
            }
        }
    }
}

TEST_CASE("orbit enumeration") {
    std::vector<std::vector<int>> expected = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK(orbit(P({1, 1}), 3) == expected);
    CHECK(orbit(P({2, 1, 1}), 3).size() == 3);
    CHECK(orbit(Partition{}, 2) == std::vector<std::vector<int>>{{0, 0}});
    CHECK_THROWS_AS(orbit(P({1, 1, 1}), 2), DomainError);
}

TEST_CASE("orbit size matches the multinomial count") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Partition x = random_partition(rng, 4, 5);
        int n = static_cast<int>(x.length()) + static_cast<int>(rng() % 3);
        if (n == 0) n = 1;
        CHECK(orbit_size(x, n) == static_cast<long long>(orbit(x, n).size()));
    }
}

TEST_CASE("box partition enumeration") {
    std::vector<Partition> expected = {P({1, 1}), P({1})};
    CHECK(enumerate_box_partitions(1, 2, 1) == expected);
    CHECK(enumerate_box_partitions(0, 3, 0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_box_partitions(2, 2, 2) == std::vector<Partition>{P({2, 2})});
    CHECK_THROWS_AS(enumerate_box_partitions(1, 1, 2), DomainError);

    // lexicographically decreasing order
    std::vector<Partition> all = enumerate_box_partitions(3, 3, 0);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
}

TEST_CASE("partition construction validates input") {
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, -1}), DomainError);
    CHECK(Partition({2, 1, 0, 0}) == P({2, 1}));
    CHECK(Partition::sorted({0, 2, 1}) == P({2, 1}));
}
