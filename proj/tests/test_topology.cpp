#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "roughlim/generators.hpp"
#include "roughlim/rng.hpp"
#include "roughlim/sequence.hpp"
#include "roughlim/topology.hpp"

using namespace roughlim;

namespace {

std::set<std::uint64_t> mask_set(const std::vector<PointSet>& sets) {
    std::set<std::uint64_t> out;
    for (const auto& s : sets) out.insert(to_mask(s));
    return out;
}

} // namespace

TEST_SUITE("topology") {

TEST_CASE("mask round trip") {
    CHECK(to_mask({}) == 0);
    CHECK(to_mask({0, 2}) == 0b101);
    CHECK(to_mask({1}) == 0b10);
    CHECK(from_mask(0b101, 3) == PointSet{0, 2});
    CHECK(from_mask(0, 3) == PointSet{});
    for (std::uint64_t m = 0; m < 32; ++m) CHECK(to_mask(from_mask(m, 5)) == m);
}

TEST_CASE("basis balls of a single point") {
    const Space s = make_space({"a"}, {{Rational(5)}});
    const auto basis = basis_balls(s);
    CHECK(mask_set(basis) == std::set<std::uint64_t>{0b1});
}

TEST_CASE("basis balls of the harmonic space") {
    const Space s = gen_example31({2, 3}); // indices: 0 -> "0", 1 -> "2", 2 -> "3"
    const auto basis = mask_set(basis_balls(s));
    const std::set<std::uint64_t> expected = {
        to_mask({0}), to_mask({1}), to_mask({2}),
        to_mask({0, 1}), to_mask({0, 2}), to_mask({0, 1, 2}),
    };
    CHECK(basis == expected);
}

TEST_CASE("the harmonic space generates the discrete topology") {
    const Topology t = generate_topology(gen_example31({2, 3}));
    REQUIRE(t.opens.size() == 8);
    for (std::uint64_t m = 0; m < 8; ++m) CHECK(t.contains(m));
    // Every subset is closed, and closure is the identity.
    for (std::uint64_t m = 0; m < 8; ++m) {
        const PointSet set = from_mask(m, 3);
        CHECK(is_closed(t, set));
        CHECK(closure(t, set) == set);
    }
}

TEST_CASE("topology axioms hold by enumeration on random spaces") {
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const Space s = gen_random(rng.next(), n);
        const Topology t = generate_topology(s);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        CHECK(t.contains(0));
        CHECK(t.contains(full));
        for (std::uint64_t a : t.opens) {
            for (std::uint64_t b : t.opens) {
                CHECK(t.contains(a | b));
                CHECK(t.contains(a & b));
            }
        }
        // Every basis ball is open.
        for (const PointSet& ball : basis_balls(s)) CHECK(t.contains(to_mask(ball)));
    }
}

TEST_CASE("the ball topology is T0 on random spaces") {
    Rng rng(32);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const Space s = gen_random(rng.next(), n);
        const Topology t = generate_topology(s);
        for (PointIndex x = 0; x < n; ++x) {
            for (PointIndex y = x + 1; y < n; ++y) {
                const bool separated = std::any_of(
                    t.opens.begin(), t.opens.end(), [&](std::uint64_t open) {
                        return ((open >> x) & 1) != ((open >> y) & 1);
                    });
                CHECK(separated);
            }
        }
    }
}

TEST_CASE("the max space witnesses failure of T1") {
    // p(x,y) = max(v(x), v(y)) on values {0, 1}: every neighborhood of the
    // high point contains the low one.
    const Space s = gen_max({Rational(0), Rational(1)});
    const Topology t = generate_topology(s);
    const std::set<std::uint64_t> opens(t.opens.begin(), t.opens.end());
    CHECK(opens == std::set<std::uint64_t>{0b00, 0b01, 0b11});
    CHECK(closure(t, {0}) == PointSet{0, 1});
    CHECK(is_closed(t, {1}));
    CHECK_FALSE(is_closed(t, {0}));
    // No open set contains point 1 without point 0, so {0} and {1} cannot
    // both be closed: the space is T0 but not T1.
    for (std::uint64_t open : t.opens) {
        if ((open >> 1) & 1) CHECK((open & 1) == 1);
    }
}

TEST_CASE("closure is a closure operator") {
    Rng rng(33);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + rng.index(4);
        GenParams params;
        params.family = static_cast<Family>(trial % 3);
        const Space s = gen_random(rng.next(), n, params);
        const Topology t = generate_topology(s);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const PointSet set = from_mask(m, n);
            const PointSet cl = closure(t, set);
            CHECK(is_subset(set, cl));
            CHECK(is_closed(t, cl));
            CHECK(closure(t, cl) == cl);
            CHECK((closure(t, set) == set) == is_closed(t, set));
        }
    }
}

TEST_CASE("right limit sets are closed in concrete instances") {
    const Space s = gen_max({Rational(0), Rational(1)});
    const Topology t = generate_topology(s);
    const Sequence high{{}, {1}};
    CHECK(rough_limit_set(s, high, Rational(0), Side::Right) == PointSet{1});
    CHECK(is_closed(t, {1}));
    CHECK(rough_limit_set(s, high, Rational(1), Side::Right) == PointSet{0, 1});
    CHECK(is_closed(t, {0, 1}));

    const Space h = gen_example31({2, 3});
    const Topology ht = generate_topology(h);
    CHECK(is_closed(ht, rough_limit_set(h, Sequence{{}, {0, 1}}, Rational(1, 2), Side::Right)));
}

TEST_CASE("carriers above the cap are refused") {
    const Space big = gen_random(5, 13);
    CHECK_THROWS_AS(generate_topology(big), TopologyCapError);
    CHECK_THROWS_AS(generate_topology(big, 12), TopologyCapError);
    const Space small = gen_random(5, 3);
    CHECK_THROWS_AS(generate_topology(small, 2), TopologyCapError);
    CHECK_NOTHROW(generate_topology(small, 3));
}

} // TEST_SUITE
