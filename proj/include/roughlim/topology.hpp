#pragma once

#include <cstdint>
#include <vector>

#include "roughlim/space.hpp"

namespace roughlim {

inline constexpr std::size_t kDefaultTopologyCap = 12;

/// The topology generated by the open balls of a finite partial metric
/// space, materialized as the family of all open subsets. Subsets are stored
/// as bitmasks over point indices, sorted ascending.
struct Topology {
    Space space;
    std::vector<std::uint64_t> opens;

    bool contains(std::uint64_t mask) const;
};

std::uint64_t to_mask(const PointSet& set);
PointSet from_mask(std::uint64_t mask, std::size_t points);

/// The finitely many distinct open balls. For each center only finitely many
/// thresholds p(center,y) - p(center,center) occur; one representative radius
/// strictly between consecutive thresholds (plus one beyond the largest)
/// realizes every ball shape, by monotonicity of balls in the radius.
std::vector<PointSet> basis_balls(const Space& space);

/// All unions of basis balls, plus the empty set. Exponential in the carrier
/// size; carriers above the cap are refused with TopologyCapError.
Topology generate_topology(const Space& space, std::size_t cap = kDefaultTopologyCap);

/// True iff the complement is open.
bool is_closed(const Topology& topology, const PointSet& subset);

/// Smallest closed superset; closure(S) == S iff S is closed.
PointSet closure(const Topology& topology, const PointSet& subset);

} // namespace roughlim
