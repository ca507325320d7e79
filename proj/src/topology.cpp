#include "roughlim/topology.hpp"

#include <algorithm>
#include <set>

namespace roughlim {

bool Topology::contains(std::uint64_t mask) const {
    return std::binary_search(opens.begin(), opens.end(), mask);
}

std::uint64_t to_mask(const PointSet& set) {
    std::uint64_t mask = 0;
    for (PointIndex p : set) {
        if (p >= 63) throw StructuralError("point index too large for subset mask");
        mask |= std::uint64_t{1} << p;
    }
    return mask;
}

PointSet from_mask(std::uint64_t mask, std::size_t points) {
    PointSet out;
    for (PointIndex p = 0; p < points; ++p) {
        if (mask & (std::uint64_t{1} << p)) out.push_back(p);
    }
    return out;
}

std::vector<PointSet> basis_balls(const Space& space) {
    const std::size_t n = space.points();
    if (n > 63) throw StructuralError("carrier too large for ball enumeration");
    std::set<std::uint64_t> masks;
    for (PointIndex center = 0; center < n; ++center) {
        std::vector<Rational> thresholds;
        thresholds.reserve(n);
        for (PointIndex y = 0; y < n; ++y) {
            thresholds.push_back(space.distance(center, y) - space.self_distance(center));
        }
        std::sort(thresholds.begin(), thresholds.end());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
        // thresholds.front() == 0 by p1 (the center itself).
        std::vector<Rational> radii;
        const Rational two(2);
        for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
            radii.push_back((thresholds[i] + thresholds[i + 1]) / two);
        }
        radii.push_back(thresholds.back() + Rational(1));
        for (const auto& r : radii) masks.insert(to_mask(open_ball(space, center, r)));
    }
    std::vector<PointSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(from_mask(m, n));
    return out;
}

Topology generate_topology(const Space& space, std::size_t cap) {
    if (cap > 63) throw DomainError("topology cap cannot exceed 63");
    if (space.points() > cap) {
        throw TopologyCapError("carrier of " + std::to_string(space.points()) +
                               " points exceeds the topology cap of " + std::to_string(cap));
    }
    std::set<std::uint64_t> opens{0};
    std::vector<std::uint64_t> basis;
    for (const auto& ball : basis_balls(space)) basis.push_back(to_mask(ball));

    // Union-closure fixpoint over the basis.
    std::vector<std::uint64_t> frontier(opens.begin(), opens.end());
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t open : frontier) {
            for (std::uint64_t ball : basis) {
                const std::uint64_t merged = open | ball;
                if (opens.insert(merged).second) next.push_back(merged);
            }
        }
        frontier = std::move(next);
    }
    return Topology{space, std::vector<std::uint64_t>(opens.begin(), opens.end())};
}

bool is_closed(const Topology& topology, const PointSet& subset) {
    const std::uint64_t full = to_mask(topology.space.all_points());
    const std::uint64_t mask = to_mask(subset);
    if ((mask & ~full) != 0) throw DomainError("subset contains points outside the space");
    return topology.contains(full & ~mask);
}

PointSet closure(const Topology& topology, const PointSet& subset) {
    const std::uint64_t full = to_mask(topology.space.all_points());
    const std::uint64_t mask = to_mask(subset);
    if ((mask & ~full) != 0) throw DomainError("subset contains points outside the space");
    std::uint64_t acc = full;
    for (std::uint64_t open : topology.opens) {
        const std::uint64_t closed = full & ~open;
        if ((mask & ~closed) == 0) acc &= closed;
    }
    return from_mask(acc, topology.space.points());
}

} // namespace roughlim
