#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "roughlim/sequence.hpp"
#include "roughlim/space.hpp"

namespace roughlim::testing {

/// Brute-force epsilon-k rough-convergence check, independent of the
/// limsup-based implementation. For each epsilon in {1, 1/2, ..., 1/64} it
/// scans indices up to |prefix| + 4*|cycle| and asks whether some cutoff k
/// keeps every later deviation strictly below r + epsilon. Cutoffs leave at
/// least one full cycle inside the window, so the scanned tail faithfully
/// represents the infinite tail of the eventually periodic sequence.
inline bool epsilon_k_convergent(const Space& space, const Sequence& seq, PointIndex x,
                                 const Rational& r, Side side) {
    const Rational center = space.self_distance(x);
    const auto deviation = [&](std::size_t n) {
        const Rational v = space.distance(seq.term(n), x);
        switch (side) {
            case Side::TwoSided: return abs(v - center);
            case Side::Right: return max(v - center, Rational(0));
            case Side::Left: return max(center - v, Rational(0));
        }
        return Rational(0);
    };
    const std::size_t horizon = seq.prefix.size() + 4 * seq.cycle.size();
    std::vector<Rational> devs;
    devs.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) devs.push_back(deviation(n));

    Rational eps(1);
    for (int halving = 0; halving < 7; ++halving, eps = eps / 2) {
        const Rational bound = r + eps;
        bool found = false;
        for (std::size_t k = 0; k + seq.cycle.size() <= horizon && !found; ++k) {
            found = std::all_of(devs.begin() + static_cast<std::ptrdiff_t>(k), devs.end(),
                                [&](const Rational& d) { return d < bound; });
        }
        if (!found) return false;
    }
    return true;
}

/// Eight r values straddling a minimal degree m. Offsets that would go
/// negative are reflected above m, so every grid value is a legal degree.
/// No value lands in the open interval (m - 1/64, m), where the epsilon-k
/// scan (finest epsilon 1/64) is blind: there the exact predicate "degree
/// <= r" is false while "degree < r + 1/64" is true.
inline std::vector<Rational> agreement_grid(const Rational& m) {
    const Rational deltas[] = {Rational(-1, 2), Rational(-1, 4), Rational(-1, 16),
                               Rational(-1, 64), Rational(0),    Rational(1, 64),
                               Rational(1, 4),   Rational(1)};
    std::vector<Rational> grid;
    grid.reserve(std::size(deltas));
    for (const Rational& d : deltas) {
        const Rational r = m + d;
        grid.push_back(r.is_negative() ? m + abs(d) : r);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

} // namespace roughlim::testing
