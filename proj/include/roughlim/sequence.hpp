#pragma once

#include <vector>

#include "roughlim/space.hpp"

namespace roughlim {

/// Eventually periodic point sequence: a finite prefix followed by an
/// infinitely repeated nonempty cycle. x_n = prefix[n] for n < |prefix|,
/// else cycle[(n - |prefix|) mod |cycle|].
///
/// Equality is extensional: two encodings denoting the same function compare
/// equal (the prefix is rolled into the cycle where possible and the cycle is
/// cut to its primitive period first).
struct Sequence {
    std::vector<PointIndex> prefix;
    std::vector<PointIndex> cycle;

    PointIndex term(std::size_t n) const;

    /// Canonical encoding: primitive cycle, shortest prefix.
    Sequence normalized() const;

    friend bool operator==(const Sequence& a, const Sequence& b);
};

/// Eventually periodic sequence of rational values, aligned with the point
/// sequence it was computed from. For such sequences limsup and liminf are
/// simply the max and min over one full cycle.
struct Profile {
    std::vector<Rational> prefix_vals;
    std::vector<Rational> cycle_vals; // nonempty

    Rational limsup() const;
    Rational liminf() const;
};

/// Which side of p(x,x) the convergence constraint applies to. Right
/// constrains only indices with p(x_n,x) >= p(x,x), Left only those with
/// p(x_n,x) <= p(x,x).
enum class Side { TwoSided, Right, Left };

const char* side_name(Side s);

/// n |-> p(x_n, x) in prefix/cycle form.
Profile value_profile(const Space& space, const Sequence& seq, PointIndex x);

/// Least roughness degree r for which the sequence r-converges to x on the
/// given side. For an eventually periodic sequence the "for every eps > 0,
/// eventually |p(x_n,x) - p(x,x)| < r + eps" quantifier collapses to
/// limsup <= r, so:
///   TwoSided: max over cycle values v of |v - p(x,x)|
///   Right:    max over cycle values of max(v - p(x,x), 0)
///   Left:     max over cycle values of max(p(x,x) - v, 0)
/// Prefix values never matter ("eventually" discards them).
Rational minimal_roughness(const Space& space, const Sequence& seq, PointIndex x, Side side);

/// True iff minimal_roughness(space, seq, x, side) <= r. Requires r >= 0.
/// r = 0 is classical convergence.
bool is_r_convergent(const Space& space, const Sequence& seq, PointIndex x, const Rational& r,
                     Side side);

/// All points the sequence r-converges to on the given side (LIM^r, R-LIM^r
/// or L-LIM^r).
PointSet rough_limit_set(const Space& space, const Sequence& seq, const Rational& r, Side side);

/// Classical convergence: every cycle value of p(x_n, x) equals p(x,x).
bool converges_to(const Space& space, const Sequence& seq, PointIndex x);

/// Cauchy in the double-limit sense: p(u,v) takes a single value over all
/// ordered pairs of cycle positions, diagonal included.
bool is_cauchy(const Space& space, const Sequence& seq);

/// True iff max p(x_n, x_m) over all positions (prefix and cycle) < M,
/// strictly. Requires M > 0.
bool is_bounded_sequence(const Space& space, const Sequence& seq, const Rational& bound);

/// Points c whose deviation |p(x_n,c) - p(c,c)| comes within every eps
/// infinitely often. With finitely many recurring values that means exact
/// equality p(x_n,c) = p(c,c) at some cycle position; prefix positions occur
/// only finitely often and are excluded.
PointSet cluster_points(const Space& space, const Sequence& seq);

/// The sequence n |-> x_{offset + n*step}, again in prefix/cycle form.
/// Requires step >= 1.
Sequence arithmetic_subsequence(const Sequence& seq, std::size_t offset, std::size_t step);

/// n |-> p(x_n, y_n) for two sequences over the same space, aligned to the
/// max of the prefix lengths and the lcm of the cycle lengths.
Profile pair_profile(const Space& space, const Sequence& seq_x, const Sequence& seq_y);

/// Minimal right roughness of a real eventually periodic sequence toward a
/// target value (the reals carry zero self-distance): max over cycle values v
/// of max(v - target, 0).
Rational real_right_roughness(const Profile& profile, const Rational& target);

/// Per-candidate minimal degrees. r_two == max(r_right, r_left) always.
struct RoughnessReport {
    PointIndex candidate;
    Rational r_two;
    Rational r_right;
    Rational r_left;
};

RoughnessReport roughness_report(const Space& space, const Sequence& seq, PointIndex candidate);

} // namespace roughlim
