#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughlim/space.hpp"

namespace roughlim {

/// Builds the partial metric p(x,y) = d(x,y) + (w(x)+w(y))/2 from a metric d
/// and nonnegative point weights w. This satisfies p4 identically (it
/// collapses to the triangle inequality of d); p1 needs the weights to be
/// 2d-Lipschitz, |w(x)-w(y)| <= 2 d(x,y), which is rejected with the
/// offending pair otherwise. Self-distances come out as p(x,x) = w(x).
///
/// The metric must be strict: zero diagonal, symmetric, positive off the
/// diagonal, triangle inequality.
Space gen_weighted(const Matrix& metric, const std::vector<Rational>& weights,
                   std::vector<std::string> labels = {});

/// Harmonic three-case family on the carrier {0} u ks:
///   p(n,m) = 1 + 1/n + 1/m   for distinct n,m >= 1
///   p(n,0) = p(0,n) = 1 + 1/n
///   p(x,x) = 1
/// ks must be distinct positive integers; labels are the decimal numerals.
Space gen_example31(const std::vector<long long>& ks);

/// p(x,y) = max(v(x), v(y)) for given nonnegative values v; a partial metric
/// iff the values are pairwise distinct (p2 fails otherwise). Points are
/// labeled by their value. Useful as a witness that the ball topology need
/// not be T1: every neighborhood of a high-value point contains all lower
/// ones.
Space gen_max(const std::vector<Rational>& values);

enum class Family {
    Metric,               // zero self-distance everywhere
    ConstantSelfDistance, // p(x,x) = a for a single random a >= 0
    LipschitzWeights,     // general nonnegative 2d-Lipschitz weights
};

const char* family_name(Family f);

struct GenParams {
    Family family = Family::LipschitzWeights;
    long long max_edge_numerator = 6;       // raw edge weights in (0, max]
    std::vector<long long> denominators = {1, 2, 3};
    long long max_weight_numerator = 3;     // self-distance scale
};

/// Deterministic random space: random positive edge weights are closed under
/// shortest paths to obtain a metric, then weights per the family are laid on
/// top via gen_weighted. Construction cannot fail; the axiom validator still
/// runs on the result as a safety net, and a failure there is an internal
/// defect.
Space gen_random(std::uint64_t seed, std::size_t n, const GenParams& params = {});

} // namespace roughlim
