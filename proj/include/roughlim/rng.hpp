#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "roughlim/rational.hpp"

namespace roughlim {

/// Deterministic random source. mt19937_64 has a fully specified output
/// sequence, and bounded draws below avoid distribution adapters whose
/// output is implementation-defined, so a seed pins every generated byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish draw in [0, n). Modulo bias is irrelevant at these sizes.
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : eng_() % n; }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Nonnegative rational with numerator in [0, max_num] and denominator
    /// drawn from the given set.
    Rational rational(long long max_num, const std::vector<long long>& denominators) {
        const auto num = static_cast<long long>(below(static_cast<std::uint64_t>(max_num) + 1));
        const long long den = denominators[index(denominators.size())];
        return Rational(num, den);
    }

    /// Strictly positive rational with numerator in [1, max_num].
    Rational positive_rational(long long max_num, const std::vector<long long>& denominators) {
        const auto num = 1 + static_cast<long long>(below(static_cast<std::uint64_t>(max_num)));
        const long long den = denominators[index(denominators.size())];
        return Rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace roughlim
