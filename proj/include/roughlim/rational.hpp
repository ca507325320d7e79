#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "roughlim/errors.hpp"

namespace roughlim {

/// Exact rational number with a canonical reduced representation:
/// denominator > 0 and gcd(|numerator|, denominator) == 1.
///
/// Every comparison and arithmetic operation is exact; there is no floating
/// point anywhere in the core. Intermediate products are taken in 128-bit
/// integers and the reduced result must fit in 64 bits, otherwise an
/// OverflowError is thrown. The quantities handled here (distance matrix
/// entries, roughness degrees, ball radii) stay tiny in practice.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(long long n) noexcept : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(long long n, long long d) { *this = reduce(n, d); }

    long long numerator() const noexcept { return num_; }
    long long denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }
    bool is_positive() const noexcept { return num_ > 0; }
    int sign() const noexcept { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return reduce_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                           wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return reduce_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                           wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return reduce_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes equality a field comparison; ordering uses exact
    // cross multiplication in 128 bits.
    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const auto lhs = wide(a.num_) * b.den_;
        const auto rhs = wide(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    /// "p/q" for non-integers, plain "p" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    /// Accepts "p", "-p", or "p/q" with q > 0. Anything else (notably decimal
    /// or exponent notation) is rejected so exactness cannot be silently lost.
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;
    static constexpr i128 wide(long long v) noexcept { return static_cast<i128>(v); }

    static Rational reduce(long long n, long long d) {
        return reduce_wide(wide(n), wide(d));
    }

    static Rational reduce_wide(i128 n, i128 d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = static_cast<i128>(INT64_MIN);
        constexpr i128 hi = static_cast<i128>(INT64_MAX);
        if (n < lo || n > hi || d > hi) throw OverflowError("rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) noexcept {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_;
    long long den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw DomainError("expected an exact rational as \"p\" or \"p/q\" (decimals are not "
                          "accepted), got \"" + std::string(text) + "\"");
    };
    if (text.empty()) return fail();
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    const auto digits = [&](long long& out) -> bool {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
        i128 acc = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            acc = acc * 10 + (text[pos] - '0');
            if (acc > static_cast<i128>(INT64_MAX)) throw OverflowError("rational literal too large");
            ++pos;
        }
        out = static_cast<long long>(acc);
        return true;
    };
    long long num = 0;
    long long den = 1;
    if (!digits(num)) return fail();
    if (pos < text.size()) {
        if (text[pos] != '/') return fail();
        ++pos;
        if (!digits(den) || pos != text.size()) return fail();
        if (den == 0) throw DomainError("rational denominator must be positive in \"" +
                                        std::string(text) + "\"");
    }
    return Rational(negative ? -num : num, den);
}

} // namespace roughlim
