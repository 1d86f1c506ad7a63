#ifndef SUPERTOUGH_RATIONAL_HPP_
#define SUPERTOUGH_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supertough {

/// Exact reduced fraction with a distinguished +infinity.
///
/// Parts are 64-bit; every product used for comparison is formed in 128 bits,
/// and arithmetic that would leave the 64-bit range throws std::overflow_error
/// rather than wrapping. Toughness values in this library never exceed 64/1.
class Rational {
 public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num) : num_{num}, den_{1} {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(std::int64_t num, std::int64_t den) : num_{num}, den_{den} {
        if (den == 0) throw std::domain_error{"Rational: zero denominator"};
        normalize();
    }

    static constexpr Rational infinite() {
        Rational r;
        r.num_ = 1;
        r.den_ = 0;
        return r;
    }

    constexpr bool is_infinite() const { return den_ == 0; }
    constexpr std::int64_t num() const { return num_; }
    /// Zero for the infinite value.
    constexpr std::int64_t den() const { return den_; }

    std::string to_string() const {
        if (is_infinite()) return "infinite";
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        const std::int64_t g = std::gcd(a.den_, b.den_);
        return from_wide(static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g),
                         static_cast<__int128>(a.den_ / g) * b.den_);
    }

    friend constexpr Rational operator-(const Rational& a) {
        if (a.is_infinite()) throw std::domain_error{"Rational: negated infinity"};
        return Rational{-a.num_, a.den_};
    }

    friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.num_ == 0 || b.num_ == 0) throw std::domain_error{"Rational: 0 * infinity"};
            return infinite();
        }
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
    static constexpr Rational from_wide(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw std::overflow_error{"Rational: result exceeds 64-bit parts"};
        return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    }

    constexpr void normalize() {
        if (den_ < 0) {
            if (num_ == INT64_MIN || den_ == INT64_MIN) throw std::overflow_error{"Rational: cannot normalize sign"};
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace supertough

#endif  // SUPERTOUGH_RATIONAL_HPP_
