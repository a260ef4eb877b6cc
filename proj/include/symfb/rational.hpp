#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace symfb {

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Used for translation components and phase exponents, where
/// equality tests must be exact.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        reduce();
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }

    constexpr Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend constexpr Rational operator*(std::int64_t k, const Rational& a) {
        return Rational(k * a.num_, a.den_);
    }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend constexpr bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }

    /// Reduces into [0, 1): the representative of this value modulo 1.
    constexpr Rational mod1() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_, raw_tag{});
    }

    constexpr double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Formats as "p/q", or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct raw_tag {};
    constexpr Rational(std::int64_t n, std::int64_t d, raw_tag) : num_(n), den_(d) {}

    constexpr void reduce() {
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace symfb
