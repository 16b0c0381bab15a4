#ifndef DEFOBS_RATIONAL_HPP
#define DEFOBS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace defobs {

// Checked 64-bit arithmetic. Everything downstream (denominators up to
// 4pqr, torsion coefficients, hom counts) fits comfortably in int64, but
// an overflow must never wrap silently: it throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

/// Exact rational number, always in reduced form with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);  // throws on den == 0

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Largest integer <= this.
    std::int64_t floor() const;

    /// Renders "p/q", or just "n" when the denominator is 1.
    std::string str() const;
    /// Inverse of str(); accepts "p/q" and "n". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_;
    std::int64_t den_;  // > 0
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Convenience constructor mirroring the reduced-form contract.
inline Rational rat(std::int64_t p, std::int64_t q) { return Rational(p, q); }

/// Residue class in Q/Z, stored as the canonical representative in [0, 1).
class ModOne {
public:
    ModOne() = default;
    explicit ModOne(const Rational& x);

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    /// Additive inverse: v -> (1 - v) mod 1; zero is its own negation.
    ModOne negated() const;

    friend ModOne operator+(const ModOne& a, const ModOne& b);
    friend ModOne operator-(const ModOne& a, const ModOne& b);

    bool operator==(const ModOne& o) const = default;
    std::strong_ordering operator<=>(const ModOne& o) const { return value_ <=> o.value_; }

    std::string str() const { return value_.str(); }

private:
    Rational value_;  // 0 <= value_ < 1
};

/// Canonical representative of x in [0, 1); x - mod_one(x) is an integer.
ModOne mod_one(const Rational& x);

std::ostream& operator<<(std::ostream& os, const ModOne& m);

}  // namespace defobs

#endif
