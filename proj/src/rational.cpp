#include "defobs/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace defobs {

namespace {
[[noreturn]] void overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}
}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = checked_neg(num_);
        den_ = checked_neg(den_);
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    std::int64_t a = num_ < 0 ? checked_neg(num_) : num_;
    std::int64_t g = std::gcd(a, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return checked_mul(num_, o.den_) <=> checked_mul(o.num_, den_);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::int64_t {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("Rational::parse: bad integer '" + std::string(s) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

ModOne::ModOne(const Rational& x) : value_(x - Rational(x.floor())) {}

ModOne mod_one(const Rational& x) {
    return ModOne(x);
}

ModOne ModOne::negated() const {
    if (value_.is_zero()) return ModOne();
    return ModOne(Rational(1) - value_);
}

ModOne operator+(const ModOne& a, const ModOne& b) {
    return ModOne(a.value_ + b.value_);
}

ModOne operator-(const ModOne& a, const ModOne& b) {
    return ModOne(a.value_ - b.value_);
}

std::ostream& operator<<(std::ostream& os, const ModOne& m) {
    return os << m.str();
}

}  // namespace defobs
