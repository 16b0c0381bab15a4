#include "defobs/alexander.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "defobs/rational.hpp"

namespace defobs {

namespace {

// Dense integer polynomials, index = exponent.
using Poly = std::vector<std::int64_t>;

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    }
    return r;
}

Poly t_pow_minus_one(std::int64_t n) {
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p.front() = -1;
    p.back() = 1;
    return p;
}

// Exact division; the remainder must vanish.
Poly div_exact(Poly num, const Poly& den) {
    std::size_t dd = den.size() - 1;
    if (num.size() <= dd) throw std::logic_error("alexander: degree underflow in division");
    Poly q(num.size() - dd, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        std::int64_t lead = num[i + dd];
        if (lead % den[dd] != 0)
            throw std::logic_error("alexander: inexact polynomial division");
        std::int64_t c = lead / den[dd];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i + j] = checked_sub(num[i + j], checked_mul(c, den[j]));
    }
    for (std::int64_t c : num)
        if (c != 0) throw std::logic_error("alexander: nonzero remainder in division");
    return q;
}

}  // namespace

SymmetrizedAlexander::SymmetrizedAlexander(std::map<std::int64_t, std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
    std::int64_t at_one = 0;
    for (const auto& [k, a] : coeffs_) {
        if (a == 0) throw std::logic_error("alexander: stored zero coefficient");
        if (coefficient(-k) != a) throw std::logic_error("alexander: asymmetric coefficients");
        at_one = checked_add(at_one, a);
    }
    if (at_one != 1) throw std::logic_error("alexander: normalization Delta(1) = 1 violated");
}

SymmetrizedAlexander SymmetrizedAlexander::torus_knot(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw std::domain_error("torus knot parameters must be positive");
    if (std::gcd(p, q) != 1) throw std::domain_error("torus knot parameters must be coprime");
    if (p == 1 || q == 1)
        return SymmetrizedAlexander(std::map<std::int64_t, std::int64_t>{{0, 1}});

    Poly numerator = mul(t_pow_minus_one(p * q), t_pow_minus_one(1));
    Poly quotient = div_exact(div_exact(numerator, t_pow_minus_one(p)), t_pow_minus_one(q));

    // quotient has degree (p-1)(q-1); recenter onto [-g, g]
    std::int64_t genus = (p - 1) * (q - 1) / 2;
    std::map<std::int64_t, std::int64_t> coeffs;
    for (std::size_t i = 0; i < quotient.size(); ++i)
        if (quotient[i] != 0) coeffs[static_cast<std::int64_t>(i) - genus] = quotient[i];
    return SymmetrizedAlexander(std::move(coeffs));
}

std::int64_t SymmetrizedAlexander::coefficient(std::int64_t k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t SymmetrizedAlexander::max_exponent() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

std::int64_t SymmetrizedAlexander::torsion_coefficient(std::int64_t i) const {
    std::int64_t base = i < 0 ? -i : i;
    std::int64_t sum = 0;
    for (const auto& [k, a] : coeffs_) {
        if (k <= base) continue;
        sum = checked_add(sum, checked_mul(k - base, a));  // j = k - base
    }
    return sum;
}

std::string SymmetrizedAlexander::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, a] : coeffs_) {
        std::int64_t mag = a < 0 ? -a : a;
        if (first) {
            if (a < 0) s += "-";
            first = false;
        } else {
            s += a < 0 ? " - " : " + ";
        }
        std::string term;
        if (k == 0) {
            term = std::to_string(mag);
        } else {
            if (mag != 1) term = std::to_string(mag) + "*";
            term += "t";
            if (k != 1) term += "^" + std::to_string(k);
        }
        s += term;
    }
    return s;
}

}  // namespace defobs
