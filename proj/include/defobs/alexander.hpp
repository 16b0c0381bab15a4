#ifndef DEFOBS_ALEXANDER_HPP
#define DEFOBS_ALEXANDER_HPP

#include <cstdint>
#include <map>
#include <string>

namespace defobs {

/// Symmetrized Alexander polynomial of a knot: finitely supported integer
/// coefficients a_k indexed by exponent, with a_k = a_{-k} and evaluation 1
/// at t = 1.
class SymmetrizedAlexander {
public:
    /// Alexander polynomial of the (p,q) torus knot, p,q >= 1 coprime:
    /// the symmetrization of (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
    /// T(1,q) is the unknot with polynomial 1.
    static SymmetrizedAlexander torus_knot(std::int64_t p, std::int64_t q);

    std::int64_t coefficient(std::int64_t k) const;
    const std::map<std::int64_t, std::int64_t>& coefficients() const { return coeffs_; }

    /// Largest exponent with nonzero coefficient (0 for the unknot).
    std::int64_t max_exponent() const;

    /// i-th torsion coefficient t_i = sum_{j >= 1} j * a_{|i|+j}.
    std::int64_t torsion_coefficient(std::int64_t i) const;

    /// "t^-1 - 1 + t" style rendering, exponents ascending.
    std::string str() const;

    bool operator==(const SymmetrizedAlexander& o) const = default;

private:
    std::map<std::int64_t, std::int64_t> coeffs_;  // exponent -> coefficient, nonzero only
    explicit SymmetrizedAlexander(std::map<std::int64_t, std::int64_t> coeffs);
};

inline SymmetrizedAlexander torus_knot_alexander(std::int64_t p, std::int64_t q) {
    return SymmetrizedAlexander::torus_knot(p, q);
}

inline std::int64_t torsion_coefficient(const SymmetrizedAlexander& delta, std::int64_t i) {
    return delta.torsion_coefficient(i);
}

}  // namespace defobs

#endif
