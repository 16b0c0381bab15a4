#ifndef DEFOBS_CORRECTION_HPP
#define DEFOBS_CORRECTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defobs/alexander.hpp"
#include "defobs/dtable.hpp"
#include "defobs/manifold.hpp"

namespace defobs {

/// Correction terms of +2-surgery on a torus knot, via the torsion
/// coefficients of its Alexander polynomial:
///   d(s0) = 1/4 - 2 t_0(K),  d(s1) = -1/4 - 2 t_1(K).
DInvariantTable surgery2_d_table(const TorusKnot& knot);

/// Product table of a connected sum: labels are concatenations, values are
/// sums. The empty list is S^3. Throws std::domain_error when the product
/// would exceed 2^16 entries; use max_correction_term for large sums.
DInvariantTable connected_sum_d(const std::vector<DInvariantTable>& tables);

/// Maximum of d over all spin-c structures of M, computed as the sum of
/// per-summand maxima (never materializes the product table).
Rational max_correction_term(const Manifold& m);

/// Total number of spin-c structures of M (the order of H_1).
std::int64_t spin_c_count(const Manifold& m);

/// If M is exactly m*P # k*(-O) with m, k >= 1, returns (m, k).
std::optional<std::pair<std::int64_t, std::int64_t>> match_p_o_family(const Manifold& m);

struct NegativeDefiniteVerdict {
    bool obstructed;      // true: M cannot bound a negative-definite 4-manifold
    Rational witness;     // max_s d(M, s)
    Rational threshold;   // 0 in general; 1/4 for the P/O family with k odd
    std::optional<std::pair<std::int64_t, std::int64_t>> family;  // (m, k) when matched

    std::string verdict_str() const { return obstructed ? "obstructed" : "inconclusive"; }
};

/// A manifold bounding a negative-definite 4-manifold must have
/// max_s d >= threshold; verdict "obstructed" when the maximum falls short.
NegativeDefiniteVerdict negative_definite_obstruction(const Manifold& m);

}  // namespace defobs

#endif
