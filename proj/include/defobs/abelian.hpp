#ifndef DEFOBS_ABELIAN_HPP
#define DEFOBS_ABELIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace defobs {

/// Finite abelian group in invariant-factor normal form: an ordered list of
/// integers >= 2, each dividing the next. The empty list is the trivial group.
/// Inputs that are not already a divisor chain are normalized on construction
/// by merging prime-power content across factors.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(const std::vector<std::int64_t>& factors);

    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    std::int64_t order() const;
    bool is_trivial() const { return factors_.empty(); }

    /// True when H is isomorphic to (Z/2)^a for some a >= 0.
    bool is_two_torsion() const;

    /// "1", "Z/2", "Z/2 x Z/4", ...
    std::string str() const;

    bool operator==(const FiniteAbelianGroup& o) const = default;
    auto operator<=>(const FiniteAbelianGroup& o) const = default;

private:
    std::vector<std::int64_t> factors_;  // ascending divisor chain, all >= 2
};

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

struct HomCounts {
    std::int64_t to_circle;  // |Hom(G, S^1)| = |G|
    std::int64_t to_pm1;     // |Hom(G, {+-1})| = 2^(number of even invariant factors)
};

/// Counts of characters of G, split by target. Pontryagin duality gives
/// to_circle = |G|; the real characters are counted by the even factors.
HomCounts hom_counts(const FiniteAbelianGroup& g);

}  // namespace defobs

#endif
