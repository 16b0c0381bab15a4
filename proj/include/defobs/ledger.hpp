#ifndef DEFOBS_LEDGER_HPP
#define DEFOBS_LEDGER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defobs/abelian.hpp"
#include "defobs/correction.hpp"
#include "defobs/flat.hpp"
#include "defobs/manifold.hpp"

namespace defobs {

/// Cobordism profile for the moduli-space audit: one incoming end, a list of
/// outgoing ends, and the homological constraints b_1 = b^+ = 0.
struct CobordismProfile {
    Atom incoming = Atom::poincare();
    std::vector<Atom> outgoing;
    std::int64_t b1 = 0;
    std::int64_t b_plus = 0;
    std::optional<FiniteAbelianGroup> quotient_group;  // H_1(W)/i_* H_1(dW) when known
};

/// Counts of asymptotically trivial reducible flat connections on a
/// cobordism with H_1(W)/i_* H_1(dW) = H: z central, a abelian, z + 2a = |H|.
struct ReducibleCounts {
    std::int64_t z;
    std::int64_t a;
};
ReducibleCounts reducible_counts(const FiniteAbelianGroup& h);

/// Enumeration rules for end patterns. The defaults are the constraints the
/// gluing picture imposes; the flags exist so that relaxations are testable.
struct RuleSet {
    /// Cylinder factors bound nonempty moduli with a free R-action, so each
    /// contributes index >= 1. Disabling lowers the floor to 0.
    bool cylinder_index_at_least_one = true;
    /// A reducible W-factor (index -3) is flat and central on the ends, so
    /// its incoming limit is an intermediate connection: r >= 1 and n >= 1.
    bool reducible_needs_incoming_break = true;
    /// Optional extra constraint r <= n (not asserted by the gluing picture;
    /// kept available, default off).
    bool require_r_le_n = false;

    std::string str() const;
};

inline RuleSet default_rules() { return RuleSet{}; }

/// Factorization signature of a broken trajectory limiting a 1-dimensional
/// moduli space: n incoming-cylinder factors, m outgoing-cylinder factors,
/// r reducible intermediate limits, the W-factor index, and the per-factor
/// indices. Index bookkeeping:
///   sum ind(B_i) + ind(A) + 3r + sum ind(C_j) = total
///   total >= n + m + 3r + ind(A)
struct EndPattern {
    int n = 0;
    int m = 0;
    int r = 0;
    int ind_a = 0;  // -3 (reducible) or >= 0 (irreducible)
    std::vector<int> incoming_indices;  // sorted multiset, size n
    std::vector<int> outgoing_indices;  // sorted multiset, size m

    int total_index() const;

    enum class Type { IncomingBreak, OutgoingBreak, ReducibleGluing, Other };
    Type type() const;
    std::string type_str() const;  // "(i)", "(ii)", "(iii)", "(-)"
    std::string str() const;

    bool operator==(const EndPattern&) const = default;
    auto operator<=>(const EndPattern&) const = default;
};

/// Exhaustive, duplicate-free enumeration of end patterns with the given
/// total index (<= 8) under the rule set, ordered by signature.
std::vector<EndPattern> classify_end_patterns(int total_index, const RuleSet& rules);

/// Moduli dimension of the audit configuration: incoming cylinder factor of
/// the given index glued across r = 1 reducible with the flat-reducible
/// index constant -3, i.e. ind(B) + 3 - 3. Validates b_1 = b^+ = 0.
int moduli_dimension(const CobordismProfile& profile, int incoming_factor_index = 1);

enum class Fate { PrunedByEnergy, Survives };

struct PatternFate {
    EndPattern pattern;
    Fate fate = Fate::Survives;
    std::string reason;
};

struct AuditReport {
    int dimension = 0;
    Rational kappa;  // energy level of the audited moduli space
    std::vector<PatternFate> patterns;
    std::optional<ReducibleCounts> reducibles;  // when a concrete group was given
    std::string end_count;                      // "±|H|" or a concrete count
    enum class Verdict { Contradiction, Inconclusive } verdict = Verdict::Inconclusive;
    std::string detail;

    std::string verdict_str() const {
        return verdict == Verdict::Contradiction ? "contradiction" : "inconclusive";
    }
};

/// Prunes patterns by the energy budget kappa. Type (i) dies when every
/// non-minimal cylinder on the incoming end costs more than kappa; type (ii)
/// dies when every outgoing atom's minimal cylinder energy exceeds kappa;
/// type (iii) survives on the exact budget kappa + 0.
std::vector<PatternFate> energy_prune(const std::vector<EndPattern>& patterns,
                                      const CobordismProfile& profile, const Rational& kappa,
                                      std::string* blocker = nullptr);

/// Builds the cobordism profile of M (one incoming P; the remaining summands
/// reversed as outgoing ends) and runs the end-count audit of the moduli
/// space at the minimal P-cylinder energy. Throws std::domain_error when M
/// has no positively oriented P summand.
AuditReport positive_definite_audit(const Manifold& m,
                                    const std::optional<FiniteAbelianGroup>& group = {});

/// Audit of an explicit profile (for injected configurations).
AuditReport positive_definite_audit_profile(const CobordismProfile& profile);

struct TheoremReport {
    Manifold manifold;
    std::int64_t m = 0;
    std::int64_t k = 0;
    NegativeDefiniteVerdict negative;
    std::optional<AuditReport> positive;      // absent when m = 0
    std::string positive_detail;              // reason when absent
    bool symplectic_obstructed = false;
    std::string conclusion;
    std::vector<std::string> citations;
};

/// Combined verdicts for m*P # -k*O: the negative-definite d-invariant
/// obstruction, the positive-definite end-count audit, and, when both
/// obstruct, the symplectic non-embedding consequence.
TheoremReport main_theorem_audit(std::int64_t m, std::int64_t k);

}  // namespace defobs

#endif
