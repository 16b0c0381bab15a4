#ifndef DEFOBS_FLAT_HPP
#define DEFOBS_FLAT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "defobs/manifold.hpp"
#include "defobs/rational.hpp"

namespace defobs {

/// Rotation numbers (k, l, m) of an irreducible flat connection on
/// sigma(p,q,r): 0 < k < p, 0 < l < q, 0 < m < r.
struct RotationTriple {
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::int64_t m = 0;
    auto operator<=>(const RotationTriple&) const = default;
    std::string str() const;
};

/// Exact Chern-Simons value of the flat connection with the given rotation
/// numbers: (k*q*r + l*p*r + m*p*q)^2 / (4pqr) mod Z. Applies to any
/// in-bounds triple; whether the triple is realized by a representation is
/// decided separately by the oracle.
ModOne chern_simons(std::int64_t p, std::int64_t q, std::int64_t r, const RotationTriple& t);

struct FlatConnectionRecord {
    enum class Kind { Trivial, Central, Irreducible };
    Kind kind = Kind::Trivial;
    std::optional<RotationTriple> triple;  // present for irreducible records
    ModOne cs;

    std::string kind_str() const;
};

// ---------------------------------------------------------------------------
// Numeric representation-variety oracle.
//
// Searches for conjugacy classes of irreducible representations of the
// Seifert presentation of pi_1(sigma(p,q,r)) into the unit quaternions. Each
// candidate triple assigns generator rotation angles (k pi/p, l pi/q, m pi/r);
// a spherical-triangle composability test gates an explicit quaternion
// construction, and every group relator is then verified numerically.
// ---------------------------------------------------------------------------

struct OracleConfig {
    double residual_tol = 1e-9;  // max allowed ||relator - identity||
    double snap_tol = 1e-6;      // max distance from float CS to the 1/(4pqr) lattice
    std::int64_t max_pqr = 2 * 3 * 13;

    /// residual_tol from DEFOBS_ORACLE_TOL when set, defaults otherwise.
    static OracleConfig from_env();
};

enum class OracleStatus { Accepted, Rejected, Undecided };

struct OracleSolution {
    RotationTriple triple;
    std::array<double, 3> holonomy_angles{};  // radians, generator order
    double cs_approx = 0.0;
    ModOne cs_exact;        // snapped to the 1/(4pqr) lattice
    OracleStatus status = OracleStatus::Rejected;
    double residual = 0.0;  // worst relator residual of the constructed rep
    std::string note;       // rejection/undecided reason
};

/// Runs the oracle over every in-bounds triple; nothing is silently dropped.
/// Entries are ordered by triple. Throws std::domain_error when pqr exceeds
/// the configured bound or the parameters are invalid.
std::vector<OracleSolution> su2_oracle(std::int64_t p, std::int64_t q, std::int64_t r,
                                       const OracleConfig& config = {});

/// Seifert presentation data for sigma(p,q,r): integers (b0, b1, b2, b3) with
/// b1*qr + b2*pr + b3*pq + b0*pqr = 1 and 0 < b_i < (p,q,r)_i.
std::array<std::int64_t, 4> seifert_presentation(std::int64_t p, std::int64_t q, std::int64_t r);

/// Exact combinatorial admissibility test (generator parities plus strict
/// spherical-triangle inequality in rational angle arithmetic). Cross-check
/// only: enumerate_flat treats the numeric oracle as authoritative.
std::vector<RotationTriple> admissible_triples_closed_form(std::int64_t p, std::int64_t q,
                                                           std::int64_t r);

/// All flat connections of sigma(p,q,r) up to gauge: the trivial connection
/// plus one irreducible record per oracle-accepted triple, in triple order.
/// Throws std::logic_error if any candidate comes back undecided.
std::vector<FlatConnectionRecord> enumerate_flat(std::int64_t p, std::int64_t q, std::int64_t r,
                                                 const OracleConfig& config = {});

/// Flat connection records of an oriented atom (orientation negates CS).
/// Requires the atom to carry Brieskorn data; throws std::domain_error
/// otherwise.
std::vector<FlatConnectionRecord> flat_records(const Atom& atom, const OracleConfig& config = {});

/// Sorted CS value multiset of an oriented atom.
std::vector<ModOne> cs_spectrum(const Atom& atom, const OracleConfig& config = {});

/// Kind filter for flat connections. Central matches everything with
/// CS in {0, 1/2}, so the trivial connection counts as central.
enum class ConnKind { Any, Irreducible, Central, Trivial };

ConnKind parse_conn_kind(std::string_view name);  // throws std::invalid_argument
std::string conn_kind_str(ConnKind k);

/// Minimal positive energy kappa of a cylinder moduli space R x Y between
/// flat connections of the requested kinds: kappa == CS(alpha) - CS(beta)
/// mod 1, minimized over matching pairs (a pair with equal CS contributes
/// kappa = 1). With beyond_minimal, every pair attaining the minimum is
/// excluded and the next distinct value is returned. When the atom has no
/// enumerable flat data but |pi_1| = n is finite, returns the covering-space
/// lower bound 1/n. Throws std::domain_error when neither is available.
Rational min_cylinder_energy(const Atom& y, ConnKind from = ConnKind::Any,
                             ConnKind to = ConnKind::Any, bool beyond_minimal = false,
                             const OracleConfig& config = {});

}  // namespace defobs

#endif
