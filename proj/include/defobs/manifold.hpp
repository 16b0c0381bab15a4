#ifndef DEFOBS_MANIFOLD_HPP
#define DEFOBS_MANIFOLD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace defobs {

enum class AtomKind {
    Poincare,    // P = sigma(2,3,5), boundary of the negative definite E8 plumbing
    Octahedral,  // O: Seifert invariants (-2; 1/2, 2/3, 3/4); -O = +2-surgery on T(2,3)
    Brieskorn,   // sigma(p,q,r), pairwise coprime, 2 <= p < q < r
    SurgeryTwo,  // +2-surgery on a torus knot T(p,q)
};

struct TorusKnot {
    std::int64_t p = 1;
    std::int64_t q = 1;
    auto operator<=>(const TorusKnot&) const = default;
};

/// One oriented prime summand. Constructors canonicalize aliases:
/// sigma(2,3,5) becomes P, and surgery(T(2,3),2) becomes -O.
class Atom {
public:
    static Atom poincare();
    static Atom octahedral();
    static Atom brieskorn(std::int64_t p, std::int64_t q, std::int64_t r);
    static Atom surgery2(TorusKnot knot);

    AtomKind kind() const { return kind_; }
    int orientation() const { return orientation_; }
    const std::array<std::int64_t, 3>& brieskorn_params() const { return pqr_; }
    const TorusKnot& knot() const { return knot_; }

    Atom reversed() const;

    /// Canonical descriptor fragment, e.g. "P", "-O", "sigma(2,3,7)",
    /// "surgery(T(2,5),2)".
    std::string str() const;

    /// Descriptor fragment without the orientation sign.
    std::string base_str() const;

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;

private:
    AtomKind kind_ = AtomKind::Poincare;
    std::array<std::int64_t, 3> pqr_{0, 0, 0};
    TorusKnot knot_{0, 0};
    int orientation_ = +1;
};

/// Oriented connected sum of atoms with multiplicities; the empty sum is S^3.
/// Summands are an unordered multiset: descriptors with equal multisets
/// compare equal.
class Manifold {
public:
    Manifold() = default;

    void add(const Atom& atom, std::int64_t multiplicity);
    const std::map<Atom, std::int64_t>& summands() const { return summands_; }
    bool is_s3() const { return summands_.empty(); }

    std::int64_t multiplicity(const Atom& atom) const;
    Manifold reversed() const;

    /// Canonical descriptor; parse_descriptor(str()) reproduces the manifold.
    std::string str() const;

    bool operator==(const Manifold&) const = default;

private:
    std::map<Atom, std::int64_t> summands_;
};

/// Parse error carrying the offending position in the input text.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses the descriptor grammar:
///   manifold := term { "#" term } | "S3"
///   term     := [ integer "*" ] atom
///   atom     := [ "-" ] base
///   base     := "P" | "O" | "sigma(p,q,r)" | "surgery(T(p,q),2)"
/// Whitespace is insignificant; "-" toggles orientation and may precede the
/// multiplicity ("-25*O") or the base ("25*-O").
Manifold parse_descriptor(std::string_view text);

/// Parses a descriptor consisting of a single atom (multiplicity 1).
Atom parse_atom(std::string_view text);

}  // namespace defobs

#endif
