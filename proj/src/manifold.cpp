#include "defobs/manifold.hpp"

#include <cctype>
#include <numeric>

namespace defobs {

Atom Atom::poincare() {
    return Atom{};
}

Atom Atom::octahedral() {
    Atom a;
    a.kind_ = AtomKind::Octahedral;
    return a;
}

Atom Atom::brieskorn(std::int64_t p, std::int64_t q, std::int64_t r) {
    if (p < 2 || !(p < q && q < r))
        throw std::domain_error("brieskorn: parameters must satisfy 2 <= p < q < r");
    if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
        throw std::domain_error("brieskorn: parameters must be pairwise coprime");
    if (p == 2 && q == 3 && r == 5) return poincare();  // sigma(2,3,5) = P
    Atom a;
    a.kind_ = AtomKind::Brieskorn;
    a.pqr_ = {p, q, r};
    return a;
}

Atom Atom::surgery2(TorusKnot knot) {
    if (knot.p < 1 || knot.q < 1)
        throw std::domain_error("surgery: torus knot parameters must be positive");
    if (std::gcd(knot.p, knot.q) != 1)
        throw std::domain_error("surgery: torus knot parameters must be coprime");
    if (knot.p > knot.q) std::swap(knot.p, knot.q);
    if (knot.p == 1) knot = TorusKnot{1, 1};               // any T(1,q) is the unknot
    if (knot.p == 2 && knot.q == 3) return octahedral().reversed();  // S^3_2(T(2,3)) = -O
    Atom a;
    a.kind_ = AtomKind::SurgeryTwo;
    a.knot_ = knot;
    return a;
}

Atom Atom::reversed() const {
    Atom a = *this;
    a.orientation_ = -orientation_;
    return a;
}

std::string Atom::base_str() const {
    switch (kind_) {
        case AtomKind::Poincare:
            return "P";
        case AtomKind::Octahedral:
            return "O";
        case AtomKind::Brieskorn:
            return "sigma(" + std::to_string(pqr_[0]) + "," + std::to_string(pqr_[1]) + "," +
                   std::to_string(pqr_[2]) + ")";
        case AtomKind::SurgeryTwo:
            return "surgery(T(" + std::to_string(knot_.p) + "," + std::to_string(knot_.q) +
                   "),2)";
    }
    return "?";
}

std::string Atom::str() const {
    return (orientation_ < 0 ? "-" : "") + base_str();
}

void Manifold::add(const Atom& atom, std::int64_t multiplicity) {
    if (multiplicity < 1) throw std::domain_error("manifold: multiplicity must be positive");
    summands_[atom] += multiplicity;
}

std::int64_t Manifold::multiplicity(const Atom& atom) const {
    auto it = summands_.find(atom);
    return it == summands_.end() ? 0 : it->second;
}

Manifold Manifold::reversed() const {
    Manifold m;
    for (const auto& [atom, mult] : summands_) m.add(atom.reversed(), mult);
    return m;
}

std::string Manifold::str() const {
    if (summands_.empty()) return "S3";
    std::string s;
    for (const auto& [atom, mult] : summands_) {
        if (!s.empty()) s += " # ";
        if (atom.orientation() < 0) s += "-";
        if (mult != 1) s += std::to_string(mult) + "*";
        s += atom.base_str();
    }
    return s;
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("descriptor error at position " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

namespace {

class DescriptorParser {
public:
    explicit DescriptorParser(std::string_view text) : text_(text) {}

    Manifold parse_manifold() {
        skip_ws();
        if (peek_word("S3")) {
            pos_ += 2;
            skip_ws();
            expect_end();
            return Manifold{};
        }
        Manifold m;
        parse_term(m);
        skip_ws();
        while (!at_end()) {
            expect('#');
            parse_term(m);
            skip_ws();
        }
        return m;
    }

    Atom parse_single_atom() {
        skip_ws();
        Atom a = parse_atom_token();
        skip_ws();
        expect_end();
        return a;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_word(std::string_view w) const {
        if (text_.substr(pos_, w.size()) != w) return false;
        std::size_t after = pos_ + w.size();
        if (after < text_.size()) {
            char c = text_[after];
            if (std::isalnum(static_cast<unsigned char>(c))) return false;
        }
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    void expect_end() {
        if (!at_end()) throw ParseError(pos_, "unexpected trailing input");
    }

    std::int64_t parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(start, "expected integer");
        std::int64_t v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            std::int64_t digit = text_[i] - '0';
            if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, digit, &v))
                throw ParseError(start, "integer too large");
        }
        return v;
    }

    void parse_term(Manifold& m) {
        skip_ws();
        int sign = +1;
        if (peek() == '-') {
            sign = -sign;
            ++pos_;
            skip_ws();
        }
        std::int64_t mult = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t at = pos_;
            mult = parse_integer();
            if (mult < 1) throw ParseError(at, "multiplicity must be positive");
            expect('*');
        }
        Atom a = parse_atom_token();
        if (sign < 0) a = a.reversed();
        m.add(a, mult);
    }

    Atom parse_atom_token() {
        skip_ws();
        int sign = +1;
        while (peek() == '-') {
            sign = -sign;
            ++pos_;
            skip_ws();
        }
        Atom base = parse_base();
        return sign < 0 ? base.reversed() : base;
    }

    Atom parse_base() {
        skip_ws();
        std::size_t at = pos_;
        if (peek_word("P")) {
            ++pos_;
            return Atom::poincare();
        }
        if (peek_word("O")) {
            ++pos_;
            return Atom::octahedral();
        }
        if (text_.substr(pos_, 6) == "sigma(") {
            pos_ += 6;
            std::int64_t p = parse_integer();
            expect(',');
            std::int64_t q = parse_integer();
            expect(',');
            std::int64_t r = parse_integer();
            expect(')');
            try {
                return Atom::brieskorn(p, q, r);
            } catch (const std::domain_error& e) {
                throw ParseError(at, e.what());
            }
        }
        if (text_.substr(pos_, 10) == "surgery(T(") {
            pos_ += 10;
            std::int64_t p = parse_integer();
            expect(',');
            std::int64_t q = parse_integer();
            expect(')');
            expect(',');
            skip_ws();
            std::size_t coeff_at = pos_;
            std::int64_t coeff = parse_integer();
            if (coeff != 2)
                throw ParseError(coeff_at, "only +2-surgery is supported");
            expect(')');
            try {
                return Atom::surgery2(TorusKnot{p, q});
            } catch (const std::domain_error& e) {
                throw ParseError(at, e.what());
            }
        }
        // name-like token for the error message
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            ++end;
        std::string name(text_.substr(pos_, end == pos_ ? 1 : end - pos_));
        throw ParseError(pos_, "unknown atom name '" + name + "'");
    }
};

}  // namespace

Manifold parse_descriptor(std::string_view text) {
    return DescriptorParser(text).parse_manifold();
}

Atom parse_atom(std::string_view text) {
    return DescriptorParser(text).parse_single_atom();
}

}  // namespace defobs
