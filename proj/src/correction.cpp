#include "defobs/correction.hpp"

#include <stdexcept>

#include "defobs/registry.hpp"

namespace defobs {

DInvariantTable surgery2_d_table(const TorusKnot& knot) {
    SymmetrizedAlexander delta = SymmetrizedAlexander::torus_knot(knot.p, knot.q);
    DInvariantTable t;
    t.set(SpinCLabel{0}, Rational(1, 4) - Rational(2 * delta.torsion_coefficient(0)));
    t.set(SpinCLabel{1}, Rational(-1, 4) - Rational(2 * delta.torsion_coefficient(1)));
    return t;
}

DInvariantTable connected_sum_d(const std::vector<DInvariantTable>& tables) {
    constexpr std::int64_t kMaxEntries = std::int64_t{1} << 16;
    std::int64_t total = 1;
    for (const auto& t : tables) {
        if (t.size() == 0) throw std::domain_error("connected_sum_d: empty summand table");
        total = checked_mul(total, static_cast<std::int64_t>(t.size()));
        if (total > kMaxEntries)
            throw std::domain_error("connected_sum_d: product table too large; "
                                    "use max_correction_term");
    }
    DInvariantTable acc = DInvariantTable::s3();
    for (const auto& t : tables) {
        DInvariantTable next;
        for (const auto& [label_a, da] : acc.entries()) {
            for (const auto& [label_b, db] : t.entries()) {
                SpinCLabel label = label_a;
                label.insert(label.end(), label_b.begin(), label_b.end());
                next.set(std::move(label), da + db);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

DInvariantTable atom_d_table(const Atom& atom) {
    AtomRecord rec = lookup(atom);
    if (!rec.d_table)
        throw std::domain_error("no d-invariant data for atom " + atom.str());
    return *rec.d_table;
}

}  // namespace

Rational max_correction_term(const Manifold& m) {
    // Additivity under connected sum: the maximum of the product table is the
    // sum of per-summand maxima, so the product is never materialized.
    Rational total(0);
    for (const auto& [atom, mult] : m.summands()) {
        Rational atom_max = atom_d_table(atom).max_value();
        total += Rational(mult) * atom_max;
    }
    return total;
}

std::int64_t spin_c_count(const Manifold& m) {
    std::int64_t n = 1;
    for (const auto& [atom, mult] : m.summands()) {
        std::int64_t h = lookup(atom).h1.order();
        for (std::int64_t i = 0; i < mult; ++i) n = checked_mul(n, h);
    }
    return n;
}

std::optional<std::pair<std::int64_t, std::int64_t>> match_p_o_family(const Manifold& m) {
    std::int64_t p_mult = 0;
    std::int64_t o_mult = 0;
    for (const auto& [atom, mult] : m.summands()) {
        if (atom == Atom::poincare())
            p_mult = mult;
        else if (atom == Atom::octahedral().reversed())
            o_mult = mult;
        else
            return std::nullopt;
    }
    if (p_mult < 1 || o_mult < 1) return std::nullopt;
    return std::make_pair(p_mult, o_mult);
}

NegativeDefiniteVerdict negative_definite_obstruction(const Manifold& m) {
    NegativeDefiniteVerdict v;
    v.witness = max_correction_term(m);
    v.family = match_p_o_family(m);
    // The sharper odd-k bound applies only to the literal m*P # -k*O family;
    // arbitrary sums get the conservative threshold 0.
    v.threshold = Rational(0);
    if (v.family && v.family->second % 2 != 0) v.threshold = Rational(1, 4);
    v.obstructed = v.witness < v.threshold;
    return v;
}

}  // namespace defobs
