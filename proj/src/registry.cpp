#include "defobs/registry.hpp"

#include <stdexcept>

#include "defobs/correction.hpp"

namespace defobs {

namespace {

DInvariantTable single_entry_table(Rational d) {
    DInvariantTable t;
    t.set(SpinCLabel{}, d);
    return t;
}

AtomRecord poincare_record() {
    AtomRecord rec;
    rec.pi1_order = 120;  // binary icosahedral group
    rec.h1 = FiniteAbelianGroup{};
    rec.d_table = single_entry_table(Rational(2));
    rec.brieskorn_params = {{2, 3, 5}};
    return rec;
}

AtomRecord octahedral_record() {
    // O = S^3_{-2}(left trefoil); |H1| = 2 matches the two spin-c structures
    // carried by the surgery description. d(O) is the orientation reverse of
    // the +2-surgery table on T(2,3).
    AtomRecord rec;
    rec.pi1_order = 48;  // binary octahedral group
    rec.h1 = FiniteAbelianGroup{{2}};
    DInvariantTable t;
    t.set(SpinCLabel{0}, Rational(7, 4));
    t.set(SpinCLabel{1}, Rational(1, 4));
    rec.d_table = t;
    return rec;
}

AtomRecord brieskorn_record(const std::array<std::int64_t, 3>& pqr) {
    // Integer homology sphere; correction terms of Brieskorn spheres other
    // than sigma(2,3,5) are out of scope, so no d-table is provided.
    AtomRecord rec;
    rec.h1 = FiniteAbelianGroup{};
    rec.brieskorn_params = pqr;
    rec.pi1_order = std::nullopt;  // infinite for every sigma(p,q,r) != sigma(2,3,5)
    return rec;
}

AtomRecord surgery2_record(const TorusKnot& knot) {
    AtomRecord rec;
    rec.h1 = FiniteAbelianGroup{{2}};
    rec.d_table = surgery2_d_table(knot);
    // +2-surgery on T(p,q) is Seifert fibered over S^2(p, q, |2-pq|); among
    // the knots reaching this branch (T(2,3) is canonicalized to -O) only the
    // unknot yields a spherical manifold, the lens space L(2,1).
    if (knot.p == 1)
        rec.pi1_order = 2;
    else
        rec.pi1_order = std::nullopt;
    return rec;
}

void check_record(const AtomRecord& rec) {
    if (rec.pi1_order && rec.pi1_order.value() % rec.h1.order() != 0)
        throw std::logic_error("registry: |H1| must divide |pi1| for spherical atoms");
    if (rec.d_table && static_cast<std::int64_t>(rec.d_table->size()) != rec.h1.order())
        throw std::logic_error("registry: d-table size must equal |H1|");
}

}  // namespace

AtomRecord lookup(const Atom& atom) {
    AtomRecord rec;
    switch (atom.kind()) {
        case AtomKind::Poincare:
            rec = poincare_record();
            break;
        case AtomKind::Octahedral:
            rec = octahedral_record();
            break;
        case AtomKind::Brieskorn:
            rec = brieskorn_record(atom.brieskorn_params());
            break;
        case AtomKind::SurgeryTwo:
            rec = surgery2_record(atom.knot());
            break;
        default:
            throw std::domain_error("lookup: unregistered atom kind");
    }
    check_record(rec);
    if (atom.orientation() < 0 && rec.d_table) rec.d_table = rec.d_table->negated();
    return rec;
}

}  // namespace defobs
