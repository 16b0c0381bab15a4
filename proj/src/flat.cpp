#include "defobs/flat.hpp"

#include <algorithm>
#include <stdexcept>

#include "defobs/registry.hpp"

namespace defobs {

std::string RotationTriple::str() const {
    return "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
}

ModOne chern_simons(std::int64_t p, std::int64_t q, std::int64_t r, const RotationTriple& t) {
    if (!(0 < t.k && t.k < p && 0 < t.l && t.l < q && 0 < t.m && t.m < r))
        throw std::domain_error("chern_simons: rotation numbers out of bounds for " +
                                t.str());
    std::int64_t s = checked_add(checked_add(checked_mul(t.k, checked_mul(q, r)),
                                             checked_mul(t.l, checked_mul(p, r))),
                                 checked_mul(t.m, checked_mul(p, q)));
    std::int64_t lattice = checked_mul(4, checked_mul(p, checked_mul(q, r)));
    return mod_one(Rational(checked_mul(s, s), lattice));
}

std::string FlatConnectionRecord::kind_str() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::Central: return "central";
        case Kind::Irreducible: return "irreducible";
    }
    return "?";
}

std::vector<FlatConnectionRecord> enumerate_flat(std::int64_t p, std::int64_t q, std::int64_t r,
                                                 const OracleConfig& config) {
    std::vector<FlatConnectionRecord> records;
    records.push_back(FlatConnectionRecord{});  // trivial connection, CS = 0

    // Admissibility is decided by the numeric oracle; the candidate pool is
    // every in-bounds triple.
    for (const OracleSolution& sol : su2_oracle(p, q, r, config)) {
        if (sol.status == OracleStatus::Undecided)
            throw std::logic_error("enumerate_flat: oracle undecided on triple " +
                                   sol.triple.str() + " (" + sol.note + ")");
        if (sol.status != OracleStatus::Accepted) continue;
        FlatConnectionRecord rec;
        rec.kind = FlatConnectionRecord::Kind::Irreducible;
        rec.triple = sol.triple;
        rec.cs = chern_simons(p, q, r, sol.triple);
        records.push_back(rec);
    }
    return records;
}

std::vector<FlatConnectionRecord> flat_records(const Atom& atom, const OracleConfig& config) {
    AtomRecord rec = lookup(atom);
    if (!rec.brieskorn_params)
        throw std::domain_error("no flat connection data for atom " + atom.str());
    const auto [p, q, r] = *rec.brieskorn_params;
    std::vector<FlatConnectionRecord> records = enumerate_flat(p, q, r, config);
    if (atom.orientation() < 0)
        for (auto& rc : records) rc.cs = rc.cs.negated();
    return records;
}

std::vector<ModOne> cs_spectrum(const Atom& atom, const OracleConfig& config) {
    std::vector<ModOne> values;
    for (const auto& rc : flat_records(atom, config)) values.push_back(rc.cs);
    std::sort(values.begin(), values.end());
    return values;
}

ConnKind parse_conn_kind(std::string_view name) {
    if (name == "any") return ConnKind::Any;
    if (name == "irreducible" || name == "irr") return ConnKind::Irreducible;
    if (name == "central") return ConnKind::Central;
    if (name == "trivial") return ConnKind::Trivial;
    throw std::invalid_argument("unknown connection kind '" + std::string(name) +
                                "' (expected any|irreducible|central|trivial)");
}

std::string conn_kind_str(ConnKind k) {
    switch (k) {
        case ConnKind::Any: return "any";
        case ConnKind::Irreducible: return "irreducible";
        case ConnKind::Central: return "central";
        case ConnKind::Trivial: return "trivial";
    }
    return "?";
}

namespace {

bool kind_matches(const FlatConnectionRecord& rec, ConnKind want) {
    switch (want) {
        case ConnKind::Any:
            return true;
        case ConnKind::Irreducible:
            return rec.kind == FlatConnectionRecord::Kind::Irreducible;
        case ConnKind::Trivial:
            return rec.kind == FlatConnectionRecord::Kind::Trivial;
        case ConnKind::Central:
            // the trivial connection is central
            return rec.kind == FlatConnectionRecord::Kind::Central ||
                   rec.kind == FlatConnectionRecord::Kind::Trivial;
    }
    return false;
}

}  // namespace

Rational min_cylinder_energy(const Atom& y, ConnKind from, ConnKind to, bool beyond_minimal,
                             const OracleConfig& config) {
    AtomRecord rec = lookup(y);
    if (!rec.brieskorn_params) {
        if (rec.pi1_order) return Rational(1, *rec.pi1_order);
        throw std::domain_error("min_cylinder_energy: no flat connection data and no finite "
                                "fundamental group for " + y.str());
    }

    std::vector<FlatConnectionRecord> records = flat_records(y, config);
    std::vector<Rational> kappas;
    for (const auto& a : records) {
        if (!kind_matches(a, from)) continue;
        for (const auto& b : records) {
            if (!kind_matches(b, to)) continue;
            ModOne diff = a.cs - b.cs;
            // kappa == CS(a) - CS(b) mod 1 and kappa > 0: equal CS values
            // first contribute at the integer 1.
            kappas.push_back(diff.is_zero() ? Rational(1) : diff.value());
        }
    }
    if (kappas.empty())
        throw std::domain_error("min_cylinder_energy: no flat connection pair matches kinds");
    std::sort(kappas.begin(), kappas.end());
    if (!beyond_minimal) return kappas.front();
    Rational smallest = kappas.front();
    for (const Rational& k : kappas)
        if (k > smallest) return k;
    throw std::domain_error("min_cylinder_energy: no energy beyond the minimal pair");
}

}  // namespace defobs
