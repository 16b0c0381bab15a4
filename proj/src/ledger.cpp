#include "defobs/ledger.hpp"

#include <algorithm>
#include <stdexcept>

#include "defobs/registry.hpp"

namespace defobs {

ReducibleCounts reducible_counts(const FiniteAbelianGroup& h) {
    // Reducibles up to gauge are characters of H up to conjugation; the
    // central ones are the fixed points of conjugation (real characters),
    // the abelian ones come in conjugate pairs.
    HomCounts counts = hom_counts(h);
    std::int64_t z = counts.to_pm1;
    std::int64_t a = (counts.to_circle - z) / 2;
    return ReducibleCounts{z, a};
}

std::string RuleSet::str() const {
    std::string s = "cylinder-index>=1 ";
    s += cylinder_index_at_least_one ? "on" : "off";
    s += ", reducible-intermediate ";
    s += reducible_needs_incoming_break ? "on" : "off";
    if (require_r_le_n) s += ", r<=n on";
    return s;
}

int EndPattern::total_index() const {
    int total = ind_a + 3 * r;
    for (int i : incoming_indices) total += i;
    for (int i : outgoing_indices) total += i;
    return total;
}

EndPattern::Type EndPattern::type() const {
    if (ind_a == -3 && r == 1 && n == 1 && m == 0) return Type::ReducibleGluing;
    if (ind_a >= 0 && r == 0 && n == 1 && m == 0) return Type::IncomingBreak;
    if (ind_a >= 0 && r == 0 && n == 0 && m == 1) return Type::OutgoingBreak;
    return Type::Other;
}

std::string EndPattern::type_str() const {
    switch (type()) {
        case Type::IncomingBreak: return "(i)";
        case Type::OutgoingBreak: return "(ii)";
        case Type::ReducibleGluing: return "(iii)";
        case Type::Other: return "(-)";
    }
    return "(-)";
}

std::string EndPattern::str() const {
    auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r) +
           " ind(A)=" + std::to_string(ind_a) + " B=" + list(incoming_indices) +
           " C=" + list(outgoing_indices);
}

namespace {

// Non-decreasing integer sequences of the given length and sum, entries >= min_entry.
void factor_multisets(int length, int sum, int min_entry, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (length == 0) {
        if (sum == 0) out.push_back(current);
        return;
    }
    for (int v = min_entry; v * length <= sum; ++v) {
        current.push_back(v);
        factor_multisets(length - 1, sum - v, v, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> multisets(int length, int sum, int floor) {
    std::vector<std::vector<int>> out;
    if (length == 0) {
        if (sum == 0) out.push_back({});
        return out;
    }
    if (sum < length * floor) return out;
    std::vector<int> current;
    factor_multisets(length, sum, floor, current, out);
    return out;
}

}  // namespace

std::vector<EndPattern> classify_end_patterns(int total_index, const RuleSet& rules) {
    if (total_index < 0 || total_index > 8)
        throw std::domain_error("classify_end_patterns: total index must lie in [0, 8]");

    const int floor = rules.cylinder_index_at_least_one ? 1 : 0;
    std::vector<EndPattern> out;

    // A broken trajectory has at least one cylinder factor, and with factor
    // indices >= floor the counts n, m are bounded by the index budget.
    const int max_factors = total_index + 3 + 1;  // ind(A) >= -3 pays for at most this many
    for (int n = 0; n <= max_factors; ++n) {
        for (int m = 0; m + n <= max_factors; ++m) {
            if (n + m == 0) continue;  // (n, m, r) != (0, 0, 0) and r <= n + m
            for (int r = 0; r <= n + m; ++r) {
                if (rules.require_r_le_n && r > n) continue;
                for (int ind_a = -3; ind_a <= total_index; ++ind_a) {
                    if (ind_a > -3 && ind_a < 0) continue;  // -3 (reducible) or >= 0
                    if (rules.reducible_needs_incoming_break && ind_a == -3 &&
                        (r < 1 || n < 1))
                        continue;
                    // eq:index-2 (structural)
                    if (total_index < n + m + 3 * r + ind_a) continue;
                    int budget = total_index - ind_a - 3 * r;
                    if (budget < 0) continue;
                    for (int b_sum = n * floor; b_sum <= budget - m * floor; ++b_sum) {
                        int c_sum = budget - b_sum;
                        for (const auto& bs : multisets(n, b_sum, floor)) {
                            for (const auto& cs : multisets(m, c_sum, floor)) {
                                EndPattern pat;
                                pat.n = n;
                                pat.m = m;
                                pat.r = r;
                                pat.ind_a = ind_a;
                                pat.incoming_indices = bs;
                                pat.outgoing_indices = cs;
                                if (pat.total_index() != total_index)
                                    throw std::logic_error("end pattern index mismatch");
                                out.push_back(std::move(pat));
                            }
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void validate_profile(const CobordismProfile& profile) {
    if (profile.b1 != 0 || profile.b_plus != 0)
        throw std::domain_error("audit requires b_1(W) = b^+(W) = 0");
    auto check_boundary = [](const Atom& a) {
        if (!lookup(a).h1.is_two_torsion())
            throw std::domain_error("audit requires two-torsion homology sphere boundary; " +
                                    a.str() + " has H1 = " + lookup(a).h1.str());
    };
    check_boundary(profile.incoming);
    for (const Atom& a : profile.outgoing) check_boundary(a);
}

}  // namespace

int moduli_dimension(const CobordismProfile& profile, int incoming_factor_index) {
    validate_profile(profile);
    // ind(B) + 3r + ind(Theta) with r = 1 and the flat-reducible constant -3.
    return incoming_factor_index + 3 - 3;
}

std::vector<PatternFate> energy_prune(const std::vector<EndPattern>& patterns,
                                      const CobordismProfile& profile, const Rational& kappa,
                                      std::string* blocker) {
    std::vector<PatternFate> out;
    if (blocker) blocker->clear();

    for (const EndPattern& pat : patterns) {
        PatternFate fate;
        fate.pattern = pat;
        switch (pat.type()) {
            case EndPattern::Type::IncomingBreak: {
                // Breaking through an irreducible intermediate on the incoming
                // end costs at least the minimal non-minimal cylinder energy.
                Rational gap = min_cylinder_energy(profile.incoming, ConnKind::Any,
                                                   ConnKind::Any, /*beyond_minimal=*/true);
                if (gap > kappa) {
                    fate.fate = Fate::PrunedByEnergy;
                    fate.reason = "incoming cylinder needs energy >= " + gap.str() + " > " +
                                  kappa.str();
                } else {
                    fate.fate = Fate::Survives;
                    fate.reason = "incoming gap " + gap.str() + " <= " + kappa.str();
                    if (blocker && blocker->empty()) *blocker = fate.reason;
                }
                break;
            }
            case EndPattern::Type::OutgoingBreak: {
                // Prunable only when every outgoing end is too expensive.
                fate.fate = Fate::PrunedByEnergy;
                if (profile.outgoing.empty()) {
                    fate.reason = "no outgoing ends";
                    break;
                }
                for (const Atom& a : profile.outgoing) {
                    // outgoing factors run from a flat connection to the
                    // trivial one (the cylinder ends where W's limit is theta')
                    Rational gap;
                    try {
                        gap = min_cylinder_energy(a, ConnKind::Any, ConnKind::Trivial);
                    } catch (const std::domain_error&) {
                        fate.fate = Fate::Survives;
                        fate.reason = "no energy bound for outgoing " + a.str();
                        break;
                    }
                    if (!(gap > kappa)) {
                        fate.fate = Fate::Survives;
                        fate.reason = "outgoing " + a.str() + " admits cylinder energy " +
                                      gap.str() + " <= " + kappa.str();
                        break;
                    }
                }
                if (fate.fate == Fate::PrunedByEnergy)
                    fate.reason = "every outgoing cylinder needs energy > " + kappa.str();
                else if (blocker && blocker->empty())
                    *blocker = fate.reason;
                break;
            }
            case EndPattern::Type::ReducibleGluing: {
                // Budget: the minimal incoming cylinder at kappa plus the flat
                // reducible on W at 0.
                Rational minimal =
                    min_cylinder_energy(profile.incoming, ConnKind::Irreducible,
                                        ConnKind::Trivial);
                fate.fate = Fate::Survives;
                fate.reason = "energy budget " + minimal.str() + " + 0 = " + kappa.str();
                if (minimal != kappa) {
                    fate.fate = Fate::PrunedByEnergy;
                    fate.reason = "minimal incoming cylinder " + minimal.str() +
                                  " misses budget " + kappa.str();
                }
                break;
            }
            case EndPattern::Type::Other: {
                fate.fate = Fate::Survives;
                fate.reason = "pattern outside the audited classification";
                if (blocker && blocker->empty()) *blocker = fate.reason;
                break;
            }
        }
        out.push_back(std::move(fate));
    }
    return out;
}

AuditReport positive_definite_audit_profile(const CobordismProfile& profile) {
    validate_profile(profile);

    AuditReport report;
    report.kappa = min_cylinder_energy(profile.incoming, ConnKind::Irreducible,
                                       ConnKind::Trivial);
    report.dimension = moduli_dimension(profile);
    if (report.dimension != 1)
        throw std::logic_error("audit expects a 1-dimensional moduli space");

    std::string blocker;
    std::vector<EndPattern> patterns = classify_end_patterns(report.dimension, default_rules());
    report.patterns = energy_prune(patterns, profile, report.kappa, &blocker);

    bool only_reducible_gluing_survives = true;
    bool reducible_gluing_survives = false;
    for (const PatternFate& f : report.patterns) {
        if (f.fate != Fate::Survives) continue;
        if (f.pattern.type() == EndPattern::Type::ReducibleGluing)
            reducible_gluing_survives = true;
        else
            only_reducible_gluing_survives = false;
    }

    if (profile.quotient_group) {
        report.reducibles = reducible_counts(*profile.quotient_group);
        std::int64_t count = report.reducibles->z + 2 * report.reducibles->a;
        report.end_count = "±" + std::to_string(count);
    } else {
        report.end_count = "±|H|";
    }

    if (only_reducible_gluing_survives && reducible_gluing_survives) {
        // z + 2a = |H| >= 1 for every finite H, and all such ends carry the
        // same orientation, so the signed end count cannot vanish.
        report.verdict = AuditReport::Verdict::Contradiction;
        report.detail = "all ends come from reducible gluing, " + report.end_count +
                        " != 0 of them with one orientation; an oriented 1-manifold has "
                        "zero ends counted with sign";
    } else {
        report.verdict = AuditReport::Verdict::Inconclusive;
        report.detail = blocker.empty() ? "unprunable end pattern" : blocker;
    }
    return report;
}

AuditReport positive_definite_audit(const Manifold& m,
                                    const std::optional<FiniteAbelianGroup>& group) {
    std::int64_t incoming_mult = m.multiplicity(Atom::poincare());
    if (incoming_mult < 1)
        throw std::domain_error("no incoming P; argument inapplicable");

    // Reversing a positive-definite filling of M and splitting the connected
    // sum leaves a cobordism from P to the reversed remaining summands.
    CobordismProfile profile;
    profile.incoming = Atom::poincare();
    profile.quotient_group = group;
    for (std::int64_t i = 1; i < incoming_mult; ++i)
        profile.outgoing.push_back(Atom::poincare().reversed());
    for (const auto& [atom, mult] : m.summands()) {
        if (atom == Atom::poincare()) continue;
        for (std::int64_t i = 0; i < mult; ++i) profile.outgoing.push_back(atom.reversed());
    }
    return positive_definite_audit_profile(profile);
}

TheoremReport main_theorem_audit(std::int64_t m, std::int64_t k) {
    TheoremReport report;
    report.m = m;
    report.k = k;

    Manifold manifold;
    if (m > 0) manifold.add(Atom::poincare(), m);
    if (m < 0) manifold.add(Atom::poincare().reversed(), -m);
    if (k > 0) manifold.add(Atom::octahedral().reversed(), k);
    if (k < 0) manifold.add(Atom::octahedral(), -k);
    report.manifold = manifold;

    report.negative = negative_definite_obstruction(manifold);
    if (report.negative.obstructed)
        report.citations.push_back(
            "Owens-Strle: a negative-definite filling forces max d >= 0 (1/4 for odd |H1|)");

    try {
        report.positive = positive_definite_audit(manifold);
    } catch (const std::domain_error& e) {
        report.positive_detail = e.what();
    }
    bool positive_obstructed =
        report.positive && report.positive->verdict == AuditReport::Verdict::Contradiction;

    if (report.negative.obstructed && positive_obstructed) {
        report.symplectic_obstructed = true;
        report.conclusion =
            "no definite filling of either sign; does not embed in any closed symplectic "
            "4-manifold";
        report.citations.push_back(
            "Mukherjee: an L-space embedded in a closed symplectic 4-manifold bounds a "
            "definite 4-manifold");
    } else if (positive_obstructed) {
        report.conclusion = "no positive-definite filling; negative-definite obstruction "
                            "inconclusive; no symplectic conclusion";
    } else if (report.negative.obstructed) {
        report.conclusion = "no negative-definite filling; positive-definite audit "
                            "inconclusive; no symplectic conclusion";
    } else {
        report.conclusion = "no obstruction established";
    }
    return report;
}

}  // namespace defobs
