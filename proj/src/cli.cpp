#include "defobs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "defobs/correction.hpp"
#include "defobs/flat.hpp"
#include "defobs/ledger.hpp"
#include "defobs/registry.hpp"

namespace defobs {

namespace {

using json = nlohmann::json;  // std::map keys: stable, sorted output

constexpr std::size_t kMaxListedTable = 4096;

const char* kUsage =
    "usage: defobs <command> [args]\n"
    "commands:\n"
    "  dinv <descriptor> [--json]           d-invariant table of a connected sum\n"
    "  obstruct-neg <descriptor> [--json]   negative-definite filling obstruction\n"
    "  cs <atom> [--oracle] [--json]        flat connections and CS spectrum\n"
    "  gap <atom> [--from K] [--to K] [--beyond-minimal] [--json]\n"
    "                                       minimal cylinder energy\n"
    "  ends --index N [--no-reducible-rule] [--no-cylinder-rule] [--json]\n"
    "                                       end-pattern classification\n"
    "  audit-pos <descriptor> [--group d1,d2,...] [--json]\n"
    "                                       positive-definite filling audit\n"
    "  theorem --m M --k K [--json]         combined verdicts for m*P # -k*O\n"
    "  alexander T(p,q) [--json]            torus-knot Alexander polynomial and\n"
    "                                       torsion coefficients\n"
    "descriptors: \"P\", \"-O\", \"3*P # -25*O\", \"sigma(2,3,7)\", "
    "\"surgery(T(2,5),2)\", \"S3\"\n"
    "connection kinds: any, irreducible, central, trivial\n"
    "environment: DEFOBS_ORACLE_TOL overrides the 1e-9 oracle residual tolerance\n"
    "exit codes: 0 success, 2 usage/parse error, 3 internal invariant violation\n";

class ArgError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Small argv scanner: positionals plus --flag / --flag value.
class Args {
public:
    explicit Args(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}

    bool take_flag(const std::string& name) {
        auto it = std::find(tokens_.begin(), tokens_.end(), name);
        if (it == tokens_.end()) return false;
        tokens_.erase(it);
        return true;
    }

    std::optional<std::string> take_value(const std::string& name) {
        auto it = std::find(tokens_.begin(), tokens_.end(), name);
        if (it == tokens_.end()) return std::nullopt;
        auto value_it = std::next(it);
        if (value_it == tokens_.end()) throw ArgError("missing value after " + name);
        std::string value = *value_it;
        tokens_.erase(it, std::next(value_it));
        return value;
    }

    std::string take_positional(const std::string& what) {
        for (auto it = tokens_.begin(); it != tokens_.end(); ++it) {
            if (it->rfind("--", 0) == 0) continue;
            std::string value = *it;
            tokens_.erase(it);
            return value;
        }
        throw ArgError("missing " + what);
    }

    void expect_empty() const {
        if (!tokens_.empty()) throw ArgError("unexpected argument '" + tokens_.front() + "'");
    }

private:
    std::vector<std::string> tokens_;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ArgError("bad integer for " + what + ": '" + text + "'");
    return v;
}

json envelope(const std::string& command, const std::string& input,
              const std::vector<std::string>& provenance, json results) {
    json env;
    env["command"] = command;
    env["input"] = input;
    env["provenance"] = provenance;
    env["results"] = std::move(results);
    return env;
}

void emit(std::ostream& out, const json& env) {
    out << env.dump(2) << "\n";
}

// rationals travel as strings "p/q" so they re-parse exactly
json jrat(const Rational& r) { return r.str(); }
json jrat(const ModOne& m) { return m.str(); }

std::vector<DInvariantTable> summand_tables(const Manifold& m) {
    std::vector<DInvariantTable> tables;
    for (const auto& [atom, mult] : m.summands()) {
        AtomRecord rec = lookup(atom);
        if (!rec.d_table)
            throw std::domain_error("no d-invariant data for atom " + atom.str());
        for (std::int64_t i = 0; i < mult; ++i) tables.push_back(*rec.d_table);
    }
    return tables;
}

// ---------------------------------------------------------------- dinv ----

int cmd_dinv(Args& args, std::ostream& out) {
    std::string descriptor = args.take_positional("descriptor");
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    Manifold m = parse_descriptor(descriptor);
    std::int64_t count = spin_c_count(m);
    Rational max_d = max_correction_term(m);

    std::optional<DInvariantTable> table;
    if (count <= static_cast<std::int64_t>(kMaxListedTable))
        table = connected_sum_d(summand_tables(m));

    if (as_json) {
        json results;
        results["manifold"] = m.str();
        results["spin_c_count"] = count;
        results["max_d"] = jrat(max_d);
        if (table) {
            json values = json::array();
            for (const Rational& d : table->values_sorted()) values.push_back(jrat(d));
            results["d_invariants"] = values;
        }
        emit(out, envelope("dinv", descriptor,
                           {"Owens-Strle: 2-surgery correction-term formula",
                            "additivity of correction terms under connected sum"},
                           results));
        return 0;
    }

    out << "manifold: " << m.str() << "\n";
    out << "spin-c structures: " << count << "\n";
    if (table)
        out << "d-invariants: " << table->values_str() << "\n";
    else
        out << "d-invariants: table too large to list\n";
    out << "max d = " << max_d.str() << "\n";
    return 0;
}

// -------------------------------------------------------- obstruct-neg ----

int cmd_obstruct_neg(Args& args, std::ostream& out) {
    std::string descriptor = args.take_positional("descriptor");
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    Manifold m = parse_descriptor(descriptor);
    NegativeDefiniteVerdict v = negative_definite_obstruction(m);

    if (as_json) {
        json results;
        results["manifold"] = m.str();
        results["max_d"] = jrat(v.witness);
        results["threshold"] = jrat(v.threshold);
        results["verdict"] = v.verdict_str();
        if (v.family) {
            results["family"] = {{"m", v.family->first}, {"k", v.family->second}};
        }
        emit(out, envelope("obstruct-neg", descriptor,
                           {"Owens-Strle: negative-definite bound on max d"}, results));
        return 0;
    }

    out << "manifold: " << m.str() << "\n";
    out << "spin-c structures: " << spin_c_count(m) << "\n";
    out << "max d = " << v.witness.str() << "\n";
    out << "threshold = " << v.threshold.str();
    if (v.family)
        out << "  (family m*P # -k*O with m=" << v.family->first << ", k=" << v.family->second
            << (v.family->second % 2 != 0 ? ", k odd)" : ", k even)");
    out << "\n";
    out << "verdict: " << v.verdict_str() << "\n";
    if (v.obstructed)
        out << "cannot bound a negative-definite 4-manifold\n";
    return 0;
}

// ------------------------------------------------------------------ cs ----

int cmd_cs(Args& args, std::ostream& out) {
    std::string atom_text = args.take_positional("atom");
    bool run_oracle = args.take_flag("--oracle");
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    Atom atom = parse_atom(atom_text);
    OracleConfig config = OracleConfig::from_env();
    std::vector<FlatConnectionRecord> records = flat_records(atom, config);
    std::vector<ModOne> spectrum = cs_spectrum(atom, config);

    json oracle_json;
    std::ostringstream oracle_text;
    if (run_oracle) {
        const auto params = *lookup(atom).brieskorn_params;
        const auto [p, q, r] = params;
        std::vector<OracleSolution> solutions = su2_oracle(p, q, r, config);

        std::vector<RotationTriple> accepted;
        int rejected = 0, undecided = 0;
        for (const auto& sol : solutions) {
            if (sol.status == OracleStatus::Accepted) accepted.push_back(sol.triple);
            if (sol.status == OracleStatus::Rejected) ++rejected;
            if (sol.status == OracleStatus::Undecided) ++undecided;
        }
        std::vector<RotationTriple> closed_form = admissible_triples_closed_form(p, q, r);
        if (undecided > 0 || accepted != closed_form)
            throw std::logic_error("oracle disagrees with exact enumeration on sigma(" +
                                   std::to_string(p) + "," + std::to_string(q) + "," +
                                   std::to_string(r) + ")");

        oracle_text << "oracle: " << accepted.size() << " accepted, " << rejected
                    << " rejected, " << undecided << " undecided (residual tol "
                    << config.residual_tol << ")\n";
        json sols = json::array();
        for (const auto& sol : solutions) {
            if (sol.status != OracleStatus::Accepted) continue;
            oracle_text << "  " << sol.triple.str() << " holonomy angles/pi = ("
                        << Rational(sol.triple.k, p).str() << ", "
                        << Rational(sol.triple.l, q).str() << ", "
                        << Rational(sol.triple.m, r).str() << ")  CS -> "
                        << sol.cs_exact.str() << "\n";
            json js;
            js["triple"] = {sol.triple.k, sol.triple.l, sol.triple.m};
            js["cs"] = jrat(sol.cs_exact);
            js["residual"] = sol.residual;
            sols.push_back(js);
        }
        oracle_text << "oracle agrees with exact enumeration\n";
        oracle_json["accepted"] = sols;
        oracle_json["rejected"] = rejected;
        oracle_json["undecided"] = undecided;
        oracle_json["agrees"] = true;
    }

    if (as_json) {
        json results;
        results["atom"] = atom.str();
        json conns = json::array();
        for (const auto& rc : records) {
            json jc;
            jc["kind"] = rc.kind_str();
            if (rc.triple) jc["triple"] = {rc.triple->k, rc.triple->l, rc.triple->m};
            jc["cs"] = jrat(rc.cs);
            conns.push_back(jc);
        }
        results["connections"] = conns;
        json spectrum_json = json::array();
        for (const ModOne& v : spectrum) spectrum_json.push_back(jrat(v));
        results["spectrum"] = spectrum_json;
        if (run_oracle) results["oracle"] = oracle_json;
        emit(out, envelope("cs", atom_text,
                           {"Fintushel-Stern: rotation numbers of Seifert flat connections",
                            "Fintushel-Stern: Chern-Simons values of Brieskorn spheres"},
                           results));
        return 0;
    }

    out << "flat connections of " << atom.str() << ":\n";
    for (const auto& rc : records) {
        std::string name = rc.kind_str();
        if (rc.triple) name = "alpha" + rc.triple->str();
        out << "  " << name;
        for (std::size_t i = name.size(); i < 16; ++i) out << ' ';
        out << " CS = " << rc.cs.str() << "\n";
    }
    out << "spectrum: {";
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i) out << ", ";
        out << spectrum[i].str();
    }
    out << "}\n";
    if (run_oracle) out << oracle_text.str();
    return 0;
}

// ----------------------------------------------------------------- gap ----

int cmd_gap(Args& args, std::ostream& out) {
    std::string atom_text = args.take_positional("atom");
    ConnKind from = ConnKind::Any;
    ConnKind to = ConnKind::Any;
    if (auto v = args.take_value("--from")) from = parse_conn_kind(*v);
    if (auto v = args.take_value("--to")) to = parse_conn_kind(*v);
    bool beyond = args.take_flag("--beyond-minimal");
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    Atom atom = parse_atom(atom_text);
    Rational kappa = min_cylinder_energy(atom, from, to, beyond, OracleConfig::from_env());

    if (as_json) {
        json results;
        results["atom"] = atom.str();
        results["from"] = conn_kind_str(from);
        results["to"] = conn_kind_str(to);
        results["beyond_minimal"] = beyond;
        results["kappa"] = jrat(kappa);
        emit(out, envelope("gap", atom_text,
                           {"cylinder energy equals Chern-Simons difference mod 1",
                            "covering bound: |pi_1| * CS is an integer"},
                           results));
        return 0;
    }

    out << "min cylinder energy on " << atom.str() << " (" << conn_kind_str(from) << " -> "
        << conn_kind_str(to) << (beyond ? ", beyond minimal pair" : "") << ") = "
        << kappa.str() << "\n";
    return 0;
}

// ---------------------------------------------------------------- ends ----

int cmd_ends(Args& args, std::ostream& out) {
    auto index_text = args.take_value("--index");
    if (!index_text) throw ArgError("ends requires --index N");
    int total = static_cast<int>(parse_int(*index_text, "--index"));
    RuleSet rules;
    if (args.take_flag("--no-reducible-rule")) rules.reducible_needs_incoming_break = false;
    if (args.take_flag("--no-cylinder-rule")) rules.cylinder_index_at_least_one = false;
    if (args.take_flag("--r-le-n")) rules.require_r_le_n = true;
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    std::vector<EndPattern> patterns = classify_end_patterns(total, rules);

    if (as_json) {
        json results;
        results["total_index"] = total;
        results["rules"] = {{"cylinder_index_at_least_one", rules.cylinder_index_at_least_one},
                            {"reducible_needs_incoming_break",
                             rules.reducible_needs_incoming_break},
                            {"require_r_le_n", rules.require_r_le_n}};
        json pats = json::array();
        for (const EndPattern& p : patterns) {
            json jp;
            jp["n"] = p.n;
            jp["m"] = p.m;
            jp["r"] = p.r;
            jp["ind_a"] = p.ind_a;
            jp["incoming_indices"] = p.incoming_indices;
            jp["outgoing_indices"] = p.outgoing_indices;
            jp["type"] = p.type_str();
            pats.push_back(jp);
        }
        results["patterns"] = pats;
        emit(out, envelope("ends", *index_text,
                           {"index additivity over broken trajectories"}, results));
        return 0;
    }

    out << "end patterns for total index " << total << " (" << rules.str() << "):\n";
    for (const EndPattern& p : patterns) {
        std::string tag = p.type_str();
        tag.append(tag.size() < 5 ? 5 - tag.size() : 0, ' ');
        out << "  " << tag << " " << p.str() << "\n";
    }
    out << patterns.size() << " pattern" << (patterns.size() == 1 ? "" : "s") << "\n";
    return 0;
}

// ----------------------------------------------------------- audit-pos ----

json audit_to_json(const AuditReport& report) {
    json results;
    results["dimension"] = report.dimension;
    results["kappa"] = jrat(report.kappa);
    json pats = json::array();
    for (const PatternFate& f : report.patterns) {
        json jp;
        jp["pattern"] = f.pattern.str();
        jp["type"] = f.pattern.type_str();
        jp["fate"] = f.fate == Fate::Survives ? "survives" : "pruned-by-energy";
        jp["reason"] = f.reason;
        pats.push_back(jp);
    }
    results["patterns"] = pats;
    results["end_count"] = report.end_count;
    if (report.reducibles) {
        results["reducibles"] = {{"z", report.reducibles->z}, {"a", report.reducibles->a}};
    }
    results["verdict"] = report.verdict_str();
    results["detail"] = report.detail;
    return results;
}

void print_audit(const AuditReport& report, std::ostream& out) {
    out << "moduli dimension = " << report.dimension << " (index 1 + 3 - 3)\n";
    out << "kappa = " << report.kappa.str() << "\n";
    out << "end patterns:\n";
    for (const PatternFate& f : report.patterns) {
        out << "  " << f.pattern.type_str() << " " << f.pattern.str() << ": "
            << (f.fate == Fate::Survives ? "survives" : "pruned") << " (" << f.reason << ")\n";
    }
    out << "end count = " << report.end_count;
    if (report.reducibles)
        out << "  (z = " << report.reducibles->z << ", a = " << report.reducibles->a << ")";
    out << "\n";
    out << "verdict: " << report.verdict_str() << "\n";
    if (report.verdict == AuditReport::Verdict::Contradiction)
        out << "no positive-definite filling\n";
    else
        out << report.detail << "\n";
}

int cmd_audit_pos(Args& args, std::ostream& out) {
    std::string descriptor = args.take_positional("descriptor");
    std::optional<FiniteAbelianGroup> group;
    if (auto g = args.take_value("--group")) {
        std::vector<std::int64_t> factors;
        std::string token;
        std::istringstream ss(*g);
        while (std::getline(ss, token, ','))
            factors.push_back(parse_int(token, "--group"));
        group = FiniteAbelianGroup(factors);
    }
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    Manifold m = parse_descriptor(descriptor);
    AuditReport report = positive_definite_audit(m, group);

    if (as_json) {
        json results = audit_to_json(report);
        results["manifold"] = m.str();
        if (group) results["group"] = group->str();
        emit(out, envelope("audit-pos", descriptor,
                           {"end count of reducible gluings equals |H1(W)/i_*H1(dW)|",
                            "an oriented 1-manifold has zero ends counted with sign"},
                           results));
        return 0;
    }

    out << "positive-definite audit of " << m.str() << "\n";
    if (group) out << "H1(W)/i*H1(dW) = " << group->str() << "\n";
    print_audit(report, out);
    return 0;
}

// ----------------------------------------------------------- alexander ----

int cmd_alexander(Args& args, std::ostream& out) {
    std::string knot_text = args.take_positional("torus knot T(p,q)");
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    std::int64_t p = 0, q = 0;
    {
        std::istringstream ss(knot_text);
        char t = 0, open = 0, comma = 0, close = 0;
        ss >> t >> open >> p >> comma >> q >> close;
        if (!ss || t != 'T' || open != '(' || comma != ',' || close != ')' ||
            ss.rdbuf()->in_avail() != 0)
            throw ArgError("expected a torus knot like T(2,3), got '" + knot_text + "'");
    }
    SymmetrizedAlexander delta = SymmetrizedAlexander::torus_knot(p, q);
    std::int64_t genus = delta.max_exponent();

    if (as_json) {
        json results;
        results["knot"] = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
        results["polynomial"] = delta.str();
        results["genus"] = genus;
        json torsion = json::array();
        for (std::int64_t i = 0; i <= genus; ++i)
            torsion.push_back(delta.torsion_coefficient(i));
        results["torsion_coefficients"] = torsion;
        emit(out, envelope("alexander", knot_text,
                           {"torsion coefficients are weighted tails of the symmetrized "
                            "Alexander polynomial"},
                           results));
        return 0;
    }

    out << "torus knot T(" << p << "," << q << ")\n";
    out << "Alexander polynomial: " << delta.str() << "\n";
    out << "torsion coefficients t_0..t_" << genus << ": [";
    for (std::int64_t i = 0; i <= genus; ++i) {
        if (i) out << ", ";
        out << delta.torsion_coefficient(i);
    }
    out << "]\n";
    return 0;
}

// ------------------------------------------------------------- theorem ----

int cmd_theorem(Args& args, std::ostream& out) {
    auto m_text = args.take_value("--m");
    auto k_text = args.take_value("--k");
    if (!m_text || !k_text) throw ArgError("theorem requires --m M and --k K");
    std::int64_t m = parse_int(*m_text, "--m");
    std::int64_t k = parse_int(*k_text, "--k");
    bool as_json = args.take_flag("--json");
    args.expect_empty();

    TheoremReport report = main_theorem_audit(m, k);

    if (as_json) {
        json results;
        results["m"] = m;
        results["k"] = k;
        results["manifold"] = report.manifold.str();
        results["negative_definite"] = {{"max_d", jrat(report.negative.witness)},
                                        {"threshold", jrat(report.negative.threshold)},
                                        {"verdict", report.negative.verdict_str()}};
        if (report.positive) {
            results["positive_definite"] = {{"verdict", report.positive->verdict_str()},
                                            {"end_count", report.positive->end_count},
                                            {"kappa", jrat(report.positive->kappa)}};
        } else {
            results["positive_definite"] = {{"verdict", "inconclusive"},
                                            {"detail", report.positive_detail}};
        }
        results["symplectic_embedding_obstructed"] = report.symplectic_obstructed;
        results["conclusion"] = report.conclusion;
        emit(out, envelope("theorem", report.manifold.str(), report.citations, results));
        return 0;
    }

    out << "theorem audit for " << report.manifold.str() << "  (m=" << m << ", k=" << k
        << ")\n";
    out << "negative-definite: max d = " << report.negative.witness.str()
        << ", threshold = " << report.negative.threshold.str() << " -> "
        << report.negative.verdict_str() << "\n";
    if (report.positive)
        out << "positive-definite: end-count audit -> " << report.positive->verdict_str()
            << " (ends " << report.positive->end_count << ")\n";
    else
        out << "positive-definite: " << report.positive_detail << "\n";
    for (const std::string& c : report.citations) out << "  [" << c << "]\n";
    out << report.conclusion << "\n";
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 2;
    }
    const std::string& command = args.front();
    Args rest(std::vector<std::string>(args.begin() + 1, args.end()));

    try {
        if (command == "dinv") return cmd_dinv(rest, out);
        if (command == "obstruct-neg") return cmd_obstruct_neg(rest, out);
        if (command == "cs") return cmd_cs(rest, out);
        if (command == "gap") return cmd_gap(rest, out);
        if (command == "ends") return cmd_ends(rest, out);
        if (command == "audit-pos") return cmd_audit_pos(rest, out);
        if (command == "theorem") return cmd_theorem(rest, out);
        if (command == "alexander") return cmd_alexander(rest, out);
        if (command == "--help" || command == "help") {
            out << kUsage;
            return 0;
        }
        err << "error: unknown command '" << command << "'\n" << kUsage;
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace defobs
