#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "defobs/flat.hpp"
#include "defobs/registry.hpp"

using namespace defobs;

namespace {

std::vector<std::array<std::int64_t, 3>> brieskorn_params_up_to(std::int64_t max_pqr) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t p = 2; p * (p + 1) * (p + 2) <= max_pqr; ++p)
        for (std::int64_t q = p + 1; p * q * (q + 1) <= max_pqr; ++q)
            for (std::int64_t r = q + 1; p * q * r <= max_pqr; ++r)
                if (std::gcd(p, q) == 1 && std::gcd(p, r) == 1 && std::gcd(q, r) == 1)
                    out.push_back({p, q, r});
    return out;
}

std::vector<RotationTriple> accepted_triples(std::int64_t p, std::int64_t q, std::int64_t r) {
    std::vector<RotationTriple> out;
    for (const auto& sol : su2_oracle(p, q, r)) {
        REQUIRE(sol.status != OracleStatus::Undecided);
        if (sol.status == OracleStatus::Accepted) out.push_back(sol.triple);
    }
    return out;
}

}  // namespace

TEST_CASE("chern_simons formula values") {
    CHECK(chern_simons(2, 3, 5, {1, 1, 1}).str() == "1/120");   // (15+10+6)^2 = 961
    CHECK(chern_simons(2, 3, 5, {1, 1, 3}).str() == "49/120");  // 43^2 = 1849
    CHECK(chern_simons(2, 3, 7, {1, 1, 1}).str() == "1/168");   // 41^2 = 1681
    CHECK_THROWS_AS(chern_simons(2, 3, 5, {0, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(chern_simons(2, 3, 5, {1, 3, 1}), std::domain_error);
}

TEST_CASE("seifert presentation solves the coprimality equation") {
    for (const auto& [p, q, r] : brieskorn_params_up_to(200)) {
        auto [b0, b1, b2, b3] = seifert_presentation(p, q, r);
        CHECK(b1 * q * r + b2 * p * r + b3 * p * q + b0 * p * q * r == 1);
        CHECK((0 < b1 && b1 < p));
        CHECK((0 < b2 && b2 < q));
        CHECK((0 < b3 && b3 < r));
    }
    CHECK(seifert_presentation(2, 3, 5) == std::array<std::int64_t, 4>{-1, 1, 1, 1});
}

TEST_CASE("oracle on sigma(2,3,5)") {
    auto triples = accepted_triples(2, 3, 5);
    REQUIRE(triples.size() == 2);
    CHECK(triples[0] == RotationTriple{1, 1, 1});
    CHECK(triples[1] == RotationTriple{1, 1, 3});

    // candidate (1,2,1) fails: no central character matches the parities
    for (const auto& sol : su2_oracle(2, 3, 5)) {
        if (sol.triple == RotationTriple{1, 2, 1}) {
            CHECK(sol.status == OracleStatus::Rejected);
        }
        if (sol.status == OracleStatus::Accepted) CHECK(sol.residual < 1e-9);
    }
}

TEST_CASE("oracle on sigma(2,3,7)") {
    auto triples = accepted_triples(2, 3, 7);
    CHECK(triples.size() == 2);
    std::set<ModOne> distinct;
    for (const auto& t : triples) distinct.insert(chern_simons(2, 3, 7, t));
    CHECK(distinct.size() == 2);
}

TEST_CASE("oracle bound is enforced and configurable") {
    CHECK_THROWS_AS(su2_oracle(2, 5, 11), std::domain_error);  // pqr = 110 > 78
    OracleConfig wide;
    wide.max_pqr = 120;
    CHECK_NOTHROW(su2_oracle(2, 5, 11, wide));
}

TEST_CASE("oracle agrees with the exact closed-form admissibility for pqr <= 78") {
    for (const auto& [p, q, r] : brieskorn_params_up_to(78)) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        auto numeric = accepted_triples(p, q, r);
        auto exact = admissible_triples_closed_form(p, q, r);
        CHECK(numeric == exact);

        // CS multisets match enumerate_flat
        std::vector<ModOne> via_oracle;
        for (const auto& t : numeric) via_oracle.push_back(chern_simons(p, q, r, t));
        via_oracle.push_back(ModOne{});  // trivial connection
        std::sort(via_oracle.begin(), via_oracle.end());
        std::vector<ModOne> spectrum;
        for (const auto& rec : enumerate_flat(p, q, r)) spectrum.push_back(rec.cs);
        std::sort(spectrum.begin(), spectrum.end());
        CHECK(via_oracle == spectrum);
    }
}

TEST_CASE("enumerate_flat on sigma(2,3,5)") {
    auto records = enumerate_flat(2, 3, 5);
    REQUIRE(records.size() == 3);
    CHECK(records[0].kind == FlatConnectionRecord::Kind::Trivial);
    CHECK(records[0].cs.is_zero());
    CHECK(records[1].triple == RotationTriple{1, 1, 1});
    CHECK(records[1].cs.str() == "1/120");
    CHECK(records[2].triple == RotationTriple{1, 1, 3});
    CHECK(records[2].cs.str() == "49/120");
}

TEST_CASE("spectra respect orientation and the covering bound") {
    std::vector<ModOne> spectrum = cs_spectrum(parse_atom("P"));
    REQUIRE(spectrum.size() == 3);
    CHECK(spectrum[0].str() == "0");
    CHECK(spectrum[1].str() == "1/120");
    CHECK(spectrum[2].str() == "49/120");

    // |pi_1| * CS = 0 mod 1 on the spherical atom
    for (const ModOne& v : spectrum)
        CHECK(mod_one(v.value() * Rational(120)).is_zero());

    std::vector<ModOne> reversed = cs_spectrum(parse_atom("-P"));
    REQUIRE(reversed.size() == 3);
    CHECK(reversed[0].str() == "0");
    CHECK(reversed[1].str() == "71/120");
    CHECK(reversed[2].str() == "119/120");

    for (const auto& params : brieskorn_params_up_to(78)) {
        Atom atom = Atom::brieskorn(params[0], params[1], params[2]);
        std::vector<ModOne> plus = cs_spectrum(atom);
        std::vector<ModOne> minus = cs_spectrum(atom.reversed());
        std::vector<ModOne> negated;
        for (const ModOne& v : plus) negated.push_back(v.negated());
        std::sort(negated.begin(), negated.end());
        CHECK(minus == negated);
    }
}

TEST_CASE("mod-1 differences of the P spectrum give the cylinder constants") {
    std::vector<ModOne> spectrum = cs_spectrum(parse_atom("P"));
    std::set<Rational> diffs;
    for (const ModOne& a : spectrum)
        for (const ModOne& b : spectrum)
            if (!(a - b).is_zero()) diffs.insert((a - b).value());

    std::set<Rational> expected = {rat(1, 120),  rat(2, 5),  rat(49, 120),
                                   rat(3, 5),    rat(71, 120), rat(119, 120)};
    CHECK(diffs == expected);
    CHECK(diffs.count(rat(1, 120)) == 1);
    CHECK(diffs.count(rat(2, 5)) == 1);
    CHECK(diffs.count(rat(49, 120)) == 1);
    CHECK(diffs.count(rat(71, 120)) == 1);
    CHECK(diffs.count(rat(119, 120)) == 1);
}

TEST_CASE("minimal cylinder energies") {
    Atom p = parse_atom("P");
    Atom neg_p = parse_atom("-P");
    Atom o = parse_atom("O");
    Atom neg_o = parse_atom("-O");

    CHECK(min_cylinder_energy(p) == rat(1, 120));
    CHECK(min_cylinder_energy(p, ConnKind::Irreducible, ConnKind::Trivial) == rat(1, 120));
    CHECK(min_cylinder_energy(p, ConnKind::Any, ConnKind::Any, true) == rat(2, 5));
    CHECK(min_cylinder_energy(p, ConnKind::Irreducible, ConnKind::Irreducible) == rat(2, 5));
    CHECK(min_cylinder_energy(neg_p, ConnKind::Any, ConnKind::Trivial) == rat(71, 120));
    CHECK(min_cylinder_energy(neg_p, ConnKind::Irreducible, ConnKind::Trivial) ==
          rat(71, 120));

    // O enters through |pi_1| = 48 only
    CHECK(min_cylinder_energy(o) == rat(1, 48));
    CHECK(min_cylinder_energy(neg_o) == rat(1, 48));

    // same-connection pairs sit at integer energy
    CHECK(min_cylinder_energy(p, ConnKind::Trivial, ConnKind::Trivial) == Rational(1));

    // no flat data and no finite pi_1
    CHECK_THROWS_AS(min_cylinder_energy(parse_atom("surgery(T(2,5),2)")), std::domain_error);
    // lens space fallback through |pi_1| = 2
    CHECK(min_cylinder_energy(parse_atom("surgery(T(1,1),2)")) == rat(1, 2));
}

TEST_CASE("connection kind parsing") {
    CHECK(parse_conn_kind("any") == ConnKind::Any);
    CHECK(parse_conn_kind("irr") == ConnKind::Irreducible);
    CHECK(parse_conn_kind("trivial") == ConnKind::Trivial);
    CHECK_THROWS_AS(parse_conn_kind("bogus"), std::invalid_argument);
}
