#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "defobs/rational.hpp"

using namespace defobs;

TEST_CASE("construction reduces to canonical form") {
    CHECK(rat(961, 120) == Rational(961, 120));
    CHECK(rat(961, 120).num() == 961);
    CHECK(rat(961, 120).den() == 120);

    CHECK(rat(-48, 120) == rat(-2, 5));
    CHECK(rat(0, 7).num() == 0);
    CHECK(rat(0, 7).den() == 1);
    CHECK(rat(3, -6) == rat(-1, 2));

    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(rat(1, 4) - rat(2, 1) == rat(-7, 4));
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
    CHECK(rat(1, 2) / rat(1, 4) == Rational(2));
    CHECK_THROWS_AS(rat(1, 2) / Rational(0), std::domain_error);
    CHECK(rat(-7, 4) < rat(-1, 4));
    CHECK(rat(2, 1) > rat(-1, 4));
}

TEST_CASE("checked arithmetic fails loudly") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<std::int64_t>::min()),
                    std::overflow_error);
    CHECK_THROWS_AS(Rational(big, 3) * Rational(big, 5), std::overflow_error);
}

TEST_CASE("floor") {
    CHECK(rat(7, 2).floor() == 3);
    CHECK(rat(-7, 2).floor() == -4);
    CHECK(rat(-4, 2).floor() == -2);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("rendering and parsing round-trip") {
    CHECK(rat(-7, 4).str() == "-7/4");
    CHECK(Rational(5).str() == "5");
    CHECK(rat(0, 9).str() == "0");
    CHECK(Rational::parse("-7/4") == rat(-7, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("mod_one canonical representative") {
    CHECK(mod_one(rat(961, 120)).value() == rat(1, 120));  // 961 = 8*120 + 1
    CHECK(mod_one(rat(-1, 120)).value() == rat(119, 120));
    CHECK(mod_one(Rational(3)).value() == Rational(0));
    CHECK(mod_one(rat(49, 120)).value() == rat(49, 120));
}

TEST_CASE("mod_one negation") {
    CHECK(mod_one(Rational(0)).negated() == mod_one(Rational(0)));
    CHECK(mod_one(rat(1, 120)).negated() == mod_one(rat(119, 120)));
    CHECK(mod_one(rat(1, 2)).negated() == mod_one(rat(1, 2)));
}

TEST_CASE("mod-1 arithmetic laws on random rationals") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::int64_t> num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(1, 480);
    for (int trial = 0; trial < 2000; ++trial) {
        Rational x(num(rng), den(rng));
        Rational y(num(rng), den(rng));
        CHECK(mod_one(x + y) == mod_one(x) + mod_one(y));
        CHECK(mod_one(-x) == mod_one(x).negated());
        // representative stays in [0, 1) and differs from x by an integer
        ModOne mx = mod_one(x);
        CHECK(mx.value() >= Rational(0));
        CHECK(mx.value() < Rational(1));
        CHECK((x - mx.value()).den() == 1);
    }
}
