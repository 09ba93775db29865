#include <doctest.h>

#include "support.hpp"
#include "thetaclass/errors.hpp"
#include "thetaclass/fixtures.hpp"
#include "thetaclass/pipeline.hpp"
#include "thetaclass/taut_ring.hpp"

using namespace thetaclass;
using testing_support::lam;
using testing_support::q;
using testing_support::word;

TEST_CASE("expression parser") {
    CHECK(parse_mixed("2*l1 + 3*l1") == parse_mixed("5*l1"));
    CHECK(parse_mixed("-(l1 - l2)") == parse_mixed("l2 - l1"));
    CHECK(parse_mixed("(s1 + l1)^2") == parse_mixed("s1^2 + 2*s1*l1 + l1^2"));
    CHECK(parse_mixed("l1^3/8").coeff(Word{}, LambdaMonomial::lambda(1, 3)) == q(1, 8));
    CHECK(parse_mixed("1/2*b3*s1").coeff(word("s1*b3"), LambdaMonomial{}) == q(1, 2));
    CHECK(parse_mixed("l1 - l1").is_zero());
    CHECK(parse_mixed("O[1,1,1,1|1110] + Y").terms().size() == 2);
    CHECK(parse_mixed("93*(4*l1^2*l3 + l1^5/2)").str() == "372*l1^2*l3 + 93/2*l1^5");
    for (const char* bad : {"l1 +", "l1 / 0", "l9", "s1^-1", "(l1", "l1 l2", "3/l1", "Q7"}) {
        CHECK_THROWS_AS(parse_mixed(bad), ParseError);
    }
    try {
        parse_mixed("l1 + * l2");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
}

TEST_CASE("published fixtures parse") {
    CHECK_NOTHROW(parse_mixed(published_class_genus3()));
    CHECK_NOTHROW(parse_mixed(published_class_genus4()));
    CHECK_NOTHROW(parse_mixed(published_class_genus5()));
    for (int g = 3; g <= 5; ++g) {
        CHECK_NOTHROW(parse_mixed(published_stratum2(g)));
        CHECK_NOTHROW(parse_mixed(published_stratum3(g)));
        CHECK_NOTHROW(parse_mixed(published_stratum4_intermediate(g)));
        CHECK_NOTHROW(parse_mixed(published_stratum4_final(g)));
    }
    CHECK(parse_mixed(published_stratum4_intermediate(4)) == parse_mixed(published_stratum4_final(4)));
}

TEST_CASE("twisted top chern class and lambda factors") {
    auto c = chern_top_twisted(4);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == lam("l4"));
    CHECK(c[1] == lam("l3"));
    CHECK(c[4] == lam("1"));
    CHECK(lambda_factor(3, 0) == lam("l3 + l2*l1/2 + l1*l1^2/4 + l1^3/8"));
    CHECK(lambda_factor(3, 1) == lam("l2 + 2*l1*l1/2 + 3*l1^2/4"));
    CHECK(lambda_factor(3, 3) == lam("1"));
    CHECK(lambda_factor(5, 4) == lam("l1 + 5*l1/2"));
}

TEST_CASE("open class") {
    CHECK(class_open(3) == lam("35/2*l1^3"));
    CHECK(class_open(4) == lam("45*l1^4"));
    CHECK(class_open(5) == lam("372*l1^2*l3 + 93/2*l1^5"));
    for (int g = 2; g <= 5; ++g) {
        auto lift = class_open_compactified_lift(g);
        CHECK(build_ring(g, true)->reduce(lift) == class_open(g));
    }
}

TEST_CASE("compactified class structure") {
    for (int g = 2; g <= 5; ++g) {
        auto c = class_compactified(g);
        CHECK(c.genus == g);
        REQUIRE(c.strata.size() == static_cast<std::size_t>(g + 1));
        MixedClass sum;
        for (const auto& s : c.strata) {
            CHECK(s.cover.degree() == s.j);
            CHECK(s.contribution.boundary_component(s.j) == s.contribution);
            sum += s.contribution;
        }
        CHECK(sum == c.total);
        CHECK(c.strata[0].contribution.lambda_part() == class_open_compactified_lift(g));
    }
    CHECK(class_compactified(4).strata[0].contribution == MixedClass(lam("180*l1*l3 + 45/2*l1^4")));
    CHECK(class_compactified(5).strata[0].contribution == MixedClass(lam("496*l5 + 372*l1^2*l3 + 93/2*l1^5")));
    CHECK_THROWS(class_compactified(6));
}

TEST_CASE("genus two class vanishes after the Chow ring relations") {
    auto c = class_compactified(2);
    CHECK(c.total == normalize_mixed(parse_mixed("15/2*l1^2 - l1*s1 + (s1^2 - s2)/16"), 2));
    std::vector<SubstitutionRule> rules = {{word("s2"), parse_mixed("6*l1*s1")},
                                           {word("s1^2"), parse_mixed("22*s1*l1 - 120*l1^2")}};
    CHECK(substitute(c.total, rules, 2).is_zero());
}

TEST_CASE("tautological projections") {
    CHECK(taut_projection(2).is_zero());
    CHECK(taut_projection(3) == lam("35/2*l1^3 - 35*l3"));
    CHECK(taut_projection(4) == lam("45*l1^4"));
    CHECK(taut_projection(5) == lam("93/2*l1^5 + 372*l1^2*l3 + 100*l5"));
    for (int g = 2; g <= 5; ++g) CHECK(taut_projection_boundary_route(g) == taut_projection_closed_formula(g));
}

TEST_CASE("product locus by restriction") {
    auto t = NormalizationTable::published();
    CHECK(product_locus_pairing(4, LambdaMonomial::lambda(1, 7), t) == q(7, 24) * q(1, 181440));
    CHECK(product_locus_pairing(4, LambdaMonomial::lambda(1, 4) * LambdaMonomial::lambda(3), t) == q(1, 24) * q(1, 181440));
    CHECK(product_locus_pairing(5, LambdaMonomial::lambda(1, 11), t) == q(11, 24) * q(1, 1814400));
    CHECK(product_locus_pairing(5, LambdaMonomial::lambda(1, 8) * LambdaMonomial::lambda(3), t) == q(5, 72) * q(1, 1814400));
    CHECK(product_locus_taut(4, t) == lam("20*l3"));
    CHECK(product_locus_taut(5, t) == lam("-11/8*l1^4 + 11*l1*l3"));
    CHECK_THROWS(product_locus_taut(3, t));
}

TEST_CASE("theta-null product locus") {
    auto t = NormalizationTable::published();
    CHECK(theta_null_lambda_coefficient(3) == 18);
    CHECK(theta_null_lambda_coefficient(4) == 68);
    CHECK(a0_correction(4, t) == lam("360*l1*l3 - 45*l1^4"));
    CHECK(theta_null_product_taut(4, t) == lam("45*l1^4"));
    CHECK(theta_null_product_taut(5, t) == lam("-187/2*l1^5 + 748*l1^2*l3 - 748*l5"));
    CHECK(ij_taut(t) == lam("140*l1^5 - 376*l1^2*l3 + 848*l5"));
    CHECK(ij_taut(t) + theta_null_product_taut(5, t) == taut_projection(5));
}
