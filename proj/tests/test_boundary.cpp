#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "thetaclass/boundary.hpp"
#include "thetaclass/config_type.hpp"
#include "thetaclass/errors.hpp"
#include "thetaclass/f2.hpp"

using namespace thetaclass;
using testing_support::q;
using testing_support::word;
using testing_support::words;

namespace {

BoundaryPoly cover(const std::vector<int>& exps, const std::vector<Vec>& rels, const Rational& c = Rational(1)) {
    BoundaryPoly p(Level::Cover);
    p.add(canonical_pattern(exps, rels), c);
    return p;
}

std::vector<Word> word_list(std::initializer_list<const char*> names) {
    std::vector<Word> out;
    for (const char* n : names) out.push_back(word(n));
    return out;
}

std::vector<Rational> solve(const BoundaryPoly& p, std::initializer_list<const char*> targets, int g) {
    return change_basis(p, word_list(targets), g).coefficients;
}

// Literal expansion of sum_{m odd} (sum_{n in Z_m} delta_n)^j: coefficient of one monomial of each
// type, read off by summing over every ordered j-tuple and dividing by the number of monomials.
std::map<ConfigType, Rational> literal_zm_power(int g, int j) {
    std::map<ConfigType, Rational> total;
    std::map<ConfigType, long> monomials;
    std::map<std::vector<std::pair<Vec, int>>, bool> seen;
    for (const auto& m : enumerate_odd(g)) {
        auto z = z_set(m);
        std::vector<std::size_t> idx(j, 0);
        while (true) {
            std::map<Vec, int> mono;
            for (auto i : idx) ++mono[z[i].vec];
            std::vector<BoundaryLabel> support;
            std::vector<int> exps;
            for (auto [n, e] : mono) {
                support.emplace_back(g, n);
                exps.push_back(e);
            }
            if (auto t = canonical_config(support, exps)) {
                total[*t] += Rational(1);
                std::vector<std::pair<Vec, int>> key(mono.begin(), mono.end());
                if (!seen[key]) {
                    seen[key] = true;
                    ++monomials[*t];
                }
            }
            int pos = 0;
            while (pos < j && ++idx[pos] == z.size()) idx[pos++] = 0;
            if (pos == j) break;
        }
    }
    std::map<ConfigType, Rational> per_monomial;
    for (auto& [t, c] : total) per_monomial[t] = c / Rational(monomials[t]);
    return per_monomial;
}

}  // namespace

TEST_CASE("named class spellings round-trip") {
    for (const char* s : {"s1", "s5", "b3", "Y", "A", "A1", "A5", "B", "B4", "C", "C1", "C2", "D", "D2", "E", "F", "G",
                          "O[2,1,1|111]", "O[1,1,1,1|1111]", "O[2,1|*]"}) {
        NamedClass c = NamedClass::parse(s);
        CHECK(c.str() == s);
    }
    CHECK(NamedClass::parse("G").degree() == 5);
    CHECK(NamedClass::parse("Y").degree() == 4);
    CHECK_THROWS_AS(NamedClass::parse("A7"), ParseError);
    CHECK_THROWS_AS(NamedClass::parse("s9"), std::exception);
}

TEST_CASE("named class expansions") {
    CHECK(expand_named(NamedClass::sigma(1), 3).terms().size() == 1);
    CHECK(expand_named(NamedClass::beta(5), 5) == expand_named(NamedClass::a(1), 5));
    auto y = expand_named(NamedClass::y(), 4);
    REQUIRE(y.terms().size() == 1);
    CHECK(y.terms().begin()->first == canonical_pattern({1, 1, 1, 1}, {0b1111}));
    CHECK(expand_named(NamedClass::parse("G"), 3).terms().begin()->first == canonical_pattern({5}, {}));
}

TEST_CASE("products of boundary classes") {
    const int g = 5;
    auto s1 = expand_named(NamedClass::sigma(1), g);
    auto s1sq = product(s1, s1, g);
    BoundaryPoly expected(Level::Base);
    expected.add(canonical_pattern({2}, {}), q(1));
    expected.add(canonical_pattern({1, 1}, {}), q(2));
    CHECK(s1sq == expected);
    CHECK(product(s1, expand_named(NamedClass::beta(4), g), g) == expand_expr(words("5*A1 + 5*A2 + 4*A3 + 3*A4 + B1"), g));
    CHECK(product(expand_named(NamedClass::sigma(2), g), expand_named(NamedClass::beta(3), g), g) ==
          expand_expr(words("10*A1 + 10*A2 + 10*A3 + 9*A4 + 8*A5 + 3*B1 + 3*B2 + 2*B3 + 3*B4 + C1"), g));
    CHECK_THROWS_AS(product(expand_named(NamedClass::sigma(3), g), expand_named(NamedClass::sigma(3), g), g),
                    DegreeOverflow);
}

TEST_CASE("product is graded, commutative and associative") {
    const int g = 5;
    std::vector<BoundaryPoly> small;
    for (const char* s : {"s1", "s2", "b2", "s1 + 3*O[1|]", "2*b3 - s3", "O[2|]", "O[1,1|]"})
        small.push_back(expand_expr(words(s), g));
    for (const auto& a : small)
        for (const auto& b : small) {
            if (a.degree() + b.degree() > kMaxDegree) continue;
            auto ab = product(a, b, g);
            CHECK(ab.degree() == a.degree() + b.degree());
            CHECK(ab == product(b, a, g));
            for (const auto& c : small) {
                if (a.degree() + b.degree() + c.degree() > kMaxDegree) continue;
                CHECK(product(ab, c, g) == product(a, product(b, c, g), g));
            }
        }
}

TEST_CASE("zm powers: closed coefficients") {
    for (int g = 2; g <= 5; ++g) {
        auto p1 = expand_zm_power(g, 1);
        CHECK(p1.degree() == 1);
        CHECK(p1.coeff(canonical_pattern({1}, {})) == pow2(2 * g - 2));
        auto p3 = expand_zm_power(g, 3);
        CHECK(p3.degree() == 3);
        if (g >= 3) CHECK(p3.coeff(canonical_pattern({1, 1, 1}, {})) == Rational(6) * pow2(2 * g - 4));
        CHECK(p3.coeff(canonical_pattern({1, 1, 1}, {0b111})).is_zero());
    }
    CHECK(expand_zm_power(4, 4).coeff(canonical_pattern({1, 1, 1, 1}, {0b1111})) == Rational(24) * pow2(4));
    CHECK_THROWS_AS(expand_zm_power(3, 6), DegreeOverflow);
}

TEST_CASE("zm powers against literal expansion") {
    for (auto [g, j] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}}) {
        auto literal = literal_zm_power(g, j);
        auto engine = expand_zm_power(g, j);
        for (const auto& [t, c] : literal) CHECK_MESSAGE(engine.coeff(t) == c, "g=" << g << " j=" << j << " " << t.str());
        for (const auto& [t, c] : engine.terms()) CHECK_MESSAGE(literal.count(t) == 1, "g=" << g << " " << t.str());
    }
}

TEST_CASE("pushforward from the level cover") {
    const int g = 4;
    CHECK(solve(pushforward_level2(cover({1}, {})), {"s1"}, g) == std::vector<Rational>{q(1, 2)});
    auto pairs = pushforward_level2(cover({1, 1}, {}));
    CHECK(solve(pairs, {"s2"}, g) == std::vector<Rational>{q(1, 4)});
    CHECK(solve(pushforward_level2(cover({2}, {})), {"s1^2", "s2"}, g) == std::vector<Rational>{q(1, 4), q(-1, 2)});
    CHECK(solve(pushforward_level2(cover({2, 1}, {})), {"s1*s2", "s3"}, g) == std::vector<Rational>{q(1, 8), q(-3, 8)});
    CHECK(solve(pushforward_level2(cover({3}, {})), {"s1^3", "s1*s2", "s3"}, g) ==
          std::vector<Rational>{q(1, 8), q(-3, 8), q(3, 8)});
    CHECK(solve(pushforward_level2(cover({1, 1, 1}, {})), {"b3"}, g) == std::vector<Rational>{q(1, 8)});
}

TEST_CASE("change of basis") {
    const int g = 5;
    auto ys1 = expand_expr(words("s1*Y"), g);
    CHECK(solve(ys1, {"A3", "A5", "B2"}, g) == std::vector<Rational>{q(1), q(1), q(1)});
    CHECK_THROWS_AS(change_basis(expand_named(NamedClass::y(), g), word_list({"s4"}), g), Infeasible);
    try {
        change_basis(expand_named(NamedClass::y(), g), word_list({"s4"}), g);
    } catch (const Infeasible& e) {
        CHECK(std::string(e.what()).find("[1,1,1,1|1111]") != std::string::npos);
    }
    auto redundant = change_basis(expand_named(NamedClass::sigma(2), g), word_list({"s2", "2*s2"}), g);
    CHECK_FALSE(redundant.unique);
}

TEST_CASE("literal membership from the definitions") {
    const std::vector<Vec> labels = {0b001000, 0b010000, 0b100000, 0b111000};
    const std::vector<int> ones = {1, 1, 1, 1};
    CHECK(literal_member(NamedClass::y(), labels, ones));
    CHECK(literal_member(NamedClass::sigma(4), labels, ones));
    CHECK_FALSE(literal_member(NamedClass::beta(4), labels, ones));
    CHECK_FALSE(literal_member(NamedClass::y(), labels, {2, 1, 1, 1}));
}

TEST_CASE("literal identity check") {
    auto ok = verify_identity(words("s1*s4"), words("5*A + B"), 3);
    CHECK(ok.holds);
    CHECK(ok.monomials_checked > 0);
    auto bad = verify_identity(words("s1*s4"), words("5*A + 2*B"), 3);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.witness.empty());
    CHECK(bad.lhs_coeff != bad.rhs_coeff);
    CHECK_THROWS(verify_identity(words("s5"), words("A"), 4));
    auto sampled = verify_identity_sampled(words("s1^2*b3"),
                                           words("20*A1 + 20*A2 + 20*A3 + 18*A4 + 16*A5 + 7*B1 + 7*B2 + 5*B3 + 6*B4 + 2*C1 + D1"),
                                           5, 2000, 5);
    CHECK(sampled.holds);
    CHECK(sampled.monomials_checked == 2000);
}
