#include <doctest.h>

#include <random>

#include "support.hpp"
#include "thetaclass/errors.hpp"
#include "thetaclass/linalg.hpp"
#include "thetaclass/numberware.hpp"
#include "thetaclass/taut_ring.hpp"

using namespace thetaclass;
using testing_support::lam;
using testing_support::q;

namespace {

// Independent normal form: rewrite lambda_i^2 with the degree-2i component of the defining
// relation, lambda_i^2 = 2 sum_{b<i} (-1)^{i+b+1} lambda_{2i-b} lambda_b, until every monomial is
// squarefree. Squarefree monomials in lambda_1..lambda_g form a basis of the ring.
LambdaPoly squarefree_form(const LambdaPoly& p, int g) {
    LambdaPoly out;
    std::vector<std::pair<LambdaMonomial, Rational>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        if (m.max_index() > g) continue;
        int sq = 0;
        for (int i = 1; i <= g && sq == 0; ++i)
            if (m.e[i - 1] >= 2) sq = i;
        if (sq == 0) {
            out.add(m, c);
            continue;
        }
        LambdaMonomial rest = m;
        rest.e[sq - 1] -= 2;
        for (int b = 0; b < sq; ++b) {
            const int a = 2 * sq - b;
            if (a > g) continue;
            LambdaMonomial t = rest * LambdaMonomial::lambda(a);
            if (b > 0) t = t * LambdaMonomial::lambda(b);
            const Rational sign = ((sq + b + 1) % 2 == 0) ? Rational(2) : Rational(-2);
            work.push_back({t, c * sign});
        }
    }
    return out;
}

LambdaPoly open_form(const LambdaPoly& squarefree, int g) {
    LambdaPoly out;
    for (const auto& [m, c] : squarefree.terms())
        if (m.e[g - 1] == 0) out.add(m, c);
    return out;
}

LambdaMonomial staircase(int g) {
    LambdaMonomial m;
    for (int i = 1; i <= g; ++i) m.e[i - 1] = 1;
    return m;
}

// <m> from the squarefree form: ratio of staircase coefficients against lambda_1^top.
Rational oracle_degree(const LambdaPoly& x, int g, const Rational& top_value) {
    const int top = g * (g + 1) / 2;
    Rational ref = squarefree_form(LambdaPoly(LambdaMonomial::lambda(1, top)), g).coeff(staircase(g));
    return squarefree_form(x, g).coeff(staircase(g)) / ref * top_value;
}

// Hirzebruch-Mumford value of <lambda_1^top>, used as a cross-check of the normalization table.
Rational proportionality_top(int g) {
    const int n = g * (g + 1) / 2;
    Rational v(factorial(static_cast<unsigned>(n)));
    for (int k = 1; k <= g; ++k) {
        mpz_class dfact = 1;
        for (int i = 1; i <= 2 * k - 1; i += 2) dfact *= i;
        v *= zeta_negative_odd(static_cast<unsigned>(k)) / Rational(dfact);
    }
    if (n % 2 == 1) v = -v;
    return v / pow2(g);
}

std::size_t strict_partitions(int d, int max_part) {
    if (d == 0) return 1;
    std::size_t n = 0;
    for (int p = std::min(d, max_part); p >= 1; --p) n += strict_partitions(d - p, p - 1);
    return n;
}

}  // namespace

TEST_CASE("ring dimensions") {
    for (int g = 1; g <= 5; ++g) {
        auto r = build_ring(g, false);
        CHECK(r->top_degree() == g * (g + 1) / 2);
        CHECK(r->total_dimension() == (std::size_t(1) << g));
        CHECK(r->dimension(r->top_degree()) == 1);
        for (int d = 0; d <= r->top_degree(); ++d) CHECK(r->dimension(d) == strict_partitions(d, g));
        auto o = build_ring(g, true);
        CHECK(o->top_degree() == g * (g - 1) / 2);
        CHECK(o->total_dimension() == (std::size_t(1) << (g - 1)));
    }
    CHECK_THROWS(build_ring(6, false));
}

TEST_CASE("defining relation reduces to zero") {
    for (int g = 1; g <= 5; ++g) {
        auto r = build_ring(g, false);
        for (int d = 2; d <= 2 * g; d += 2) CHECK(r->reduce(mumford_component(g, d)).is_zero());
        CHECK(build_ring(g, true)->reduce(LambdaMonomial::lambda(g)).is_zero());
        CHECK(r->reduce(LambdaMonomial::lambda(1, r->top_degree() + 1)).is_zero());
    }
    CHECK_THROWS_AS(build_ring(3, false)->reduce(LambdaMonomial::lambda(4)), DegreeOverflow);
}

TEST_CASE("normal forms agree with the squarefree oracle") {
    for (int g = 1; g <= 5; ++g) {
        auto r = build_ring(g, false);
        auto o = build_ring(g, true);
        for (int d = 0; d <= r->top_degree(); ++d)
            for (const auto& m : monomials_of_degree(g, d)) {
                CHECK_MESSAGE(squarefree_form(r->reduce(m), g) == squarefree_form(LambdaPoly(m), g),
                              "g=" << g << " " << m.str());
                CHECK_MESSAGE(open_form(squarefree_form(o->reduce(m), g), g) == open_form(squarefree_form(LambdaPoly(m), g), g),
                              "open g=" << g << " " << m.str());
            }
    }
}

TEST_CASE("reduction is multiplicative") {
    std::mt19937_64 rng(17);
    for (int g = 2; g <= 5; ++g) {
        auto r = build_ring(g, false);
        for (int trial = 0; trial < 60; ++trial) {
            auto ma = monomials_of_degree(g, 1 + static_cast<int>(rng() % 6));
            auto mb = monomials_of_degree(g, 1 + static_cast<int>(rng() % 6));
            LambdaPoly a = r->reduce(ma[rng() % ma.size()]), b = r->reduce(mb[rng() % mb.size()]);
            CHECK(r->reduce(a * b) == r->reduce(r->reduce(a) * r->reduce(b)));
        }
    }
}

TEST_CASE("quoted reductions") {
    auto r4 = build_ring(4, false);
    CHECK(r4->reduce(lam("l3^2")) == lam("l1^3*l3 - l1^6/8"));
    CHECK(r4->reduce(lam("l1^5*l3")) == lam("7/48*l1^8"));
    auto r5 = build_ring(5, false);
    CHECK(r5->reduce(lam("l3^2")) == lam("l1^3*l3 - l1^6/8 - 2*l1*l5"));
    CHECK(r5->reduce(lam("l1^5*l3 - 7/48*l1^8 - 8/3*l5*(l1^3 + l3)")).is_zero());
    CHECK(r5->reduce(lam("l5^2")).is_zero());
    CHECK(r5->reduce(lam("l1^3*l3*l5 - 1/5*l1^6*l5 + 1/7040*l1^11")).is_zero());
    CHECK(r5->reduce(lam("l1^8*l5")) == lam("3/1144*l1^13"));
    CHECK(build_ring(3, false)->reduce(lam("l2")) == lam("l1^2/2"));
}

TEST_CASE("normalization table") {
    auto t = NormalizationTable::published();
    CHECK(t.at(1).value == q(1, 24));
    CHECK(t.at(3).value == q(1, 181440));
    CHECK(t.at(4).value == q(1, 1814400));
    CHECK(t.at(5).value == q(13, 16329600));
    CHECK_FALSE(t.has(2));
    CHECK_THROWS_AS(t.at(2), MissingDatum);
    for (int g : {1, 3, 4, 5}) CHECK(t.at(g).value == proportionality_top(g));
    CHECK(proportionality_top(2) == q(1, 2880));
}

TEST_CASE("intersection numbers") {
    auto t = NormalizationTable::published();
    auto r4 = build_ring(4, false);
    CHECK(intersection_number(*r4, lam("l1^10"), t) == q(1, 1814400));
    CHECK(intersection_number(*r4, lam("l3*l1^7"), t) == q(7, 48) * q(1, 1814400));
    CHECK(intersection_number(*r4, lam("l1^3*l1^4*l3"), t) == q(7, 48) * q(1, 1814400));
    CHECK(intersection_number(*r4, lam("l3*l1^4*l3"), t) == q(1, 48) * q(1, 1814400));
    auto r5 = build_ring(5, false);
    CHECK(intersection_number(*r5, lam("l1^15"), t) == q(13, 16329600));
    CHECK(intersection_number(*r5, lam("l1^12*l3"), t) == q(2, 16329600));
    CHECK(intersection_number(*r5, lam("l1^9*l3^2"), t) == q(1, 53222400));
    CHECK_THROWS(intersection_number(*r5, lam("l1^14"), t));
    for (int g : {3, 4, 5}) {
        auto r = build_ring(g, false);
        for (const auto& m : monomials_of_degree(g, r->top_degree()))
            CHECK(intersection_number(*r, LambdaPoly(m), t) == oracle_degree(LambdaPoly(m), g, t.at(g).value));
    }
}

TEST_CASE("pairing matrices are nonsingular") {
    auto t = NormalizationTable::published();
    t.set(2, {q(1, 2880), "test"});
    for (int g = 1; g <= 5; ++g) {
        auto r = build_ring(g, false);
        for (int d = 0; d <= r->top_degree(); ++d) CHECK(!determinant(pairing_matrix(*r, d, t)).is_zero());
    }
    auto m = pairing_matrix(*build_ring(4, false), 3, t);
    REQUIRE(m.size() == 2);
    const Rational u = q(1, 1814400);
    CHECK(m == Matrix{{u, q(7, 48) * u}, {q(7, 48) * u, q(1, 48) * u}});
}

TEST_CASE("tautological projection of boundary terms") {
    auto r4 = build_ring(4, false);
    CHECK(sigma1_power_taut(4) == r4->reduce(lam("-11520*l4")));
    CHECK(zero_section_taut(4) == r4->reduce(lam("240*l4")));
    CHECK(zero_section_taut(5) == lam("132*l5"));
    CHECK(taut_project_boundary(LambdaMonomial{}, {1, 4}, 4) == sigma1_power_taut(4));
    CHECK(taut_project_boundary(LambdaMonomial{}, {2, 4}, 4).is_zero());
    CHECK(taut_project_boundary(LambdaMonomial::lambda(1), {1, 3}, 4).is_zero());
    CHECK(taut_project_boundary(LambdaMonomial::lambda(2, 2), {0, 0}, 4) == build_ring(4, false)->reduce(lam("l2^2")));
    CHECK_THROWS(taut_project_boundary(LambdaMonomial{}, {1, 3}, 4));
}
