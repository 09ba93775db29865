#include "thetaclass/pipeline.hpp"

#include "thetaclass/errors.hpp"
#include "thetaclass/numberware.hpp"

namespace thetaclass {

namespace {

LambdaPoly lam(int i) { return i == 0 ? LambdaPoly(Rational(1)) : LambdaPoly(LambdaMonomial::lambda(i)); }

void check_genus(int g, int lo, int hi, const char* what) {
    if (g < lo || g > hi)
        throw std::invalid_argument(std::string(what) + ": genus " + std::to_string(g) + " outside " +
                                    std::to_string(lo) + ".." + std::to_string(hi));
}

Word word(std::initializer_list<NamedClass> fs) { return Word(std::vector<NamedClass>(fs)); }

}  // namespace

std::vector<LambdaPoly> chern_top_twisted(int g) {
    check_genus(g, 1, kMaxGenus, "chern_top_twisted");
    std::vector<LambdaPoly> c;
    for (int i = 0; i <= g; ++i) c.push_back(lam(g - i));
    return c;
}

LambdaPoly lambda_factor(int g, int j) {
    check_genus(g, 1, kMaxGenus, "lambda_factor");
    if (j < 0 || j > g) throw std::invalid_argument("lambda_factor: j outside 0..g");
    const auto c = chern_top_twisted(g);
    const LambdaPoly half_l1(LambdaMonomial::lambda(1), Rational(1, 2));
    LambdaPoly r;
    for (int i = j; i <= g; ++i) r += half_l1.pow(i - j) * c[i] * Rational(binomial(i, j));
    return r;
}

TautElement class_open(int g) {
    check_genus(g, 1, kMaxGenus, "class_open");
    Rational n_odd = pow2(g - 1) * (pow2(g) - Rational(1));
    return build_ring(g, true)->reduce(lambda_factor(g, 0) * n_odd);
}

TautElement class_open_compactified_lift(int g) {
    check_genus(g, 1, kMaxGenus, "class_open_compactified_lift");
    Rational n_odd = pow2(g - 1) * (pow2(g) - Rational(1));
    return build_ring(g, false)->reduce(lambda_factor(g, 0) * n_odd);
}

std::vector<Word> stratum_targets(int j) {
    using N = NamedClass;
    const N s1 = N::sigma(1), s2 = N::sigma(2), s3 = N::sigma(3), s4 = N::sigma(4), s5 = N::sigma(5);
    switch (j) {
        case 0: return {Word{}};
        case 1: return {word({s1})};
        case 2: return {word({s1, s1}), word({s2})};
        case 3: return {word({s1, s1, s1}), word({s1, s2}), word({s3}), word({N::beta(3)})};
        case 4:
            return {word({s4}),         word({s1, s3}),     word({N::y()}),         word({s1, N::beta(3)}),
                    word({s2, s2}),     word({s1, s1, s2}), word({s1, s1, s1, s1})};
        case 5:
            return {word({s5}),         word({N::beta(5)}),     word({N::a(2)}),        word({N::a(3)}),
                    word({N::a(4)}),    word({N::c(1)}),        word({N::d(1)}),        word({s1, s4}),
                    word({s1, N::beta(4)}), word({s1, N::y()}), word({s2, s3}),         word({s1, s1, s3}),
                    word({s1, s2, s2}), word({s1, s1, s1, s2}), word({s1, s1, s1, s1, s1})};
    }
    throw DegreeOverflow("stratum_targets: j outside 0..5");
}

MixedClass normalize_mixed(const MixedClass& x, int g) {
    auto ring = build_ring(g, false);
    MixedClass r;
    for (const auto& [w, p] : x.by_word()) {
        const TautElement reduced = ring->reduce(p);
        for (const auto& [m, c] : reduced.terms()) r.add(MixedKey{w, m}, c);
    }
    return r;
}

CompactifiedClass class_compactified(int g) {
    check_genus(g, 2, kMaxGenus, "class_compactified");
    auto ring = build_ring(g, false);
    CompactifiedClass out;
    out.genus = g;
    for (int j = 0; j <= g; ++j) {
        Stratum s;
        s.j = j;
        s.cover = expand_zm_power(g, j);
        s.base = pushforward_level2(s.cover) * Rational(-1, 4).pow(j);
        s.targets = stratum_targets(j);
        s.solution = change_basis(s.base, s.targets, g);
        s.lambda = ring->reduce(lambda_factor(g, j));
        for (std::size_t i = 0; i < s.targets.size(); ++i) {
            const Rational& c = s.solution.coefficients[i];
            if (c.is_zero()) continue;
            for (const auto& [m, x] : s.lambda.terms()) s.contribution.add(MixedKey{s.targets[i], m}, c * x);
        }
        out.total += s.contribution;
        out.strata.push_back(std::move(s));
    }
    return out;
}

MixedClass substitute(const MixedClass& x, const std::vector<SubstitutionRule>& rules, int g) {
    MixedClass cur = normalize_mixed(x, g);
    for (int round = 0; round < 64; ++round) {
        MixedClass next;
        bool changed = false;
        for (const auto& [k, c] : cur.terms()) {
            const MixedClass* rhs = nullptr;
            for (const auto& [lhs, r] : rules)
                if (lhs == k.word) rhs = &r;
            if (rhs) {
                next += *rhs * LambdaPoly(k.lam, c);
                changed = true;
            } else {
                next.add(k, c);
            }
        }
        cur = normalize_mixed(next, g);
        if (!changed) return cur;
    }
    throw std::runtime_error("substitute: rules did not terminate after 64 rounds");
}

TautElement taut_projection_boundary_route(int g) {
    check_genus(g, 2, kMaxGenus, "taut_projection");
    auto cls = class_compactified(g);
    TautElement r;
    for (const auto& s : cls.strata) {
        for (const auto& [t, c] : s.base.terms()) {
            BoundaryDescriptor d{t.k(), t.degree()};
            for (const auto& [m, x] : s.lambda.terms()) r += taut_project_boundary(m, d, g) * (c * x);
        }
    }
    return build_ring(g, false)->reduce(r);
}

TautElement taut_projection_closed_formula(int g) {
    check_genus(g, 2, kMaxGenus, "taut_projection");
    Rational c = Rational(g % 2 ? 1 : -1) * Rational(factorial(g - 1)) / (Rational(8) * zeta_negative_odd(g));
    TautElement r = class_open_compactified_lift(g);
    r += build_ring(g, false)->reduce(TautElement(LambdaMonomial::lambda(g), c));
    return r;
}

TautElement taut_projection(int g) {
    TautElement a = taut_projection_boundary_route(g);
    TautElement b = taut_projection_closed_formula(g);
    if (!(a == b))
        throw RouteDisagreement("taut_projection at g=" + std::to_string(g) + ": boundary route " + a.str() +
                                " vs closed formula " + b.str());
    return a;
}

Rational product_locus_pairing(int g, const LambdaMonomial& mu, const NormalizationTable& table) {
    check_genus(g, 2, kMaxGenus, "product_locus_pairing");
    const int h = g - 1;
    auto small = build_ring(h, false);
    if (mu.degree() != small->top_degree() + 1)
        throw std::invalid_argument("product_locus_pairing: monomial of the wrong degree");
    // Exactly one factor lambda_k contributes lambda_1 x lambda_{k-1}; lambda_1^2 = 0 on A_1.
    Rational total;
    for (int k = 1; k <= 5; ++k) {
        if (!mu.e[k - 1]) continue;
        LambdaMonomial rest = mu;
        rest.e[k - 1] -= 1;
        if (k > 1) rest.e[k - 2] += 1;
        if (rest.max_index() > h) continue;  // lambda_i vanishes on A_h for i > h
        total += Rational(mu.e[k - 1]) * intersection_number(*small, TautElement(rest), table);
    }
    return total * table.at(1).value;
}

TautElement product_locus_taut(int g, const NormalizationTable& table) {
    check_genus(g, 4, 5, "product_locus_taut");
    auto ring = build_ring(g, false);
    const auto& unknowns = ring->basis(g - 1);
    const auto& tests = ring->basis(ring->top_degree() - (g - 1));
    Matrix a(tests.size(), std::vector<Rational>(unknowns.size()));
    std::vector<Rational> b(tests.size());
    for (std::size_t r = 0; r < tests.size(); ++r) {
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            a[r][c] = intersection_number(*ring, TautElement(unknowns[c] * tests[r]), table);
        b[r] = product_locus_pairing(g, tests[r], table);
    }
    auto sol = solve_linear(a, b);
    if (!sol || !sol->unique) throw Infeasible("product_locus_taut: singular pairing system");
    TautElement x;
    for (std::size_t c = 0; c < unknowns.size(); ++c) x.add(unknowns[c], sol->x[c]);
    return x;
}

Rational theta_null_lambda_coefficient(int h) {
    check_genus(h, 1, kMaxGenus, "theta_null_lambda_coefficient");
    return pow2(h - 2) * (pow2(h) + Rational(1));
}

TautElement a0_correction(int g, const NormalizationTable& table) {
    check_genus(g, 4, 5, "a0_correction");
    const Rational stack_degree_a0(1, 2);
    return zero_section_taut(g) * (theta_null_lambda_coefficient(g - 1) * table.at(1).value / stack_degree_a0);
}

TautElement theta_null_product_taut(int g, const NormalizationTable& table) {
    check_genus(g, 4, 5, "theta_null_product_taut");
    auto ring = build_ring(g, false);
    TautElement divisor(LambdaMonomial::lambda(1), theta_null_lambda_coefficient(g - 1));
    TautElement r = ring->reduce(divisor * product_locus_taut(g, table));
    r -= a0_correction(g, table);
    return ring->reduce(r);
}

TautElement ij_taut(const NormalizationTable& table) {
    TautElement r = taut_projection(5);
    r -= theta_null_product_taut(5, table);
    return build_ring(5, false)->reduce(r);
}

}  // namespace thetaclass
