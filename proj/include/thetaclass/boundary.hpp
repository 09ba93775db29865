#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetaclass/config_type.hpp"
#include "thetaclass/rational.hpp"

namespace thetaclass {

// Cover: orbit sums S_T = sum of all monomials of type T on the level-2 cover.
// Base: the downstairs symbol [T] := 2^{deg T} * pushforward(S_T).
// Both levels multiply with the same structure constants.
enum class Level { Cover, Base };

class BoundaryPoly {
public:
    explicit BoundaryPoly(Level level = Level::Base) : level_(level) {}

    Level level() const { return level_; }
    // -1 for the zero polynomial.
    int degree() const { return degree_; }
    const std::map<ConfigType, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const ConfigType& t) const;

    void add(const ConfigType& t, const Rational& c);
    BoundaryPoly& operator+=(const BoundaryPoly& o);
    BoundaryPoly& operator-=(const BoundaryPoly& o);
    BoundaryPoly operator*(const Rational& c) const;
    friend BoundaryPoly operator+(BoundaryPoly a, const BoundaryPoly& b) { return a += b; }
    friend BoundaryPoly operator-(BoundaryPoly a, const BoundaryPoly& b) { return a -= b; }
    friend bool operator==(const BoundaryPoly& a, const BoundaryPoly& b) {
        return a.level_ == b.level_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    Level level_;
    int degree_ = -1;
    std::map<ConfigType, Rational> terms_;
};

enum class Tag { Sigma, Beta, Y, A, B, C, D, E, F, G, Orbit };

// A named downstairs boundary class. A, B, C, D with index 0 are the family sums
// (A = A1 + ... + A5 and so on). Orbit is a generic pattern sum written O[exps|relations].
struct NamedClass {
    Tag tag = Tag::Sigma;
    int index = 1;
    // Orbit only: exponents in slot order and relation generators over those slots;
    // any_relation means every relation pattern with these exponents.
    std::vector<int> orbit_exps;
    std::vector<Vec> orbit_relations;
    bool any_relation = false;

    static NamedClass sigma(int k) { return {Tag::Sigma, k, {}, {}, false}; }
    static NamedClass beta(int k) { return {Tag::Beta, k, {}, {}, false}; }
    static NamedClass y() { return {Tag::Y, 0, {}, {}, false}; }
    static NamedClass a(int i) { return {Tag::A, i, {}, {}, false}; }
    static NamedClass b(int i) { return {Tag::B, i, {}, {}, false}; }
    static NamedClass c(int i) { return {Tag::C, i, {}, {}, false}; }
    static NamedClass d(int i) { return {Tag::D, i, {}, {}, false}; }
    static NamedClass e() { return {Tag::E, 0, {}, {}, false}; }
    static NamedClass f() { return {Tag::F, 0, {}, {}, false}; }
    static NamedClass g() { return {Tag::G, 0, {}, {}, false}; }
    static NamedClass orbit(std::vector<int> exps, std::vector<Vec> relations, bool any = false);

    int degree() const;
    std::string str() const;
    // Parses the str() spelling: s3, b3, Y, A2, A, E, O[2,1,1|111], O[2,1,1|*], ...
    static NamedClass parse(const std::string& s);

    friend bool operator==(const NamedClass&, const NamedClass&) = default;
    friend auto operator<=>(const NamedClass&, const NamedClass&) = default;
};

// Commutative product of named classes; factors kept sorted. The empty word is 1.
struct Word {
    std::vector<NamedClass> factors;

    Word() = default;
    explicit Word(std::vector<NamedClass> fs);
    int degree() const;
    Word operator*(const Word& o) const;
    std::string str() const;  // "1", "s1^2*b3"

    friend bool operator==(const Word&, const Word&) = default;
    // Total degree first, then factor lists.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

// Linear combination of words.
using WordExpr = std::map<Word, Rational>;

// Defining orbit sum of a named class at genus g (Base level, types of rank <= g).
BoundaryPoly expand_named(const NamedClass& c, int g);
BoundaryPoly expand_word(const Word& w, int g);
BoundaryPoly expand_expr(const WordExpr& e, int g);

// Unit of the algebra (the degree-0 type) at the given level.
BoundaryPoly unit_poly(Level level);

// Formal product; result degree is capped at 5.
BoundaryPoly product(const BoundaryPoly& p, const BoundaryPoly& q, int g);

// Number of ways a fixed monomial of type v splits as (type t) * (type u), in that order.
std::uint64_t structure_constant(const ConfigType& t, const ConfigType& u, const ConfigType& v);

// sum over odd m of (sum_{n in Z_m} delta_n)^j on the cover.
BoundaryPoly expand_zm_power(int g, int j);

// Cover -> Base: coefficient / 2^d on each degree-d type.
BoundaryPoly pushforward_level2(const BoundaryPoly& p);

struct BasisSolution {
    std::vector<Rational> coefficients;  // one per target, free variables set to 0
    bool unique = true;
};

// Exact solve of p = sum x_i * expand_word(targets[i]). Throws Infeasible with the residual
// types when p is outside the span.
BasisSolution change_basis(const BoundaryPoly& p, const std::vector<Word>& targets, int g);

struct IdentityCheck {
    bool holds = true;
    std::uint64_t monomials_checked = 0;
    std::string witness;  // first monomial where the sides differ
    Rational lhs_coeff, rhs_coeff;
};

// Literal check: instantiates both sides over concrete labels at genus g (monomials with
// pairwise orthogonal supports) and compares the coefficient of every monomial. Membership
// in a named class is decided from its definition by subset sums, independently of
// canonical_config.
IdentityCheck verify_identity(const WordExpr& lhs, const WordExpr& rhs, int g);
// Same comparison on seeded random monomials instead of all of them.
IdentityCheck verify_identity_sampled(const WordExpr& lhs, const WordExpr& rhs, int g, std::uint64_t samples,
                                      std::uint64_t seed);

// Literal membership of a concrete monomial in a named class (definition check).
bool literal_member(const NamedClass& c, const std::vector<Vec>& labels, const std::vector<int>& exps);

}  // namespace thetaclass
