#pragma once

#include <compare>
#include <map>
#include <string>

#include "thetaclass/boundary.hpp"
#include "thetaclass/lambda.hpp"

namespace thetaclass {

struct MixedKey {
    Word word;
    LambdaMonomial lam;

    // Boundary word first (degree, then tag order), then the lambda monomial.
    friend bool operator==(const MixedKey&, const MixedKey&) = default;
    friend std::strong_ordering operator<=>(const MixedKey& a, const MixedKey& b) {
        if (auto c = a.word <=> b.word; c != 0) return c;
        return a.lam <=> b.lam;
    }
};

// Finite sum of (lambda monomial) * (word in named boundary classes) with exact coefficients.
class MixedClass {
public:
    MixedClass() = default;
    MixedClass(const Rational& c);
    MixedClass(const Word& w, const LambdaMonomial& lam, const Rational& c = Rational(1));
    MixedClass(const LambdaPoly& p);

    const std::map<MixedKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Word& w, const LambdaMonomial& lam) const;

    void add(const MixedKey& k, const Rational& c);
    MixedClass& operator+=(const MixedClass& o);
    MixedClass& operator-=(const MixedClass& o);
    MixedClass operator*(const MixedClass& o) const;
    MixedClass operator*(const Rational& c) const;
    MixedClass operator*(const LambdaPoly& p) const;
    friend MixedClass operator+(MixedClass a, const MixedClass& b) { return a += b; }
    friend MixedClass operator-(MixedClass a, const MixedClass& b) { return a -= b; }
    friend bool operator==(const MixedClass&, const MixedClass&) = default;
    MixedClass pow(int n) const;

    // Terms whose boundary word has the given degree.
    MixedClass boundary_component(int d) const;
    // Lambda polynomial multiplying each word.
    std::map<Word, LambdaPoly> by_word() const;
    // Lambda-only part (coefficient of the empty word).
    LambdaPoly lambda_part() const;

    // "180*l1*l3 + 45/2*l1^4 - 8*l3*s1 ...", in key order; "0" if zero.
    std::string str() const;

private:
    std::map<MixedKey, Rational> terms_;
};

// Parses the expression grammar used for published fixtures and data files:
//   numbers (integers; a/b via division), l1..l5, named boundary classes (s1..s5, b1..b5, Y,
//   A, A1..A5, B, B1..B4, C, C1, C2, D, D1, D2, E, F, G, O[exps|relations]), +, -, *, /
//   (by a nonzero constant), ^ (nonnegative integer), parentheses.
// Throws ParseError with the offending position.
MixedClass parse_mixed(const std::string& text);

}  // namespace thetaclass
