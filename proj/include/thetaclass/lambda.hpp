#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "thetaclass/rational.hpp"

namespace thetaclass {

// prod lambda_i^{e_i}; e[i-1] is the exponent of lambda_i. lambda_i has degree i.
struct LambdaMonomial {
    std::array<int, 5> e{};

    static LambdaMonomial lambda(int i, int power = 1);
    int degree() const;
    // Largest i with e_i > 0, or 0 for the constant monomial.
    int max_index() const;
    bool is_one() const { return max_index() == 0; }
    LambdaMonomial operator*(const LambdaMonomial& o) const;
    // "1", "l1^2*l3"
    std::string str() const;

    friend bool operator==(const LambdaMonomial&, const LambdaMonomial&) = default;
    // Degree first, then exponent vectors.
    friend std::strong_ordering operator<=>(const LambdaMonomial& a, const LambdaMonomial& b);
};

// Polynomial in lambda_1..lambda_5 with exact coefficients; zero coefficients are never stored.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& c);  // constant
    LambdaPoly(const LambdaMonomial& m, const Rational& c = Rational(1));

    const std::map<LambdaMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const LambdaMonomial& m) const;
    // -1 for zero, the common degree if homogeneous, otherwise throws.
    int degree() const;
    bool is_homogeneous() const;
    LambdaPoly component(int d) const;

    void add(const LambdaMonomial& m, const Rational& c);
    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    LambdaPoly operator*(const LambdaPoly& o) const;
    LambdaPoly operator*(const Rational& c) const;
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;
    LambdaPoly pow(int n) const;

    // "93/2*l1^5 + 372*l1^2*l3", terms by decreasing degree then monomial order; "0" if zero.
    std::string str() const;

private:
    std::map<LambdaMonomial, Rational> terms_;
};

using TautElement = LambdaPoly;

}  // namespace thetaclass
