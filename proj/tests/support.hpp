#pragma once

#include <doctest.h>

#include <string>

#include "thetaclass/datafile.hpp"
#include "thetaclass/lambda.hpp"
#include "thetaclass/mixed.hpp"

namespace testing_support {

inline thetaclass::LambdaPoly lam(const std::string& s) { return thetaclass::parse_mixed(s).lambda_part(); }
inline thetaclass::WordExpr words(const std::string& s) { return thetaclass::to_word_expr(thetaclass::parse_mixed(s)); }
inline thetaclass::Word word(const std::string& s) { return words(s).begin()->first; }
inline thetaclass::Rational q(long n, long d = 1) { return thetaclass::Rational(n, d); }

}  // namespace testing_support

namespace doctest {
template <>
struct StringMaker<thetaclass::LambdaPoly> {
    static String convert(const thetaclass::LambdaPoly& p) { return p.str().c_str(); }
};
template <>
struct StringMaker<thetaclass::MixedClass> {
    static String convert(const thetaclass::MixedClass& p) { return p.str().c_str(); }
};
template <>
struct StringMaker<thetaclass::Rational> {
    static String convert(const thetaclass::Rational& p) { return p.str().c_str(); }
};
}  // namespace doctest
