#include "thetaclass/fixtures.hpp"

#include <stdexcept>

#include "thetaclass/rational.hpp"

namespace thetaclass {

namespace {

std::string scaled(const Rational& c, const std::string& body) { return "(" + c.str() + ")*(" + body + ")"; }

std::string join_blocks(const std::vector<PublishedBlock>& blocks) {
    std::string s;
    for (const auto& b : blocks) s += (s.empty() ? "" : " + ") + ("(" + b.expression + ")");
    return s;
}

}  // namespace

std::vector<PublishedBlock> published_class_genus3_blocks() {
    return {
        {"lambda-only", 0, "28*(l3 + l2*l1/2 + l1*l1^2/4 + l1^3/8)"},
        {"sigma1", 1, "-2*s1*(l2 + 2*l1*l1/2 + 3*l1^2/4)"},
        {"quadratic", 2, "1/4*(s1^2 - s2)*(l1 + 3*l1/2)"},
        {"cubic", 3, "-1/32*(s1^3 - 3*s1*s2 + 3*s3) - 3/64*(s1*s2 - 3*s3) - 3/64*b3"},
    };
}

std::string published_class_genus3() { return join_blocks(published_class_genus3_blocks()); }

std::string published_class_genus4() {
    return "180*l1*l3 + 45/2*l1^4 - 8*s1*l3 - 14*s1*l1^3 + 7/2*l1^2*s1^2"
           " - 7/2*l1^2*s2 - 3/8*l1*s1^3 + 9/16*l1*s1*s2 + 9/16*l1*s3 - 9/16*l1*b3 + 3/64*Y + 1/64*s4"
           " - 1/16*s1*s3 + 3/64*s1*b3 + 1/64*s2^2 - 1/32*s1^2*s2 + 1/64*s1^4";
}

std::vector<PublishedBlock> published_class_genus5_blocks() {
    return {
        {"lambda-only", 0, "496*l5 + 372*l3*l1^2 + 93/2*l1^5"},
        {"sigma1", 1, "-64*l3*l1*s1 - 34*l1^4*s1"},
        {"quadratic", 2, "(4*l3 + 14*l1^3)*(s1^2 - s2)"},
        {"cubic", 3, "5/4*l1^2*(3*s3 + 3*s2*s1 - 2*s1^3)"},
        {"quartic", 4, "7/32*l1*(s4 - 4*s3*s1 + 3*Y + 3*b3*s1 + s2^2 - 2*s2*s1^2 + s1^4)"},
        {"quintic", 5,
         "-1/256*(-95*s5 - 30*b5 - 45*A2 - 30*A3 - 15*A4 + 15*C1 + 10*D1"
         " + 45*s4*s1 + 15*b4*s1 + 30*Y*s1 + 5*s3*s2 - 15*s3*s1^2 + 5*s2^2*s1 - 5*s2*s1^3 + 2*s1^5)"},
    };
}

std::string published_class_genus5() { return join_blocks(published_class_genus5_blocks()); }

std::string published_stratum2(int g) { return scaled(pow2(2 * g - 8), "s1^2 - s2"); }

std::string published_stratum3(int g) { return scaled(-pow2(2 * g - 12), "2*s1^3 - 3*s1*s2 - 3*s3 + 3*b3"); }

std::string published_stratum4_intermediate(int g) {
    return scaled(pow2(2 * g - 2) / Rational(4096),
                  "6*Y + 3*b4 + 3*(s1*b3 - b4 - Y - 3*s4) + 3*(s2^2 - 2*s1*s3 + 2*s4)"
                  " + 2*(s1^2*s2 - 2*s2^2 - s1*s3 + 4*s4) + s1^4 - 4*s1^2*s2 + 2*s2^2 + 4*s1*s3 - 4*s4");
}

std::string published_stratum4_final(int g) {
    return scaled(pow2(2 * g - 14), "s4 - 4*s3*s1 + 3*Y + 3*s1*b3 + s2^2 - 2*s2*s1^2 + s1^4");
}

std::string published_open_class(int g) {
    if (g == 4) return "45*l1^4";
    if (g == 5) return "93*(4*l1^2*l3 + l1^5/2)";
    throw std::invalid_argument("no published open class at this genus");
}

std::string published_ij_taut() { return "140*l1^5 - 376*l1^2*l3 + 848*l5"; }

std::string published_theta_null_product(int g) {
    if (g == 4) return "45*l1^4";
    if (g == 5) return "187*(-l1^5/2 + 4*l1^2*l3 - 4*l5)";
    throw std::invalid_argument("no published theta-null product class at this genus");
}

std::string published_product_locus(int g) {
    if (g == 4) return "20*l3";
    if (g == 5) return "-11/8*l1^4 + 11*l1*l3";
    throw std::invalid_argument("no published product locus class at this genus");
}

}  // namespace thetaclass
