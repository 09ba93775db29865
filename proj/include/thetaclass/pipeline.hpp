#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thetaclass/boundary.hpp"
#include "thetaclass/mixed.hpp"
#include "thetaclass/taut_ring.hpp"

namespace thetaclass {

// c_g(E (x) L) = sum_i lambda_{g-i} ell^i; entry i is the coefficient of ell^i (lambda_0 = 1).
std::vector<LambdaPoly> chern_top_twisted(int g);

// sum_{i=j}^{g} C(i,j) (lambda_1/2)^{i-j} lambda_{g-i}, unreduced.
LambdaPoly lambda_factor(int g, int j);

// 2^{g-1}(2^g-1) sum_i lambda_{g-i} (lambda_1/2)^i reduced in the open ring.
TautElement class_open(int g);
// The same polynomial reduced in the compactified ring.
TautElement class_open_compactified_lift(int g);

// Named-class targets used to express the boundary part of stratum j.
std::vector<Word> stratum_targets(int j);

// Stratum j of the compactified class: (-1/4)^j p_*(sum_m (sum_{n in Z_m} delta_n)^j) times the
// lambda factor.
struct Stratum {
    int j = 0;
    BoundaryPoly cover;  // sum over odd m of the j-th power, before scaling
    BoundaryPoly base;   // scaled by (-1/4)^j and pushed down
    std::vector<Word> targets;
    BasisSolution solution;
    TautElement lambda;  // lambda_factor(g, j) reduced in the compactified ring
    MixedClass contribution;
};

struct CompactifiedClass {
    int genus = 0;
    std::vector<Stratum> strata;
    MixedClass total;
};

// 2 <= g <= 5. Throws Infeasible if a stratum leaves the span of its targets.
CompactifiedClass class_compactified(int g);

// Reduces every lambda part in the compactified genus-g ring.
MixedClass normalize_mixed(const MixedClass& x, int g);

// Rewrites terms whose boundary word equals a rule's left side, until no rule applies, then
// normalizes. Rule right sides may be any mixed class.
using SubstitutionRule = std::pair<Word, MixedClass>;
MixedClass substitute(const MixedClass& x, const std::vector<SubstitutionRule>& rules, int g);

// Boundary-termwise tautological projection of class_compactified(g).
TautElement taut_projection_boundary_route(int g);
// (-1)^{g-1}(g-1)!/(8 zeta(1-2g)) lambda_g + the compactified lift of the open class.
TautElement taut_projection_closed_formula(int g);
// Both routes; throws RouteDisagreement with both values when they differ.
TautElement taut_projection(int g);

// Degree of mu * [closure of A_1 x A_{g-1}] for a lambda monomial mu of degree
// top - (g - 1), from the restriction lambda_k -> 1 x lambda_k + lambda_1 x lambda_{k-1}.
Rational product_locus_pairing(int g, const LambdaMonomial& mu, const NormalizationTable& table);
// [closure of A_1 x A_{g-1}]^taut solved from the perfect pairing; g in {4, 5}.
TautElement product_locus_taut(int g, const NormalizationTable& table);

// Lambda_1 coefficient 2^{h-2}(2^h+1) of the theta-null divisor class in genus h.
Rational theta_null_lambda_coefficient(int h);
// (coefficient / 12) [A_0 x A_{g-1}]^taut: the part of coefficient * lambda_1 * [A_1 x A_{g-1}]
// coming from lambda_1 on the A_1 factor (<lambda_1>_{A_1} = 1/24, stack degree of A_0 = 1/2).
TautElement a0_correction(int g, const NormalizationTable& table);
// [closure of A_1 x theta_null^{(g-1)}]^taut; g in {4, 5}.
TautElement theta_null_product_taut(int g, const NormalizationTable& table);
// taut_projection(5) - theta_null_product_taut(5).
TautElement ij_taut(const NormalizationTable& table);

}  // namespace thetaclass
