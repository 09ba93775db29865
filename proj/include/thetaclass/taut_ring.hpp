#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "thetaclass/lambda.hpp"
#include "thetaclass/linalg.hpp"

namespace thetaclass {

// Q[lambda_1..lambda_g] modulo the even-degree components of
// (1 + l1 + ... + lg)(1 - l1 + ... + (-1)^g lg) - 1, and additionally lambda_g on the open space.
//
// Canonical basis per degree: monomials are ranked by (number of factors lambda_i with i even,
// fewer first), then by exponent of lambda_1 (larger first), then lambda_2, and so on. Each degree
// is row-reduced with the least preferred monomials as pivots; the non-pivot monomials form
// the basis. Every degree above the top one is zero, which build_ring checks up to top + g.
class RingPresentation {
public:
    int genus() const { return genus_; }
    bool open() const { return open_; }
    // g(g+1)/2 compactified, g(g-1)/2 open.
    int top_degree() const { return top_; }
    const std::vector<LambdaMonomial>& basis(int d) const;
    std::size_t dimension(int d) const { return basis(d).size(); }
    std::size_t total_dimension() const;

    // Throws DegreeOverflow for monomials involving lambda_i with i > g.
    TautElement reduce(const LambdaMonomial& m) const;
    TautElement reduce(const LambdaPoly& p) const;

private:
    friend std::shared_ptr<const RingPresentation> build_ring(int g, bool open);
    int genus_ = 1;
    bool open_ = false;
    int top_ = 0;
    std::vector<std::vector<LambdaMonomial>> basis_;
    // Normal form of every monomial of degree <= top (over lambda_1..lambda_g).
    std::map<LambdaMonomial, TautElement> normal_form_;
};

// Cached per (g, open); 1 <= g <= 5.
std::shared_ptr<const RingPresentation> build_ring(int g, bool open);

// Monomials in lambda_1..lambda_g of degree d.
std::vector<LambdaMonomial> monomials_of_degree(int g, int d);

// The degree-2k component of (1 + l1 + ... + lg)(1 - l1 + ... + (-1)^g lg).
LambdaPoly mumford_component(int g, int d);

// <lambda_1^{g(g+1)/2}> on the compactified space, with a provenance string.
struct Normalization {
    Rational value;
    std::string provenance;
};

class NormalizationTable {
public:
    // g = 1, 3, 4, 5 from the published literature.
    static NormalizationTable published();
    void set(int g, Normalization n) { entries_[g] = std::move(n); }
    bool has(int g) const { return entries_.count(g) > 0; }
    // Throws MissingDatum.
    const Normalization& at(int g) const;
    const std::map<int, Normalization>& entries() const { return entries_; }

private:
    std::map<int, Normalization> entries_;
};

// Degree of a top-degree class on the compactified space.
Rational intersection_number(const RingPresentation& r, const TautElement& x, const NormalizationTable& table);

// Gram matrix between basis(d) (rows) and basis(top - d) (columns).
Matrix pairing_matrix(const RingPresentation& r, int d, const NormalizationTable& table);

// A boundary monomial as seen by the tautological projection: number of distinct support
// labels and total boundary degree. distinct_labels = 0 means no boundary factor.
struct BoundaryDescriptor {
    int distinct_labels = 0;
    int degree = 0;
};

// Tautological projection of lambda-monomial times the pushforward of a boundary orbit sum with
// the given descriptor, normalized so that the pure single-support power of degree g projects
// like sigma_1^g.
TautElement taut_project_boundary(const LambdaMonomial& lam, const BoundaryDescriptor& b, int g);

// [sigma_1^g]^taut = -2^{g-1} (g-1)! / zeta(1-2g) * lambda_g.
TautElement sigma1_power_taut(int g);
// [B_g]^taut = (-1)^g lambda_g / zeta(1-2g).
TautElement zero_section_taut(int g);

}  // namespace thetaclass
