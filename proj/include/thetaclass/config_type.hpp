#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thetaclass/f2.hpp"

namespace thetaclass {

// Isomorphism class of a boundary monomial prod delta_{n_i}^{e_i} with pairwise orthogonal
// support: the exponents (sorted non-increasing) and the relation space
// {c in F_2^k : sum c_i n_i = 0}, stored as a reduced echelon basis over the slots. Among slot
// permutations that preserve the exponent sequence, the lexicographically smallest basis is kept.
struct ConfigType {
    std::vector<int> exponents;
    std::vector<Vec> relations;

    int k() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    int rank() const { return k() - static_cast<int>(relations.size()); }
    bool has_odd_relation() const;
    // d! / prod e_i!
    mpz_class multinomial() const;
    // e.g. "[2,1,1|111]"; relation rows are written slot 0 first.
    std::string str() const;

    friend bool operator==(const ConfigType&, const ConfigType&) = default;
    friend auto operator<=>(const ConfigType&, const ConfigType&) = default;
};

// Canonical type of an abstract pattern: slot exponents in any order and any spanning set of
// the relation space (bitmasks over the same slot order).
ConfigType canonical_pattern(const std::vector<int>& exponents, const std::vector<Vec>& relation_span);

// nullopt is the zero class (some pair of support labels is not orthogonal).
std::optional<ConfigType> canonical_config(const std::vector<BoundaryLabel>& support, const std::vector<int>& exponents);

// Every type of total degree d (any rank): exponent partitions of d combined with relation
// spaces free of weight-1 and weight-2 vectors (support labels are nonzero and distinct).
const std::vector<ConfigType>& types_of_degree(int d);

// All elements of the span of the given rows (including 0).
std::vector<Vec> span_elements(const std::vector<Vec>& rows);

constexpr int kMaxDegree = 5;

}  // namespace thetaclass
