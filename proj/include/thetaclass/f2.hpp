#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thetaclass {

// Vectors of F_2^{2g} are packed as uint32_t: bit i (i < g) is the i-th coordinate of the
// first half (epsilon / alpha), bit g+i the i-th coordinate of the second half (delta / beta).
using Vec = std::uint32_t;

constexpr int kMaxGenus = 5;

struct Characteristic {
    int genus = 1;
    Vec eps = 0;
    Vec del = 0;

    Vec bits() const { return eps | (del << genus); }
    static Characteristic from_bits(int g, Vec v);
    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

struct BoundaryLabel {
    int genus = 1;
    Vec vec = 0;  // nonzero

    BoundaryLabel() = default;
    BoundaryLabel(int g, Vec v);
    // (alpha; beta) halves, each given as bits with coordinate i at bit i.
    static BoundaryLabel from_halves(int g, Vec alpha, Vec beta);
    Vec alpha() const;
    Vec beta() const;
    friend bool operator==(const BoundaryLabel&, const BoundaryLabel&) = default;
    friend auto operator<=>(const BoundaryLabel&, const BoundaryLabel&) = default;
};

std::string to_string(const BoundaryLabel& n);
std::string to_string(const Characteristic& m);

int parity(const Characteristic& m);
// Parity of a packed vector read as a characteristic.
int parity_bits(int g, Vec v);

int symplectic_form(const BoundaryLabel& a, const BoundaryLabel& b);
int symplectic_form_bits(int g, Vec a, Vec b);

// Odd characteristics in lexicographic order of (eps_1..eps_g, del_1..del_g).
std::vector<Characteristic> enumerate_odd(int g);

// All nonzero n with parity(m + n) = 0. Throws for even m.
std::vector<BoundaryLabel> z_set(const Characteristic& m);

// Number of odd m with n_i in Z_m for all i, by the closed rule. The tuple must be
// pairwise orthogonal, duplicate-free and of the same genus.
std::uint64_t count_vanishing(int g, const std::vector<BoundaryLabel>& tuple);

// Same rule on an abstract dependency pattern: k slots, relation space given by a basis of
// bitmasks over the slots.
std::uint64_t count_vanishing_pattern(int g, int k, const std::vector<Vec>& relations);

// Whether the closed counting rule is certified for this pattern.
bool pattern_certified(int k, const std::vector<Vec>& relations);

// Exhaustive count over all 2^{2g} characteristics.
std::uint64_t brute_force_count(int g, const std::vector<BoundaryLabel>& tuple);

// GF(2) helpers on packed vectors.
int gf2_rank(std::vector<Vec> vs);
// Basis (reduced echelon form, rows sorted by lowest set bit) of
// {c in F_2^k : sum_i c_i vs[i] = 0}.
std::vector<Vec> relation_space(const std::vector<Vec>& vs);
// Reduced echelon form of the span: each row's lowest set bit is cleared in all other rows.
std::vector<Vec> gf2_rref(std::vector<Vec> rows);

}  // namespace thetaclass
