#pragma once

#include <cstdint>
#include <string>

namespace thetaclass {

struct SweepResult {
    std::uint64_t tuples = 0;
    std::uint64_t mismatches = 0;
    std::string first_mismatch;  // empty when none
};

// count_vanishing against brute_force_count on every pairwise orthogonal set of distinct
// nonzero labels of size 1..max_k (each set once, in increasing label order), plus the empty tuple.
SweepResult sweep_counts_exhaustive(int g, int max_k = 5);

// Same comparison on seeded random orthogonal tuples of size 1..max_k (labels drawn in random
// order, so slot order varies).
SweepResult sweep_counts_sampled(int g, std::uint64_t samples, std::uint64_t seed, int max_k = 5);

}  // namespace thetaclass
