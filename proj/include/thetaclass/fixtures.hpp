#pragma once

#include <string>
#include <vector>

#include "thetaclass/mixed.hpp"

namespace thetaclass {

// Published expressions transcribed verbatim into the parse_mixed grammar. They are reference
// data for regression and provenance tagging; nothing in the pipeline reads them.

// A printed group of terms: its boundary degree is the stratum j it comes from.
struct PublishedBlock {
    std::string name;
    int boundary_degree = 0;
    std::string expression;
};

// Genus-3 class before simplification against the Chow ring of A_3^Perf, by printed group
// (lambda factors left unreduced, as printed).
std::vector<PublishedBlock> published_class_genus3_blocks();
std::string published_class_genus3();
// Genus-4 class.
std::string published_class_genus4();

// Genus-5 class as printed, split into its printed groups.
std::vector<PublishedBlock> published_class_genus5_blocks();
std::string published_class_genus5();

// Boundary parts of strata j = 2, 3, 4 for arbitrary g (to be multiplied by the lambda factor).
std::string published_stratum2(int g);
std::string published_stratum3(int g);
// Order-4 term: the unsimplified display and the final line.
std::string published_stratum4_intermediate(int g);
std::string published_stratum4_final(int g);

// Published tautological results.
std::string published_open_class(int g);  // g = 4, 5
std::string published_ij_taut();
std::string published_theta_null_product(int g);  // g = 4, 5
std::string published_product_locus(int g);       // g = 4, 5

}  // namespace thetaclass
