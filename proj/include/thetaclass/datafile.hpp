#pragma once

#include <string>
#include <vector>

#include "thetaclass/boundary.hpp"
#include "thetaclass/pipeline.hpp"
#include "thetaclass/taut_ring.hpp"

namespace thetaclass {

// One record per line: "kind | genus | payload | provenance", fields separated by " | " (space,
// bar, space). Blank lines and lines starting with '#' are ignored. Kinds:
//   normalization  payload is <lambda_1^top> as a fraction
//   relation       payload "word = expression", a substitution rule in the Chow ring at that genus
//   identity       payload "expression = expression" over named boundary classes
struct DataEntry {
    std::string kind;
    int genus = 0;
    std::string payload;
    std::string provenance;
    int line = 0;
};

// Throws MissingDatum if the file cannot be opened, ParseError on a malformed line.
std::vector<DataEntry> load_data_file(const std::string& path);

// Directory holding ring_data.txt and identity_ledger.txt in the source tree.
std::string default_data_dir();

// Published table plus every normalization entry of the file.
NormalizationTable normalizations_with(const std::vector<DataEntry>& entries);

struct RelationRule {
    SubstitutionRule rule;
    std::string text;
    std::string provenance;
};
// Relations for genus g; throws MissingDatum if there are none.
std::vector<RelationRule> relations_for(const std::vector<DataEntry>& entries, int g);

struct LedgerIdentity {
    WordExpr lhs, rhs;
    std::string text;
    std::string provenance;
};
std::vector<LedgerIdentity> ledger_identities(const std::vector<DataEntry>& entries);

// Boundary-only expression as a WordExpr; ParseError if a lambda class occurs.
WordExpr to_word_expr(const MixedClass& x);

}  // namespace thetaclass
