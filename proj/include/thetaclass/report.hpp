#pragma once

#include <string>
#include <variant>
#include <vector>

#include "thetaclass/datafile.hpp"
#include "thetaclass/mixed.hpp"
#include "thetaclass/rational.hpp"

namespace thetaclass {

namespace prov {
inline constexpr const char* kPublished = "published";          // derived and equal to the published value
inline constexpr const char* kDerived = "derived";              // no published value to compare with
inline constexpr const char* kDerivedDiffers = "derived-differs";  // derived, published value differs or is absent
inline constexpr const char* kPublishedFlagged = "published-flagged";  // the differing published value
inline constexpr const char* kExternal = "external";            // from a data file outside the published record
}  // namespace prov

// One exact coefficient: item names the computation, lambda holds exponents e_1..e_g, word is the
// boundary word ("1" for none).
struct Record {
    std::string item;
    std::vector<int> lambda;
    std::string word = "1";
    Rational value;
    std::string provenance;

    friend bool operator==(const Record&, const Record&) = default;
};

struct Comment {
    std::string text;
    friend bool operator==(const Comment&, const Comment&) = default;
};

struct Report {
    int genus = 0;
    std::vector<std::variant<Comment, Record>> entries;
    bool failed = false;  // a hard failure was recorded

    void comment(const std::string& text) { entries.push_back(Comment{text}); }
    void record(Record r) { entries.push_back(std::move(r)); }
    // Records for every term of x, provenance decided by compare().
    void records(const std::string& item, const MixedClass& x, const std::string& provenance);
    std::vector<Record> records_of(const std::string& item) const;
};

// "item=... lambda=e1,..,eg word=... num=... den=... prov=..." per record, "# text" per comment.
std::string to_machine(const Report& r);
// Inverse of to_machine; throws ParseError.
Report parse_machine(const std::string& text);
// Human-readable rendering.
std::string to_text(const Report& r);

// "93*(1/2*l1^5 + 4*l1^2*l3)": the gcd of the numerators pulled out.
std::string factored(const LambdaPoly& p);

// Records of derived against a published fixture: equal coefficients become "published";
// a differing or missing published coefficient makes the derived record "derived-differs" and
// adds a "published-flagged" record with the published value (0 when absent).
void tag_against(Report& r, const std::string& item, const MixedClass& derived, const MixedClass& published);

// Report builders used by the command-line driver.
Report report_open_class(int g);
Report report_compactified_class(int g, const std::vector<DataEntry>& data);
Report report_taut_projection(int g);
Report report_product_taut(int g, const NormalizationTable& table);
Report report_ij_taut(const NormalizationTable& table);
Report report_verify_identities(int g, const std::vector<LedgerIdentity>& ledger, std::uint64_t samples,
                                std::uint64_t seed);
Report report_verify_counts(int g, std::uint64_t samples, std::uint64_t seed);
Report report_ring_info(int g, const NormalizationTable& table);

}  // namespace thetaclass
