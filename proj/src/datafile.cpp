#include "thetaclass/datafile.hpp"

#include <fstream>

#include "thetaclass/errors.hpp"

namespace thetaclass {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_equation(const DataEntry& e) {
    auto eq = e.payload.find('=');
    if (eq == std::string::npos || e.payload.find('=', eq + 1) != std::string::npos)
        throw ParseError("line " + std::to_string(e.line) + ": expected exactly one '=' in \"" + e.payload + "\"");
    return {trim(e.payload.substr(0, eq)), trim(e.payload.substr(eq + 1))};
}

}  // namespace

std::vector<DataEntry> load_data_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingDatum("data file not found: " + path);
    std::vector<DataEntry> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        // Fields are separated by " | "; a bare '|' belongs to O[exps|relations].
        std::vector<std::string> fields;
        std::size_t from = 0;
        for (std::size_t at; (at = t.find(" | ", from)) != std::string::npos; from = at + 3)
            fields.push_back(trim(t.substr(from, at - from)));
        fields.push_back(trim(t.substr(from)));
        if (fields.size() != 4)
            throw ParseError(path + ":" + std::to_string(no) + ": expected 4 fields separated by ' | '");
        DataEntry e;
        e.kind = fields[0];
        try {
            e.genus = std::stoi(fields[1]);
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(no) + ": genus is not an integer");
        }
        e.payload = fields[2];
        e.provenance = fields[3];
        e.line = no;
        if (e.kind != "normalization" && e.kind != "relation" && e.kind != "identity")
            throw ParseError(path + ":" + std::to_string(no) + ": unknown kind '" + e.kind + "'");
        if (e.provenance.empty()) throw ParseError(path + ":" + std::to_string(no) + ": missing provenance");
        out.push_back(std::move(e));
    }
    return out;
}

std::string default_data_dir() {
#ifdef THETACLASS_DATA_DIR
    return THETACLASS_DATA_DIR;
#else
    return "data";
#endif
}

NormalizationTable normalizations_with(const std::vector<DataEntry>& entries) {
    NormalizationTable t = NormalizationTable::published();
    for (const auto& e : entries) {
        if (e.kind != "normalization") continue;
        if (t.has(e.genus) && t.at(e.genus).value != Rational::parse(e.payload))
            throw ParseError("line " + std::to_string(e.line) + ": normalization at genus " + std::to_string(e.genus) +
                             " contradicts the published value");
        if (!t.has(e.genus)) t.set(e.genus, {Rational::parse(e.payload), e.provenance});
    }
    return t;
}

std::vector<RelationRule> relations_for(const std::vector<DataEntry>& entries, int g) {
    std::vector<RelationRule> out;
    for (const auto& e : entries) {
        if (e.kind != "relation" || e.genus != g) continue;
        auto [l, r] = split_equation(e);
        MixedClass lhs = parse_mixed(l);
        if (lhs.terms().size() != 1 || !lhs.terms().begin()->first.lam.is_one() ||
            lhs.terms().begin()->second != Rational(1))
            throw ParseError("line " + std::to_string(e.line) + ": relation left side must be a single boundary word");
        out.push_back({{lhs.terms().begin()->first.word, parse_mixed(r)}, e.payload, e.provenance});
    }
    if (out.empty()) throw MissingDatum("no Chow ring relations for genus " + std::to_string(g) + " in the data file");
    return out;
}

WordExpr to_word_expr(const MixedClass& x) {
    WordExpr w;
    for (const auto& [k, c] : x.terms()) {
        if (!k.lam.is_one()) throw ParseError("boundary identity contains a lambda class: " + x.str());
        w[k.word] += c;
    }
    return w;
}

std::vector<LedgerIdentity> ledger_identities(const std::vector<DataEntry>& entries) {
    std::vector<LedgerIdentity> out;
    for (const auto& e : entries) {
        if (e.kind != "identity") continue;
        auto [l, r] = split_equation(e);
        out.push_back({to_word_expr(parse_mixed(l)), to_word_expr(parse_mixed(r)), e.payload, e.provenance});
    }
    return out;
}

}  // namespace thetaclass
