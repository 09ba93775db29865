// Command-line driver: runs one computation and prints its report.
//
// Exit status: 0 success, 1 hard failure (infeasible basis change, route disagreement, oracle
// mismatch), 2 usage error, 3 missing data.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "thetaclass/datafile.hpp"
#include "thetaclass/errors.hpp"
#include "thetaclass/report.hpp"

using namespace thetaclass;

namespace {

struct GenusRange {
    int lo, hi;
};

const std::map<std::string, GenusRange> kCommands = {
    {"open-class", {1, 5}},        {"compactified-class", {2, 5}}, {"taut-projection", {2, 5}},
    {"product-taut", {4, 5}},      {"ij-taut", {5, 5}},            {"verify-identities", {1, 5}},
    {"verify-counts", {1, 5}},     {"ring-info", {1, 5}},
};

std::vector<DataEntry> load_all(const std::vector<std::string>& paths) {
    std::vector<DataEntry> all;
    for (const auto& p : paths) {
        auto e = load_data_file(p);
        all.insert(all.end(), e.begin(), e.end());
    }
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact class computations for loci of abelian varieties with a singular odd two-torsion point"};
    std::string command;
    int genus = 0;
    std::vector<std::string> data_paths;
    std::string format = "text";
    std::uint64_t seed = 20240601;
    std::uint64_t samples = 100000;

    std::vector<std::string> names;
    for (const auto& [k, v] : kCommands) names.push_back(k);
    app.add_option("--command", command, "Computation to run")->required()->check(CLI::IsMember(names));
    app.add_option("--genus", genus, "Genus (ij-taut is fixed at 5)");
    app.add_option("--data", data_paths, "Data file(s); defaults to the bundled ring data and identity ledger");
    app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", seed, "Seed for sampled sweeps at g >= 4");
    app.add_option("--samples", samples, "Sample count for sampled sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (command == "ij-taut" && genus == 0) genus = 5;
    const auto range = kCommands.at(command);
    if (genus < range.lo || genus > range.hi) {
        std::cerr << "error: --genus " << genus << " outside " << range.lo << ".." << range.hi << " for " << command
                  << "\n";
        return 2;
    }
    if (data_paths.empty())
        data_paths = {default_data_dir() + "/ring_data.txt", default_data_dir() + "/identity_ledger.txt"};

    try {
        auto data = load_all(data_paths);
        auto table = normalizations_with(data);
        Report r;
        if (command == "open-class") r = report_open_class(genus);
        else if (command == "compactified-class") r = report_compactified_class(genus, data);
        else if (command == "taut-projection") r = report_taut_projection(genus);
        else if (command == "product-taut") r = report_product_taut(genus, table);
        else if (command == "ij-taut") r = report_ij_taut(table);
        else if (command == "verify-identities") {
            auto ledger = ledger_identities(data);
            if (ledger.empty()) throw MissingDatum("no identity records in the data files");
            r = report_verify_identities(genus, ledger, samples, seed);
        } else if (command == "verify-counts") r = report_verify_counts(genus, samples, seed);
        else r = report_ring_info(genus, table);
        std::cout << (format == "machine" ? to_machine(r) : to_text(r));
        return r.failed ? 1 : 0;
    } catch (const MissingDatum& e) {
        std::cerr << "missing data: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
