#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "thetaclass/datafile.hpp"
#include "thetaclass/errors.hpp"
#include "thetaclass/report.hpp"

using namespace thetaclass;
using testing_support::lam;
using testing_support::q;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("thetaclass_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

std::vector<DataEntry> bundled_data() {
    auto a = load_data_file(default_data_dir() + "/ring_data.txt");
    auto b = load_data_file(default_data_dir() + "/identity_ledger.txt");
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

int count_prov(const Report& r, const std::string& prov) {
    int n = 0;
    for (const auto& e : r.entries)
        if (const auto* x = std::get_if<Record>(&e); x && x->provenance == prov) ++n;
    return n;
}

}  // namespace

TEST_CASE("machine report round trip") {
    Report r = report_open_class(5);
    std::string text = to_machine(r);
    Report back = parse_machine(text);
    CHECK(back.genus == 5);
    CHECK(back.entries == r.entries);
    CHECK(to_machine(back) == text);
    CHECK(text.find("item=open-class lambda=2,0,1,0,0 word=1 num=372 den=1 prov=published") != std::string::npos);
    CHECK(text.rfind("# status OK\n") == text.size() - 12);

    Report c = report_compactified_class(4, bundled_data());
    CHECK(to_machine(parse_machine(to_machine(c))) == to_machine(c));
}

TEST_CASE("machine report parse errors") {
    CHECK_THROWS_AS(parse_machine("item=x lambda=1 word=1 num=1 den=1 prov=derived\n"), ParseError);
    CHECK_THROWS_AS(parse_machine("# genus 3\nitem=x lambda=1 word=1 num=1 prov=derived\n# status OK\n"), ParseError);
    CHECK_THROWS_AS(parse_machine("# genus 3\n# status OK\nitem=x\n"), ParseError);
    CHECK_THROWS_AS(parse_machine("# genus 3\nitem=x lambda=1 word=1 num=1 den=0 prov=derived\n# status OK\n"), std::exception);
}

TEST_CASE("factoring and provenance tagging") {
    CHECK(factored(lam("372*l1^2*l3 + 93/2*l1^5")) == "93*(1/2*l1^5 + 4*l1^2*l3)");
    CHECK(factored(lam("l1")) == "l1");
    CHECK(factored(LambdaPoly{}) == "0");
    Report r;
    r.genus = 2;
    tag_against(r, "x", parse_mixed("2*l1 + s1"), parse_mixed("2*l1 + 3*s1 + l1^2"));
    CHECK(count_prov(r, prov::kPublished) == 1);
    CHECK(count_prov(r, prov::kDerivedDiffers) == 2);
    CHECK(count_prov(r, prov::kPublishedFlagged) == 2);
}

TEST_CASE("report contents") {
    auto data = bundled_data();
    auto table = normalizations_with(data);
    Report g3 = report_compactified_class(3, data);
    CHECK_FALSE(g3.failed);
    CHECK(count_prov(g3, prov::kDerivedDiffers) == 0);
    Report g5 = report_compactified_class(5, data);
    CHECK(count_prov(g5, prov::kDerivedDiffers) == 1);
    Report ij = report_ij_taut(table);
    CHECK(count_prov(ij, prov::kPublished) == 3);
    Report ring = report_ring_info(2, table);
    CHECK(to_text(ring).find(prov::kExternal) != std::string::npos);
    Report counts = report_verify_counts(2, 100, 1);
    CHECK_FALSE(counts.failed);
}

TEST_CASE("data files") {
    auto data = bundled_data();
    CHECK(normalizations_with(data).at(2).value == q(1, 2880));
    CHECK(normalizations_with(data).at(2).provenance.rfind("external", 0) == 0);
    CHECK(relations_for(data, 2).size() == 2);
    CHECK_THROWS_AS(relations_for(data, 3), MissingDatum);
    CHECK(ledger_identities(data).size() == 18);

    CHECK_THROWS_AS(load_data_file("/nonexistent/thetaclass.txt"), MissingDatum);
    CHECK_THROWS_AS(load_data_file(write_temp("bad_kind", "widget | 2 | x | y\n")), ParseError);
    CHECK_THROWS_AS(load_data_file(write_temp("bad_fields", "relation | 2 | s2 = 6*l1*s1\n")), ParseError);
    CHECK_THROWS_AS(load_data_file(write_temp("bad_genus", "relation | two | s2 = 6*l1*s1 | x\n")), ParseError);
    auto contradicts = load_data_file(write_temp("contradicts", "normalization | 3 | 1/7 | mine\n"));
    CHECK_THROWS_AS(normalizations_with(contradicts), ParseError);
    auto bad_rule = load_data_file(write_temp("bad_rule", "relation | 2 | 2*s2 = l1*s1 | mine\n"));
    CHECK_THROWS_AS(relations_for(bad_rule, 2), ParseError);
    auto with_lambda = load_data_file(write_temp("with_lambda", "identity | 3 | s1*l1 = s1 | mine\n"));
    CHECK_THROWS_AS(ledger_identities(with_lambda), ParseError);
    auto ok = load_data_file(write_temp("ok", "# comment\n\nidentity | 3 | s5 = O[1,1,1,1,1|*] | mine\n"));
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].line == 3);
    CHECK(ledger_identities(ok).size() == 1);
}
