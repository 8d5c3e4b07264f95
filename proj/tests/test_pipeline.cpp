#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "linkwidth/certificate.hpp"
#include "linkwidth/pipeline.hpp"

using namespace linkwidth;

namespace {

TableEntry table_entry(const std::string& name) {
    for (auto& e : testsupport::sample_table()) {
        if (e.name == name) return e;
    }
    throw std::runtime_error("no table entry " + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("linkwidth_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("table lines") {
    const auto e = parse_table_line("L2a1\tdt\tlengths: 1 1; 4 2\t1\t2", 3, "t.tsv");
    REQUIRE(e);
    CHECK(e->format == CodeFormat::Dt);
    CHECK(e->metadata.is_prime == true);
    CHECK(e->metadata.bridge_lower == 2);
    CHECK(e->metadata.provenance == "t.tsv:3");

    CHECK_FALSE(parse_table_line("# comment", 1, "t").has_value());
    CHECK_FALSE(parse_table_line("   ", 1, "t").has_value());
    const auto bare = parse_table_line("tref\tgauss\tO1,U2,O3,U1,O2,U3", 1, "t");
    REQUIRE(bare);
    CHECK_FALSE(bare->metadata.is_prime.has_value());

    CHECK_THROWS_AS(parse_table_line("x\tpd\t1 2", 1, "t"), TableError);
    CHECK_THROWS_AS(parse_table_line("x\tdt", 1, "t"), TableError);
    CHECK_THROWS_AS(parse_table_line("x\tdt\t4 6 2\tmaybe", 1, "t"), TableError);

    std::istringstream dup("a\tdt\t4 6 2\na\tdt\t4 6 2\n");
    CHECK_THROWS_AS(read_table(dup), TableError);
}

TEST_CASE("bundled table has 100 links") {
    const auto entries = testsupport::sample_table();
    CHECK(entries.size() == 100);
}

TEST_CASE("trefoil pipeline row") {
    const TableEntry e{"trefoil", CodeFormat::Gauss, "O1,U2,O3,U1,O2,U3", {"trefoil", std::nullopt, 2, ""}};
    const PipelineResult r = run_pipeline(e);
    CHECK(r.row.error.empty());
    CHECK(r.row.wirt_upper == 2);
    CHECK(r.row.lex_multiset == WidthMultiset({4, 2, 2}));
    CHECK(r.row.sum_width == 8);
    CHECK(r.row.trunk_value == 4);
    CHECK(r.row.trunk_status == "exact(2-bridge)");
    CHECK(r.row.tube_3x1);
    CHECK(r.row.height == 1);
}

TEST_CASE("L10n35 and L9a55 have trunk 6") {
    for (const char* name : {"L10n35", "L9a55"}) {
        CAPTURE(name);
        const PipelineResult r = run_pipeline(table_entry(name));
        CHECK(r.row.trunk_value == 6);
        CHECK(r.row.trunk_status == "exact(staged-trunk6)");
        CHECK(r.row.wirt_upper == 4);
        CHECK(r.row.lex_multiset == WidthMultiset({6, 6, 4, 4, 4, 2, 2}));
        CHECK(r.row.dbc_bound == std::vector<int>{3, 3});
    }
}

TEST_CASE("L11a496 has a trunk-6 certificate") {
    const PipelineResult r = run_pipeline(table_entry("L11a496"));
    CHECK(r.row.trunk_value == 6);
    CHECK(r.row.wirt_upper == 4);
    // Bridge number 3 from the table is not enough to call it exact.
    CHECK(r.row.trunk_status == "upper(staged-certificate)");
}

TEST_CASE("L9a55 loses its trunk-6 certificate without type II specials") {
    PipelineOptions opts;
    opts.coloring.detect_type_two = false;
    opts.mode = TrunkMode::Staged;
    const PipelineResult r = run_pipeline(table_entry("L9a55"), opts);
    CHECK((r.row.trunk_value != 6 || !r.row.error.empty()));
}

TEST_CASE("parse failures become error rows") {
    const TableEntry bad{"bad", CodeFormat::Dt, "4 6 5", {}};
    const PipelineResult r = run_pipeline(bad);
    CHECK(r.row.trunk_status == "error");
    CHECK_FALSE(r.row.error.empty());
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("certificate text round trip and replay") {
    const PipelineResult r = run_pipeline(table_entry("L10n35"));
    REQUIRE(r.certificate);
    const std::string text = write_certificate(*r.certificate);
    const Certificate back = read_certificate(text);
    CHECK(write_certificate(back) == text);
    for (const auto& rep : verify_certificate(back)) CHECK_MESSAGE(rep.ok, rep.message);

    // A tampered value is caught.
    Certificate bad = back;
    bad.sequences[0].events[0].value_after = 4;
    CHECK_FALSE(verify_certificate(bad)[0].ok);
    CHECK_THROWS(read_certificate("# linkwidth certificate\nname x\n"));
}

TEST_CASE("CSV and JSON reports") {
    ReportRow row;
    row.name = "a,b";
    row.lex_multiset = WidthMultiset({4, 2, 2});
    row.dbc_bound = {1};
    const std::string csv = to_csv(row);
    CHECK(csv.rfind("\"a,b\",", 0) == 0);
    CHECK(csv.find(",4 2 2,") != std::string::npos);
    const std::string json = to_json({row});
    CHECK(json.find("\"lex_multiset\": [\n      4,") != std::string::npos);
}

TEST_CASE("sweep of an empty table writes only the header") {
    const auto dir = scratch("empty");
    const SweepSummary s = sweep({}, 4, dir / "r.csv", ReportFormat::Csv);
    CHECK(s.rows == 0);
    CHECK(slurp(dir / "r.csv") == csv_header());
}

TEST_CASE("sweep output does not depend on the job count") {
    auto entries = testsupport::sample_table();
    entries.resize(30);
    const auto a = scratch("jobs1");
    const auto b = scratch("jobs4");
    sweep(entries, 1, a / "r.json", ReportFormat::Json);
    sweep(entries, 4, b / "r.json", ReportFormat::Json);
    for (const auto& f : std::filesystem::directory_iterator(a)) {
        CAPTURE(f.path().filename().string());
        CHECK(slurp(f.path()) == slurp(b / f.path().filename()));
    }
}
