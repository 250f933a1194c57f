#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "immersion/search.hpp"

using namespace imm;

TEST_CASE("parse_family_spec") {
    auto cycles = parse_family_spec("cycles:3..8");
    REQUIRE(cycles.size() == 6);
    CHECK(cycles[0].name == "cycle3");
    CHECK(cycles[0].im_value == 3);
    CHECK(cycles[5].graph.order() == 8);

    auto completes = parse_family_spec("completes:2..5");
    CHECK(completes.size() == 4);
    CHECK(completes[3].im_value == 5);

    auto paths = parse_family_spec("paths:2..4");
    CHECK(paths[0].im_value == 2);

    auto cubes = parse_family_spec("hypercubes:1..3");
    CHECK(cubes[2].im_value == 4);
    CHECK(cubes[2].graph == generate("hypercube", {3}));

    CHECK_THROWS_AS(parse_family_spec("cycles:8..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("cycles:1..4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("widgets:1..4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("cycles3to8"), std::invalid_argument);
}

TEST_CASE("direct scan over cycles x completes meets every target") {
    ScanOptions opt;
    opt.kind = ProductKind::direct;
    auto rows = conjecture_scan(parse_family_spec("cycles:3..8"), parse_family_spec("completes:2..4"),
                                opt);
    REQUIRE(rows.size() == 18);
    int construction = 0, search = 0;
    for (const auto& row : rows) {
        CHECK(row.status != ScanStatus::violation);
        CHECK(row.status != ScanStatus::open_within_budget);
        CHECK(row.value >= row.target);
        CHECK(row.target == (row.t - 1) * (row.r - 1) + 1);
        construction += row.status == ScanStatus::construction_met;
        search += row.status == ScanStatus::search_met;
    }
    CHECK(construction >= 1);
    CHECK(search >= 1);
}

TEST_CASE("strong scan on completes uses the complete-product construction") {
    ScanOptions opt;
    opt.kind = ProductKind::strong;
    auto rows =
        conjecture_scan(parse_family_spec("completes:2..3"), parse_family_spec("completes:2..3"), opt);
    for (const auto& row : rows) {
        CHECK(row.status == ScanStatus::construction_met);
        CHECK(row.target == row.t * row.r);
        CHECK(row.value == row.target);
    }
}

TEST_CASE("direct scan with path factors") {
    ScanOptions opt;
    opt.kind = ProductKind::direct;
    auto rows =
        conjecture_scan(parse_family_spec("paths:2..4"), parse_family_spec("completes:2..3"), opt);
    for (const auto& row : rows) CHECK(row.status != ScanStatus::violation);
}

TEST_CASE("file-backed scan factors") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "immersion_scan_files";
    fs::create_directories(dir);
    auto c5 = (dir / "c5.g").string();
    auto k3 = (dir / "k3.g").string();
    std::ofstream(c5) << write_graph(generate("cycle", {5}));
    std::ofstream(k3) << write_graph(generate("complete", {3}));

    auto factors = parse_family_spec("files:" + c5 + ";" + k3);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].im_value == 3);
    CHECK(factors[1].im_value == 3);
    REQUIRE(factors[0].witness_cert.has_value());
    CHECK(verify(factors[0].graph, *factors[0].witness_cert).ok);

    ScanOptions opt;
    opt.kind = ProductKind::direct;
    auto rows = conjecture_scan(factors, parse_family_spec("completes:3..4"), opt);
    for (const auto& row : rows) {
        CHECK(row.status != ScanStatus::violation);
        CHECK(row.value >= row.target);
    }
    // the structurally complete file factor still rides the clique construction
    CHECK(rows[2].g_name == k3);
    CHECK(rows[2].status == ScanStatus::construction_met);

    CHECK_THROWS_AS(parse_family_spec("files:/no/such/file.g"), std::invalid_argument);
}

TEST_CASE("a factor with an inflated claim produces a violation row and artifacts") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "immersion_scan_violation";
    fs::remove_all(dir);

    // im(C_4) is 3; claim 4 so that the target on C_4 x K_2 becomes
    // unreachable and the exhausted search must flag it.
    ScanFactor fake;
    fake.name = "fakeC4";
    fake.family = "file";
    fake.graph = generate("cycle", {4});
    fake.im_value = 4;

    ScanOptions opt;
    opt.kind = ProductKind::direct;
    opt.artifact_dir = dir.string();
    auto rows = conjecture_scan({fake}, parse_family_spec("completes:2..2"), opt);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].target == 4);
    CHECK(rows[0].value == 3);
    CHECK(rows[0].status == ScanStatus::violation);
    CHECK(fs::exists(dir / "fakeC4_x_complete2.g"));
    CHECK(fs::exists(dir / "fakeC4_x_complete2.report.txt"));
    CHECK(fs::exists(dir / "fakeC4_x_complete2.cert.json"));
}

TEST_CASE("ledger format") {
    ScanOptions opt;
    opt.kind = ProductKind::direct;
    auto rows =
        conjecture_scan(parse_family_spec("cycles:3..4"), parse_family_spec("completes:3..3"), opt);
    auto tsv = scan_ledger_tsv(rows);
    std::istringstream in(tsv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# g\th\tt\tr\ttarget\tstatus\tvalue\ttime_ms");
    int data_rows = 0;
    while (std::getline(in, line)) {
        ++data_rows;
        int tabs = 0;
        for (char ch : line) tabs += ch == '\t';
        CHECK(tabs == 7);
    }
    CHECK(data_rows == 2);
}
