// End-to-end checks of the installed command-line binary: exit codes, the
// stdout result grammar, and file outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "immersion/dot.hpp"
#include "immersion/constructions.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path kDir = fs::temp_directory_path() / "immersion_cli_test";

RunResult run(const std::string& args) {
    fs::create_directories(kDir);
    auto outp = kDir / "stdout.txt";
    auto errp = kDir / "stderr.txt";
    std::string cmd = std::string(IMMERSION_CLI_PATH) + " " + args + " >" + outp.string() + " 2>" +
                      errp.string();
    int status = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    int code = -1;
    if (status != -1 && WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, slurp(outp), slurp(errp)};
}

std::string path(const std::string& name) { return (kDir / name).string(); }

}  // namespace

TEST_CASE("gen then search pipeline") {
    auto g = run("gen cycle 5 -o " + path("c5.g"));
    REQUIRE(g.exit_code == 0);
    auto s = run("search --graph " + path("c5.g") + " --exact");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("lower=3") != std::string::npos);
    CHECK(s.out.find("exact=1") != std::string::npos);
    std::regex grammar(
        "search graph=\\S+ n=\\d+ m=\\d+\n"
        "result lower=\\d+ upper=\\d+ exact=[01] nodes=\\d+ time_ms=\\d+ "
        "lower_provenance=\"[^\"]*\" upper_provenance=\"[^\"]*\"\n");
    CHECK(std::regex_match(s.out, grammar));
}

TEST_CASE("catalog build and verify round trip") {
    auto b = run("catalog build p6_squared -o " + path("p6.g") + " -c " + path("p6.json"));
    REQUIRE(b.exit_code == 0);
    CHECK(b.out.find("VALID order=5") != std::string::npos);
    auto v = run("verify --graph " + path("p6.g") + " --cert " + path("p6.json"));
    CHECK(v.exit_code == 0);
    CHECK(v.out == "VALID order=5\n");

    // tamper: point one trail at a non-edge
    std::ifstream in(path("p6.json"));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto cert = imm::read_certificate(text);
    cert.trails.begin()->second = {cert.terminals[0], cert.terminals[1]};
    std::ofstream(path("tampered.json")) << imm::write_certificate(cert);
    auto bad = run("verify --graph " + path("p6.g") + " --cert " + path("tampered.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.rfind("INVALID:", 0) == 0);
}

TEST_CASE("construct subcommand") {
    auto c = run("construct --method direct-clique --t 3 --r 3 -o " + path("k33.json") +
                 " --host-out " + path("k33.g"));
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == "VALID order=5\n");
    auto v = run("verify --graph " + path("k33.g") + " --cert " + path("k33.json"));
    CHECK(v.exit_code == 0);

    // lex from two stored witnesses
    run("gen complete 3 -o " + path("k3.g"));
    run("catalog build complete_trivial 3 -o " + path("k3.g") + " -c " + path("k3.json"));
    run("catalog build complete_trivial 4 -o " + path("k4.g") + " -c " + path("k4.json"));
    auto lx = run("construct --method lex --graph-a " + path("k3.g") + " --cert-a " +
                  path("k3.json") + " --graph-b " + path("k4.g") + " --cert-b " + path("k4.json") +
                  " -o " + path("lex.json") + " --host-out " + path("lex.g"));
    CHECK(lx.exit_code == 0);
    CHECK(lx.out == "VALID order=12\n");

    // mismatched parity hypotheses exit 1 with the HYPOTHESIS prefix
    run("catalog build cycle_k3 9 0 3 6 -o " + path("c9.g") + " -c " + path("c9.json"));
    run("catalog build cycle_k3 6 0 2 4 -o " + path("c6.g") + " -c " + path("c6.json"));
    auto hy = run("construct --method direct-parity --graph-a " + path("c9.g") + " --cert-a " +
                  path("c9.json") + " --graph-b " + path("c6.g") + " --cert-b " + path("c6.json"));
    CHECK(hy.exit_code == 1);
    CHECK(hy.out.rfind("HYPOTHESIS:", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("gen tesseract 4").exit_code == 2);
    CHECK(run("gen cycle 2").exit_code == 2);
    CHECK(run("search --graph " + path("missing.g")).exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("product and power emit readable graphs") {
    run("gen complete 2 -o " + path("k2.g"));
    auto p = run("power --kind cartesian " + path("k2.g") + " 3 -o " + path("q3.g") + " --labels");
    REQUIRE(p.exit_code == 0);
    std::ifstream in(path("q3.g"));
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(imm::read_graph(buf.str()) == imm::generate("hypercube", {3}));
    CHECK(buf.str().find("# 0: ((1,1),1)") != std::string::npos);

    auto pr = run("product --kind strong " + path("k2.g") + " " + path("k2.g") + " -o " +
                  path("s22.g"));
    CHECK(pr.exit_code == 0);
}

TEST_CASE("coloring tables") {
    auto odd = run("coloring odd 6");
    CHECK(odd.exit_code == 0);
    CHECK(odd.out.find("odd clique assignment on K_5 colors 2 3 4 5 6") != std::string::npos);
    auto latin = run("coloring latin 3");
    CHECK(latin.out == "0 2 1\n2 1 0\n1 0 2\n");
    CHECK(run("coloring latin 2").exit_code == 2);
    auto even = run("coloring even 5");
    CHECK(even.out.find("even clique assignment on K_4") != std::string::npos);
}

TEST_CASE("dot export is byte-stable and highlights trails") {
    run("gen cycle 5 -o " + path("c5.g"));
    run("catalog build cycle_k3 5 -o " + path("c5.g") + " -c " + path("c5.json"));
    auto d1 = run("dot --graph " + path("c5.g") + " --cert " + path("c5.json"));
    auto d2 = run("dot --graph " + path("c5.g") + " --cert " + path("c5.json"));
    REQUIRE(d1.exit_code == 0);
    CHECK(d1.out == d2.out);
    CHECK(d1.out.find("doublecircle") != std::string::npos);
    CHECK(d1.out.find("penwidth=2.0") != std::string::npos);

    auto lib = imm::export_dot(imm::generate("cycle", {5}));
    auto plain = run("dot --graph " + path("c5.g"));
    CHECK(plain.out == lib);
    CHECK(plain.out.find("penwidth") == std::string::npos);

    // a certificate for a different host is a verification rejection
    run("catalog build cycle_k3 6 -o " + path("c6.g") + " -c " + path("c6cert.json"));
    auto mismatch = run("dot --graph " + path("c5.g") + " --cert " + path("c6cert.json"));
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.out.rfind("INVALID:", 0) == 0);
}

TEST_CASE("scan writes the ledger") {
    auto s = run("scan --kind direct --families cycles:3..4,completes:2..3 --ledger " +
                 path("ledger.tsv"));
    REQUIRE(s.exit_code == 0);
    CHECK(s.out.find("construction-met") != std::string::npos);
    std::ifstream in(path("ledger.tsv"));
    std::string header;
    std::getline(in, header);
    CHECK(header == "# g\th\tt\tr\ttarget\tstatus\tvalue\ttime_ms");
}

TEST_CASE("search respects --bounds and the node budget env var") {
    run("gen hamming 3 2 -o " + path("h32.g"));
    auto b = run("search --graph " + path("h32.g") + " --bounds");
    REQUIRE(b.exit_code == 0);
    CHECK(b.out.find("upper=5") != std::string::npos);

    std::string cmd = "IMMERSION_BUDGET_NODES=5 " + std::string(IMMERSION_CLI_PATH) +
                      " search --graph " + path("h32.g") + " >" + path("env_out.txt") + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(path("env_out.txt"));
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("exact=0") != std::string::npos);
    CHECK(buf.str().find("budget exhausted") != std::string::npos);
}

TEST_CASE("dot reproduces the catalog drawing content") {
    run("catalog build p6_squared -o " + path("p6.g") + " -c " + path("p6.json"));
    auto d = run("dot --graph " + path("p6.g") + " --cert " + path("p6.json") + " -o " +
                 path("p6.dot"));
    REQUIRE(d.exit_code == 0);
    std::ifstream in(path("p6.dot"));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string dot = buf.str();
    int terminals = 0;
    for (std::size_t pos = 0; (pos = dot.find("doublecircle", pos)) != std::string::npos; ++pos)
        ++terminals;
    CHECK(terminals == 5);
    CHECK(dot.find("color=\"#cccccc\"") != std::string::npos);  // unused edges dimmed
    CHECK(dot.find("penwidth=2.0") != std::string::npos);       // trail edges highlighted
}

TEST_CASE("catalog list") {
    auto l = run("catalog list");
    CHECK(l.exit_code == 0);
    CHECK(l.out.find("p6_squared") != std::string::npos);
    CHECK(l.out.find("cm_cn") != std::string::npos);
}
