#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "resolvekit/io.hpp"
#include "resolvekit/verify.hpp"

using namespace resolvekit;

namespace {

std::string cli_path() {
    const char* env = std::getenv("RESOLVEKIT_CLI");
    return env ? env : "";
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
    int status = pclose(pipe);
    if (output) *output = text;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("certificate round trip with comments") {
    std::stringstream ss;
    ss << "# stored family\n13 3 8  # header\n";
    for (const KSubset& s : example1_certificate().sets) {
        for (int p : s.members) ss << p << ' ';
        ss << '\n';
    }
    auto cert = read_certificate(ss);
    CHECK(cert.sets == example1_certificate().sets);

    std::stringstream out;
    write_certificate(out, cert);
    std::stringstream back(out.str());
    CHECK(read_certificate(back).sets == cert.sets);

    // Byte stability: writing twice gives identical text.
    std::stringstream out2;
    write_certificate(out2, cert);
    CHECK(out.str() == out2.str());
}

TEST_CASE("parse errors are reported") {
    std::stringstream bad1("13 3\n");
    CHECK_THROWS_AS(read_certificate(bad1), parse_error);
    std::stringstream bad2("5 3 1\n1 2\n");
    CHECK_THROWS_AS(read_certificate(bad2), parse_error);
    std::stringstream bad3("5 3 1\n1 2 x\n");
    CHECK_THROWS_AS(read_certificate(bad3), parse_error);
    CHECK_THROWS_AS(read_certificate_file("/nonexistent/file.cert"), parse_error);
}

TEST_CASE("group file round trip") {
    std::stringstream ss("4 2\n2 3 4 1\n3 2 1 4\n");
    auto g = read_group(ss);
    CHECK(g.degree == 4);
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0].apply(4) == 1);
    std::stringstream out;
    write_group(out, g);
    CHECK(out.str() == "4 2\n2 3 4 1\n3 2 1 4\n");
    std::stringstream bad("3 1\n1 1 2\n");
    CHECK_THROWS_AS(read_group(bad), invalid_parameters);
}

TEST_CASE("graph file round trip") {
    std::stringstream out;
    write_graph(out, petersen_graph());
    std::stringstream back(out.str());
    auto g = read_graph(back);
    CHECK(g.edges == petersen_graph().edges);
    CHECK(g.vertex_count == 10);
}

TEST_CASE("fixture directory holds the shipped artifacts") {
    auto dir = data_dir();
    CHECK(read_certificate_file(dir / "example1.cert").sets ==
          example1_certificate().sets);
    CHECK(read_certificate_file(dir / "corollary2.cert").sets ==
          corollary2_certificate().sets);
    CHECK(read_certificate_file(dir / "q2.cert").sets == q2_certificate().sets);
    CHECK(read_graph_file(dir / "mcgee.graph").edges == mcgee_graph().edges);
    CHECK(read_graph_file(dir / "petersen.graph").edges == petersen_graph().edges);
}

TEST_CASE("command line exit codes and output") {
    if (cli_path().empty()) return;  // only meaningful under the test harness
    auto dir = data_dir();
    std::string out;

    CHECK(run_cli("verify --cert " + (dir / "example1.cert").string(), &out) == 0);
    CHECK(out.find("separating: true") != std::string::npos);

    CHECK(run_cli("verify --cert " + (dir / "example1.cert").string() + " --robust") == 1);
    CHECK(run_cli("verify --cert " + (dir / "corollary2.cert").string() + " --robust") == 0);
    CHECK(run_cli("verify") == 2);                        // missing required option
    CHECK(run_cli("verify --cert /nonexistent.cert") == 2);
    CHECK(run_cli("nonsense") == 2);

    CHECK(run_cli("bounds --m 13 --k 3", &out) == 0);
    CHECK(out.find("lower: 8") != std::string::npos);
    CHECK(out.find("upper: 8") != std::string::npos);

    CHECK(run_cli("analyze --cert " + (dir / "example1.cert").string(), &out) == 0);
    CHECK(out.find("violations: 0") != std::string::npos);

    CHECK(run_cli("search --m 5 --k 3", &out) == 0);
    CHECK(out.find("sigma(5,3): 3") != std::string::npos);
    CHECK(run_cli("search --m 9 --k 3 --budget 5") == 3);

    CHECK(run_cli("construct --method johnson3 --q 3", &out) == 0);
    std::stringstream cs(out);
    auto built = read_certificate(cs);
    CHECK(built.m == 39);
    CHECK(built.size() == 24);
    CHECK(is_separating(built));
    CHECK(run_cli("construct --method johnson3 --q 99") == 3);  // capacity

    CHECK(run_cli("group rank --file " + (dir / "dihedral4.group").string(), &out) == 0);
    CHECK(out.find("rank: 3") != std::string::npos);
    CHECK(run_cli("group sigma --file " + (dir / "cyclic5.group").string(), &out) == 0);
    CHECK(out.find("sigma: 1") != std::string::npos);
    CHECK(run_cli("group extremal --file " + (dir / "dihedral4.group").string()) == 0);

    CHECK(run_cli("table1 --max-m 5", &out) == 0);
    CHECK(out.find("sigma(m,3): 3 3") != std::string::npos);
    CHECK(out.find("sigma*(m,3): 3 4") != std::string::npos);
}

TEST_CASE("constructed certificates round trip through the CLI format") {
    if (cli_path().empty()) return;
    std::string out;
    CHECK(run_cli("construct --method extend --cert " +
                      (data_dir() / "corollary2.cert").string(),
                  &out) == 0);
    std::stringstream ss(out);
    auto cert = read_certificate(ss);
    CHECK(cert.m == 10);
    CHECK(cert.size() == 8);
    CHECK(is_separating(cert));
}
