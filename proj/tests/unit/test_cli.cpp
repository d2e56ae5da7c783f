#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hkt/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hkt::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hkt_cli_test_" + name);
}

}  // namespace

TEST_CASE("validate") {
    auto r = run({"validate", "--lattice", "U3"});
    CHECK(r.code == hkt::cli::kExitOk);
    CHECK(has(r.out, "(3, 3, 0)"));
    r = run({"validate", "--lattice", "K3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "(3, 19, 0)"));
}

TEST_CASE("validate rejects an asymmetric lattice file") {
    const auto path = temp_file("asym.json");
    std::ofstream(path) << R"({"gram": [[0,1,0],[2,0,0],[0,0,1]], "triple": [[1,0,0],[0,1,0],[0,0,1]]})";
    const auto r = run({"validate", "--lattice", path.string()});
    CHECK(r.code == hkt::cli::kExitDomainError);
    CHECK(has(r.err, "symmetric"));
    std::filesystem::remove(path);
}

TEST_CASE("project") {
    const auto r = run({"project", "--omega", "1,1,1,0,0,0"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "2,1,0"));
    CHECK(run({"project", "--omega", "1,1,1"}).code == hkt::cli::kExitDomainError);
    CHECK(run({"project", "--omega", "0,0,0,0,0,0"}).code == hkt::cli::kExitDomainError);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == hkt::cli::kExitUsage);
    CHECK(run({"no-such-command"}).code == hkt::cli::kExitUsage);
    CHECK(run({"scan-algebraic", "--bound", "abc"}).code == hkt::cli::kExitUsage);
    CHECK(run({"--help"}).code == hkt::cli::kExitOk);
}

TEST_CASE("scan-algebraic writes deterministic CSV") {
    const auto a = temp_file("a.csv"), b = temp_file("b.csv"), svg = temp_file("a.svg");
    CHECK(run({"scan-algebraic", "--bound", "2", "--out", a.string(), "--svg", svg.string()}).code == 0);
    CHECK(run({"scan-algebraic", "--bound", "2", "--threads", "3", "--out", b.string()}).code == 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const auto ta = slurp(a);
    CHECK(!ta.empty());
    CHECK(ta == slurp(b));
    CHECK(std::count(ta.begin(), ta.end(), '\n') == 579);
    CHECK(slurp(svg).rfind("<svg", 0) == 0);
    for (const auto& p : {a, b, svg}) std::filesystem::remove(p);

    CHECK(run({"scan-ngt", "--bound", "0"}).code == hkt::cli::kExitDomainError);
}

TEST_CASE("scan to stdout") {
    const auto r = run({"scan-ngt", "--bound", "1"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 99);
}

TEST_CASE("general-type") {
    auto r = run({"general-type", "--point", "1,1,0"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "verdict: NotGeneralType"));
    r = run({"general-type", "--point", "1,1.4142135623730951,0"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "verdict: GeneralTypeUpToBound(3)"));
    CHECK(run({"general-type", "--point", "0,0,0"}).code == hkt::cli::kExitDomainError);
}

TEST_CASE("density") {
    const auto r = run({"density", "--bound", "2", "--grid", "50"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "bound,points,covering_radius\n1,98,"));
    CHECK(has(r.out, "\n2,578,"));
}

TEST_CASE("demo-quaternion") {
    const auto r = run({"demo-quaternion", "--samples", "20"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "[PASS]"));
    CHECK(!has(r.out, "[FAIL]"));
}
