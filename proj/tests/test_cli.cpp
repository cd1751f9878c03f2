#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string(BALLCLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_tmp_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("verify-constant --dim 0") == 2);
    CHECK(run_cli("verify-constant --format xml") == 2);
    CHECK(run_cli("burgeth --dim 1 --c 1.5") == 2);
    CHECK(run_cli("profile --dim 2 --z 1.5,0,0,0 --level 4 --grid 4") == 2);
    CHECK(run_cli("profile --dim 2 --z 0.5,0 --level 4 --grid 4") == 2);
    CHECK(run_cli("nosuchcommand") == 2);
}

TEST_CASE("verify-constant emits one passing row per radius") {
    TempFile out("verify.csv");
    CHECK(run_cli("verify-constant --dim 1 --format csv --radii 0,0.3,0.6 "
                  "--out " + out.path) == 0);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "radius,dim,constant,estimate,rel_deviation,pass");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 6);
        CHECK(f[1] == "1");
        CHECK(f[5] == "true");
    }
}

TEST_CASE("profile writes header, grid rows, and the two axis rows") {
    TempFile out("profile.csv");
    CHECK(run_cli("profile --dim 2 --level 6 --grid 16 --z 0.5,0,0,0 --out " +
                  out.path) == 0);
    const auto lines = lines_of(slurp(out.path));
    CHECK(lines.size() == 1 + 16 + 2);
    CHECK(lines[0].rfind("dir_index,", 0) == 0);
}

TEST_CASE("burgeth table pairs the indicator with the reference method") {
    TempFile out("burgeth.csv");
    CHECK(run_cli("burgeth --dim 1 --c 0.6 --radii 0,0.3 --out " + out.path) ==
          0);
    const auto lines = lines_of(slurp(out.path));
    REQUIRE(lines.size() == 1 + 2 * 2);
    CHECK(lines[0] == "r,M,method,n,c");
    // r = 0 anchor: M = 2c - 1 = 0.2 for both methods
    for (int row : {1, 2}) {
        const auto f = fields_of(lines[row]);
        REQUIRE(f.size() == 5);
        CHECK(std::abs(std::stod(f[1]) - 0.2) < 1e-3);
    }
    CHECK(fields_of(lines[1])[2] == "indicator-quadrature");
    CHECK(fields_of(lines[2])[2] == "closed-form-n1");
}

TEST_CASE("audit run is deterministic and reports every suite") {
    TempFile a("audit_a.json");
    TempFile b("audit_b.json");
    const std::string args = "audit --dim 1 --seed 7 --out ";
    CHECK(run_cli(args + a.path) == 0);
    CHECK(run_cli(args + b.path) == 0);
    const std::string text = slurp(a.path);
    CHECK(text == slurp(b.path));
    for (const char* key : {"\"config\"", "\"reports\"", "\"diagnostics\"",
                            "\"timing\""})
        CHECK(text.find(key) != std::string::npos);

    TempFile c("audit.csv");
    CHECK(run_cli("audit --dim 1 --seed 7 --format csv --out " + c.path) == 0);
    const auto lines = lines_of(slurp(c.path));
    REQUIRE(lines.size() > 1);
    CHECK(lines[0] == "name,lhs,rhs,slack,tolerance,pass,seed");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(fields_of(lines[i])[5] == "true");
}

TEST_CASE("config file supplies defaults and flags override it") {
    TempFile cfg("config.ini");
    {
        std::ofstream out(cfg.path);
        out << "dim=1\nformat=csv\nradii=0,0.3\n";
    }
    TempFile out1("cfg_out1.csv");
    CHECK(run_cli("verify-constant --config " + cfg.path + " --out " +
                  out1.path) == 0);
    const auto lines1 = lines_of(slurp(out1.path));
    REQUIRE(lines1.size() == 3); // header + the two radii from the file
    CHECK(fields_of(lines1[1])[1] == "1");

    TempFile out2("cfg_out2.csv");
    CHECK(run_cli("verify-constant --config " + cfg.path + " --radii 0 --out " +
                  out2.path) == 0);
    CHECK(lines_of(slurp(out2.path)).size() == 2);
}
