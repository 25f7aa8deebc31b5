// Exit-status contract of the command line tool: 0 pass, 1 verification
// failure, 2 usage/parse error.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(ORBK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string capture(const std::string& args) {
    std::string cmd = std::string(ORBK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::string data(const std::string& name) { return std::string(ORBK_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exit statuses") {
    CHECK(run("verify " + data("kummer.spec")) == 0);
    CHECK(run("verify " + data("manifold.spec")) == 0);
    CHECK(run("verify " + data("threefold.spec")) == 0);
    CHECK(run("verify " + data("broken.spec")) == 1);
    CHECK(run("verify /no/such/file.spec") == 2);
    CHECK(run("group A1") == 0);
    CHECK(run("group X3") == 2);
    CHECK(run("group") == 2);
    CHECK(run("resolve E7") == 0);
    CHECK(run("euler " + data("kummer.spec")) == 0);
    CHECK(run("--help") == 0);
}

TEST_CASE("reports carry the advertised fields") {
    std::string group = capture("group E8");
    CHECK(group.find("order:       120") != std::string::npos);
    CHECK(group.find("classes:     9") != std::string::npos);

    std::string mckay = capture("mckay D4");
    CHECK(mckay.find("detected affine type: D4") != std::string::npos);
    CHECK(mckay.find("cartan kernel residual: 0") != std::string::npos);

    std::string resolve = capture("resolve E7");
    CHECK(resolve.find("spheres: 7") != std::string::npos);
    CHECK(resolve.find("mckay correspondence: pass") != std::string::npos);

    std::string dot = capture("mckay A2 --export dot");
    CHECK(dot.find("graph mckay {") != std::string::npos);

    std::string verify = capture("verify " + data("kummer.spec") +
                                 " --assume-degenerate-boundary");
    CHECK(verify.find("overall: PASS") != std::string::npos);
    CHECK(verify.find("conditional totals") != std::string::npos);

    std::string euler = capture("euler " + data("kummer.spec"));
    CHECK(euler.find("(orbifold side):   24") != std::string::npos);
    CHECK(euler.find("(resolution side): 24") != std::string::npos);
}

TEST_CASE("structured mode emits machine-readable output") {
    std::string json = capture("--format structured verify " + data("kummer.spec"));
    CHECK(json.find("\"overall_pass\": true") != std::string::npos);
    CHECK(json.find("\"euler\"") != std::string::npos);

    std::string group = capture("--format structured group A3");
    CHECK(group.find("\"order\": 4") != std::string::npos);
}

TEST_CASE("output is deterministic across runs") {
    std::string a = capture("group E6");
    std::string b = capture("group E6");
    CHECK(a == b);
    std::string c = capture("mckay E8 --export adjacency");
    std::string d = capture("mckay E8 --export adjacency");
    CHECK(c == d);
}

TEST_CASE("seed flag leaves canonical reports unchanged") {
    // row ordering is canonical, so the graph is seed-independent
    std::string a = capture("--seed 1 mckay D5");
    std::string b = capture("--seed 99 mckay D5");
    CHECK(a == b);
}
