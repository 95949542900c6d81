// End-to-end tests that drive the installed-style binary through a shell.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string command = env + " " + std::string(PIERIK_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("pierik_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("coeff agrees across engines on the worked example") {
    auto r = run("coeff --space og:7 --lambda 6,4,1 --p 5 --nu 7,6,3,1 --engine all");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "direct -7\nrecursive -7\ntableau -7\n");
}

TEST_CASE("coeff single-engine output is just the value") {
    auto r = run("coeff --space lg:2 --lambda 1 --p 1 --nu 2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1\n");
}

TEST_CASE("coeff json output round-trips canonically") {
    auto r = run("coeff --space og:7 --lambda 6,4,1 --p 5 --nu 7,6,3,1 --format json "
                 "--engine direct");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["coefficient"] == -7);
    CHECK(parsed["space"] == "og:7");
    CHECK(parsed["lambda"] == nlohmann::json::array({6, 4, 1}));
    CHECK(parsed.dump() + "\n" == r.output);  // canonical bytes
}

TEST_CASE("validation failures exit with 2") {
    CHECK(run("coeff --space a:2x2 --lambda 1 --p 9 --nu 2,1").exit_code == 2);
    CHECK(run("coeff --space a:2x2 --lambda 3,2 --p 1 --nu 2,1").exit_code == 2);
    CHECK(run("coeff --space og:3 --lambda 2,2 --p 1 --nu 3,2").exit_code == 2);
    CHECK(run("coeff --space what:3 --lambda 1 --p 1 --nu 2").exit_code == 2);
    CHECK(run("coeff --space a:2x2 --lambda 1 --p 1 --nu 2,1 --engine tableau").exit_code ==
          2);
    CHECK(run("tableaux --space a:2x2 --lambda 1 --nu 2,1 --p 1").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("expand prints the ring expansion") {
    auto text = run("expand --space lg:2 --lambda 1 --p 1");
    CHECK(text.exit_code == 0);
    CHECK(text.output == "2\t2\n2,1\t-1\n");

    auto json = run("expand --space lg:2 --lambda 1 --p 1 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.output ==
          "{\"space\":\"lg:2\",\"terms\":[{\"nu\":[2],\"coeff\":2},"
          "{\"nu\":[2,1],\"coeff\":-1}]}\n");
}

TEST_CASE("table at p = 0 is the identity, sorted and byte-stable") {
    auto first = run("table --space a:2x2 --p 0");
    CHECK(first.exit_code == 0);
    auto again = run("table --space a:2x2 --p 0");
    CHECK(first.output == again.output);
    auto threaded = run("table --space a:2x2 --p 0 --threads 4");
    CHECK(first.output == threaded.output);

    std::size_t records = 0;
    std::size_t start = 0;
    while (start < first.output.size()) {
        auto end = first.output.find('\n', start);
        auto parsed = nlohmann::json::parse(first.output.substr(start, end - start));
        ++records;
        bool diagonal = parsed["lambda"] == parsed["nu"];
        CHECK(parsed["coefficient"] == (diagonal ? 1 : 0));
        CHECK(parsed.dump() == first.output.substr(start, end - start));
        start = end + 1;
    }
    CHECK(records > 6);  // every contained pair of the 2x2 rectangle
}

TEST_CASE("tableaux listing matches the frozen display") {
    auto r = run("tableaux --space og:7 --lambda 6,4,1 --nu 7,6,3,1 --p 5 --list");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 2) == "7\n");
    CHECK(r.output.find("      1\n    1 5\n2 4\n3\n") != std::string::npos);
    auto count_only = run("tableaux --space lg:7 --lambda 6,4,1 --nu 7,6,3,1 --p 5");
    CHECK(count_only.output == "9\n");
}

TEST_CASE("check reports suite lines") {
    auto r = run("check --space og:3 --suite all");
    CHECK(r.exit_code == 0);
    for (const char* suite :
         {"engines", "signs", "vanishing", "duality", "symmetry", "associativity"}) {
        CHECK(r.output.find(std::string("PASS ") + suite) != std::string::npos);
    }
    auto sym = run("check --space lg:2 --suite symmetry");
    CHECK(sym.exit_code == 0);
    CHECK(sym.output.find("PASS symmetry") != std::string::npos);
}

TEST_CASE("cache reuse does not change any output") {
    auto dir = fresh_dir("cache");
    std::string flag = " --cache " + dir.string();
    auto cold = run("table --space og:3 --p 2" + flag);
    auto warm = run("table --space og:3 --p 2" + flag);
    auto off = run("table --space og:3 --p 2");
    CHECK(cold.exit_code == 0);
    CHECK(cold.output == warm.output);
    CHECK(cold.output == off.output);
    CHECK(std::filesystem::exists(dir / "og_3.jsonl"));

    auto via_env = run("coeff --space og:3 --lambda 2 --p 1 --nu 3,1",
                       "PIERIK_CACHE=" + dir.string());
    auto via_env_again = run("coeff --space og:3 --lambda 2 --p 1 --nu 3,1",
                             "PIERIK_CACHE=" + dir.string());
    CHECK(via_env.output == via_env_again.output);
    std::filesystem::remove_all(dir);
}

TEST_CASE("a stale cache entry is ignored when it no longer validates") {
    auto dir = fresh_dir("stale");
    // lambda not contained in nu: the loader must drop the record
    auto path = dir / "og_3.jsonl";
    FILE* f = fopen(path.c_str(), "w");
    fputs("{\"coefficient\":123,\"engine\":\"recursive\",\"lambda\":[3,2],\"nu\":[2],"
          "\"p\":1,\"space\":\"og:3\"}\n",
          f);
    fputs("this line is not json\n", f);
    fclose(f);
    auto r = run("coeff --space og:3 --lambda 2 --p 1 --nu 3 --cache " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");
    std::filesystem::remove_all(dir);
}
