// Runs the kmrank binary against the cases in golden/cli_cases.json.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int exit = -1;
    std::string out;
    std::string err;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    const fs::path dir = fs::temp_directory_path();
    const fs::path in_file = dir / ("kmrank_cli_in_" + std::to_string(::getpid()));
    const fs::path err_file = dir / ("kmrank_cli_err_" + std::to_string(::getpid()));
    std::ofstream(in_file) << input;
    std::string cmd = quote(KMRANK_BINARY);
    for (const auto& a : args) cmd += ' ' + quote(a);
    cmd += " < " + quote(in_file.string()) + " 2> " + quote(err_file.string());

    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_file);
    fs::remove(in_file);
    fs::remove(err_file);
    return r;
}

}  // namespace

TEST_CASE("golden CLI cases") {
    std::ifstream in(fs::path(KMRANK_GOLDEN_DIR) / "cli_cases.json");
    REQUIRE(in.good());
    const auto cases = nlohmann::json::parse(in);
    REQUIRE(cases.size() > 0);
    for (const auto& c : cases) {
        const std::string name = c.at("name");
        CAPTURE(name);
        const Run r = run(c.at("args").get<std::vector<std::string>>(), c.value("stdin", std::string()));
        CHECK(r.exit == c.at("exit").get<int>());
        if (c.contains("stdout")) CHECK(r.out == c.at("stdout").get<std::string>());
        if (c.contains("stderr")) CHECK(r.err == c.at("stderr").get<std::string>());
        if (r.exit == 1) CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("conjugate twice reproduces the input byte for byte") {
    for (const std::string input : {"5,5,4,1", "-", "12,10,8,7,6,5,4,3,3,3,1,1", "1,1,1,1,1,1,1"}) {
        const Run once = run({"conjugate", input});
        REQUIRE(once.exit == 0);
        const std::string image = once.out.substr(0, once.out.size() - 1);
        const Run twice = run({"conjugate", image});
        CHECK(twice.out == input + "\n");

        const Run g1 = run({"conjugate", "--k", "1", input});
        if (input != "-") CHECK(g1.out == once.out);
    }
    const std::string lambda = "9,8,8,7,7,6,5,4,4,3,3,3,3,3,2,2,1,1,1,1";
    const Run once = run({"conjugate", "--k", "4", lambda});
    const Run twice = run({"conjugate", "--k", "4", once.out.substr(0, once.out.size() - 1)});
    CHECK(twice.out == lambda + "\n");
}

TEST_CASE("text and JSON modes agree") {
    const std::string lambda = "7,7,6,6,5,4,3,3,3,2,1,1,1,1,1";
    const Run text = run({"rank", "--k", "3", lambda});
    const Run json = run({"rank", "--k", "3", "--json", lambda});
    const auto j = nlohmann::json::parse(json.out);
    CHECK(text.out == "a=" + std::to_string(j["a"].get<int>()) + " b=" + std::to_string(j["b"].get<int>()) +
                          " r=" + std::to_string(j["r"].get<int>()) + " widths=5,3,2\n");

    const Run ctext = run({"census", "--n", "9", "--k", "2", "--m", "-1"});
    const auto cj = nlohmann::json::parse(run({"census", "--n", "9", "--k", "2", "--m", "-1", "--json"}).out);
    std::istringstream lines(ctext.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "# n=9 k=2 m=-1 total=" + std::to_string(cj["total"].get<long long>()));
    int r = 0;
    long long count = 0;
    std::size_t rows = 0;
    while (lines >> r >> count) {
        CHECK(cj["rows"][std::to_string(r)].get<long long>() == count);
        ++rows;
    }
    CHECK(rows == cj["rows"].size());
}

TEST_CASE("census output is independent of the worker count") {
    const std::string cmd = std::string("KMRANK_WORKERS=3 ") + quote(KMRANK_BINARY) + " census --n 32 --k 2 --m 1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    ::pclose(pipe);
    CHECK(out == run({"census", "--n", "32", "--k", "2", "--m", "1"}).out);
}
