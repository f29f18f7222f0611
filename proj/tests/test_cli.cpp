// Golden-file style tests driving the qcat binary end to end.
#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = (env_prefix.empty() ? "" : env_prefix + " ") + std::string(QCAT_BIN) + " " +
                      args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) result.out.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("qcat_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("cli catq") {
    CliResult r = run_cli("catq 3 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8\n");
    CHECK(run_cli("catq 4 6").exit_code == 2);  // not coprime: input error
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate 1").exit_code == 2);
    CHECK(run_cli("catq 3").exit_code == 2);
}

TEST_CASE("cli germs table and cache") {
    fs::path cache = fresh_dir("germs_cache");
    std::string base = "germs 4 --csv --cache-dir " + cache.string();
    CliResult first = run_cli(base);
    CHECK(first.exit_code == 0);
    CHECK(first.out ==
          "4,1,\"1\"\n"
          "4,3,\"q^2 + q^3 + q^4 + q^6\"\n"
          "4,5,\"q^5 + q^6 + q^7 + q^8 + q^9 + q^10\"\n"
          "4,7,\"q^9 + q^11 + q^12 + q^13\"\n"
          "4,9,\"q^15\"\n");
    // second run is served from the cache and must be byte-identical
    CHECK(fs::exists(cache / "germs" / "a4_c9.json"));
    CliResult cached = run_cli(base);
    CHECK(cached.out == first.out);
    // bypassing the cache gives the same bytes again
    CliResult fresh = run_cli(base + " --no-cache");
    CHECK(fresh.out == first.out);
}

TEST_CASE("cli slice certificate") {
    CliResult ok = run_cli("slice 3 2 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("quotient by [3]_q = q^2") != std::string::npos);
    CliResult bad = run_cli("slice 4 1 2");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("NOT divisible") != std::string::npos);
    CHECK(bad.out.find("remainder") != std::string::npos);
}

TEST_CASE("cli monotone") {
    CliResult r = run_cli("monotone 5 --max 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verified") != std::string::npos);
    CliResult j = run_cli("monotone 5 --max 20 --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["status"] == "verified");
    CHECK(parsed["claim"] == "monotone");
    CHECK(parsed.contains("wall_ms"));
}

TEST_CASE("cli monotone-nc") {
    CHECK(run_cli("monotone-nc 3 3 0 --max 12").exit_code == 0);
    CHECK(run_cli("monotone-nc 3 3 1 --max 12").exit_code == 0);
    CHECK(run_cli("monotone-nc 4 3 0 --max 12").exit_code == 2);  // g does not divide a
}

TEST_CASE("cli johnson round trip") {
    fs::path dir = fresh_dir("johnson");
    fs::path file = dir / "j4.json";
    CliResult build = run_cli("johnson greedy 4 --out " + file.string());
    CHECK(build.exit_code == 0);
    REQUIRE(fs::exists(file));
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    CHECK(j["a"] == 4);
    CHECK(j["entries"].size() == 16);
    CliResult verify = run_cli("johnson verify " + file.string() + " --b-list 1,3,5,7,9,11,13");
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("COUNTEREXAMPLE") == std::string::npos);
}

TEST_CASE("cli ribbons") {
    CliResult count = run_cli("ribbons 5 2 --count");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "2\n");
    CliResult all3 = run_cli("ribbons 3");
    CHECK(all3.exit_code == 0);
    CHECK(all3.out.find("c=1 ribbon partition found:") != std::string::npos);
    CHECK(all3.out.find("<1,1>") != std::string::npos);  // root point in angle brackets
    CliResult starved = run_cli("ribbons 5 6 --budget 1");
    CHECK(starved.exit_code == 3);
    CliResult as_json = run_cli("ribbons 3 2 --json");
    CHECK(as_json.exit_code == 0);
    auto parsed = nlohmann::json::parse(as_json.out);
    CHECK(parsed["a"] == 3);
    CHECK(parsed["partition"].size() == 1);
    CHECK(parsed["partition"][0].size() == 3);
}

TEST_CASE("cli cache honors QCAT_CACHE_DIR") {
    fs::path cache = fresh_dir("env_cache");
    CliResult r = run_cli("germs 3 --csv", "QCAT_CACHE_DIR=" + cache.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(cache / "germs" / "a3_c4.json"));
    CliResult again = run_cli("germs 3 --csv", "QCAT_CACHE_DIR=" + cache.string());
    CHECK(again.out == r.out);
}

TEST_CASE("cli brion and lemma") {
    CHECK(run_cli("brion 3 7").exit_code == 0);
    CHECK(run_cli("brion 4 7").exit_code == 0);
    CHECK(run_cli("lemma 3").exit_code == 0);
    CHECK(run_cli("lemma 2 --m-range -5 5").exit_code == 0);
}

TEST_CASE("cli dyck") {
    CHECK(run_cli("dyck 3 5").out == "7\n");
    CliResult sw = run_cli("dyck 4 7 --sweep uurruurrrrr");
    CHECK(sw.exit_code == 0);
    CHECK(sw.out == "uruurrrurrr\narea 5 -> 3\n");
    CliResult mj = run_cli("dyck 3 3 --maj");
    CHECK(mj.out == "1 + q^2 + q^3 + q^4 + q^6\n");
    CHECK(run_cli("dyck 3 4 --maj").exit_code == 2);  // maj needs a square
    CliResult qt = run_cli("dyck 3 5 --qt");
    CHECK(qt.exit_code == 0);
    CHECK(qt.out.find("qt-symmetry verified") != std::string::npos);
}

TEST_CASE("cli duality golden table") {
    CliResult r = run_cli("duality 3 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "(0,0) <-> (0,0,0)  J=0\n"
          "(1,1) <-> (2,1,0)  J=2\n"
          "(3,0) <-> (1,0,1)  J=3\n"
          "(2,2) <-> (0,2,0)  J=4\n"
          "(0,3) <-> (0,1,2)  J=6\n");
    // byte-identical on repeat
    CHECK(run_cli("duality 3 4").out == r.out);
}

TEST_CASE("cli weyl") {
    CliResult b2 = run_cli("weyl b2 5");
    CHECK(b2.exit_code == 0);
    CHECK(b2.out.find("f(q) = 1 + q^2") != std::string::npos);
    CHECK(run_cli("weyl g2 7").exit_code == 0);
    CHECK(run_cli("weyl e8 7").exit_code == 2);
    CHECK(run_cli("weyl b2 2").exit_code == 2);  // gcd(b, cf) != 1
}
