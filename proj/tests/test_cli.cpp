#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include <json.hpp>

#include "subprocess.hpp"

namespace {

std::string cli_path() {
    const char* p = std::getenv("MOTIVIC_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MOTIVIC_CLI must point at the CLI binary");
    return p;
}

testproc::RunResult cli(const std::string& args) { return testproc::run(cli_path(), args); }

} // namespace

TEST_CASE("eval") {
    auto r = cli("eval 'BSO(3)'");
    CHECK(r.code == 0);
    CHECK(r.out == "L^-1 * (L^2-1)^-1\n");

    CHECK(cli("eval 'BSO(7) * SO(7)'").out == "1\n");
    CHECK(cli("eval 'BSO(4) - (1 + L^-2)*BO(4)'").out == "0\n");

    CHECK(cli("eval 'BSO(3)' --format latex").out == "\\mathbb{L}^{-1}(\\mathbb{L}^{2}-1)^{-1}\n");
    CHECK(cli("eval 'BSO(3)' --format json").out
          == "{\"sign\":1,\"lpow\":-1,\"num\":[[\"1\",0]],\"den\":{\"1\":1,\"2\":1}}\n");
}

TEST_CASE("exit codes") {
    CHECK(cli("eval 'BO('").code == 1);
    CHECK(cli("eval 'BSO(3'").code == 1);
    CHECK(cli("eval '1 / (L+2)'").code == 2);
    CHECK(cli("eval '(L+2)^-1'").code == 2);
    CHECK(cli("count '(L-1)^-1' --q 1").code == 3);
    CHECK(cli("count 'L^-1' --q 0").code == 3);
    CHECK(cli("eval 'BSO(3)' --format nope").code != 0);
    CHECK(cli("").code != 0);          // a subcommand is required
    CHECK(cli("verify --check inverse").code != 0); // --max is required
}

TEST_CASE("count") {
    auto r = cli("count 'SO(3)' --q 5");
    CHECK(r.code == 0);
    CHECK(r.out == "120\n");
    CHECK(cli("count 'L' --q 2/3").out == "2/3\n");
    CHECK(cli("count 'L^-2' --q 2").out == "1/4\n");
    CHECK(cli("count 'GL(2)' --q -1").out == "0\n");
}

TEST_CASE("verify") {
    CHECK(cli("verify --check inverse --max 12").code == 0);
    CHECK(cli("verify --check theorem --max 12").code == 0);
    CHECK(cli("verify --check recursion --max 12").code == 0);
}

TEST_CASE("expand") {
    CHECK(cli("expand 'BSO(3)' --order -7").out == "L^-3 + L^-5 + L^-7\n");
    CHECK(cli("expand 'L^2 - 1' --order -2").out == "L^2 - 1\n");
    CHECK(cli("expand '0' --order -2").out == "0\n");
    // default order is the leading exponent minus 24
    auto r = cli("expand 'BSO(2)'");
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 11) == "L^-1 + L^-2");
    CHECK(r.out.find("L^-25") != std::string::npos);
    CHECK(r.out.find("L^-26") == std::string::npos);
}

TEST_CASE("table") {
    auto r = cli("table --kind bso --max 4");
    CHECK(r.code == 0);
    CHECK(r.out
          == "0\t1\n"
             "1\t1\n"
             "2\t(L-1)^-1\n"
             "3\tL^-1 * (L^2-1)^-1\n"
             "4\tL^-2 * (L^2-1)^-2\n");
    CHECK(cli("table --kind so --max 3").out
          == "0\t1\n"
             "1\t1\n"
             "2\t(L - 1)\n"
             "3\tL * (L^2 - 1)\n");
    CHECK(cli("table --kind bo --max 2").out
          == "0\t1\n"
             "1\t1\n"
             "2\tL * (L^2-1)^-1\n");
}

TEST_CASE("trace") {
    auto r = cli("trace --group O --n 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("derivation of {BO_2}") != std::string::npos);
    CHECK(r.out.find("[CmodG]") != std::string::npos);
    CHECK(r.out.find("[Result]") != std::string::npos);

    auto j = nlohmann::json::parse(cli("trace --group SO --n 4 --format json").out);
    CHECK(j["group"] == "SO");
    CHECK(j["steps"].size() == 6);

    CHECK(cli("trace --group SO --n 1").code == 0);
    CHECK(cli("trace --group X --n 1").code != 0);
}
