#include "scalelaw/cli.hpp"
#include "scalelaw/csv.hpp"
#include "scalelaw/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace scalelaw;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("scalelaw_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".csv");
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("parse_fraction") {
    CHECK(cli::parse_fraction("0.1") == 0.1);
    CHECK(cli::parse_fraction("1/10") == 0.1);
    CHECK(cli::parse_fraction(" 1 / 2 ") == 0.5);
    CHECK(cli::parse_fraction("1") == 1.0);
    CHECK_THROWS_AS(cli::parse_fraction("abc"), ParseError);
    CHECK_THROWS_AS(cli::parse_fraction("1/0"), ParseError);
    CHECK_THROWS_AS(cli::parse_fraction("1/2/3"), ParseError);
    CHECK_THROWS_AS(cli::parse_fraction(""), ParseError);
}

TEST_CASE("parse_int_list") {
    using V = std::vector<std::int64_t>;
    CHECK(cli::parse_int_list("1,2,4") == V{1, 2, 4});
    CHECK(cli::parse_int_list("1:5") == V{1, 2, 3, 4, 5});
    CHECK(cli::parse_int_list("1:10:3") == V{1, 4, 7, 10});
    CHECK(cli::parse_int_list("1:100:*4") == V{1, 4, 16, 64});
    CHECK(cli::parse_int_list("3,1:2") == V{3, 1, 2});
    CHECK_THROWS_AS(cli::parse_int_list("1,,2"), ParseError);
    CHECK_THROWS_AS(cli::parse_int_list("5:1"), ParseError);
    CHECK_THROWS_AS(cli::parse_int_list("1:8:*1"), ParseError);
    CHECK_THROWS_AS(cli::parse_int_list("1.5"), ParseError);
}

TEST_CASE("limit") {
    const Outcome half = invoke({"limit", "--beta", "0.5"});
    CHECK(half.code == 0);
    CHECK(half.out == "2\n");
    CHECK(invoke({"limit", "--beta", "1/10"}).out == "10\n");
    CHECK(invoke({"limit", "--beta", "0", "--format", "json"}).out == "{\"limit\":\"unbounded\"}\n");
}

TEST_CASE("predict") {
    const Outcome amdahl = invoke({"predict", "--law", "amdahl", "--beta", "0.1", "--p", "8", "--format", "json"});
    CHECK(amdahl.code == 0);
    const auto j = nlohmann::json::parse(amdahl.out);
    CHECK(j["speedup"].get<double>() == doctest::Approx(80.0 / 17.0));

    const Outcome gustafson = invoke({"predict", "--law", "gustafson", "--beta", "1/2", "--p", "4", "--format", "csv"});
    CHECK(gustafson.code == 0);
    CHECK(gustafson.out == "law,beta,frame,p,speedup\ngustafson,0.5,on-p,4,2.5\n");

    const Outcome mismatch = invoke({"predict", "--law", "amdahl", "--beta", "0.1", "--p", "8", "--frame", "on-p"});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("base-frame") != std::string::npos);

    CHECK(invoke({"predict", "--law", "amdahl", "--beta", "1.5", "--p", "8"}).code == 1);
    CHECK(invoke({"predict", "--law", "amdahl", "--beta", "0.1", "--p", "0"}).code == 1);
    CHECK(invoke({"predict", "--law", "amdahl", "--beta", "0.1", "--p", "2.5"}).code == 2);
    CHECK(invoke({"predict", "--law", "karp", "--beta", "0.1", "--p", "2"}).code == 2);
    CHECK(invoke({"predict", "--law", "amdahl", "--beta", "x", "--p", "2"}).code == 2);
}

TEST_CASE("convert") {
    const Outcome on_p = invoke({"convert", "--beta", "0.1", "--p", "8", "--to", "on-p", "--format", "json"});
    CHECK(on_p.code == 0);
    const auto j = nlohmann::json::parse(on_p.out);
    CHECK(j["value"].get<double>() == doctest::Approx(8.0 / 17.0));
    CHECK(j["frame"] == "on-p");

    const Outcome base = invoke({"convert", "--beta", "8/17", "--p", "8", "--to", "base", "--format", "json"});
    CHECK(nlohmann::json::parse(base.out)["value"].get<double>() == doctest::Approx(0.1));
}

TEST_CASE("verify") {
    const Outcome v = invoke({"verify", "--beta-steps", "101", "--p-max", "1024"});
    CHECK(v.code == 0);
    CHECK(std::stod(v.out) <= 1e-12);
    CHECK(invoke({"verify", "--beta-steps", "1", "--p-max", "4"}).code == 1);
}

TEST_CASE("fit") {
    TempFile one("n,p,time\n100,1,10.0\n");
    const Outcome insufficient = invoke({"fit", "--input", one.path.string()});
    CHECK(insufficient.code == 1);
    CHECK(insufficient.err.find("at least two distinct processor counts") != std::string::npos);

    TempFile good("n,p,time\n100,1,10\n100,2,6\n100,4,4\n100,8,3\n200,1,20\n200,4,8\n");
    const Outcome all = invoke({"fit", "--input", good.path.string(), "--format", "json"});
    CHECK(all.code == 0);
    const auto j = nlohmann::json::parse(all.out);
    CHECK(j["fits"].size() == 2);
    CHECK(j["fits"][0]["model"]["serial_time"].get<double>() == doctest::Approx(2.0));

    const Outcome only = invoke({"fit", "--input", good.path.string(), "--n", "200", "--format", "json"});
    CHECK(nlohmann::json::parse(only.out)["fits"].size() == 1);

    const Outcome pair = invoke({"fit", "--input", good.path.string(), "--n", "100", "--method", "pair", "--p", "4",
                                 "--format", "json"});
    CHECK(pair.code == 0);
    CHECK(nlohmann::json::parse(pair.out)["serial_time"].get<double>() == doctest::Approx(2.0));

    TempFile superlinear("n,p,time\n1,1,10\n1,4,2\n");
    CHECK(invoke({"fit", "--input", superlinear.path.string(), "--method", "pair"}).code == 1);

    const Outcome inverted = invoke({"fit", "--speedup", "4", "--p", "4"});
    CHECK(inverted.code == 0);
    CHECK(invoke({"fit", "--speedup", "5", "--p", "4"}).code == 1);

    TempFile bad_row("n,p,time\n100,4,-1.0\n");
    const Outcome row = invoke({"fit", "--input", bad_row.path.string()});
    CHECK(row.code == 2);
    CHECK(row.err.find("row 2") != std::string::npos);

    CHECK(invoke({"fit", "--input", "/nonexistent/file.csv"}).code == 2);
    CHECK(invoke({"fit"}).code == 2);
}

TEST_CASE("simulate output is deterministic and parseable") {
    const std::vector<std::string> args{"simulate", "--scenario", "fixed-serial", "--beta-s", "0.1", "--baseline", "1",
                                        "--n", "1,10", "--p", "1:16:*2", "--sigma", "0.01", "--seed", "42",
                                        "--format", "csv"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto records = parse_timing_csv(a.out);
    CHECK(records.size() == 10);

    const Outcome exact = invoke({"simulate", "--scenario", "fixed-serial", "--beta-s", "0.1", "--n", "10", "--p",
                                  "1", "--format", "csv"});
    CHECK(exact.out == "n,p,time\n10,1,9.1\n");

    const Outcome coupled = invoke({"simulate", "--scenario", "fixed-serial", "--beta-s", "0.1", "--p", "8",
                                    "--gustafson-coupling", "--format", "csv"});
    CHECK(coupled.code == 0);
    CHECK(coupled.out.starts_with("p,speedup\n8,7.3"));

    CHECK(invoke({"simulate", "--scenario", "poly", "--beta-s", "0.5", "--n", "1", "--p", "1"}).code == 2);
    CHECK(invoke({"simulate", "--scenario", "fixed-serial", "--beta-s", "1.5", "--n", "1", "--p", "1"}).code == 1);
}

TEST_CASE("curve") {
    const Outcome c = invoke({"curve", "--beta", "0", "--p", "1,2", "--format", "csv"});
    CHECK(c.code == 0);
    CHECK(c.out == "p,speedup\n1,1\n2,2\n");

    const Outcome limited = invoke({"curve", "--beta", "1/2", "--p", "1,2", "--with-limit", "--format", "csv"});
    CHECK(limited.out == "p,speedup,limit\n1,1,2\n2,1.3333333333333333,2\n");

    const Outcome scenario = invoke({"curve", "--scenario", "fixed-serial", "--beta-s", "0.1", "--n", "10", "--p",
                                     "8", "--format", "json"});
    CHECK(scenario.code == 0);

    CHECK(invoke({"curve", "--beta", "0.1", "--p", "4,2"}).code == 1);
    CHECK(invoke({"curve", "--p", "4"}).code == 2);
    CHECK(invoke({"curve", "--scenario", "fixed-serial", "--beta-s", "0.1", "--p", "4"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"limit"}).code == 2);
    CHECK(invoke({"limit", "--beta", "0.5", "--format", "xml"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
