#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "rcinf/cli.hpp"
#include "support.hpp"

using namespace rcinf;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "rcinf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

int node_lines(const std::string& dot)
{
    int count = 0;
    std::istringstream s(dot);
    for (std::string line; std::getline(s, line);) {
        if (line.find("[label=\"") != std::string::npos) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("convert")
{
    auto r = run_cli({"convert", "--from", "x", "--to", "rc"}, R"({"n":2,"x":[[0,0],[0]]})");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"n\":2,\"parts\":[[],[]]}\n");

    r = run_cli({"convert", "--from", "x", "--to", "rc"}, R"({"n":2,"x":[[1,1],[1]]})");
    CHECK(r.out == "{\"n\":2,\"parts\":[[{\"len\":2,\"rig\":-1}],[{\"len\":1,\"rig\":-1}]]}\n");

    const std::string rc = r.out;
    const auto to_mlt = run_cli({"convert", "--from", "rc", "--to", "mlt"}, rc);
    CHECK(to_mlt.code == 0);
    CHECK(run_cli({"convert", "--from", "mlt", "--to", "rc"}, to_mlt.out).out == rc);
    const auto to_mlrt = run_cli({"convert", "--from", "mlt", "--to", "mlrt"}, to_mlt.out);
    CHECK(run_cli({"convert", "--from", "mlrt", "--to", "rc"}, to_mlrt.out).out == rc);
    CHECK(run_cli({"convert", "--from", "rc", "--to", "psi"}, rc).out == "{\"n\":2,\"psi\":[[2,0],[1]]}\n");
    CHECK(run_cli({"convert", "--from", "x", "--to", "mlt", "--render"}, R"({"n":2,"x":[[1,1],[1]]})").out
          == "[1][1][2][3]\n[2]\n");

    const auto outside = run_cli({"convert", "--from", "rc", "--to", "x"}, R"({"n":1,"parts":[[{"len":1,"rig":0}]]})");
    CHECK(outside.code == 2);
    CHECK_FALSE(outside.err.empty());
    CHECK(run_cli({"convert", "--from", "rc", "--to", "rc"}, R"({"n":1,"parts":[[{"len":1,"rig":0}]]})").code == 2);
    CHECK(run_cli({"convert", "--from", "x", "--to", "rc"}, "{oops").code == 1);
    CHECK(run_cli({"convert", "--from", "nope", "--to", "rc"}, "{}").code == 1);
    CHECK(run_cli({"convert", "--to", "rc"}, "{}").code == 1);
}

TEST_CASE("apply")
{
    const std::string empty2 = R"({"n":2,"parts":[[],[]]})";
    CHECK(run_cli({"apply", "--word", ""}, empty2).out == "{\"n\":2,\"parts\":[[],[]]}\n");
    CHECK(run_cli({"apply", "--word", "1"}, empty2).out == "{\"n\":2,\"parts\":[[{\"len\":1,\"rig\":-1}],[]]}\n");
    CHECK(run_cli({"apply", "--word", "1,2,1"}, empty2).out
          == "{\"n\":2,\"parts\":[[{\"len\":2,\"rig\":-1}],[{\"len\":1,\"rig\":-1}]]}\n");
    CHECK(run_cli({"apply", "--from", "mlt", "--word", "1", "--render"}, R"({"n":2,"counts":[]})").out == "[1][1][2]\n[2]\n");
    CHECK(run_cli({"apply", "--from", "mlrt", "--word", "1,1", "--render"}, R"({"n":1,"counts":[]})").out == "[2][2][1]\n");
    CHECK(run_cli({"apply", "--word", "3"}, empty2).code == 1);
    CHECK(run_cli({"apply", "--word", "1,,2"}, empty2).code == 1);
    CHECK(run_cli({"apply", "--from", "x", "--word", "1"}, R"({"n":1,"x":[[0]]})").code == 1);
}

TEST_CASE("member")
{
    const auto yes = run_cli({"member"}, R"({"n":2,"parts":[[{"len":2,"rig":-1}],[{"len":1,"rig":-1}]]})");
    CHECK(yes.code == 0);
    const Json j = parse_json(yes.out);
    CHECK(j["member"] == true);
    CHECK(j["agree"] == true);
    CHECK(j["forward"]["x"] == Json::parse("[[1,1],[1]]"));
    CHECK(j["reverse"]["psi"] == Json::parse("[[2,0],[1]]"));

    const std::string outside = R"({"n":1,"parts":[[{"len":1,"rig":0}]]})";
    const auto no = run_cli({"member", "--side", "forward"}, outside);
    CHECK(no.code == 0);
    CHECK(parse_json(no.out)["member"] == false);
    CHECK(parse_json(no.out)["stage"] == "rebuild_mismatch");
    CHECK(run_cli({"member", "--assert"}, outside).code == 2);
    CHECK(run_cli({"member", "--side", "reverse", "--assert"}, R"({"n":1,"parts":[[]]})").code == 0);
    CHECK(run_cli({"member"}, R"({"n":1,"parts":[[{"len":0,"rig":0}]]})").code == 1);
    CHECK(run_cli({"member", "--side", "up"}, R"({"n":1,"parts":[[]]})").code == 1);
}

TEST_CASE("graph")
{
    const auto zero = run_cli({"graph", "--n", "3", "--depth", "0"});
    CHECK(zero.code == 0);
    CHECK(node_lines(zero.out) == 1);
    CHECK(zero.out.find("->") == std::string::npos);

    const auto ray = run_cli({"graph", "--n", "1", "--depth", "3"});
    CHECK(node_lines(ray.out) == 4);
    CHECK(ray.out.find("[label=1];") != std::string::npos);

    const auto two = run_cli({"graph", "--n", "2", "--depth", "2"});
    std::set<std::string> distinct;
    for_each_forward(2, 2, [&](const ForwardExponents& x) {
        if (rcinf::testing::part_sums(x)[0] + rcinf::testing::part_sums(x)[1] <= 2) distinct.insert(to_string(rc_from_forward(x)));
    });
    CHECK(node_lines(two.out) == static_cast<int>(distinct.size()));
    CHECK(run_cli({"graph", "--n", "2", "--depth", "2"}).out == two.out);

    const auto lines = run_cli({"graph", "--n", "2", "--depth", "1", "--format", "jsonl"});
    CHECK(lines.out
          == "{\"from\":{\"n\":2,\"parts\":[[],[]]},\"i\":1,\"to\":{\"n\":2,\"parts\":[[{\"len\":1,\"rig\":-1}],[]]}}\n"
             "{\"from\":{\"n\":2,\"parts\":[[],[]]},\"i\":2,\"to\":{\"n\":2,\"parts\":[[],[{\"len\":1,\"rig\":-1}]]}}\n");
    CHECK(run_cli({"graph", "--format", "svg"}).code == 1);
    CHECK(run_cli({"graph", "--depth", "-1"}).code == 1);
}

TEST_CASE("check")
{
    const auto ok = run_cli({"check", "--n", "1..2", "--bound", "2"});
    CHECK(ok.code == 0);
    const Json report = parse_json(ok.out);
    CHECK(report["passed"] == true);
    CHECK(report["suites"].size() == 10);
    for (const auto& s : report["suites"]) CHECK(s["failed"] == 0);

    auto N = extend_forward(rcinf::testing::fx(3, {{1, 2, 3}, {1, 2}, {2}}));
    const auto clean = to_json(N);
    N.set(2, 1, 1, -1);
    const auto corrupted = to_json(N);

    const std::string path = "check_table_negative_control.json";
    {
        std::ofstream f(path);
        f << corrupted.dump();
    }
    const auto bad = run_cli({"check", "--table", path});
    CHECK(bad.code == 2);
    CHECK(parse_json(bad.out)["passed"] == false);
    CHECK_FALSE(parse_json(bad.out)["violations"].empty());
    {
        std::ofstream f(path);
        f << clean.dump();
    }
    CHECK(run_cli({"check", "--table", path}).code == 0);
    std::remove(path.c_str());

    CHECK(run_cli({"check", "--n", "3..1"}).code == 1);
    CHECK(run_cli({"check", "--table", "does-not-exist.json"}).code == 1);
}

TEST_CASE("blambda")
{
    const auto zero = parse_json(run_cli({"blambda", "--lambda", "0,0"}).out);
    CHECK(zero["size"] == 1);
    CHECK(zero["elements"][0] == to_json(empty_rc(2)));
    CHECK(parse_json(run_cli({"blambda", "--lambda", "2"}).out)["size"] == 3);

    const auto f = run_cli({"blambda", "--side", "forward"}, R"({"n":2,"lambda":[1,1]})");
    const auto r = run_cli({"blambda", "--side", "reverse"}, R"({"n":2,"lambda":[1,1]})");
    CHECK(f.code == 0);
    CHECK(parse_json(f.out)["size"] == 8);
    CHECK(parse_json(f.out)["elements"] == parse_json(r.out)["elements"]);
    CHECK(run_cli({"blambda", "--lambda", "1,-1"}).code == 1);
    CHECK(run_cli({"blambda", "--lambda", "1", "--side", "both"}).code == 1);
}

TEST_CASE("usage")
{
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}
