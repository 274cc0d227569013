#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubic/cli.hpp"
#include "cubic/io.hpp"

using namespace cubic;

namespace {

Json run_json(const std::vector<std::string>& args, int expected_exit = 0)
{
    CommandResult r = run_command(args);
    INFO(r.output);
    CHECK(r.exit_code == expected_exit);
    return Json::parse(r.output);
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << contents;
    return p;
}

} // namespace

TEST_CASE("euler")
{
    Json j = run_json({"euler", "--form", "psi0"});
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "euler");
    CHECK(j["chi"] == "1/1920");
    CHECK(j["volume"].get<double>() == doctest::Approx(0.006854).epsilon(1e-6));
    CHECK(j["partial_sums"] == Json::array({"1", "-5/2", "17/8", "-11/16", "121/1920"}));
    Json j2 = run_json({"euler", "--form", "psi2"});
    CHECK(j2["chi"] == "5/576");
    CHECK(j2["chi_chamber"] == "5/288");
    CHECK(j2["diagram_automorphisms"] == 2);
}

TEST_CASE("euler from a Gram matrix file")
{
    auto p = temp_file("cubic_gram_psi0.json", "{\"gram\": [[-1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]}");
    Json j = run_json({"euler", "--gram", p.string()});
    CHECK(j["chi_chamber"] == "1/1920");
    std::filesystem::remove(p);
}

TEST_CASE("certify")
{
    Json j = run_json({"certify"});
    CHECK(j["traces"]["tr_ad"] == Json::array({34, 18}));
    CHECK(j["traces"]["tr_gamma"] == Json::array({13, 6}));
    CHECK(j["verdict"] == "nonarithmetic");
    Json a = run_json({"certify", "--group", "psi0"});
    CHECK(a["trace_field"] == "Q");
}

TEST_CASE("classify an anti-involution read from a file")
{
    Json m = Json{{"matrix", to_json(standard_chi(3).matrix)}};
    auto p = temp_file("cubic_chi3.json", m.dump());
    Json j = run_json({"classify", "--matrix", p.string()});
    CHECK(j["class"] == InvolutionClass{3, 1}.name());
    std::filesystem::remove(p);

    auto bad = temp_file("cubic_bad.json", "{\"matrix\": [[1, 2], [3]]}");
    Json e = run_json({"classify", "--matrix", bad.string()}, 1);
    CHECK(e["error"]["kind"] == "precondition");
    std::filesystem::remove(bad);
}

TEST_CASE("lines, monodromy and discriminant")
{
    Json l = run_json({"lines", "--form", "psi4"});
    CHECK(l["lines"] == 3);
    CHECK(l["tritangents"] == 13);
    Json m = run_json({"monodromy", "--form", "psi1"});
    CHECK(m["order"] == 36);
    CHECK(m["name"] == "S3xS3");
    run_json({"discriminant", "--form", "psi4"});
}

TEST_CASE("vinberg and glue")
{
    Json v = run_json({"vinberg", "--form", "psi3"});
    CHECK(v["finite_volume"] == true);
    Json g = run_json({"glue"});
    CHECK(g["walls"].size() == 10);
}

TEST_CASE("usage and precondition errors exit with 1")
{
    Json e = run_json({"monodromy", "--form", "psi9"}, 1);
    CHECK(e["schema"] == 1);
    CHECK(e["error"]["kind"] == "precondition");
    CHECK(run_command({"frobnicate"}).exit_code == 1);
    CHECK(run_command({}).exit_code == 1);
    CHECK(run_command({"discriminant", "--form", "psi0", "--bound", "0"}).exit_code == 1);
}

TEST_CASE("tables are byte-stable")
{
    CommandResult a = run_command({"tables"});
    CommandResult b = run_command({"tables"});
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    Json t = Json::parse(a.output);
    CHECK(t["table1"].size() == 5);
    CHECK(t["table2"].size() == 5);
    CHECK(t["table2"][0]["fraction_percent"].get<double>() == doctest::Approx(2.03));
}

TEST_CASE("dot and text formats, and --output")
{
    CommandResult d = run_command({"vinberg", "--form", "psi1", "--format", "dot"});
    CHECK(d.exit_code == 0);
    CHECK(d.output.rfind("graph \"W1\"", 0) == 0);
    CommandResult t = run_command({"--format", "text", "lines", "--form", "psi0"});
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("lines: 27") != std::string::npos);

    auto p = std::filesystem::temp_directory_path() / "cubic_out.json";
    CommandResult o = run_command({"euler", "--form", "psi1", "-o", p.string()});
    CHECK(o.exit_code == 0);
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == o.output);
    std::filesystem::remove(p);
}
