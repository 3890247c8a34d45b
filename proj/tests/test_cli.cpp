#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "prehom/catalog.hpp"
#include "prehom/cli.hpp"
#include "prehom/io.hpp"

using prehom::io::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    [[nodiscard]] Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = prehom::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "prehom_test_" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("regularity") {
    const auto ex = run({"regularity", "--example", "paper_example(2)"});
    CHECK(ex.code == 0);
    CHECK(ex.json()["outcome"] == "NotRegular");
    CHECK(ex.json()["witness"]["clause"] == "dual");

    const auto g1 = run({"regularity", "--example", "gl1_scalar", "--verify-certificate"});
    CHECK(g1.code == 0);
    const Json j = g1.json();
    CHECK(j["outcome"] == "Regular");
    CHECK(j["X"] == Json::parse(R"(["1"])"));
    CHECK(j["Y"] == Json::parse(R"(["2"])"));
    CHECK(j["H0"]["coords"] == Json::parse(R"(["2"])"));
    CHECK(j["replay"]["agrees"] == true);
}

TEST_CASE("check") {
    const auto ok = run({"check", "--example", "paper_example(2)"});
    CHECK(ok.code == 0);
    CHECK(ok.json()["valid"] == true);

    const auto garbage = temp_file("garbage.json", "{ not json");
    const auto g = run({"check", "--pentad", garbage});
    CHECK(g.code == 1);
    CHECK(g.json().contains("error"));

    // Valid JSON, but B = 0 and the second action matrix breaks the homomorphism.
    const auto bad = temp_file("bad.json", R"({
      "algebra": {"ambient_size": 2, "basis": [[["1","0"],["0","0"]], [["0","1"],["0","0"]]]},
      "action": [[["1","0"],["0","0"]], [["0","0"],["1","0"]]],
      "form": [["0","0"],["0","0"]]})");
    const auto b = run({"check", "--pentad", bad});
    CHECK(b.code == 1);
    std::vector<std::string> axioms;
    const auto report = b.json();
    for (const auto& f : report["failures"]) axioms.push_back(f["axiom"]);
    CHECK(std::find(axioms.begin(), axioms.end(), "form_nondegenerate") != axioms.end());
    CHECK(std::find(axioms.begin(), axioms.end(), "homomorphism") != axioms.end());
    CHECK(run({"regularity", "--pentad", bad}).code == 1);
    std::remove(garbage.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"regularity"}).code == 2);
    CHECK(run({"regularity", "--example", "nope"}).code == 2);
    CHECK(run({"regularity", "--example", "gl1_scalar", "--pentad", "x.json"}).code == 2);
    CHECK(run({"graded-dims", "--example", "gl1_scalar", "--max-degree", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("graded-dims") {
    const auto r = run({"graded-dims", "--example", "gl1_scalar"});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["dims"].size() == 7);
    CHECK(j["dims"]["0"] == 1);
    CHECK(j["dims"]["2"] == 0);
    CHECK(j["minimal"] == true);
    CHECK(j["grading_checked"] == true);
    CHECK(r.out.find("\"-3\"") < r.out.find("\"3\""));

    const auto g = run({"graded-dims", "--example", "paper_example(2)", "--max-degree", "2"});
    CHECK(g.json()["dims"]["2"] == 66);
}

TEST_CASE("phi, grading-element, generic-point, sl2") {
    const auto phi = run({"phi", "--example", "gl1_scalar", "--v", "3", "--f", "[\"1/2\"]"});
    CHECK(phi.code == 0);
    CHECK(phi.json()["coords"] == Json::parse(R"(["3/2"])"));
    CHECK(run({"phi", "--example", "gl1_scalar", "--v", "1,2", "--f", "1"}).code == 1);
    CHECK(run({"phi", "--example", "gl1_scalar", "--v", "x", "--f", "1"}).code == 1);

    const auto h = run({"grading-element", "--example", "paper_example(2)"});
    CHECK(h.json()["status"] == "Found");
    CHECK(h.json()["H0"]["matrix"][0][0] == "2");

    const auto gp = run({"generic-point", "--example", "paper_example(2)", "--seed", "3", "--attempts", "10"});
    CHECK(gp.json()["status"] == "Found");
    CHECK(gp.json()["seed"] == 3);
    CHECK(gp.json()["rank"] == 12);

    const auto sl2 = run({"sl2", "--example", "paper_example(2)", "--x", "1,0,0,0,1,0,0,0,1,0,0,0"});
    CHECK(sl2.json()["kind"] == "Unique");
    CHECK(sl2.json()["y"] == Json::parse(R"(["0","0","-1","0","0","0","1","0","0","0","0","0"])"));
    CHECK(sl2.json()["triple_verified"] == true);
    const auto zero = run({"sl2", "--example", "gl1_scalar", "--x", "0"});
    CHECK(zero.json()["kind"] == "NoSolution");
}

TEST_CASE("catalog and export round-trip") {
    const auto c = run({"catalog"});
    CHECK(c.code == 0);
    CHECK(c.json()["entries"].size() == prehom::catalog::catalog().size());

    const auto e = run({"export", "--example", "gl1_so_vector(3)"});
    const auto path = temp_file("so3.json", e.out);
    const auto from_file = run({"regularity", "--pentad", path});
    const auto from_catalog = run({"regularity", "--example", "gl1_so_vector(3)"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == from_catalog.out);
    std::remove(path.c_str());
}

TEST_CASE("verify-certificate") {
    const auto cert = run({"regularity", "--example", "paper_example(2)", "--seed", "2"});
    const auto path = temp_file("cert.json", cert.out);
    const auto ok = run({"verify-certificate", "--example", "paper_example(2)", "--certificate", path});
    CHECK(ok.code == 0);
    CHECK(ok.json()["agrees"] == true);
    // Same certificate against a different pentad.
    CHECK(run({"verify-certificate", "--example", "paper_example(3)", "--certificate", path}).code == 1);

    Json tampered = Json::parse(cert.out);
    tampered["ranks"]["ad_Y_on_module"]["rank"] = 11;
    const auto tpath = temp_file("tampered.json", tampered.dump());
    const auto bad = run({"verify-certificate", "--example", "paper_example(2)", "--certificate", tpath});
    CHECK(bad.code == 1);
    CHECK(bad.json()["agrees"] == false);
    std::remove(path.c_str());
    std::remove(tpath.c_str());
}

TEST_CASE("outputs are byte-stable") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"regularity", "--example", "paper_example(2)", "--seed", "7"},
          std::vector<std::string>{"graded-dims", "--example", "gl2_standard"},
          std::vector<std::string>{"catalog"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
