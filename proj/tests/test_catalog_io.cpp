#include "doctest.h"

#include "prehom/catalog.hpp"
#include "prehom/io.hpp"
#include "support.hpp"

using namespace prehom;
using io::Json;

TEST_CASE("catalog entries") {
    const auto entries = catalog::catalog();
    std::vector<std::string> names;
    for (const auto& e : entries) {
        names.push_back(e.name);
        const auto p = e.build();
        CHECK(p.validated());
        CHECK(pentad::check_standard(p.data()).valid());
    }
    CHECK(names == std::vector<std::string>{"gl1_scalar", "gl2_standard", "gl1_so_vector", "paper_example"});

    const auto ex = catalog::paper_example(2);
    CHECK(ex.algebra_dim() == 1 + 10 + 3);
    CHECK(ex.module_dim() == 4 * 3);
    const auto so = catalog::gl1_so_vector(3);
    CHECK(so.algebra_dim() == 1 + 3);
    CHECK(so.module_dim() == 3);
    CHECK(catalog::gl1_scalar().algebra_dim() == 1);
    CHECK(catalog::gl1_scalar().module_dim() == 1);
}

TEST_CASE("resolve") {
    CHECK(catalog::resolve("paper_example(2)").module_dim() == 12);
    CHECK(catalog::resolve("gl1_so_vector(4)").module_dim() == 4);
    CHECK(catalog::resolve("gl1_scalar").module_dim() == 1);
    for (const char* bad : {"nope", "paper_example", "paper_example(x)", "paper_example(2", "gl1_scalar(1)",
                            "paper_example(2,3)", "paper_example()", "gl1_so_vector(1)", "paper_example(0)"})
        CHECK_THROWS_AS(catalog::resolve(bad), catalog::UnknownExample);
}

TEST_CASE("vectorization and pairing of M(2n,3)") {
    const Matrix v{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}};
    const Vector flat = catalog::vectorize(v);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t c = 0; c < 3; ++c) CHECK(flat[3 * i + c] == v(i, c));
    CHECK(catalog::unvectorize(flat, 4, 3) == v);

    const auto p = catalog::paper_example(2);
    const Matrix j = lie::symplectic_j(2);
    Sampler s(3);
    for (int t = 0; t < 10; ++t) {
        const Matrix a = support::random_matrix(s, 4, 3);
        const Matrix b = support::random_matrix(s, 4, 3);
        CHECK(p.pair(catalog::vectorize(a), catalog::vectorize(b)) == (a.transpose() * j * b).trace());
    }
}

TEST_CASE("module symmetries are invertible") {
    for (const auto& g : catalog::paper_example_symmetries(2)) {
        CHECK(g.rows() == 12);
        CHECK(inverse(g).has_value());
    }
}

TEST_CASE("rational and matrix encodings") {
    CHECK(io::to_json(Rational(-3, 4)) == Json("-3/4"));
    CHECK(io::to_json(Rational(5)) == Json("5"));
    CHECK(io::rational_from_json(Json("6/8")) == Rational(3, 4));
    CHECK(io::rational_from_json(Json(7)) == Rational(7));
    CHECK_THROWS_AS(io::rational_from_json(Json(1.5)), io::FormatError);
    CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), io::FormatError);
    const Matrix m{{1, Rational(1, 2)}, {0, -3}};
    CHECK(io::to_json(m).dump() == R"([["1","1/2"],["0","-3"]])");
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
    CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1"],["1","2"]])")), io::FormatError);
}

TEST_CASE("pentad files round-trip with identical verdicts") {
    std::vector<pentad::StandardPentad> ps;
    for (const auto& e : catalog::catalog()) ps.push_back(e.build());
    ps.push_back(catalog::paper_example(3));
    for (const auto& p : ps) {
        const Json j = io::pentad_to_json(p);
        const auto back = pentad::StandardPentad::validate(io::pentad_from_json(Json::parse(j.dump())));
        CHECK(io::pentad_to_json(back).dump() == j.dump());
        const auto a = preh::decide_regularity(p);
        const auto b = preh::decide_regularity(back);
        CHECK(io::certificate_to_json(p, a).dump() == io::certificate_to_json(back, b).dump());
    }
}

TEST_CASE("pentad file defaults") {
    const Json minimal = Json::parse(R"({"algebra": {"ambient_size": 1, "basis": [[["1"]]]}, "action": [[["1"]]]})");
    const auto p = pentad::StandardPentad::validate(io::pentad_from_json(minimal));
    CHECK(p.dual().action[0] == Matrix{{-1}});
    CHECK(p.dual().pairing == Matrix::identity(1));
    CHECK(p.form().gram == Matrix{{1}});

    // With a pairing but no dual action, the dual is derived from the pairing.
    Json with_pairing = io::pentad_to_json(catalog::paper_example(2));
    with_pairing.erase("dual_action");
    with_pairing.erase("form");
    const auto q = pentad::StandardPentad::validate(io::pentad_from_json(with_pairing));
    CHECK(q.dual().action == catalog::paper_example(2).dual().action);
    CHECK(q.form().gram == catalog::paper_example(2).form().gram);
}

TEST_CASE("malformed pentad files") {
    CHECK_THROWS_AS(io::pentad_from_json(Json::parse(R"({"action": []})")), io::FormatError);
    CHECK_THROWS_AS(io::pentad_from_json(Json::parse(R"({"algebra": {"ambient_size": -1, "basis": []}, "action": []})")),
                    io::FormatError);
    CHECK_THROWS_AS(
        io::pentad_from_json(Json::parse(R"({"algebra": {"ambient_size": 2, "basis": [[["0","1"],["0","0"]], [["0","0"],["1","0"]]]}, "action": []})")),
        lie::NotClosed);
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), io::FormatError);
}

TEST_CASE("certificates round-trip") {
    for (const auto& p : {catalog::gl1_scalar(), catalog::gl2_standard(), catalog::paper_example(2)}) {
        const auto c = preh::decide_regularity(p);
        const Json j = io::certificate_to_json(p, c);
        const auto back = io::certificate_from_json(Json::parse(j.dump()));
        CHECK(io::certificate_to_json(p, back).dump() == j.dump());
        CHECK(preh::verify_certificate(p, back).agrees);
    }
    const Json j = io::certificate_to_json(catalog::gl1_scalar(), preh::decide_regularity(catalog::gl1_scalar()));
    CHECK(j["outcome"] == "Regular");
    CHECK(j["form"] == "trace");
    CHECK(j["seed"] == 0);
    Json broken = j;
    broken.erase("H0");
    CHECK_THROWS_AS(io::certificate_from_json(broken), io::FormatError);
}
