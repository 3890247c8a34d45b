#include "doctest.h"

#include "prehom/catalog.hpp"
#include "prehom/regularity.hpp"
#include "support.hpp"

using namespace prehom;
using namespace prehom::preh;
using lie::Family;
using pentad::StandardPentad;

namespace {

Matrix rows_matrix(std::initializer_list<std::initializer_list<Rational>> rows) { return Matrix(rows); }

// X and eta of the worked example for n = 2, as 4 x 3 matrices.
const Matrix kExampleX = rows_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
const Matrix kExampleEta = rows_matrix({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}, {0, 0, 0}});

Vector h0(const StandardPentad& p) { return graded::grading_element(p).element->coords; }

StandardPentad with_action(std::shared_ptr<const lie::MatrixLieAlgebra> alg, std::vector<Matrix> action) {
    pentad::Representation rep(alg, std::move(action));
    auto dual = pentad::dual_representation(rep);
    auto form = lie::trace_form(*alg);
    return StandardPentad::validate({std::move(rep), std::move(dual), std::move(form)});
}

StandardPentad sl2_trivial() {
    auto sl2 = std::make_shared<const lie::MatrixLieAlgebra>(lie::family(Family::sl, 2));
    return with_action(sl2, std::vector<Matrix>(3, Matrix(1, 1)));
}

StandardPentad gl1_on_plane() {
    auto gl1 = std::make_shared<const lie::MatrixLieAlgebra>(lie::family(Family::gl, 1));
    return with_action(gl1, {Matrix::identity(2)});
}

std::vector<StandardPentad> entries() {
    std::vector<StandardPentad> out;
    for (const auto& e : catalog::catalog()) out.push_back(e.build());
    out.push_back(catalog::paper_example(3));
    out.push_back(catalog::gl1_so_vector(4));
    return out;
}

}  // namespace

TEST_CASE("the example's triple") {
    const auto p = catalog::paper_example(2);
    const Vector x = catalog::vectorize(kExampleX);
    const Vector eta = catalog::vectorize(kExampleEta);
    CHECK(rank(kExampleEta) == 2);
    const Sl2Triple t(p, eta, h0(p), x);
    CHECK(t.x() == x);
    CHECK_THROWS_AS(Sl2Triple(p, eta, Rational(2) * h0(p), x), NotSl2Triple);
    CHECK_THROWS_AS(Sl2Triple(p, Rational(2) * eta, h0(p), x), NotSl2Triple);
    CHECK(triple_defect(p, Rational(2) * eta, h0(p), x) == std::string("[x,y]=h"));
}

TEST_CASE("ad_on_dual and is_generic") {
    const auto g1 = catalog::gl1_scalar();
    CHECK(ad_on_dual(g1, support::vec({1})) == Matrix{{1}});
    CHECK(ad_on_dual(g1, support::vec({0})).is_zero());
    CHECK(is_generic(g1, support::vec({1})));
    CHECK(!is_generic(g1, support::vec({0})));

    const auto p = catalog::paper_example(2);
    CHECK(rank(ad_on_dual(p, catalog::vectorize(kExampleX))) == 12);
    CHECK(is_generic(p, catalog::vectorize(kExampleX)));
    CHECK(!is_generic(p, Vector(12)));
    CHECK(ad_on_dual(p, Vector(12)).is_zero());
}

TEST_CASE("find_generic") {
    const auto g1 = find_generic(catalog::gl1_scalar());
    CHECK(g1.status == GenericSearch::Status::Found);
    CHECK(g1.candidates_tried == 1);
    CHECK(g1.point == support::vec({1}));

    const auto ex = find_generic(catalog::paper_example(2), {64, 5, true});
    REQUIRE(ex.status == GenericSearch::Status::Found);
    CHECK(ex.options.seed == 5);
    CHECK(ex.rank == 12);
    CHECK(is_generic(catalog::paper_example(2), ex.point));

    const auto triv = find_generic(sl2_trivial(), {16, 0, true});
    CHECK(triv.status == GenericSearch::Status::NotFound);
    CHECK(triv.rank == 0);
    CHECK(triv.log.size() == 16);
    CHECK(triv.log.back().find("rank 0/1") != std::string::npos);

    const auto plane = find_generic(gl1_on_plane());
    CHECK(plane.status == GenericSearch::Status::NotFound);
    CHECK(plane.candidates_tried == 0);
    CHECK(plane.reason.find("exceeds") != std::string::npos);
}

TEST_CASE("sl2_partner") {
    const auto g1 = catalog::gl1_scalar();
    const auto r = sl2_partner(g1, support::vec({2}), support::vec({1}));
    REQUIRE(r.kind == SolveResult::Kind::Unique);
    CHECK(r.y == support::vec({2}));
    CHECK(r.triple);

    const auto p = catalog::paper_example(2);
    const auto e = sl2_partner(p, h0(p), catalog::vectorize(kExampleX));
    REQUIRE(e.kind == SolveResult::Kind::Unique);
    CHECK(e.y == catalog::vectorize(kExampleEta));

    CHECK(sl2_partner(p, h0(p), Vector(12)).kind == SolveResult::Kind::NoSolution);
    CHECK(sl2_partner(g1, support::vec({2}), support::vec({0})).kind == SolveResult::Kind::NoSolution);
    // h = 4 H0 breaks [h, x] = 2x, which is checked before solving.
    const auto wrong = sl2_partner(p, Rational(4) * h0(p), catalog::vectorize(kExampleX));
    CHECK(wrong.kind == SolveResult::Kind::NoSolution);
    CHECK(wrong.reason == "[h,x] != 2x");
}

TEST_CASE("(P)! clauses and the relative invariant indicator") {
    const auto g1 = catalog::gl1_scalar();
    CHECK(check_P_bang_primal(g1, support::vec({2}), support::vec({1})));
    CHECK(check_P_bang_dual(g1, support::vec({2}), support::vec({2})));
    CHECK(!check_P_bang_dual(g1, support::vec({2}), support::vec({0})));
    CHECK(relative_invariant_indicator(g1, support::vec({2}), support::vec({1})));

    const auto p = catalog::paper_example(2);
    const Vector x = catalog::vectorize(kExampleX);
    const Vector eta = catalog::vectorize(kExampleEta);
    CHECK(check_P_bang_primal(p, h0(p), x));
    CHECK(!check_P_bang_primal(p, h0(p), Vector(12)));
    const auto d = check_dual(p, h0(p), eta);
    CHECK(!d.holds);
    CHECK(d.solvable);
    REQUIRE(d.witness);
    CHECK(!is_zero(*d.witness));
    CHECK(is_zero(p.phi(*d.witness, eta)));
    CHECK(!check_P_bang_dual(p, h0(p), Vector(12)));
    CHECK(relative_invariant_indicator(p, h0(p), x));
    CHECK(!relative_invariant_indicator(p, h0(p), Vector(12)));
}

TEST_CASE("Unique partner iff solvable and generic") {
    Sampler s(41);
    for (const auto& p : entries()) {
        const Vector h = h0(p);
        std::vector<Vector> xs{Vector(p.module_dim(), Rational(1)), Vector(p.module_dim())};
        for (int t = 0; t < 6; ++t) {
            Vector x = s.vector(p.module_dim(), -2, 2);
            // Sparse candidates are often degenerate.
            for (auto& c : x)
                if (s.uniform(0, 2) == 0) c = Rational(0);
            xs.push_back(std::move(x));
        }
        for (const auto& x : xs) {
            const auto r = sl2_partner(p, h, x);
            CHECK((r.kind == SolveResult::Kind::Unique) == (r.kind != SolveResult::Kind::NoSolution && is_generic(p, x)));
        }
    }
}

TEST_CASE("symmetries of the example preserve genericity and the partner classification") {
    const auto p = catalog::paper_example(2);
    const Vector h = h0(p);
    Sampler s(43);
    std::vector<Vector> xs{catalog::vectorize(kExampleX), Vector(12, Rational(1)), s.vector(12)};
    for (const auto& g : catalog::paper_example_symmetries(2)) {
        REQUIRE(inverse(g));
        for (const auto& x : xs) {
            const Vector gx = g * x;
            CHECK(is_generic(p, gx) == is_generic(p, x));
            CHECK(sl2_partner(p, h, gx).kind == sl2_partner(p, h, x).kind);
        }
    }
}

TEST_CASE("decide_regularity verdicts") {
    const auto g1 = decide_regularity(catalog::gl1_scalar());
    CHECK(g1.outcome == Outcome::Regular);
    CHECK(g1.h0 == support::vec({2}));
    CHECK(g1.x == support::vec({1}));
    CHECK(g1.y == support::vec({2}));
    CHECK(g1.form == "trace");

    const auto ex = catalog::paper_example(2);
    const auto c = decide_regularity(ex);
    CHECK(c.outcome == Outcome::NotRegular);
    CHECK(c.failed_clause == "dual");
    CHECK(c.rank_x == std::optional<std::size_t>(12));
    REQUIRE(c.witness);
    CHECK(is_zero(ex.phi(*c.witness, *c.y)));

    const auto so = decide_regularity(catalog::gl1_so_vector(3));
    CHECK(so.outcome == Outcome::Regular);
    CHECK(so.rank_x == std::optional<std::size_t>(3));
    CHECK(so.rank_y == std::optional<std::size_t>(3));

    const auto gl2 = decide_regularity(catalog::gl2_standard());
    CHECK(gl2.outcome == Outcome::NotRegular);
    CHECK(gl2.failed_clause == "primal");

    const auto plane = decide_regularity(gl1_on_plane());
    CHECK(plane.outcome == Outcome::Inconclusive);
    CHECK(!plane.x);
}

TEST_CASE("decide_regularity errors") {
    auto sl2 = std::make_shared<const lie::MatrixLieAlgebra>(lie::family(Family::sl, 2));
    CHECK_THROWS_AS(decide_regularity(with_action(sl2, sl2->basis())), AssumptionHFails);

    // Assumption (H) looks only at pi; a dual action of the wrong sign has no grading element.
    auto data = catalog::gl1_scalar().data();
    data.dual.action[0] = -data.dual.action[0];
    CHECK_THROWS_AS(decide_regularity(StandardPentad::unchecked(data)), NoGradingElement);
}

TEST_CASE("certificates replay and reject tampering") {
    for (const auto& p : entries()) {
        const auto c = decide_regularity(p);
        const auto r = verify_certificate(p, c);
        CHECK(r.agrees);
        CHECK(r.failures.empty());
    }
    const auto p = catalog::paper_example(2);
    auto c = decide_regularity(p);
    auto tampered = c;
    (*tampered.witness)[0] += Rational(1);
    CHECK(!verify_certificate(p, tampered).agrees);
    tampered = c;
    tampered.rank_y = *c.rank_y + 1;
    CHECK(!verify_certificate(p, tampered).agrees);
    tampered = c;
    tampered.h0 = Rational(2) * c.h0;
    CHECK(!verify_certificate(p, tampered).agrees);
    tampered = c;
    tampered.outcome = Outcome::Regular;
    CHECK(!verify_certificate(p, tampered).agrees);

    const auto gl2 = catalog::gl2_standard();
    auto primal = decide_regularity(gl2);
    CHECK(verify_certificate(gl2, primal).agrees);
    (*primal.witness)[0] += Rational(1);
    CHECK(!verify_certificate(gl2, primal).agrees);
}

TEST_CASE("verdicts do not depend on the seed") {
    for (const auto& p : entries()) {
        std::optional<Outcome> first;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto c = decide_regularity(p, {64, seed, false});
            REQUIRE(c.outcome != Outcome::Inconclusive);
            if (!first) first = c.outcome;
            CHECK(c.outcome == *first);
        }
    }
}

TEST_CASE("the example at n = 3") {
    const auto p = catalog::paper_example(3);
    CHECK(p.algebra_dim() == 25);
    CHECK(p.module_dim() == 18);
    const auto c = decide_regularity(p);
    CHECK(c.outcome == Outcome::NotRegular);
    REQUIRE(c.x);
    CHECK(relative_invariant_indicator(p, c.h0, *c.x));
}
