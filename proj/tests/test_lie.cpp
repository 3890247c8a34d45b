#include "doctest.h"

#include "prehom/catalog.hpp"
#include "prehom/lie.hpp"
#include "support.hpp"

using namespace prehom;
using namespace prehom::lie;

namespace {

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

// Dimension of {A : L(A) = 0} for the n x n matrices, where L is given by its
// action on matrix units; rank is taken modulo a prime.
template <class F>
std::size_t solution_dim(std::size_t n, F&& constraint) {
    std::vector<std::vector<long long>> rows(n * n, std::vector<long long>(n * n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Matrix image = constraint(unit(n, p, q));
            for (std::size_t e = 0; e < n * n; ++e) rows[e][p * n + q] = image.flat()[e].numerator().get_si();
        }
    return n * n - support::rank_mod_p(rows);
}

MatrixLieAlgebra example_algebra() {
    const std::vector<MatrixLieAlgebra> parts{family(Family::gl, 1), family(Family::sp, 2), family(Family::so, 3)};
    return direct_sum(parts);
}

}  // namespace

TEST_CASE("commutator") {
    Sampler s(1);
    const Matrix m = support::random_matrix(s, 2, 2);
    CHECK(commutator(Matrix::identity(2), m).is_zero());
    CHECK(commutator(unit(2, 0, 1), unit(2, 1, 0)) == unit(2, 0, 0) - unit(2, 1, 1));
    for (int t = 0; t < 20; ++t) {
        const Matrix a = support::random_matrix(s, 3, 3);
        const Matrix b = support::random_matrix(s, 3, 3);
        CHECK(commutator(a, b) == -commutator(b, a));
    }
    CHECK_THROWS_AS(commutator(Matrix::identity(2), Matrix::identity(3)), ShapeError);
}

TEST_CASE("build_algebra") {
    const auto gl1 = MatrixLieAlgebra::build(1, {Matrix{{1}}});
    CHECK(gl1.dim() == 1);
    CHECK(gl1.structure_constant(0, 0, 0).is_zero());

    const auto gl2 = MatrixLieAlgebra::build(2, {unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)});
    CHECK(gl2.dim() == 4);

    // [E11, E12] = E12, computed by hand.
    const auto borel = MatrixLieAlgebra::build(2, {unit(2, 0, 1), unit(2, 0, 0)});
    CHECK(borel.dim() == 2);
    CHECK(borel.structure_constant(1, 0, 0) == Rational(1));
    CHECK(borel.structure_constant(1, 0, 1).is_zero());

    CHECK_THROWS_AS(MatrixLieAlgebra::build(2, {unit(2, 0, 1), unit(2, 0, 1)}), NotIndependent);
    try {
        (void)MatrixLieAlgebra::build(2, {unit(2, 0, 1), unit(2, 1, 0)});
        FAIL("expected NotClosed");
    } catch (const NotClosed& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
    }
}

TEST_CASE("family dimensions against the defining equations") {
    CHECK(family(Family::so, 3).dim() == solution_dim(3, [](const Matrix& a) { return a + a.transpose(); }));
    CHECK(family(Family::so, 3).dim() == 3);
    const Matrix j2 = symplectic_j(2);
    const std::size_t sp2 = solution_dim(4, [&](const Matrix& a) { return a * j2 + j2 * a.transpose(); });
    CHECK(sp2 == 10);
    CHECK(family(Family::sp, 2).dim() == sp2);
    const Matrix j3 = symplectic_j(3);
    CHECK(family(Family::sp, 3).dim() == solution_dim(6, [&](const Matrix& a) { return a * j3 + j3 * a.transpose(); }));
    CHECK(family(Family::gl, 4).dim() == 16);
    CHECK(family(Family::sl, 3).dim() == 8);
}

TEST_CASE("sp basis satisfies A J + J A^T = 0") {
    for (std::size_t n : {1, 2, 3}) {
        const Matrix j = symplectic_j(n);
        const auto sp = family(Family::sp, n);
        for (const auto& a : sp.basis()) CHECK((a * j + j * a.transpose()).is_zero());
    }
}

TEST_CASE("structure constants: antisymmetry and Jacobi") {
    for (const auto& alg : {family(Family::gl, 2), family(Family::sp, 2), family(Family::so, 4), example_algebra()}) {
        const std::size_t d = alg.dim();
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    if (alg.structure_constant(i, j, k) != -alg.structure_constant(j, i, k)) ok = false;
        CHECK(ok);
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j)
                for (std::size_t k = 0; k < d && ok; ++k)
                    for (std::size_t l = 0; l < d; ++l) {
                        Rational s;
                        for (std::size_t m = 0; m < d; ++m) {
                            s += alg.structure_constant(i, j, m) * alg.structure_constant(m, k, l);
                            s += alg.structure_constant(j, k, m) * alg.structure_constant(m, i, l);
                            s += alg.structure_constant(k, i, m) * alg.structure_constant(m, j, l);
                        }
                        if (!s.is_zero()) ok = false;
                    }
        CHECK(ok);
    }
}

TEST_CASE("direct_sum") {
    const std::vector<MatrixLieAlgebra> two{family(Family::gl, 1), family(Family::gl, 1)};
    const auto ab = direct_sum(two);
    CHECK(ab.dim() == 2);
    CHECK(center(ab).size() == 2);

    const auto ex = example_algebra();
    CHECK(ex.dim() == 14);
    CHECK(ex.ambient_size() == 8);

    const std::vector<MatrixLieAlgebra> parts{family(Family::gl, 1), family(Family::so, 3)};
    const auto sum = direct_sum(parts);
    const auto z = center(sum);
    // The center of gl1 (first coordinate) lies in the center of the sum.
    const auto z_rank = rank(Matrix::from_rows(z, sum.dim()));
    auto with_gl1 = z;
    with_gl1.push_back(unit_vector(sum.dim(), 0));
    CHECK(rank(Matrix::from_rows(with_gl1, sum.dim())) == z_rank);
}

TEST_CASE("trace form") {
    const auto gl1 = family(Family::gl, 1);
    CHECK(trace_form(gl1).gram == Matrix{{1}});

    const auto gl2 = MatrixLieAlgebra::build(2, {unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)});
    const auto g = trace_form(gl2).gram;
    CHECK(g(0, 0) == Rational(1));
    CHECK(g(1, 2) == Rational(1));
    CHECK(g(0, 3).is_zero());

    CHECK(rank(trace_form(family(Family::sp, 2)).gram) == 10);

    for (const auto& alg : {family(Family::gl, 2), family(Family::sl, 3), family(Family::so, 3), family(Family::sp, 2),
                            example_algebra()}) {
        const auto fc = check_form(alg, trace_form(alg));
        CHECK(fc.symmetric);
        CHECK(fc.nondegenerate);
        CHECK(fc.invariant);
    }
}

TEST_CASE("check_form failures") {
    const auto gl2 = family(Family::gl, 2);
    const auto zero = check_form(gl2, BilinearForm{Matrix::zero(4, 4)});
    CHECK(!zero.nondegenerate);

    Sampler s(2);
    Matrix g = support::random_matrix(s, 4, 4);
    g(0, 1) = g(1, 0) + Rational(1);
    const auto fc = check_form(gl2, BilinearForm{g});
    CHECK(!fc.symmetric);
    REQUIRE(fc.symmetry_witness);

    // Symmetric and nondegenerate but not invariant on sl2 inside gl2.
    Matrix id = Matrix::identity(4);
    const auto ni = check_form(gl2, BilinearForm{id});
    CHECK(ni.symmetric);
    CHECK(!ni.invariant);
    CHECK(ni.invariance_witness);
}

TEST_CASE("center and derived subalgebra") {
    const auto gl2 = family(Family::gl, 2);
    const auto z = center(gl2);
    REQUIRE(z.size() == 1);
    CHECK(gl2.element(z[0]) == gl2.element(z[0])(0, 0) * Matrix::identity(2));

    CHECK(center(example_algebra()).size() == 1);
    CHECK(derived_subalgebra(family(Family::gl, 1)).empty());
    CHECK(derived_subalgebra(gl2).size() == 3);
    CHECK(derived_subalgebra(example_algebra()).size() == 13);
}

TEST_CASE("Assumption (H)") {
    const auto gl1 = family(Family::gl, 1);
    const std::vector<Matrix> scalar{Matrix{{1}}};
    const auto r = check_assumption_H(gl1, scalar);
    CHECK(r.holds);
    REQUIRE(r.scalar);
    CHECK(*r.scalar * gl1.element(r.center_generator)(0, 0) != Rational(0));

    const auto ex = catalog::paper_example(2);
    const auto rex = check_assumption_H(ex.algebra(), ex.rep().action());
    CHECK(rex.holds);

    const auto sl2 = family(Family::sl, 2);
    const auto rs = check_assumption_H(sl2, sl2.basis());
    CHECK(!rs.holds);
    CHECK(rs.center_dim == 0);
}

TEST_CASE("center meets the derived subalgebra trivially under (H)") {
    for (const auto& p : {catalog::gl1_scalar(), catalog::gl2_standard(), catalog::gl1_so_vector(3), catalog::paper_example(2)}) {
        REQUIRE(check_assumption_H(p.algebra(), p.rep().action()).holds);
        auto rows = center(p.algebra());
        const auto d = derived_subalgebra(p.algebra());
        rows.insert(rows.end(), d.begin(), d.end());
        CHECK(rank(Matrix::from_rows(rows, p.algebra_dim())) == p.algebra_dim());
    }
}
