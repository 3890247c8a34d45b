#include "prehom/catalog.hpp"

#include <charconv>

namespace prehom::catalog {

namespace {

using lie::Family;
using lie::MatrixLieAlgebra;
using pentad::DualModule;
using pentad::Pentad;
using pentad::Representation;

std::shared_ptr<const MatrixLieAlgebra> shared(MatrixLieAlgebra alg) {
    return std::make_shared<const MatrixLieAlgebra>(std::move(alg));
}

Representation scalar_gl1() {
    auto gl1 = shared(lie::family(Family::gl, 1));
    return Representation(gl1, {Matrix::identity(1)});
}

StandardPentad with_coordinate_dual(Representation rep) {
    auto form = lie::trace_form(rep.algebra());
    auto dual = pentad::dual_representation(rep);
    return StandardPentad::validate(Pentad{std::move(rep), std::move(dual), std::move(form)});
}

std::size_t expect_params(const std::vector<std::size_t>& p, std::size_t count, const char* name) {
    if (p.size() != count)
        throw UnknownExample(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    return count == 0 ? 0 : p.front();
}

}  // namespace

std::string CatalogEntry::label() const {
    if (parameters.empty()) return name;
    std::string out = name + "(";
    for (std::size_t i = 0; i < parameters.size(); ++i) out += (i ? "," : "") + std::to_string(parameters[i]);
    return out + ")";
}

StandardPentad gl1_scalar() { return with_coordinate_dual(scalar_gl1()); }

StandardPentad gl2_standard() {
    auto gl2 = shared(lie::family(Family::gl, 2));
    return with_coordinate_dual(Representation(gl2, gl2->basis()));
}

StandardPentad gl1_so_vector(std::size_t m) {
    if (m < 2) throw std::invalid_argument("gl1_so_vector needs m >= 2");
    auto so = shared(lie::family(Family::so, m));
    const std::vector<Representation> factors{scalar_gl1(), Representation(so, so->basis())};
    return with_coordinate_dual(pentad::box_tensor(factors));
}

StandardPentad paper_example(std::size_t n) {
    if (n < 1) throw std::invalid_argument("paper_example needs n >= 1");
    auto sp = shared(lie::family(Family::sp, n));
    auto so = shared(lie::family(Family::so, 3));
    // B acts by v -> -v B, i.e. by -B^T on the row vectors of v.
    std::vector<Matrix> so_action;
    for (const auto& b : so->basis()) so_action.push_back(-b.transpose());
    const std::vector<Representation> factors{scalar_gl1(), Representation(sp, sp->basis()),
                                              Representation(so, std::move(so_action))};
    Representation rep = pentad::box_tensor(factors);
    const Matrix pairing = kronecker(lie::symplectic_j(n), Matrix::identity(3));
    DualModule dual = pentad::dual_with_pairing(rep, pairing);
    auto form = lie::trace_form(rep.algebra());
    return StandardPentad::validate(Pentad{std::move(rep), std::move(dual), std::move(form)});
}

std::vector<CatalogEntry> catalog() {
    return {
        {"gl1_scalar", {}, "GL_1 acting on Q by scalars",
         [](const std::vector<std::size_t>& p) {
             expect_params(p, 0, "gl1_scalar");
             return gl1_scalar();
         }},
        {"gl2_standard", {}, "GL_2 on Q^2, coordinate dual, trace form",
         [](const std::vector<std::size_t>& p) {
             expect_params(p, 0, "gl2_standard");
             return gl2_standard();
         }},
        {"gl1_so_vector", {3}, "GL_1 x SO_m on Q^m (scalar times vector representation)",
         [](const std::vector<std::size_t>& p) { return gl1_so_vector(expect_params(p, 1, "gl1_so_vector")); }},
        {"paper_example", {2}, "GL_1 x Sp_n x SO_3 on M(2n,3), v -> av + Av - vB, pairing Tr(v^T J_n u)",
         [](const std::vector<std::size_t>& p) { return paper_example(expect_params(p, 1, "paper_example")); }},
    };
}

StandardPentad resolve(const std::string& spec) {
    std::string name = spec;
    std::vector<std::size_t> params;
    if (const auto open = spec.find('('); open != std::string::npos) {
        if (spec.back() != ')') throw UnknownExample("malformed example '" + spec + "'");
        name = spec.substr(0, open);
        const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
        std::size_t pos = 0;
        while (pos <= inner.size()) {
            const auto comma = std::min(inner.find(',', pos), inner.size());
            const std::string tok = inner.substr(pos, comma - pos);
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
                throw UnknownExample("bad parameter '" + tok + "' in '" + spec + "'");
            params.push_back(value);
            pos = comma + 1;
        }
    }
    for (const auto& e : catalog())
        if (e.name == name) {
            try {
                return e.builder(params);
            } catch (const UnknownExample&) {
                throw;
            } catch (const std::invalid_argument& ex) {
                throw UnknownExample(ex.what());
            }
        }
    throw UnknownExample("unknown example '" + name + "'");
}

Vector vectorize(const Matrix& v) { return v.flat(); }

Matrix unvectorize(const Vector& v, std::size_t rows, std::size_t cols) { return Matrix::reshape(v, rows, cols); }

std::vector<Matrix> paper_example_symmetries(std::size_t n) {
    const std::size_t m = 2 * n;
    // Symplectic shears [[I, S], [0, I]] and [[I, 0], [S, I]] with S symmetric.
    Matrix upper = Matrix::identity(m);
    Matrix lower = Matrix::identity(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational s(static_cast<long long>((i + 1) * (j + 1) % 5) - 2);
            upper(i, n + j) = s;
            lower(n + i, j) = s + Rational(1);
        }
    // Cayley transforms (I - K)^{-1} (I + K) of antisymmetric K are rational rotations.
    auto cayley = [](const Rational& a, const Rational& b, const Rational& c) {
        const Matrix k{{0, a, b}, {-a, 0, c}, {-b, -c, 0}};
        return *inverse(Matrix::identity(3) - k) * (Matrix::identity(3) + k);
    };
    const Matrix o1 = cayley(1, 0, 0);
    const Matrix o2 = cayley(Rational(1, 2), Rational(-1), Rational(2, 3));
    // v -> t S v O is (t S) (x) O^T on the row-major vectorization.
    auto map = [](const Rational& t, const Matrix& s, const Matrix& o) { return kronecker(s * t, o.transpose()); };
    return {
        map(Rational(3), Matrix::identity(m), Matrix::identity(3)),
        map(Rational(1), upper, Matrix::identity(3)),
        map(Rational(1), lower, o1),
        map(Rational(-2, 5), upper * lower, o2),
    };
}

}  // namespace prehom::catalog
