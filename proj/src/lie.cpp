#include "prehom/lie.hpp"

namespace prehom::lie {

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ShapeError("commutator: operands must be square of equal size");
    return a * b - b * a;
}

MatrixLieAlgebra MatrixLieAlgebra::build(std::size_t ambient_size, std::vector<Matrix> basis) {
    const std::size_t n2 = ambient_size * ambient_size;
    for (const auto& b : basis)
        if (b.rows() != ambient_size || b.cols() != ambient_size)
            throw ShapeError("basis matrix is not " + std::to_string(ambient_size) + "x" + std::to_string(ambient_size));

    MatrixLieAlgebra alg;
    alg.ambient_ = ambient_size;
    alg.basis_ = std::move(basis);
    const std::size_t d = alg.basis_.size();

    std::vector<Vector> flat;
    flat.reserve(d);
    for (const auto& b : alg.basis_) flat.push_back(b.flat());
    const Rref rr = rref(Matrix::from_rows(flat, n2));
    if (rr.pivots.size() < d) throw NotIndependent();
    alg.pivot_entries_ = rr.pivots;

    Matrix restricted(d, d);  // restricted(s, k) = (b_k)[pivot_s]
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t k = 0; k < d; ++k) restricted(s, k) = flat[k][rr.pivots[s]];
    alg.restricted_inverse_ = *inverse(restricted);

    alg.constants_ = Vector(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto c = alg.coordinates(commutator(alg.basis_[i], alg.basis_[j]));
            if (!c) throw NotClosed(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                alg.constants_[(i * d + j) * d + k] = (*c)[k];
                alg.constants_[(j * d + i) * d + k] = -(*c)[k];
            }
        }
    return alg;
}

Vector MatrixLieAlgebra::bracket(const Vector& a, const Vector& b) const {
    const std::size_t d = dim();
    if (a.size() != d || b.size() != d) throw ShapeError("bracket: coordinate length mismatch");
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero() || i == j) continue;
            const Rational f = a[i] * b[j];
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = structure_constant(i, j, k);
                if (!c.is_zero()) out[k] += f * c;
            }
        }
    }
    return out;
}

Matrix MatrixLieAlgebra::ad(std::size_t i) const {
    const std::size_t d = dim();
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) m(k, j) = structure_constant(i, j, k);
    return m;
}

Matrix MatrixLieAlgebra::element(const Vector& coords) const {
    if (coords.size() != dim()) throw ShapeError("element: coordinate length mismatch");
    Matrix m(ambient_, ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        if (!coords[i].is_zero()) m += basis_[i] * coords[i];
    return m;
}

std::optional<Vector> MatrixLieAlgebra::coordinates(const Matrix& m) const {
    if (m.rows() != ambient_ || m.cols() != ambient_) throw ShapeError("coordinates: wrong matrix size");
    Vector restricted(dim());
    for (std::size_t s = 0; s < dim(); ++s) restricted[s] = m.flat()[pivot_entries_[s]];
    Vector c = restricted_inverse_ * restricted;
    if (element(c) != m) return std::nullopt;
    return c;
}

Matrix symplectic_j(std::size_t n) {
    Matrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

MatrixLieAlgebra family(Family kind, std::size_t parameter) {
    if (parameter < 1) throw std::invalid_argument("family parameter must be at least 1");
    const std::size_t n = kind == Family::sp ? 2 * parameter : parameter;
    const std::size_t n2 = n * n;
    auto entry = [n](std::size_t p, std::size_t q) { return p * n + q; };

    std::vector<Vector> equations;
    switch (kind) {
        case Family::gl:
            break;
        case Family::sl: {
            Vector tr(n2);
            for (std::size_t k = 0; k < n; ++k) tr[entry(k, k)] = 1;
            equations.push_back(std::move(tr));
            break;
        }
        case Family::so:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Vector eq(n2);
                    eq[entry(i, j)] += 1;
                    eq[entry(j, i)] += 1;
                    equations.push_back(std::move(eq));
                }
            break;
        case Family::sp: {
            const Matrix jm = symplectic_j(parameter);
            // (A J + J A^T)_{ij}: coefficient of A_pq is [p==i] J_qj + [p==j] J_iq.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Vector eq(n2);
                    for (std::size_t q = 0; q < n; ++q) {
                        eq[entry(i, q)] += jm(q, j);
                        eq[entry(j, q)] += jm(i, q);
                    }
                    equations.push_back(std::move(eq));
                }
            break;
        }
    }

    std::vector<Matrix> basis;
    if (equations.empty()) {
        for (std::size_t k = 0; k < n2; ++k) basis.push_back(Matrix::reshape(unit_vector(n2, k), n, n));
    } else {
        for (const auto& v : kernel_basis(Matrix::from_rows(equations, n2))) basis.push_back(Matrix::reshape(v, n, n));
    }
    return MatrixLieAlgebra::build(n, std::move(basis));
}

MatrixLieAlgebra direct_sum(std::span<const MatrixLieAlgebra> parts) {
    std::size_t ambient = 0;
    for (const auto& p : parts) ambient += p.ambient_size();
    std::vector<Matrix> basis;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (const auto& b : p.basis()) {
            Matrix m(ambient, ambient);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
            basis.push_back(std::move(m));
        }
        offset += p.ambient_size();
    }
    return MatrixLieAlgebra::build(ambient, std::move(basis));
}

Rational BilinearForm::operator()(const Vector& a, const Vector& b) const { return dot(a, gram * b); }

BilinearForm trace_form(const MatrixLieAlgebra& alg) {
    const std::size_t d = alg.dim();
    const std::size_t n = alg.ambient_size();
    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Rational t;
            const Matrix& a = alg.basis()[i];
            const Matrix& b = alg.basis()[j];
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (!a(p, q).is_zero() && !b(q, p).is_zero()) t += a(p, q) * b(q, p);
            gram(i, j) = t;
            gram(j, i) = t;
        }
    return {std::move(gram)};
}

FormCheck check_form(const MatrixLieAlgebra& alg, const BilinearForm& form) {
    const std::size_t d = alg.dim();
    if (form.gram.rows() != d || form.gram.cols() != d) throw ShapeError("check_form: gram size differs from dim");
    FormCheck out;
    out.symmetric = true;
    for (std::size_t i = 0; i < d && out.symmetric; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (form.gram(i, j) != form.gram(j, i)) {
                out.symmetric = false;
                out.symmetry_witness = std::array<std::size_t, 2>{i, j};
                break;
            }
    out.nondegenerate = rank(form.gram) == d;

    // left(i,j,k) = B([b_i,b_j], b_k), right(i,j,k) = B(b_i, [b_j,b_k]).
    out.invariant = true;
    for (std::size_t i = 0; i < d && out.invariant; ++i)
        for (std::size_t j = 0; j < d && out.invariant; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Rational left;
                Rational right;
                for (std::size_t m = 0; m < d; ++m) {
                    const Rational& cij = alg.structure_constant(i, j, m);
                    if (!cij.is_zero()) left += cij * form.gram(m, k);
                    const Rational& cjk = alg.structure_constant(j, k, m);
                    if (!cjk.is_zero()) right += form.gram(i, m) * cjk;
                }
                if (left != right) {
                    out.invariant = false;
                    out.invariance_witness = std::array<std::size_t, 3>{i, j, k};
                    break;
                }
            }
    return out;
}

std::vector<Vector> center(const MatrixLieAlgebra& alg) {
    const std::size_t d = alg.dim();
    // Row (i, m), column k: coefficient of b_m in [b_k, b_i].
    Matrix stacked(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t k = 0; k < d; ++k) stacked(i * d + m, k) = alg.structure_constant(k, i, m);
    return kernel_basis(stacked);
}

std::vector<Vector> derived_subalgebra(const MatrixLieAlgebra& alg) {
    const std::size_t d = alg.dim();
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector v(d);
            for (std::size_t k = 0; k < d; ++k) v[k] = alg.structure_constant(i, j, k);
            if (!is_zero(v)) brackets.push_back(std::move(v));
        }
    if (brackets.empty()) return {};
    return span_basis(brackets, d);
}

AssumptionHReport check_assumption_H(const MatrixLieAlgebra& alg, std::span<const Matrix> action) {
    if (action.size() != alg.dim()) throw ShapeError("check_assumption_H: one action matrix per basis element required");
    AssumptionHReport out;
    const auto z = center(alg);
    out.center_dim = z.size();
    if (z.size() != 1) {
        out.reason = "center has dimension " + std::to_string(z.size()) + ", expected 1";
        return out;
    }
    out.center_generator = z.front();

    const auto derived = derived_subalgebra(alg);
    std::vector<Vector> both = derived;
    both.push_back(z.front());
    if (derived.size() + 1 != alg.dim() || rank(Matrix::from_rows(both, alg.dim())) != alg.dim()) {
        out.reason = "g is not the direct sum of its center and [g,g] (dim [g,g] = " + std::to_string(derived.size()) + ")";
        return out;
    }

    if (action.empty()) {
        out.reason = "empty action";
        return out;
    }
    const std::size_t m = action.front().rows();
    Matrix pz(m, m);
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!z.front()[i].is_zero()) pz += action[i] * z.front()[i];
    if (m == 0) {
        out.reason = "zero-dimensional module";
        return out;
    }
    const Rational c = pz(0, 0);
    if (pz != Matrix::identity(m) * c) {
        out.reason = "center does not act by a scalar";
        return out;
    }
    if (c.is_zero()) {
        out.reason = "center acts trivially";
        return out;
    }
    out.scalar = c;
    out.holds = true;
    return out;
}

}  // namespace prehom::lie
