#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prehom/linalg.hpp"
#include "prehom/matrix.hpp"

namespace prehom::lie {

class LieError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotIndependent : public LieError {
public:
    NotIndependent() : LieError("basis matrices are linearly dependent") {}
};

class NotClosed : public LieError {
public:
    NotClosed(std::size_t i, std::size_t j)
        : LieError("commutator of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                   " leaves the span"),
          i(i),
          j(j) {}
    std::size_t i;
    std::size_t j;
};

/// ab - ba. Throws ShapeError unless a and b are square of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// A Lie subalgebra of gl(n) given by a basis of n x n matrices.
///
/// Structure constants are derived at construction: [b_i, b_j] = sum_k c(i,j,k) b_k.
class MatrixLieAlgebra {
public:
    /// Verifies independence and closure. Throws NotIndependent / NotClosed / ShapeError.
    static MatrixLieAlgebra build(std::size_t ambient_size, std::vector<Matrix> basis);

    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] std::size_t ambient_size() const { return ambient_; }
    [[nodiscard]] const std::vector<Matrix>& basis() const { return basis_; }
    [[nodiscard]] const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim() + j) * dim() + k];
    }

    /// Bracket of two elements given in basis coordinates.
    [[nodiscard]] Vector bracket(const Vector& a, const Vector& b) const;
    /// Matrix of ad(b_i) in the basis: column j holds the coordinates of [b_i, b_j].
    [[nodiscard]] Matrix ad(std::size_t i) const;
    /// sum_i coords[i] * b_i as an ambient matrix.
    [[nodiscard]] Matrix element(const Vector& coords) const;
    /// Coordinates of an ambient matrix, or std::nullopt if it is not in the algebra.
    [[nodiscard]] std::optional<Vector> coordinates(const Matrix& m) const;

private:
    MatrixLieAlgebra() = default;

    std::size_t ambient_ = 0;
    std::vector<Matrix> basis_;
    Vector constants_;
    // Entries of the flattened basis that determine coordinates, and the
    // inverse of the basis restricted to them.
    std::vector<std::size_t> pivot_entries_;
    Matrix restricted_inverse_;
};

enum class Family { gl, sl, so, sp };

/// Classical matrix algebras. sp(n) lives in gl(2n) and is cut out by
/// A J + J A^T = 0 with J = [[0, I], [-I, 0]]; so(m) is the antisymmetric m x m
/// matrices. The basis is the kernel basis of the defining equations in the
/// row-major entries, so it is reproducible.
MatrixLieAlgebra family(Family kind, std::size_t parameter);

/// J_n = [[0, I_n], [-I_n, 0]].
Matrix symplectic_j(std::size_t n);

/// Block-diagonal direct sum; bases are concatenated in order.
MatrixLieAlgebra direct_sum(std::span<const MatrixLieAlgebra> parts);

struct BilinearForm {
    Matrix gram;  // gram(i, j) = B(b_i, b_j)

    [[nodiscard]] Rational operator()(const Vector& a, const Vector& b) const;
};

/// gram(i, j) = Tr(b_i b_j).
BilinearForm trace_form(const MatrixLieAlgebra& alg);

struct FormCheck {
    bool symmetric = false;
    bool nondegenerate = false;
    bool invariant = false;
    // First basis triple (i, j, k) with B([b_i,b_j],b_k) != B(b_i,[b_j,b_k]).
    std::optional<std::array<std::size_t, 3>> invariance_witness;
    std::optional<std::array<std::size_t, 2>> symmetry_witness;
};

FormCheck check_form(const MatrixLieAlgebra& alg, const BilinearForm& form);

/// Basis (coordinates) of the center: kernel of the stacked adjoint operators.
std::vector<Vector> center(const MatrixLieAlgebra& alg);

/// Basis (coordinates, reduced echelon) of span{[b_i, b_j]}.
std::vector<Vector> derived_subalgebra(const MatrixLieAlgebra& alg);

struct AssumptionHReport {
    bool holds = false;
    std::size_t center_dim = 0;
    std::optional<Rational> scalar;  // c with pi(z) = c Id
    Vector center_generator;         // z, when center_dim == 1
    std::string reason;              // empty when holds
};

/// One-dimensional center, g = Z(g) + [g,g] as a direct sum, and the center
/// acting on the module by a nonzero scalar. `action` holds pi(b_i).
AssumptionHReport check_assumption_H(const MatrixLieAlgebra& alg, std::span<const Matrix> action);

}  // namespace prehom::lie
