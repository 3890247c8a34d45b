#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prehom/matrix.hpp"

namespace prehom {

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);

struct Rref {
    Matrix reduced;                   // nonzero rows only, in pivot order
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form (Gauss-Jordan over Q).
Rref rref(const Matrix& m);

/// Basis of the right null space. Vector k has a 1 in the k-th free column and
/// zeros in the other free columns, so the stacked basis is in reduced column
/// echelon form and the output is canonical.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Basis of the row space of the stacked vectors, in reduced echelon form.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t width);

struct SolveResult {
    enum class Kind { NoSolution, Unique, Affine };
    Kind kind = Kind::NoSolution;
    Vector solution;             // particular solution (free variables set to 0)
    std::vector<Vector> kernel;  // nonempty exactly for Affine
    Vector inconsistency;        // NoSolution: w with w^T a = 0 and w.b != 0

    [[nodiscard]] bool solvable() const { return kind != Kind::NoSolution; }
    [[nodiscard]] bool unique() const { return kind == Kind::Unique; }
};

/// Solves a x = b exactly and classifies the solution set.
SolveResult solve(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Incrementally grown row space with a canonical reduced echelon basis.
///
/// insert() keeps the rows in semi-echelon form; finalize() performs the
/// back substitution. Rows are stored sparsely because the generator families
/// used by the graded construction are mostly zero.
class RowSpace {
public:
    using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

    explicit RowSpace(std::size_t width);

    /// Returns true iff v was independent of the rows inserted so far.
    bool insert(Vector v);

    /// Brings the basis to reduced row echelon form sorted by pivot column.
    void finalize();

    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] Vector row(std::size_t i) const;

    /// Coordinates of v in the reduced basis, read off at the pivot columns.
    /// Requires finalize(); v must lie in the span (not checked).
    [[nodiscard]] Vector coordinates(const Vector& v) const;

    /// As coordinates(), but verifies membership; std::nullopt when v is not in the span.
    [[nodiscard]] std::optional<Vector> coordinates_checked(const Vector& v) const;

private:
    std::size_t width_;
    bool finalized_ = false;
    std::vector<SparseRow> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::int64_t> row_of_pivot_;  // -1 where the column is free
};

}  // namespace prehom
