#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prehom/pentad.hpp"

/// The graded Lie algebra L = sum_n U_n attached to a standard pentad,
/// built degree by degree up to a fixed bound.
///
/// U_0 = g, U_1 = U, U_{-1} = the dual module. For k >= 1 the component
/// U_{k+1} is realized inside Hom(U_{-1}, U_k): a basis vector u is stored as
/// the matrix of t -> [u, t], and U_{k+1} is the span of the maps
///
///     [s, u] : t -> [[s, t], u] + [s, [u, t]]        (s in U_1, u in U_k)
///
/// The negative side is the mirror image inside Hom(U_1, U_{-k}). Because every
/// stored basis vector is determined by its brackets with U_{-1} (resp. U_1),
/// the result is the minimal graded algebra with the given local part.
namespace prehom::graded {

using pentad::StandardPentad;

struct GradingElement {
    Vector coords;  // in the algebra basis
};

struct GradingResult {
    enum class Status { Found, Absent, Degenerate };
    Status status = Status::Absent;
    std::optional<GradingElement> element;
    /// Degenerate: a particular solution and the kernel of the system.
    Vector particular;
    std::vector<Vector> solution_space;
};

/// Solves [H, a] = 0 for all a, pi(H) = 2 Id, pi_dual(H) = -2 Id.
GradingResult grading_element(const StandardPentad& p);

/// One graded component U_n with its bracket tables.
struct Component {
    int degree = 0;
    std::size_t dim = 0;
    /// |degree| >= 1: matrix of t -> [u_q, t] on U_{-sign}, valued in U_{degree - sign}
    /// (U_0 = g for |degree| = 1).
    std::vector<Matrix> maps;
    /// |degree| >= 2: pivot positions of the row-major flattened maps; the maps
    /// are in reduced echelon form, so coordinates are read off there.
    std::vector<std::size_t> pivots;
    /// g-action, one matrix per algebra basis element. Left empty for the top
    /// degree |degree| = N >= 2 where it is evaluated on demand.
    std::vector<Matrix> action;
    /// |degree| >= 1: raise[i] is the matrix of u -> [s_i, u] from
    /// U_{degree - sign} to U_degree, with s_i the basis of U_sign.
    std::vector<Matrix> raise;
    /// |degree| >= 2: generator pairs (i, j) with [s_i, u_j] kept as spanning set.
    std::vector<std::pair<std::size_t, std::size_t>> spanning;
};

struct Element {
    int degree = 0;
    Vector coords;
};

class DegreeOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class GradedAlgebra {
public:
    /// Wraps stored components (ordered by degree -N..N) without recomputing them.
    static GradedAlgebra assemble(std::shared_ptr<const StandardPentad> pentad, int max_degree,
                                  std::vector<Component> components);

    [[nodiscard]] const StandardPentad& pentad() const { return *pentad_; }
    [[nodiscard]] int max_degree() const { return max_degree_; }
    [[nodiscard]] const Component& component(int degree) const;
    [[nodiscard]] std::size_t dim(int degree) const { return component(degree).dim; }
    [[nodiscard]] std::map<int, std::size_t> dims() const;

    /// a . u for a in g (coordinates) and u in U_degree.
    [[nodiscard]] Vector act(const Vector& a, int degree, const Vector& u) const;

    /// [a, b] in U_{j+k}. Throws DegreeOutOfRange unless all degrees are within the bound.
    [[nodiscard]] Element bracket(const Element& a, const Element& b) const;

private:
    struct Memo;

    GradedAlgebra() = default;
    Vector bracket_raw(int j, const Vector& a, int k, const Vector& b) const;
    Vector basis_bracket(int j, std::size_t p, int k, std::size_t q) const;
    const std::vector<std::vector<std::pair<Rational, std::pair<std::size_t, std::size_t>>>>& expansion(int degree) const;
    Vector coordinates_in(int degree, const Matrix& map) const;

    std::shared_ptr<const StandardPentad> pentad_;
    int max_degree_ = 0;
    std::vector<Component> components_;
    std::shared_ptr<Memo> memo_;
};

/// Builds U_{-N} .. U_N. Requires N >= 1.
GradedAlgebra extend(std::shared_ptr<const StandardPentad> pentad, int max_degree);
GradedAlgebra extend(const StandardPentad& pentad, int max_degree);

/// No nonzero v in U_k (2 <= |k| <= N) has [v, U_{-sign k}] = 0.
bool check_minimality(const GradedAlgebra& g);

/// ad(h) acts as 2n on U_n for every |n| <= N.
bool check_grading(const GradedAlgebra& g, const GradingElement& h);

struct BracketDefect {
    std::vector<std::pair<int, std::size_t>> basis;  // (degree, index) of the offending basis vectors
    Element value;                                  // the nonzero residual
};

/// [x, y] + [y, x] over all pairs of basis vectors with degree sum in range.
std::optional<BracketDefect> antisymmetry_defect(const GradedAlgebra& g);

/// Jacobi identity over all triples of basis vectors whose partial sums are in range.
std::optional<BracketDefect> jacobi_defect(const GradedAlgebra& g);

}  // namespace prehom::graded
