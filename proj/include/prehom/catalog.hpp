#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prehom/pentad.hpp"

/// Built-in pentads.
///
/// paper_example(n) is GL_1 x Sp_n x SO_3 acting on M(2n, 3) by
/// v -> a v + A v - v B. A matrix v in M(2n, 3) is vectorized row-major:
/// coordinate 3 i + c holds v(i, c). The pairing is <v, u> = Tr(v^T J_n u),
/// i.e. P = J_n (x) I_3, and the form is the trace form of the block-diagonal
/// realization in gl(1 + 2n + 3).
namespace prehom::catalog {

using pentad::StandardPentad;

struct CatalogEntry {
    std::string name;
    std::vector<std::size_t> parameters;  // defaults used by `catalog` listings and property suites
    std::string description;
    std::function<StandardPentad(const std::vector<std::size_t>&)> builder;

    [[nodiscard]] std::string label() const;  // e.g. "paper_example(2)"
    [[nodiscard]] StandardPentad build() const { return builder(parameters); }
};

std::vector<CatalogEntry> catalog();

class UnknownExample : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "name" or "name(p1,p2,...)" and builds the pentad.
/// Throws UnknownExample for unknown names or malformed parameters.
StandardPentad resolve(const std::string& spec);

StandardPentad gl1_scalar();
StandardPentad gl2_standard();
StandardPentad gl1_so_vector(std::size_t m);
StandardPentad paper_example(std::size_t n);

/// Vectorization of v in M(2n, 3) (row-major) and its inverse.
Vector vectorize(const Matrix& v);
Matrix unvectorize(const Vector& v, std::size_t rows, std::size_t cols);

/// Invertible linear maps of M(2n, 3) of the form v -> t S v O with
/// t a nonzero scalar, S in Sp_n and O in SO_3, all with rational entries.
/// They commute with the group action up to conjugation and so preserve
/// genericity. Deterministic in n.
std::vector<Matrix> paper_example_symmetries(std::size_t n);

}  // namespace prehom::catalog
