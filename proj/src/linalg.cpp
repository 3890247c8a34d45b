#include "prehom/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace prehom {

namespace {

// Scales every row by the lcm of its denominators so all entries are integers.
Matrix integral_rows(const Matrix& m) {
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (const auto& x : m.row(i))
            if (!x.is_integer()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        if (l == 1) continue;
        const Rational s{mpq_class(l)};
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
    }
    return out;
}

}  // namespace

std::size_t rank(const Matrix& m) {
    Matrix a = integral_rows(m);
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Rational prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rational pivot = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Rational lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Rational v = pivot * a(i, j);
                sub_mul(v, lead, a(r, j));
                a(i, j) = v / prev;  // exact: Sylvester's identity
            }
            a(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

Rref rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) sub_mul(a(i, j), f, a(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const Rref rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t width) {
    const Rref rr = rref(Matrix::from_rows(vectors, width));
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rr.reduced.rows(); ++i) {
        const auto row = rr.reduced.row(i);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

SolveResult solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw ShapeError("solve: right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Rref rr = rref(aug);
    SolveResult out;
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) {
        out.kind = SolveResult::Kind::NoSolution;
        for (auto& w : kernel_basis(a.transpose())) {
            if (!dot(w, b).is_zero()) {
                out.inconsistency = std::move(w);
                break;
            }
        }
        return out;
    }
    out.solution = Vector(a.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) out.solution[rr.pivots[i]] = rr.reduced(i, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        out.kernel.push_back(std::move(v));
    }
    out.kind = out.kernel.empty() ? SolveResult::Kind::Unique : SolveResult::Kind::Affine;
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Rref rr = rref(aug);
    if (rr.pivots.size() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

// --- RowSpace ---------------------------------------------------------------

RowSpace::RowSpace(std::size_t width) : width_(width), row_of_pivot_(width, -1) {}

bool RowSpace::insert(Vector v) {
    if (v.size() != width_) throw ShapeError("RowSpace::insert: width mismatch");
    finalized_ = false;
    std::size_t lead = width_;
    for (std::size_t c = 0; c < width_; ++c) {
        if (v[c].is_zero()) continue;
        const auto r = row_of_pivot_[c];
        if (r < 0) {
            lead = c;
            break;
        }
        // Rows have their leading 1 at the pivot, so only columns > c change.
        const Rational f = v[c];
        for (const auto& [col, val] : rows_[static_cast<std::size_t>(r)]) sub_mul(v[col], f, val);
    }
    if (lead == width_) return false;
    const Rational inv = Rational(1) / v[lead];
    SparseRow row;
    for (std::size_t c = lead; c < width_; ++c)
        if (!v[c].is_zero()) row.emplace_back(static_cast<std::uint32_t>(c), v[c] * inv);
    row_of_pivot_[lead] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
    return true;
}

void RowSpace::finalize() {
    if (finalized_) return;
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    std::vector<SparseRow> rows;
    std::vector<std::size_t> pivots;
    rows.reserve(rows_.size());
    for (auto idx : order) {
        rows.push_back(std::move(rows_[idx]));
        pivots.push_back(pivots_[idx]);
    }
    // Back substitution, last pivot first; each eliminating row is already
    // free of all later pivot columns when it is used.
    Vector dense(width_);
    for (std::size_t k = rows.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            auto& ri = rows[i];
            auto it = std::lower_bound(ri.begin(), ri.end(), pc, [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == ri.end() || it->first != pc) continue;
            const Rational f = it->second;
            for (const auto& [col, val] : ri) dense[col] = val;
            for (const auto& [col, val] : rows[k]) sub_mul(dense[col], f, val);
            SparseRow merged;
            // Support of the result is contained in the union of both supports.
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < ri.size() || b < rows[k].size()) {
                std::uint32_t col;
                if (b == rows[k].size() || (a < ri.size() && ri[a].first < rows[k][b].first)) {
                    col = ri[a++].first;
                } else if (a == ri.size() || rows[k][b].first < ri[a].first) {
                    col = rows[k][b++].first;
                } else {
                    col = ri[a].first;
                    ++a;
                    ++b;
                }
                if (!dense[col].is_zero()) merged.emplace_back(col, dense[col]);
                dense[col] = Rational();
            }
            ri = std::move(merged);
        }
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
    std::fill(row_of_pivot_.begin(), row_of_pivot_.end(), -1);
    for (std::size_t i = 0; i < pivots_.size(); ++i) row_of_pivot_[pivots_[i]] = static_cast<std::int64_t>(i);
    finalized_ = true;
}

Vector RowSpace::row(std::size_t i) const {
    Vector v(width_);
    for (const auto& [col, val] : rows_.at(i)) v[col] = val;
    return v;
}

Vector RowSpace::coordinates(const Vector& v) const {
    if (!finalized_) throw std::logic_error("RowSpace::coordinates before finalize()");
    if (v.size() != width_) throw ShapeError("RowSpace::coordinates: width mismatch");
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

std::optional<Vector> RowSpace::coordinates_checked(const Vector& v) const {
    Vector c = coordinates(v);
    Vector rebuilt(width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (const auto& [col, val] : rows_[i]) rebuilt[col] += c[i] * val;
    }
    if (rebuilt != v) return std::nullopt;
    return c;
}

}  // namespace prehom
