#include "prehom/matrix.hpp"

#include <string>

namespace prehom {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t height) {
    Matrix m(height, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != height) throw ShapeError("from_columns: column length mismatch");
        for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t width) {
    Matrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) throw ShapeError("from_rows: row length mismatch");
        for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::reshape(const Vector& flat, std::size_t rows, std::size_t cols) {
    if (flat.size() != rows * cols) throw ShapeError("reshape: size mismatch");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = flat;
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational Matrix::trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const { return prehom::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw ShapeError("matrix-vector product: shape mismatch");
    Vector r(a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            const Rational& aik = a(i, k);
            if (!aik.is_zero()) r[i] += aik * v[k];
        }
    }
    return r;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("vector sum: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("vector difference: length mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x *= s;
    return r;
}

Vector operator-(const Vector& v) { return Rational(-1) * v; }

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
    if (a.size() != b.size()) throw ShapeError("axpy: length mismatch");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

}  // namespace prehom
