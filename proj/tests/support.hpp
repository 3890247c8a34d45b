#pragma once

#include <cstdint>
#include <vector>

#include "prehom/matrix.hpp"
#include "prehom/sampling.hpp"

namespace support {

using prehom::Matrix;
using prehom::Rational;
using prehom::Vector;

inline Matrix random_matrix(prehom::Sampler& s, std::size_t rows, std::size_t cols, long long lo = -9, long long hi = 9) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(s.uniform(lo, hi));
    return m;
}

// Entries p/q with small p and q, for exercising non-integer paths.
inline Matrix random_fraction_matrix(prehom::Sampler& s, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(s.uniform(-9, 9), s.uniform(1, 7));
    return m;
}

// Product of two random factors, so the rank is at most r.
inline Matrix random_low_rank(prehom::Sampler& s, std::size_t rows, std::size_t cols, std::size_t r) {
    return random_matrix(s, rows, r, -3, 3) * random_matrix(s, r, cols, -3, 3);
}

// Rank modulo a prime by plain Gaussian elimination. Used as an independent
// oracle for small integer matrices (agrees with the rational rank unless the
// prime divides a minor, which the tests avoid by using a large prime).
inline std::size_t rank_mod_p(const std::vector<std::vector<long long>>& rows, long long p = 1000003) {
    auto a = rows;
    for (auto& r : a)
        for (auto& x : r) x = ((x % p) + p) % p;
    auto power = [p](long long b, long long e) {
        long long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        const long long inv = power(a[rank][c], p - 2);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const long long f = a[r][c] * inv % p;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<long long>> to_integer_rows(const Matrix& m) {
    std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).numerator().get_si();
    return out;
}

inline Vector vec(std::initializer_list<long long> xs) {
    Vector v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace support
