#pragma once

// Structurally independent reference implementations used to pin down the
// library results: different algorithms, different loop orders, no shared
// helpers beyond the scalar type itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <aon/field.hpp>
#include <aon/matrix.hpp>

namespace oracles {

using aon::FieldSpec;
using aon::Matrix;
using aon::Scalar;

// product with the j-i-l loop order and no zero skipping
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
    Matrix out(a.spec(), a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Scalar acc = Scalar::zero(a.spec());
            for (std::size_t l = 0; l < a.cols(); ++l)
                acc = acc + a.at(i, l) * b.at(l, j);
            out.at(i, j) = acc;
        }
    return out;
}

inline Matrix strike(const Matrix& m, std::size_t row, std::size_t col) {
    Matrix out(m.spec(), m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == row)
            continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == col)
                continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

// cofactor expansion along the first row
inline Scalar laplace_det(const Matrix& m) {
    if (m.rows() == 1)
        return m.at(0, 0);
    Scalar acc = Scalar::zero(m.spec());
    Scalar sign = Scalar::one(m.spec());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        acc = acc + sign * m.at(0, j) * laplace_det(strike(m, 0, j));
        sign = -sign;
    }
    return acc;
}

// inverse via the adjugate, or nothing when the determinant vanishes
inline std::optional<Matrix> adjugate_inverse(const Matrix& m) {
    const Scalar det = laplace_det(m);
    if (det.is_zero())
        return std::nullopt;
    const std::size_t n = m.rows();
    Matrix out(m.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar cof = laplace_det(strike(m, j, i));
            const Scalar sign =
                (i + j) % 2 == 0 ? Scalar::one(m.spec()) : -Scalar::one(m.spec());
            out.at(i, j) = sign * cof / det;
        }
    return out;
}

// rank as the largest size of a nonvanishing square minor
inline std::size_t rank_by_minors(const Matrix& m) {
    const std::size_t max = std::min(m.rows(), m.cols());
    for (std::size_t size = max; size >= 1; --size) {
        std::vector<std::size_t> rows(size), cols(size);
        const std::function<bool(std::size_t, std::size_t, bool)> pick =
            [&](std::size_t k, std::size_t from, bool picking_rows) -> bool {
            if (k == size) {
                if (picking_rows)
                    return pick(0, 0, false);
                Matrix sub(m.spec(), size, size);
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = 0; j < size; ++j)
                        sub.at(i, j) = m.at(rows[i], cols[j]);
                return !laplace_det(sub).is_zero();
            }
            const std::size_t limit = picking_rows ? m.rows() : m.cols();
            for (std::size_t v = from; v + (size - k) <= limit; ++v) {
                (picking_rows ? rows : cols)[k] = v;
                if (pick(k + 1, v + 1, picking_rows))
                    return true;
            }
            return false;
        };
        if (pick(0, 0, true))
            return size;
    }
    return 0;
}

// exhaustive search for diagonals H, K over F_p with H a K = b
inline bool brute_force_diag_equiv(const Matrix& a, const Matrix& b) {
    const FieldSpec& spec = a.spec();
    const std::int64_t p = spec.modulus();
    const std::size_t n = a.rows();
    std::vector<std::int64_t> h(n, 1), k(n, 1);
    const auto matches = [&]() {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar lhs =
                    Scalar::of_int(spec, h[i]) * a.at(i, j) * Scalar::of_int(spec, k[j]);
                if (lhs != b.at(i, j))
                    return false;
            }
        return true;
    };
    const std::function<bool(std::size_t)> walk = [&](std::size_t pos) -> bool {
        if (pos == 2 * n)
            return matches();
        for (std::int64_t v = 1; v < p; ++v) {
            (pos < n ? h[pos] : k[pos - n]) = v;
            if (walk(pos + 1))
                return true;
        }
        return false;
    };
    return walk(0);
}

inline Scalar random_scalar(const FieldSpec& spec, std::mt19937& rng, bool nonzero = false) {
    for (;;) {
        Scalar s = Scalar::zero(spec);
        if (spec.is_prime()) {
            std::uniform_int_distribution<std::int64_t> dist(0, spec.modulus() - 1);
            s = Scalar::of_int(spec, dist(rng));
        } else {
            std::uniform_int_distribution<int> dist(-6, 6);
            s = Scalar::of_int(spec, dist(rng));
        }
        if (!nonzero || !s.is_zero())
            return s;
    }
}

inline Matrix random_matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                            std::mt19937& rng) {
    Matrix m(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = random_scalar(spec, rng);
    return m;
}

inline Matrix random_invertible_diagonal(const FieldSpec& spec, std::size_t n,
                                         std::mt19937& rng) {
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back(random_scalar(spec, rng, true));
    return Matrix::diagonal(entries);
}

} // namespace oracles
