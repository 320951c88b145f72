#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "field.hpp"

namespace aon {

// Dense matrix over a runtime field. Systems in this library are square of
// size (d+1)x(d+1) with rows and columns indexed 0..d; the class itself also
// supports rectangular shapes for internal solves.
class Matrix {
public:
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
        : spec_(spec), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(spec)) {}

    static Matrix identity(const FieldSpec& spec, std::size_t n) {
        Matrix m(spec, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Scalar::one(spec);
        return m;
    }

    // Elementary matrix Delta_{i,j}: single 1 in row i, column j.
    static Matrix delta(const FieldSpec& spec, std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(spec, n, n);
        m.at(i, j) = Scalar::one(spec);
        return m;
    }

    static Matrix diagonal(const std::vector<Scalar>& entries) {
        Matrix m(entries.front().spec(), entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i)
            m.at(i, i) = entries[i];
        return m;
    }

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    // Diameter d of a square system matrix of size (d+1)x(d+1).
    std::size_t diameter() const {
        require_square();
        return rows_ - 1;
    }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        require_same_field(spec_, o.spec_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            return false;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i] != o.a_[i])
                return false;
        }
        return true;
    }

    bool operator!=(const Matrix& o) const { return !(*this == o); }

    void require_square() const {
        if (!square())
            throw SizeMismatchError("square matrix required, got " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
    }

private:
    FieldSpec spec_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a.spec(), b.spec());
    if (a.cols() != b.rows())
        throw SizeMismatchError("mat_mul shape mismatch");
    Matrix out(a.spec(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Scalar& ail = a.at(i, l);
            if (ail.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = out.at(i, j) + ail * b.at(l, j);
        }
    }
    return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.spec(), b.spec());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw SizeMismatchError("matrix addition shape mismatch");
    Matrix out(a.spec(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.spec(), b.spec());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw SizeMismatchError("matrix subtraction shape mismatch");
    Matrix out(a.spec(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

inline Matrix scale(const Scalar& c, const Matrix& m) {
    Matrix out(m.spec(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = c * m.at(i, j);
    return out;
}

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.spec(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(j, i) = m.at(i, j);
    return out;
}

inline Scalar trace(const Matrix& m) {
    m.require_square();
    Scalar t = Scalar::zero(m.spec());
    for (std::size_t i = 0; i < m.rows(); ++i)
        t = t + m.at(i, i);
    return t;
}

// Gauss-Jordan with the first nonzero entry of each column as pivot; no
// magnitude heuristics, every step is exact.
inline Matrix mat_inverse(const Matrix& m) {
    m.require_square();
    const std::size_t n = m.rows();
    Matrix work = m;
    Matrix inv = Matrix::identity(m.spec(), n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Scalar s = work.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) = s * work.at(col, j);
            inv.at(col, j) = s * inv.at(col, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero())
                continue;
            const Scalar f = work.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) = work.at(r, j) - f * work.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

inline std::size_t rank(const Matrix& m) {
    Matrix work = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.rows() && work.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == work.rows())
            continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < work.cols(); ++j)
                std::swap(work.at(pivot, j), work.at(r, j));
        }
        const Scalar s = work.at(r, col).inverse();
        for (std::size_t j = col; j < work.cols(); ++j)
            work.at(r, j) = s * work.at(r, j);
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            if (work.at(i, col).is_zero())
                continue;
            const Scalar f = work.at(i, col);
            for (std::size_t j = col; j < work.cols(); ++j)
                work.at(i, j) = work.at(i, j) - f * work.at(r, j);
        }
        ++r;
    }
    return r;
}

inline bool is_invertible(const Matrix& m) {
    m.require_square();
    return rank(m) == m.rows();
}

inline bool is_rank_one(const Matrix& m) { return rank(m) == 1; }

inline bool is_diagonal(const Matrix& m) {
    m.require_square();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m.at(i, j).is_zero())
                return false;
    return true;
}

inline bool is_zero_matrix(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                return false;
    return true;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a.spec(), b.spec());
    Matrix out(a.spec(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero())
                continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    out.at(i * b.rows() + r, j * b.cols() + s) = a.at(i, j) * b.at(r, s);
        }
    return out;
}

// Solves A X = B for the unique X (A is m x n, B is m x k). Throws
// NoSolutionError if the system is inconsistent and NonUniqueSolutionError
// if the solution space has positive dimension.
inline Matrix solve_unique(const Matrix& a, const Matrix& b) {
    require_same_field(a.spec(), b.spec());
    if (a.rows() != b.rows())
        throw SizeMismatchError("solve_unique shape mismatch");
    const std::size_t m = a.rows(), n = a.cols(), k = b.cols();
    Matrix aug(a.spec(), m, n + k);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < k; ++j)
            aug.at(i, n + j) = b.at(i, j);
    }
    std::vector<std::size_t> pivot_of_col(n, m);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t pivot = r;
        while (pivot < m && aug.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == m)
            continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < n + k; ++j)
                std::swap(aug.at(pivot, j), aug.at(r, j));
        }
        const Scalar s = aug.at(r, col).inverse();
        for (std::size_t j = 0; j < n + k; ++j)
            aug.at(r, j) = s * aug.at(r, j);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug.at(i, col).is_zero())
                continue;
            const Scalar f = aug.at(i, col);
            for (std::size_t j = 0; j < n + k; ++j)
                aug.at(i, j) = aug.at(i, j) - f * aug.at(r, j);
        }
        pivot_of_col[col] = r;
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!aug.at(i, n + j).is_zero())
                throw NoSolutionError("linear system is inconsistent");
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] == m)
            throw NonUniqueSolutionError("linear system is underdetermined");
    Matrix x(a.spec(), n, k);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t j = 0; j < k; ++j)
            x.at(col, j) = aug.at(pivot_of_col[col], n + j);
    return x;
}

// Recovers an invertible R with family[i] = R Delta_{i,i} R^{-1} from a
// family of d+1 mutually orthogonal rank-one idempotents summing to I.
// Column i of R is the first nonzero column of family[i] (leftmost wins).
inline Matrix recover_diagonalizer(const std::vector<Matrix>& family) {
    if (family.empty())
        throw NotIdempotentFamilyError("empty idempotent family");
    const FieldSpec spec = family.front().spec();
    const std::size_t n = family.size();
    for (const Matrix& e : family) {
        require_same_field(spec, e.spec());
        e.require_square();
        if (e.rows() != n)
            throw SizeMismatchError("idempotent family needs d+1 matrices of size d+1");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix prod = family[i] * family[j];
            if (i == j ? prod != family[i] : !is_zero_matrix(prod))
                throw NotIdempotentFamilyError("orthogonality fails at pair (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (!is_rank_one(family[i]))
            throw NotIdempotentFamilyError("member " + std::to_string(i) + " is not rank one");
    }
    Matrix sum(spec, n, n);
    for (const Matrix& e : family)
        sum = sum + e;
    if (sum != Matrix::identity(spec, n))
        throw NotIdempotentFamilyError("family does not sum to the identity");
    Matrix r(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t col = 0;
        while (col < n) {
            bool nonzero = false;
            for (std::size_t row = 0; row < n; ++row)
                nonzero = nonzero || !family[i].at(row, col).is_zero();
            if (nonzero)
                break;
            ++col;
        }
        if (col == n)
            throw NotIdempotentFamilyError("member " + std::to_string(i) + " is zero");
        for (std::size_t row = 0; row < n; ++row)
            r.at(row, i) = family[i].at(row, col);
    }
    const Matrix rinv = mat_inverse(r);
    for (std::size_t i = 0; i < n; ++i) {
        if (r * Matrix::delta(spec, n, i, i) * rinv != family[i])
            throw InternalCheckError("recovered diagonalizer fails to reproduce the family");
    }
    return r;
}

} // namespace aon
