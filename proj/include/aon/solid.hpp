#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace aon {

// Invertible diagonal pair (H, K) witnessing S = H R K. Stored as the
// diagonals; every entry is nonzero.
struct DiagonalWitness {
    std::vector<Scalar> h;
    std::vector<Scalar> k;

    Matrix h_matrix() const { return Matrix::diagonal(h); }
    Matrix k_matrix() const { return Matrix::diagonal(k); }
};

struct ClassificationReport {
    bool invertible = false;
    bool solid = false;
    bool normalized = false;
    bool ao = false;
    std::optional<DiagonalWitness> ao_witness;
};

namespace detail {

inline bool border_nonzero(const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(0, j).is_zero())
            return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, 0).is_zero())
            return false;
    return true;
}

inline bool column0_all_ones(const Matrix& m) {
    const Scalar one = Scalar::one(m.spec());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, 0) != one)
            return false;
    return true;
}

inline bool column0_constant(const Matrix& m) {
    for (std::size_t i = 1; i < m.rows(); ++i)
        if (m.at(i, 0) != m.at(0, 0))
            return false;
    return true;
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
    if (!m.square() || rank(m) != m.rows())
        return std::nullopt;
    return mat_inverse(m);
}

} // namespace detail

// Solid: invertible with every entry of row 0 and column 0 of both R and
// R^{-1} nonzero. Non-invertible input returns false by contract.
inline bool is_solid(const Matrix& r) {
    r.require_square();
    const auto rinv = detail::try_inverse(r);
    if (!rinv)
        return false;
    return detail::border_nonzero(r) && detail::border_nonzero(*rinv);
}

// Finds invertible diagonal H, K with s = H r K, if any exist. The zero
// patterns must match; then each constraint h_i k_j = s_{ij}/r_{ij} is an
// edge of a bipartite graph on row and column nodes. Per connected
// component the lowest-index node is anchored to 1 and the rest follows by
// propagation; every edge is re-checked, and the witness is verified by an
// exact multiplication before it is returned.
inline std::optional<DiagonalWitness> diagonal_equivalence(const Matrix& r, const Matrix& s) {
    require_same_field(r.spec(), s.spec());
    if (r.rows() != s.rows() || r.cols() != s.cols())
        throw SizeMismatchError("diagonal_equivalence shape mismatch");
    const FieldSpec& spec = r.spec();
    const std::size_t nr = r.rows(), nc = r.cols();
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            if (r.at(i, j).is_zero() != s.at(i, j).is_zero())
                return std::nullopt;

    // nodes 0..nr-1 are rows, nr..nr+nc-1 are columns
    struct Edge {
        std::size_t row, col;
        Scalar ratio;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> adj(nr + nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            if (r.at(i, j).is_zero())
                continue;
            adj[i].push_back(edges.size());
            adj[nr + j].push_back(edges.size());
            edges.push_back(Edge{i, j, s.at(i, j) / r.at(i, j)});
        }
    }

    std::vector<std::optional<Scalar>> mult(nr + nc);
    for (std::size_t root = 0; root < nr + nc; ++root) {
        if (mult[root])
            continue;
        mult[root] = Scalar::one(spec);
        std::vector<std::size_t> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::size_t node = queue[qi];
            for (std::size_t ei : adj[node]) {
                const Edge& e = edges[ei];
                const std::size_t other = (node < nr) ? nr + e.col : e.row;
                if (mult[other])
                    continue;
                mult[other] = e.ratio / *mult[node];
                queue.push_back(other);
            }
        }
    }
    for (const Edge& e : edges)
        if (*mult[e.row] * *mult[nr + e.col] != e.ratio)
            return std::nullopt;

    DiagonalWitness w;
    for (std::size_t i = 0; i < nr; ++i)
        w.h.push_back(*mult[i]);
    for (std::size_t j = 0; j < nc; ++j)
        w.k.push_back(*mult[nr + j]);
    if (w.h_matrix() * r * w.k_matrix() != s)
        throw InternalCheckError("diagonal equivalence witness failed verification");
    return w;
}

// Normalized: solid, column 0 of R all ones, column 0 of R^{-1} constant.
inline bool is_normalized(const Matrix& r) {
    r.require_square();
    const auto rinv = detail::try_inverse(r);
    if (!rinv)
        return false;
    return detail::border_nonzero(r) && detail::border_nonzero(*rinv) &&
           detail::column0_all_ones(r) && detail::column0_constant(*rinv);
}

// The unique normalized matrix diagonally equivalent to r, with the free
// parameter K_{0,0} fixed to 1: H_{r,r} = 1/R_{r,0}, K_{r,r} =
// (R^{-1})_{r,0}/(R^{-1})_{0,0}.
inline Matrix normalize(const Matrix& r) {
    if (!is_solid(r))
        throw NotSolidError("normalize requires a solid matrix");
    const Matrix rinv = mat_inverse(r);
    std::vector<Scalar> h, k;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        h.push_back(r.at(i, 0).inverse());
        k.push_back(rinv.at(i, 0) / rinv.at(0, 0));
    }
    Matrix out = Matrix::diagonal(h) * r * Matrix::diagonal(k);
    if (!is_normalized(out))
        throw InternalCheckError("normalize produced a non-normalized matrix");
    return out;
}

// AO (almost orthogonal): R^t diagonally equivalent to R^{-1}. The witness
// satisfies r^t = H r^{-1} K.
inline std::optional<DiagonalWitness> check_ao(const Matrix& r) {
    return diagonal_equivalence(mat_inverse(r), transpose(r));
}

inline bool is_aon(const Matrix& r) {
    if (!is_normalized(r))
        return false;
    return check_ao(r).has_value();
}

inline ClassificationReport classify(const Matrix& r) {
    r.require_square();
    ClassificationReport rep;
    const auto rinv = detail::try_inverse(r);
    if (!rinv)
        return rep;
    rep.invertible = true;
    rep.solid = detail::border_nonzero(r) && detail::border_nonzero(*rinv);
    rep.normalized = rep.solid && detail::column0_all_ones(r) && detail::column0_constant(*rinv);
    rep.ao_witness = diagonal_equivalence(*rinv, transpose(r));
    rep.ao = rep.ao_witness.has_value();
    return rep;
}

} // namespace aon
