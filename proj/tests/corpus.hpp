#pragma once

// Shared AO normalized corpus: the diameter-one family over Q with twenty
// parameter values, the full finite-field enumerations in small degree, and
// Kronecker products up to size 8.

#include <cstdint>
#include <utility>
#include <vector>

#include <aon/aon.hpp>

namespace corpus {

using aon::FieldSpec;
using aon::Matrix;
using aon::Scalar;

inline Matrix d1_matrix(const Scalar& k) {
    const FieldSpec& spec = k.spec();
    Matrix p(spec, 2, 2);
    p.at(0, 0) = Scalar::one(spec);
    p.at(0, 1) = k;
    p.at(1, 0) = Scalar::one(spec);
    p.at(1, 1) = -Scalar::one(spec);
    return p;
}

inline std::vector<Scalar> rational_k_values() {
    const FieldSpec q = FieldSpec::rational();
    std::vector<Scalar> out;
    for (const long long v : {2, 3, 5, 7, 10, -2, -3, -5, 4, -4})
        out.push_back(Scalar::of_int(q, v));
    for (const auto& [num, den] :
         std::vector<std::pair<long long, long long>>{
             {1, 2}, {-1, 2}, {3, 2}, {-3, 2}, {2, 3}, {-2, 3}, {5, 2}, {-5, 2}, {1, 3}, {-1, 3}})
        out.push_back(Scalar::of_fraction(q, num, den));
    return out;
}

inline std::vector<Matrix> aon_members(std::size_t d, std::int64_t p) {
    std::vector<Matrix> out;
    for (const aon::CensusEntry& entry : aon::enumerate_census(d, p).normalized_solid)
        if (entry.ao)
            out.push_back(entry.matrix);
    return out;
}

// every corpus member is AO normalized; sizes 1 through 8
inline const std::vector<Matrix>& all_aon() {
    static const std::vector<Matrix> members = [] {
        std::vector<Matrix> out;
        const FieldSpec q = FieldSpec::rational();
        out.push_back(Matrix::identity(q, 1));
        for (const Scalar& k : rational_k_values())
            out.push_back(d1_matrix(k));
        for (const std::int64_t p : {2, 3, 5, 7, 11, 13})
            for (const Matrix& m : aon_members(1, p))
                out.push_back(m);
        for (const std::int64_t p : {2, 3})
            for (const Matrix& m : aon_members(2, p))
                out.push_back(m);
        const Matrix p1 = d1_matrix(Scalar::of_int(q, 1));
        const Matrix p2 = d1_matrix(Scalar::of_int(q, 2));
        const Matrix p3 = d1_matrix(Scalar::of_int(q, 3));
        out.push_back(kron(p1, p2));
        out.push_back(kron(p2, p3));
        out.push_back(kron(kron(p1, p2), p3));
        return out;
    }();
    return members;
}

} // namespace corpus
