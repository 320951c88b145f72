#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "solid.hpp"

namespace aon {

struct CensusEntry {
    Matrix matrix;
    bool ao;
};

struct CensusResult {
    FieldSpec spec;
    std::size_t d;
    Int candidates;
    std::vector<CensusEntry> normalized_solid;
    std::size_t aon_count;
};

// Brute-force census of Mat_{d+1}(F_p) restricted to first column all ones:
// every normalized solid invertible matrix, with the AO subset flagged.
// The (d+1)d free entries run through a base-p odometer in row-major
// lexicographic order, so the output order is deterministic.
inline CensusResult enumerate_census(std::size_t d, std::int64_t p,
                                     const Int& budget = Int(10000000)) {
    const FieldSpec spec = FieldSpec::prime(p);
    const std::size_t n = d + 1;
    const std::size_t free_entries = n * d;
    Int candidates = 1;
    for (std::size_t i = 0; i < free_entries; ++i) {
        candidates *= p;
        if (candidates > budget)
            throw BudgetExceededError("candidate space exceeds the enumeration budget");
    }
    CensusResult result{spec, d, candidates, {}, 0};
    std::vector<std::int64_t> digits(free_entries, 0);
    while (true) {
        Matrix m(spec, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, 0) = Scalar::one(spec);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                m.at(i, j) = Scalar::of_int(spec, digits[pos++]);
        if (is_normalized(m)) {
            const bool ao = is_aon(m);
            result.aon_count += ao ? 1 : 0;
            result.normalized_solid.push_back(CensusEntry{std::move(m), ao});
        }
        std::size_t carry = free_entries;
        while (carry > 0 && digits[carry - 1] == p - 1)
            digits[--carry] = 0;
        if (carry == 0)
            break;
        ++digits[carry - 1];
    }
    return result;
}

} // namespace aon
