#pragma once

#include <cstddef>
#include <vector>

#include "field.hpp"

namespace aon {

// The (d+1)^3 tensor of structure constants p^h_{ij}, indexed [i][j][h]:
// x_i x_j = sum_h p^h_{ij} x_h.
class StructureConstants {
public:
    StructureConstants(const FieldSpec& spec, std::size_t n)
        : spec_(spec), n_(n), a_(n * n * n, Scalar::zero(spec)) {}

    const FieldSpec& spec() const { return spec_; }
    std::size_t n() const { return n_; }
    std::size_t d() const { return n_ - 1; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t h) { return a_[(i * n_ + j) * n_ + h]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t h) const {
        return a_[(i * n_ + j) * n_ + h];
    }

    bool operator==(const StructureConstants& o) const {
        require_same_field(spec_, o.spec_);
        if (n_ != o.n_)
            return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i])
                return false;
        return true;
    }

    bool operator!=(const StructureConstants& o) const { return !(*this == o); }

private:
    FieldSpec spec_;
    std::size_t n_;
    std::vector<Scalar> a_;
};

} // namespace aon
