#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solid.hpp"
#include "structure_constants.hpp"

namespace aon {

// A pair of families ({E_i}; {E*_i}) of mutually orthogonal rank-one
// idempotents summing to I, with E_0 E*_i E_0 != 0 and E*_0 E_i E*_0 != 0
// for all i. Validity is checked by verify_axioms, not by construction.
struct IdempotentSystem {
    std::vector<Matrix> e;
    std::vector<Matrix> estar;

    const FieldSpec& spec() const { return e.front().spec(); }
    std::size_t d() const { return e.size() - 1; }

    bool operator==(const IdempotentSystem& o) const { return e == o.e && estar == o.estar; }
    bool operator!=(const IdempotentSystem& o) const { return !(*this == o); }
};

struct Multiplicities {
    std::vector<Scalar> m;
    Scalar nu;
};

struct EigendataReport {
    Matrix p;
    Matrix q;
    Scalar nu;
    std::vector<Scalar> k;
    std::vector<Scalar> kstar;
    std::vector<Scalar> m;
    std::vector<Scalar> mstar;
    StructureConstants pnum;
};

namespace detail {

// Named axiom failures for one family pair; empty means the system is
// valid. Shared by verify_axioms and the CLI verifier.
inline std::vector<std::string> axiom_failures(const IdempotentSystem& phi) {
    std::vector<std::string> fails;
    if (phi.e.empty() || phi.e.size() != phi.estar.size()) {
        fails.push_back("families must both have d+1 members");
        return fails;
    }
    const FieldSpec spec = phi.spec();
    const std::size_t n = phi.e.size();
    for (const auto* fam : {&phi.e, &phi.estar}) {
        for (const Matrix& x : *fam) {
            require_same_field(spec, x.spec());
            if (!x.square() || x.rows() != n) {
                fails.push_back("family members must be square of size d+1");
                return fails;
            }
        }
    }
    const auto family_name = [](bool star) { return star ? std::string("E*") : std::string("E"); };
    for (bool star : {false, true}) {
        const std::vector<Matrix>& fam = star ? phi.estar : phi.e;
        for (std::size_t i = 0; i < n && fails.empty(); ++i) {
            for (std::size_t j = 0; j < n && fails.empty(); ++j) {
                const Matrix prod = fam[i] * fam[j];
                if (i == j ? prod != fam[i] : !is_zero_matrix(prod))
                    fails.push_back(family_name(star) + " orthogonality fails at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (fails.empty() && !is_rank_one(fam[i]))
                fails.push_back(family_name(star) + "_" + std::to_string(i) + " is not rank one");
        }
        if (fails.empty()) {
            Matrix sum(spec, n, n);
            for (const Matrix& x : fam)
                sum = sum + x;
            if (sum != Matrix::identity(spec, n))
                fails.push_back(family_name(star) + " family does not sum to I");
        }
    }
    if (!fails.empty())
        return fails;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero_matrix(phi.e[0] * phi.estar[i] * phi.e[0]))
            fails.push_back("E_0 E*_" + std::to_string(i) + " E_0 = 0");
        if (is_zero_matrix(phi.estar[0] * phi.e[i] * phi.estar[0]))
            fails.push_back("E*_0 E_" + std::to_string(i) + " E*_0 = 0");
    }
    return fails;
}

inline bool is_canonical(const IdempotentSystem& phi) {
    const std::size_t n = phi.e.size();
    for (std::size_t i = 0; i < n; ++i)
        if (phi.e[i] != Matrix::delta(phi.spec(), n, i, i))
            return false;
    return true;
}

} // namespace detail

// Phi_R = ({Delta_{i,i}}; {R Delta_{i,i} R^{-1}}), an idempotent system
// exactly when R is solid.
inline IdempotentSystem build_phi_r(const Matrix& r) {
    if (!is_solid(r))
        throw NotSolidError("build_phi_r requires a solid matrix");
    const Matrix rinv = mat_inverse(r);
    const FieldSpec& spec = r.spec();
    const std::size_t n = r.rows();
    IdempotentSystem phi;
    for (std::size_t i = 0; i < n; ++i) {
        phi.e.push_back(Matrix::delta(spec, n, i, i));
        phi.estar.push_back(r * Matrix::delta(spec, n, i, i) * rinv);
    }
    // Entry criteria: E_0 E*_i E_0 != 0 iff R_{0,i} != 0 and (R^-1)_{i,0} != 0,
    // and dually. Cross-checked against the direct products.
    for (std::size_t i = 0; i < n; ++i) {
        const bool third = !is_zero_matrix(phi.e[0] * phi.estar[i] * phi.e[0]);
        const bool third_entry = !r.at(0, i).is_zero() && !rinv.at(i, 0).is_zero();
        const bool fourth = !is_zero_matrix(phi.estar[0] * phi.e[i] * phi.estar[0]);
        const bool fourth_entry = !r.at(i, 0).is_zero() && !rinv.at(0, i).is_zero();
        if (third != third_entry || fourth != fourth_entry)
            throw InternalCheckError("entry criteria disagree with direct products");
    }
    return phi;
}

// True iff both families satisfy the orthogonality axioms and the
// nondegeneracy conditions hold. On canonical systems the nondegeneracy
// conditions are additionally cross-checked against the entry criteria of
// the recovered diagonalizer.
inline bool verify_axioms(const IdempotentSystem& phi) {
    if (!detail::axiom_failures(phi).empty())
        return false;
    if (detail::is_canonical(phi)) {
        const Matrix r = recover_diagonalizer(phi.estar);
        const Matrix rinv = mat_inverse(r);
        for (std::size_t i = 0; i < phi.e.size(); ++i) {
            if (r.at(0, i).is_zero() || rinv.at(i, 0).is_zero() || r.at(i, 0).is_zero() ||
                rinv.at(0, i).is_zero())
                return false;
        }
    }
    return true;
}

inline IdempotentSystem dual_system(const IdempotentSystem& phi) {
    return IdempotentSystem{phi.estar, phi.e};
}

// Conjugates the system so that E_i = Delta_{i,i}; an isomorphism of
// systems, so all eigendata is unchanged.
inline IdempotentSystem canonicalize(const IdempotentSystem& phi) {
    if (detail::is_canonical(phi))
        return phi;
    const Matrix r0 = recover_diagonalizer(phi.e);
    const Matrix r0inv = mat_inverse(r0);
    IdempotentSystem out;
    for (std::size_t i = 0; i < phi.e.size(); ++i) {
        out.e.push_back(r0inv * phi.e[i] * r0);
        out.estar.push_back(r0inv * phi.estar[i] * r0);
    }
    if (!detail::is_canonical(out))
        throw InternalCheckError("canonicalize failed to reach canonical form");
    return out;
}

// m_i = tr(E*_0 E_i) and nu = 1/m_0. The facts m_i != 0 and sum m_i = 1
// are asserted; their failure signals invalid input.
inline Multiplicities multiplicities(const IdempotentSystem& phi) {
    const FieldSpec& spec = phi.spec();
    std::vector<Scalar> m;
    Scalar sum = Scalar::zero(spec);
    for (std::size_t i = 0; i < phi.e.size(); ++i) {
        m.push_back(trace(phi.estar[0] * phi.e[i]));
        if (m.back().is_zero())
            throw DegenerateSystemError("multiplicity m_" + std::to_string(i) + " vanishes");
        sum = sum + m.back();
    }
    if (sum != Scalar::one(spec))
        throw DegenerateSystemError("multiplicities do not sum to 1");
    Scalar nu = m[0].inverse();
    return Multiplicities{std::move(m), std::move(nu)};
}

// For each i, the unique A_i in span{E_j} with A_i (E*_0 E_0) = E*_i E_0,
// solved as an exact linear system in the d+1 coefficients. A_0 = I is
// asserted. Requires a symmetric system for the downstream theory; the
// solve itself reports NoSolution/NonUnique when the input is degenerate.
inline std::vector<Matrix> compute_a_basis(const IdempotentSystem& phi) {
    const FieldSpec& spec = phi.spec();
    const std::size_t n = phi.e.size();
    const Matrix target_core = phi.estar[0] * phi.e[0];
    Matrix coeff(spec, n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Matrix mj = phi.e[j] * target_core;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                coeff.at(a * n + b, j) = mj.at(a, b);
    }
    Matrix rhs(spec, n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix ti = phi.estar[i] * phi.e[0];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                rhs.at(a * n + b, i) = ti.at(a, b);
    }
    const Matrix x = solve_unique(coeff, rhs);
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ai(spec, n, n);
        for (std::size_t j = 0; j < n; ++j)
            ai = ai + scale(x.at(j, i), phi.e[j]);
        basis.push_back(std::move(ai));
    }
    if (basis[0] != Matrix::identity(spec, n))
        throw InternalCheckError("A_0 is not the identity");
    return basis;
}

// The diagonal K of the antiautomorphism A -> K A^t K^{-1} that fixes every
// idempotent of the canonical form, or absent when the system is not
// symmetric. The witness refers to the canonical form of phi.
inline std::optional<Matrix> symmetry_witness(const IdempotentSystem& phi) {
    const IdempotentSystem canonical = canonicalize(phi);
    const Matrix r = recover_diagonalizer(canonical.estar);
    const auto w = check_ao(r);
    if (!w)
        return std::nullopt;
    const Matrix k = w->k_matrix();
    const Matrix kinv = mat_inverse(k);
    for (const auto* fam : {&canonical.e, &canonical.estar})
        for (const Matrix& x : *fam)
            if (k * transpose(x) * kinv != x)
                throw InternalCheckError("symmetry witness fails to fix an idempotent");
    return k;
}

namespace detail {

// First eigenmatrix of a canonical system: P_{i,j} is the coefficient of
// E_i = Delta_{i,i} in A_j, read off the diagonal of A_j.
inline Matrix first_eigenmatrix(const IdempotentSystem& canonical) {
    const std::vector<Matrix> basis = compute_a_basis(canonical);
    const std::size_t n = basis.size();
    Matrix p(canonical.spec(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_diagonal(basis[j]))
            throw InternalCheckError("A-basis member is not diagonal in canonical form");
        for (std::size_t i = 0; i < n; ++i)
            p.at(i, j) = basis[j].at(i, i);
    }
    return p;
}

inline void verify_eigendata(const EigendataReport& rep, const std::vector<Matrix>& a_basis,
                             const std::vector<Matrix>& e_family) {
    const FieldSpec& spec = rep.nu.spec();
    const std::size_t n = rep.k.size();
    const Scalar one = Scalar::one(spec);
    const Matrix pinv = mat_inverse(rep.p);
    const Scalar nu_inv = rep.nu.inverse();
    for (std::size_t i = 0; i < n; ++i) {
        if (rep.p.at(i, 0) != one || pinv.at(i, 0) != nu_inv)
            throw InternalCheckError("eigenmatrix border fails P_{i,0} = 1 or (P^-1)_{i,0} = 1/nu");
        if (rep.p.at(0, i) != rep.k[i] || pinv.at(0, i) != nu_inv * rep.kstar[i])
            throw InternalCheckError("eigenmatrix border fails P_{0,j} = k_j or its dual");
    }
    if (rep.p * rep.q != scale(rep.nu, Matrix::identity(spec, n)))
        throw InternalCheckError("P Q = nu I fails");
    if (transpose(rep.p) * Matrix::diagonal(rep.kstar) != Matrix::diagonal(rep.k) * rep.q)
        throw InternalCheckError("P^t K* = K Q fails");
    Scalar ksum = Scalar::zero(spec), kstarsum = Scalar::zero(spec);
    for (std::size_t i = 0; i < n; ++i) {
        ksum = ksum + rep.k[i];
        kstarsum = kstarsum + rep.kstar[i];
    }
    if (rep.k[0] != one || rep.kstar[0] != one || ksum != rep.nu || kstarsum != rep.nu)
        throw InternalCheckError("valency normalization fails");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar expect0 = (i == j) ? rep.k[i] : Scalar::zero(spec);
            if (rep.pnum.at(i, j, 0) != expect0)
                throw InternalCheckError("p0_{ij} = delta_{ij} k_i fails");
            Scalar hom = Scalar::zero(spec);
            for (std::size_t h = 0; h < n; ++h)
                hom = hom + rep.pnum.at(i, j, h) * rep.k[h];
            if (hom != rep.k[i] * rep.k[j])
                throw InternalCheckError("k_i k_j = sum_h p^h_{ij} k_h fails");
            // residual of A_i A_j = sum_h p^h_{ij} A_h
            Matrix rhs(spec, e_family.size(), e_family.size());
            for (std::size_t h = 0; h < n; ++h)
                rhs = rhs + scale(rep.pnum.at(i, j, h), a_basis[h]);
            if (a_basis[i] * a_basis[j] != rhs)
                throw InternalCheckError("A_i A_j expansion in the A-basis fails");
        }
    }
}

} // namespace detail

// The full eigenmatrix machinery of a symmetric system: first and second
// eigenmatrices, nu, valencies, multiplicities and intersection numbers.
// The system is reduced to canonical form first; non-symmetric systems are
// rejected because their computed eigenmatrix fails the AO check.
inline EigendataReport eigendata(const IdempotentSystem& phi) {
    const IdempotentSystem canonical = canonicalize(phi);
    const FieldSpec& spec = canonical.spec();
    const std::size_t n = canonical.e.size();

    const Multiplicities mult = multiplicities(canonical);
    const std::vector<Matrix> a_basis = compute_a_basis(canonical);
    Matrix p(spec, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            p.at(i, j) = a_basis[j].at(i, i);
    if (!is_normalized(p) || !check_ao(p))
        throw NotSymmetricError("system is not symmetric: eigenmatrix fails the AO check");

    const IdempotentSystem dual_canonical = canonicalize(dual_system(canonical));
    const Multiplicities mult_dual = multiplicities(dual_canonical);
    const Matrix q = detail::first_eigenmatrix(dual_canonical);

    std::vector<Scalar> k, kstar;
    const Scalar nu = mult.m[0].inverse();
    for (std::size_t i = 0; i < n; ++i) {
        k.push_back(nu * mult_dual.m[i]);
        kstar.push_back(nu * mult.m[i]);
    }

    const Matrix pinv = mat_inverse(p);
    StructureConstants pnum(spec, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t h = 0; h < n; ++h) {
                Scalar sum = Scalar::zero(spec);
                for (std::size_t r = 0; r < n; ++r)
                    sum = sum + pinv.at(h, r) * p.at(r, i) * p.at(r, j);
                pnum.at(i, j, h) = sum;
            }

    EigendataReport rep{std::move(p),      q,      nu,          std::move(k),
                        std::move(kstar),  mult.m, mult_dual.m, std::move(pnum)};
    detail::verify_eigendata(rep, a_basis, canonical.e);
    return rep;
}

} // namespace aon
