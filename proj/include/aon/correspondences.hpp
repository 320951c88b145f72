#pragma once

#include <variant>

#include "character_system.hpp"
#include "errors.hpp"
#include "idempotent_system.hpp"
#include "matrix.hpp"
#include "solid.hpp"

namespace aon {

// Character system attached to a symmetric idempotent system: same
// intersection numbers, eigenmatrix equal to the first eigenmatrix.
inline CharacterSystem psi_of_phi(const IdempotentSystem& phi) {
    EigendataReport rep = eigendata(phi);
    CharacterSystem sys{CharacterAlgebra{std::move(rep.pnum), std::move(rep.k)},
                        std::move(rep.p)};
    if (!verify_character_system(sys))
        throw InternalCheckError("eigendata of a symmetric system is not a character system");
    return sys;
}

// Idempotent system realizing a character system inside End(C), written in
// the e basis: E_i = Delta_{i,i} and E*_i = P Delta_{i,i} P^{-1}.
inline IdempotentSystem phi_of_psi(const CharacterSystem& sys) {
    const Matrix p = eigenmatrix(sys);
    IdempotentSystem phi = build_phi_r(p);
    if (eigendata(phi).p != p)
        throw InternalCheckError("realized system does not reproduce the eigenmatrix");
    return phi;
}

// P -> nu P^{-1} with 1/nu the (0,0) entry of P^{-1}; an involution on the
// AO normalized matrices.
inline Matrix dual_aon(const Matrix& p) {
    p.require_square();
    if (!is_normalized(p) || !check_ao(p))
        throw NotAONError("matrix is not AO normalized");
    const Matrix pinv = mat_inverse(p);
    const Scalar nu = pinv.at(0, 0).inverse();
    Matrix dual = scale(nu, pinv);
    if (!is_normalized(dual) || !check_ao(dual))
        throw InternalCheckError("dual of an AO normalized matrix is not AO normalized");
    const Matrix dinv = mat_inverse(dual);
    if (scale(dinv.at(0, 0).inverse(), dinv) != p)
        throw InternalCheckError("duality fails to be an involution");
    return dual;
}

// Swap the two idempotent families, then return the canonical representative.
inline IdempotentSystem dual_sis(const IdempotentSystem& phi) {
    if (!symmetry_witness(phi))
        throw NotSymmetricError("system is not symmetric");
    IdempotentSystem dual = canonicalize(dual_system(phi));
    if (eigendata(dual).p != dual_aon(eigendata(phi).p))
        throw InternalCheckError("dual system eigenmatrix disagrees with matrix duality");
    return dual;
}

// Character system dual: transport through dual_aon on the eigenmatrix.
// The two eigenmatrices multiply to nu I, the defining property of duality.
inline CharacterSystem dual_cs(const CharacterSystem& sys) {
    const Matrix p = eigenmatrix(sys);
    CharacterSystem dual = build_psi_p(dual_aon(p));
    const Matrix prod = p * dual.p;
    const Scalar nu = prod.at(0, 0);
    if (nu.is_zero() || prod != scale(nu, Matrix::identity(p.spec(), p.rows())))
        throw InternalCheckError("product of dual eigenmatrices is not a scalar matrix");
    return dual;
}

enum class SystemKind { aon, sis, cs };

inline const char* kind_name(SystemKind k) {
    switch (k) {
    case SystemKind::aon:
        return "aon";
    case SystemKind::sis:
        return "sis";
    default:
        return "cs";
    }
}

struct CorrespondenceReport {
    SystemKind source;
    SystemKind target;
    std::variant<Matrix, IdempotentSystem, CharacterSystem> image;
    bool roundtrip_equal;
};

namespace detail {

inline void require_aon(const Matrix& p) {
    p.require_square();
    if (!is_normalized(p) || !check_ao(p))
        throw NotAONError("matrix is not AO normalized");
}

} // namespace detail

inline CorrespondenceReport correspond_aon_sis(const Matrix& p) {
    detail::require_aon(p);
    IdempotentSystem image = build_phi_r(p);
    const bool equal = eigendata(image).p == p;
    return CorrespondenceReport{SystemKind::aon, SystemKind::sis, std::move(image), equal};
}

inline CorrespondenceReport correspond_aon_cs(const Matrix& p) {
    detail::require_aon(p);
    CharacterSystem image = build_psi_p(p);
    const bool equal = eigenmatrix(image) == p;
    return CorrespondenceReport{SystemKind::aon, SystemKind::cs, std::move(image), equal};
}

inline CorrespondenceReport correspond_sis_aon(const IdempotentSystem& phi) {
    Matrix image = eigendata(phi).p;
    const bool equal = eigendata(build_phi_r(image)).p == image;
    return CorrespondenceReport{SystemKind::sis, SystemKind::aon, std::move(image), equal};
}

inline CorrespondenceReport correspond_sis_cs(const IdempotentSystem& phi) {
    CharacterSystem image = psi_of_phi(phi);
    const bool equal = eigendata(phi_of_psi(image)).p == eigendata(phi).p;
    return CorrespondenceReport{SystemKind::sis, SystemKind::cs, std::move(image), equal};
}

inline CorrespondenceReport correspond_cs_aon(const CharacterSystem& sys) {
    Matrix image = eigenmatrix(sys);
    const bool equal = build_psi_p(image) == sys;
    return CorrespondenceReport{SystemKind::cs, SystemKind::aon, std::move(image), equal};
}

inline CorrespondenceReport correspond_cs_sis(const CharacterSystem& sys) {
    IdempotentSystem image = phi_of_psi(sys);
    const bool equal = psi_of_phi(image) == sys;
    return CorrespondenceReport{SystemKind::cs, SystemKind::sis, std::move(image), equal};
}

} // namespace aon
