#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "census.hpp"
#include "character_system.hpp"
#include "correspondences.hpp"
#include "errors.hpp"
#include "idempotent_system.hpp"
#include "matrix.hpp"
#include "solid.hpp"

namespace aon {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (c.status == CheckStatus::fail)
                return false;
        return true;
    }
};

namespace detail {

// A check body returns a failure message, or nothing on success; thrown
// domain errors are folded into a failure with the message attached.
inline void run_check(VerifyReport& rep, const std::string& name,
                      const std::function<std::optional<std::string>()>& body) {
    try {
        const std::optional<std::string> failure = body();
        rep.checks.push_back(
            {name, failure ? CheckStatus::fail : CheckStatus::pass, failure.value_or("")});
    } catch (const Error& e) {
        rep.checks.push_back({name, CheckStatus::fail, e.what()});
    }
}

inline void skip_check(VerifyReport& rep, const std::string& name, const std::string& why) {
    rep.checks.push_back({name, CheckStatus::skipped, why});
}

inline Scalar random_nonzero(const FieldSpec& spec, std::mt19937& rng) {
    if (spec.is_prime()) {
        std::uniform_int_distribution<std::int64_t> dist(1, spec.modulus() - 1);
        return Scalar::of_int(spec, dist(rng));
    }
    std::uniform_int_distribution<int> dist(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    return Scalar::of_int(spec, dist(rng) * (sign(rng) ? 1 : -1));
}

inline Matrix random_invertible_diagonal(const FieldSpec& spec, std::size_t n,
                                         std::mt19937& rng) {
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back(random_nonzero(spec, rng));
    return Matrix::diagonal(entries);
}

inline Matrix random_matrix(const FieldSpec& spec, std::size_t n, std::mt19937& rng) {
    Matrix m(spec, n, n);
    std::uniform_int_distribution<std::int64_t> prime_dist(
        0, spec.is_prime() ? spec.modulus() - 1 : 0);
    std::uniform_int_distribution<int> rat_dist(-5, 5);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = spec.is_prime() ? Scalar::of_int(spec, prime_dist(rng))
                                         : Scalar::of_int(spec, rat_dist(rng));
    return m;
}

} // namespace detail

// Every property suite applicable to the given matrix: solidity, system
// axioms, normalization, then (when the matrix is AO) the whole symmetric
// battery of eigenmatrix, duality, roundtrip and bilinear-form identities.
// Checks that do not apply are reported skipped, not failed.
inline VerifyReport run_matrix_suite(const Matrix& r) {
    r.require_square();
    const FieldSpec& spec = r.spec();
    const std::size_t n = r.rows();
    const Scalar zero = Scalar::zero(spec);
    const Scalar one = Scalar::one(spec);
    VerifyReport rep;

    static const std::vector<std::string> symmetric_checks = {
        "symmetry witness fixes every idempotent",
        "antiautomorphism squares to the identity",
        "eigenmatrix borders are ones and valencies",
        "first and second eigenmatrix multiply to nu I",
        "transpose identity P^t K* = K Q",
        "k_0 and k*_0 are 1",
        "nu equals both valency sums",
        "multiplicities sum to 1",
        "intersection numbers have constant term delta_ij k_i",
        "valency map is a homomorphism on intersection numbers",
        "character axioms hold for the attached algebra",
        "matrix to character system roundtrip is exact",
        "matrix to idempotent system roundtrip is exact",
        "system correspondence preserves eigenmatrices",
        "duality is an involution",
        "eigenmatrix times dual eigenmatrix is nu I",
        "duality commutes with the character correspondence",
        "duality commutes with the system correspondence",
        "bilinear form identities hold",
        "semisimple decomposition reproduces the eigenmatrix",
    };
    auto skip_symmetric = [&](const std::string& why) {
        for (const std::string& name : symmetric_checks)
            detail::skip_check(rep, name, why);
    };

    const bool invertible = is_invertible(r);
    rep.checks.push_back({"matrix is invertible",
                          invertible ? CheckStatus::pass : CheckStatus::fail,
                          invertible ? "" : "no inverse over the field"});
    if (!invertible) {
        detail::skip_check(rep, "matrix is solid", "matrix is singular");
        detail::skip_check(rep, "attached idempotent system satisfies the axioms",
                           "matrix is singular");
        detail::skip_check(rep, "normalized form is the unique normalized representative",
                           "matrix is singular");
        detail::skip_check(rep, "matrix is AO", "matrix is singular");
        skip_symmetric("matrix is singular");
        return rep;
    }

    const bool solid = is_solid(r);
    rep.checks.push_back({"matrix is solid", solid ? CheckStatus::pass : CheckStatus::fail,
                          solid ? "" : "a border entry of the matrix or its inverse is zero"});
    if (!solid) {
        detail::skip_check(rep, "attached idempotent system satisfies the axioms",
                           "matrix is not solid");
        detail::skip_check(rep, "normalized form is the unique normalized representative",
                           "matrix is not solid");
        detail::skip_check(rep, "matrix is AO", "matrix is not solid");
        skip_symmetric("matrix is not solid");
        return rep;
    }

    detail::run_check(rep, "attached idempotent system satisfies the axioms",
                      [&]() -> std::optional<std::string> {
                          if (!verify_axioms(build_phi_r(r)))
                              return "axiom check failed";
                          return std::nullopt;
                      });

    detail::run_check(rep, "normalized form is the unique normalized representative",
                      [&]() -> std::optional<std::string> {
                          const Matrix p = normalize(r);
                          if (!is_normalized(p))
                              return "normalize(R) is not normalized";
                          if (normalize(p) != p)
                              return "normalize is not idempotent";
                          std::mt19937 rng(2026);
                          for (int trial = 0; trial < 4; ++trial) {
                              const Matrix h = detail::random_invertible_diagonal(spec, n, rng);
                              const Matrix k = detail::random_invertible_diagonal(spec, n, rng);
                              if (normalize(h * r * k) != p)
                                  return "normalize is not constant on the diagonal class";
                          }
                          return std::nullopt;
                      });

    // AO selects the profile rather than acting as an invariant: a solid
    // matrix that is not AO is a valid input whose symmetric battery simply
    // does not apply, so the remaining checks are skipped, not failed.
    const std::optional<DiagonalWitness> ao = check_ao(r);
    rep.checks.push_back({"matrix is AO", ao ? CheckStatus::pass : CheckStatus::skipped,
                          ao ? "" : "transpose is not diagonally equivalent to the inverse"});
    if (!ao) {
        skip_symmetric("not AO");
        return rep;
    }

    const IdempotentSystem phi = build_phi_r(r);
    std::optional<EigendataReport> ed;
    std::string ed_failure;
    try {
        ed = eigendata(phi);
    } catch (const Error& e) {
        ed_failure = e.what();
    }

    detail::run_check(rep, "symmetry witness fixes every idempotent",
                      [&]() -> std::optional<std::string> {
                          const auto witness = symmetry_witness(phi);
                          if (!witness)
                              return "no witness for an AO matrix";
                          const IdempotentSystem canonical = canonicalize(phi);
                          const Matrix kinv = mat_inverse(*witness);
                          for (const auto* family : {&canonical.e, &canonical.estar})
                              for (const Matrix& x : *family)
                                  if (*witness * transpose(x) * kinv != x)
                                      return "witness moves an idempotent";
                          return std::nullopt;
                      });

    detail::run_check(rep, "antiautomorphism squares to the identity",
                      [&]() -> std::optional<std::string> {
                          const auto witness = symmetry_witness(phi);
                          if (!witness)
                              return "no witness for an AO matrix";
                          const Matrix kinv = mat_inverse(*witness);
                          std::mt19937 rng(2027);
                          for (int trial = 0; trial < 100; ++trial) {
                              const Matrix a = detail::random_matrix(spec, n, rng);
                              const Matrix once = *witness * transpose(a) * kinv;
                              if (*witness * transpose(once) * kinv != a)
                                  return "applying the antiautomorphism twice moved a matrix";
                          }
                          return std::nullopt;
                      });

    auto with_eigendata =
        [&](const std::string& name,
            const std::function<std::optional<std::string>(const EigendataReport&)>& body) {
            if (!ed) {
                rep.checks.push_back({name, CheckStatus::fail, ed_failure});
                return;
            }
            detail::run_check(rep, name, [&]() { return body(*ed); });
        };

    with_eigendata("eigenmatrix borders are ones and valencies",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       for (std::size_t i = 0; i < n; ++i) {
                           if (e.p.at(i, 0) != one || e.q.at(i, 0) != one)
                               return "column 0 is not all ones";
                           if (e.p.at(0, i) != e.k[i])
                               return "row 0 of P does not list k";
                           if (e.q.at(0, i) != e.kstar[i])
                               return "row 0 of Q does not list k*";
                       }
                       return std::nullopt;
                   });

    with_eigendata("first and second eigenmatrix multiply to nu I",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       if (e.p * e.q != scale(e.nu, Matrix::identity(spec, n)))
                           return "PQ differs from nu I";
                       return std::nullopt;
                   });

    with_eigendata("transpose identity P^t K* = K Q",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       const Matrix kdiag = Matrix::diagonal(e.k);
                       const Matrix kstardiag = Matrix::diagonal(e.kstar);
                       if (transpose(e.p) * kstardiag != kdiag * e.q)
                           return "identity fails";
                       return std::nullopt;
                   });

    with_eigendata("k_0 and k*_0 are 1",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       if (e.k[0] != one || e.kstar[0] != one)
                           return "a valency sequence does not start at 1";
                       return std::nullopt;
                   });

    with_eigendata("nu equals both valency sums",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       Scalar sk = zero;
                       Scalar sks = zero;
                       for (std::size_t i = 0; i < n; ++i) {
                           sk = sk + e.k[i];
                           sks = sks + e.kstar[i];
                       }
                       if (sk != e.nu || sks != e.nu)
                           return "a valency sum differs from nu";
                       return std::nullopt;
                   });

    with_eigendata("multiplicities sum to 1",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       Scalar sm = zero;
                       Scalar sms = zero;
                       for (std::size_t i = 0; i < n; ++i) {
                           sm = sm + e.m[i];
                           sms = sms + e.mstar[i];
                       }
                       if (sm != one || sms != one)
                           return "a multiplicity sum differs from 1";
                       return std::nullopt;
                   });

    with_eigendata("intersection numbers have constant term delta_ij k_i",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       for (std::size_t i = 0; i < n; ++i)
                           for (std::size_t j = 0; j < n; ++j)
                               if (e.pnum.at(i, j, 0) != (i == j ? e.k[i] : zero))
                                   return "constant term mismatch";
                       return std::nullopt;
                   });

    with_eigendata("valency map is a homomorphism on intersection numbers",
                   [&](const EigendataReport& e) -> std::optional<std::string> {
                       for (std::size_t i = 0; i < n; ++i)
                           for (std::size_t j = 0; j < n; ++j) {
                               Scalar acc = zero;
                               for (std::size_t h = 0; h < n; ++h)
                                   acc = acc + e.pnum.at(i, j, h) * e.k[h];
                               if (acc != e.k[i] * e.k[j])
                                   return "homomorphism identity fails";
                           }
                       return std::nullopt;
                   });

    const Matrix p_norm = normalize(r);

    detail::run_check(rep, "character axioms hold for the attached algebra",
                      [&]() -> std::optional<std::string> {
                          if (!verify_character_axioms(build_psi_p(p_norm).algebra))
                              return "axiom check failed";
                          return std::nullopt;
                      });

    detail::run_check(rep, "matrix to character system roundtrip is exact",
                      [&]() -> std::optional<std::string> {
                          if (eigenmatrix(build_psi_p(p_norm)) != p_norm)
                              return "eigenmatrix differs after the roundtrip";
                          return std::nullopt;
                      });

    detail::run_check(rep, "matrix to idempotent system roundtrip is exact",
                      [&]() -> std::optional<std::string> {
                          if (eigendata(build_phi_r(p_norm)).p != p_norm)
                              return "first eigenmatrix differs after the roundtrip";
                          return std::nullopt;
                      });

    detail::run_check(rep, "system correspondence preserves eigenmatrices",
                      [&]() -> std::optional<std::string> {
                          if (!correspond_sis_cs(phi).roundtrip_equal)
                              return "idempotent to character roundtrip moved the eigenmatrix";
                          if (!correspond_cs_sis(build_psi_p(p_norm)).roundtrip_equal)
                              return "character to idempotent roundtrip moved the system";
                          return std::nullopt;
                      });

    detail::run_check(rep, "duality is an involution",
                      [&]() -> std::optional<std::string> {
                          if (dual_aon(dual_aon(p_norm)) != p_norm)
                              return "double dual differs";
                          return std::nullopt;
                      });

    detail::run_check(rep, "eigenmatrix times dual eigenmatrix is nu I",
                      [&]() -> std::optional<std::string> {
                          const Matrix prod = p_norm * dual_aon(p_norm);
                          if (!ed)
                              return ed_failure;
                          if (prod != scale(ed->nu, Matrix::identity(spec, n)))
                              return "product differs from nu I";
                          return std::nullopt;
                      });

    detail::run_check(rep, "duality commutes with the character correspondence",
                      [&]() -> std::optional<std::string> {
                          if (eigenmatrix(dual_cs(build_psi_p(p_norm))) != dual_aon(p_norm))
                              return "dual character system has the wrong eigenmatrix";
                          return std::nullopt;
                      });

    detail::run_check(rep, "duality commutes with the system correspondence",
                      [&]() -> std::optional<std::string> {
                          if (eigendata(dual_sis(phi)).p != dual_aon(eigendata(phi).p))
                              return "dual system has the wrong eigenmatrix";
                          return std::nullopt;
                      });

    detail::run_check(rep, "bilinear form identities hold",
                      [&]() -> std::optional<std::string> {
                          const BilinearFormTable table = bilinear_form(build_psi_p(p_norm));
                          if (!ed)
                              return ed_failure;
                          if (table.nu != ed->nu || table.kstar != ed->kstar ||
                              table.gram_e != ed->m)
                              return "form data disagrees with the eigendata";
                          return std::nullopt;
                      });

    {
        const std::string name = "semisimple decomposition reproduces the eigenmatrix";
        try {
            const CharacterSystem sys = build_psi_p(p_norm);
            const CharacterSystem decomposed = semisimple_decompose(sys.algebra);
            const bool same = decomposed == canonicalize(sys);
            rep.checks.push_back({name, same ? CheckStatus::pass : CheckStatus::fail,
                                  same ? "" : "decomposition differs from the canonical order"});
        } catch (const NotSplitSemisimpleError&) {
            if (spec.is_prime() && spec.modulus() < static_cast<std::int64_t>(n))
                detail::skip_check(rep, name, "field too small for a separating element");
            else
                rep.checks.push_back(
                    {name, CheckStatus::fail, "no separating element found"});
        } catch (const Error& e) {
            rep.checks.push_back({name, CheckStatus::fail, e.what()});
        }
    }

    return rep;
}

// Property suite for a character algebra given by structure constants:
// axioms, decomposition when it splits, and the identities downstream.
inline VerifyReport run_algebra_suite(const CharacterAlgebra& alg) {
    VerifyReport rep;
    const bool axioms = verify_character_axioms(alg);
    rep.checks.push_back({"character algebra axioms hold",
                          axioms ? CheckStatus::pass : CheckStatus::fail,
                          axioms ? "" : detail::algebra_axiom_failures(alg).front()});
    static const std::vector<std::string> split_checks = {
        "eigenmatrix of the decomposition is AO normalized",
        "decomposition roundtrips through its eigenmatrix",
        "bilinear form identities hold",
    };
    if (!axioms) {
        for (const std::string& name : split_checks)
            detail::skip_check(rep, name, "axioms fail");
        return rep;
    }
    std::optional<CharacterSystem> sys;
    try {
        sys = semisimple_decompose(alg);
    } catch (const NotSplitSemisimpleError& e) {
        for (const std::string& name : split_checks)
            detail::skip_check(rep, name, e.what());
        return rep;
    }
    detail::run_check(rep, "eigenmatrix of the decomposition is AO normalized",
                      [&]() -> std::optional<std::string> {
                          eigenmatrix(*sys);
                          return std::nullopt;
                      });
    detail::run_check(rep, "decomposition roundtrips through its eigenmatrix",
                      [&]() -> std::optional<std::string> {
                          const CharacterSystem rebuilt = build_psi_p(sys->p);
                          if (rebuilt.algebra != alg)
                              return "structure constants differ after the roundtrip";
                          return std::nullopt;
                      });
    detail::run_check(rep, "bilinear form identities hold",
                      [&]() -> std::optional<std::string> {
                          bilinear_form(*sys);
                          return std::nullopt;
                      });
    return rep;
}

} // namespace aon
