#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "solid.hpp"
#include "structure_constants.hpp"

namespace aon {

// Commutative algebra with distinguished basis x_0..x_d, presented purely by
// structure constants and valencies. Elements are coordinate vectors.
struct CharacterAlgebra {
    StructureConstants pnum;
    std::vector<Scalar> k;

    const FieldSpec& spec() const { return pnum.spec(); }
    std::size_t d() const { return pnum.d(); }
    std::size_t dim() const { return pnum.n(); }

    bool operator==(const CharacterAlgebra& o) const { return pnum == o.pnum && k == o.k; }
    bool operator!=(const CharacterAlgebra& o) const { return !(*this == o); }
};

inline std::vector<Scalar> alg_unit(const CharacterAlgebra& alg) {
    std::vector<Scalar> u(alg.dim(), Scalar::zero(alg.spec()));
    u[0] = Scalar::one(alg.spec());
    return u;
}

inline std::vector<Scalar> alg_mul(const CharacterAlgebra& alg, const std::vector<Scalar>& u,
                                   const std::vector<Scalar>& v) {
    const std::size_t n = alg.dim();
    if (u.size() != n || v.size() != n)
        throw SizeMismatchError("algebra element has wrong coordinate count");
    std::vector<Scalar> w(n, Scalar::zero(alg.spec()));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero())
                continue;
            const Scalar uv = u[i] * v[j];
            for (std::size_t h = 0; h < n; ++h)
                w[h] = w[h] + uv * alg.pnum.at(i, j, h);
        }
    }
    return w;
}

// the homomorphism x_i -> k_i, extended linearly
inline Scalar phi(const CharacterAlgebra& alg, const std::vector<Scalar>& u) {
    Scalar acc = Scalar::zero(alg.spec());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        acc = acc + u[i] * alg.k[i];
    return acc;
}

namespace detail {

inline std::vector<std::string> algebra_axiom_failures(const CharacterAlgebra& alg) {
    std::vector<std::string> failures;
    const FieldSpec& spec = alg.spec();
    const std::size_t n = alg.dim();
    if (alg.k.size() != n) {
        failures.push_back("valency list length does not match diameter");
        return failures;
    }
    const Scalar zero = Scalar::zero(spec);
    const Scalar one = Scalar::one(spec);
    auto delta = [&](std::size_t a, std::size_t b) { return a == b ? one : zero; };
    for (std::size_t i = 0; i < n && failures.empty(); ++i)
        for (std::size_t h = 0; h < n && failures.empty(); ++h)
            if (alg.pnum.at(i, 0, h) != delta(h, i) || alg.pnum.at(0, i, h) != delta(h, i))
                failures.push_back("x_0 is not a two-sided identity");
    for (std::size_t i = 0; i < n && failures.empty(); ++i)
        for (std::size_t j = 0; j < i && failures.empty(); ++j)
            for (std::size_t h = 0; h < n && failures.empty(); ++h)
                if (alg.pnum.at(i, j, h) != alg.pnum.at(j, i, h))
                    failures.push_back("structure constants are not commutative");
    for (std::size_t i = 0; i < n && failures.empty(); ++i)
        for (std::size_t j = 0; j < n && failures.empty(); ++j)
            for (std::size_t l = 0; l < n && failures.empty(); ++l)
                for (std::size_t h = 0; h < n && failures.empty(); ++h) {
                    Scalar lhs = zero;
                    Scalar rhs = zero;
                    for (std::size_t r = 0; r < n; ++r) {
                        lhs = lhs + alg.pnum.at(i, j, r) * alg.pnum.at(r, l, h);
                        rhs = rhs + alg.pnum.at(j, l, r) * alg.pnum.at(i, r, h);
                    }
                    if (lhs != rhs)
                        failures.push_back("structure constants are not associative");
                }
    for (std::size_t i = 0; i < n && failures.empty(); ++i) {
        if (alg.k[i].is_zero())
            failures.push_back("a valency is zero");
        for (std::size_t j = 0; j < n && failures.empty(); ++j)
            if (alg.pnum.at(i, j, 0) != delta(i, j) * alg.k[i])
                failures.push_back("constant term of a product is not delta_{ij} k_i");
    }
    if (failures.empty() && alg.k[0] != one)
        failures.push_back("k_0 is not 1");
    for (std::size_t i = 0; i < n && failures.empty(); ++i)
        for (std::size_t j = 0; j < n && failures.empty(); ++j) {
            Scalar acc = zero;
            for (std::size_t h = 0; h < n; ++h)
                acc = acc + alg.pnum.at(i, j, h) * alg.k[h];
            if (acc != alg.k[i] * alg.k[j])
                failures.push_back("valency map is not an algebra homomorphism");
        }
    return failures;
}

} // namespace detail

inline bool verify_character_axioms(const CharacterAlgebra& alg) {
    return detail::algebra_axiom_failures(alg).empty();
}

// the unique diameter-one family: x_1^2 = k x_0 + (k - 1) x_1
inline CharacterAlgebra build_d1_algebra(const Scalar& kparam) {
    if (kparam.is_zero())
        throw ZeroKError("valency k must be nonzero");
    const FieldSpec& spec = kparam.spec();
    const Scalar one = Scalar::one(spec);
    StructureConstants pnum(spec, 2);
    pnum.at(0, 0, 0) = one;
    pnum.at(0, 1, 1) = one;
    pnum.at(1, 0, 1) = one;
    pnum.at(1, 1, 0) = kparam;
    pnum.at(1, 1, 1) = kparam - one;
    CharacterAlgebra alg{std::move(pnum), {one, kparam}};
    if (!verify_character_axioms(alg))
        throw InternalCheckError("diameter-one algebra fails its own axioms");
    return alg;
}

// Algebra together with an eigenmatrix P: x_j = sum_i P(i,j) e_i, so the
// idempotent e_i has x-coordinates given by column i of P^{-1}.
struct CharacterSystem {
    CharacterAlgebra algebra;
    Matrix p;

    const FieldSpec& spec() const { return algebra.spec(); }
    std::size_t d() const { return algebra.d(); }

    bool operator==(const CharacterSystem& o) const {
        return algebra == o.algebra && p == o.p;
    }
    bool operator!=(const CharacterSystem& o) const { return !(*this == o); }
};

inline std::vector<std::vector<Scalar>> idempotent_coordinates(const CharacterSystem& sys) {
    const Matrix pinv = mat_inverse(sys.p);
    std::vector<std::vector<Scalar>> e;
    for (std::size_t i = 0; i < pinv.cols(); ++i) {
        std::vector<Scalar> col;
        for (std::size_t j = 0; j < pinv.rows(); ++j)
            col.push_back(pinv.at(j, i));
        e.push_back(std::move(col));
    }
    return e;
}

namespace detail {

inline std::vector<std::string> system_failures(const CharacterSystem& sys) {
    std::vector<std::string> failures = algebra_axiom_failures(sys.algebra);
    if (!failures.empty())
        return failures;
    const FieldSpec& spec = sys.spec();
    const std::size_t n = sys.algebra.dim();
    if (sys.p.rows() != n || sys.p.cols() != n || sys.p.spec() != spec) {
        failures.push_back("eigenmatrix shape or field does not match the algebra");
        return failures;
    }
    if (!is_invertible(sys.p)) {
        failures.push_back("eigenmatrix is singular");
        return failures;
    }
    const Scalar one = Scalar::one(spec);
    for (std::size_t i = 0; i < n; ++i)
        if (sys.p.at(i, 0) != one)
            failures.push_back("column 0 of the eigenmatrix is not all ones");
    for (std::size_t j = 0; j < n; ++j)
        if (sys.p.at(0, j) != sys.algebra.k[j])
            failures.push_back("row 0 of the eigenmatrix does not list the valencies");
    if (!failures.empty())
        return failures;
    const std::vector<std::vector<Scalar>> e = idempotent_coordinates(sys);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const std::vector<Scalar> prod = alg_mul(sys.algebra, e[i], e[j]);
            const std::vector<Scalar> want =
                i == j ? e[i] : std::vector<Scalar>(n, Scalar::zero(spec));
            if (prod != want) {
                failures.push_back("basis images are not orthogonal idempotents");
                return failures;
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar value = phi(sys.algebra, e[i]);
        const Scalar want = i == 0 ? one : Scalar::zero(spec);
        if (value != want) {
            failures.push_back("e_0 is not the trivial idempotent");
            return failures;
        }
    }
    return failures;
}

} // namespace detail

inline bool verify_character_system(const CharacterSystem& sys) {
    return detail::system_failures(sys).empty();
}

namespace detail {

inline std::size_t first_nonzero_index(const std::vector<Scalar>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            return i;
    return v.size();
}

inline bool coordinate_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    const std::size_t fa = first_nonzero_index(a);
    const std::size_t fb = first_nonzero_index(b);
    if (fa != fb)
        return fa < fb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return Scalar::less(a[i], b[i]);
    return false;
}

// trivial idempotent first, remainder by first nonzero coordinate then lex
inline std::vector<std::size_t> idempotent_order(const CharacterAlgebra& alg,
                                                 const std::vector<std::vector<Scalar>>& e) {
    const Scalar one = Scalar::one(alg.spec());
    std::optional<std::size_t> trivial;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (phi(alg, e[i]) == one) {
            if (trivial)
                throw InternalCheckError("two idempotents map to 1 under the valency map");
            trivial = i;
        } else {
            rest.push_back(i);
        }
    }
    if (!trivial)
        throw InternalCheckError("no idempotent maps to 1 under the valency map");
    std::sort(rest.begin(), rest.end(),
              [&](std::size_t a, std::size_t b) { return coordinate_less(e[a], e[b]); });
    std::vector<std::size_t> order{*trivial};
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

inline CharacterSystem system_from_idempotents(CharacterAlgebra alg,
                                               const std::vector<std::vector<Scalar>>& e,
                                               const std::vector<std::size_t>& order) {
    const std::size_t n = alg.dim();
    Matrix basis(alg.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            basis.at(j, i) = e[order[i]][j];
    CharacterSystem sys{std::move(alg), mat_inverse(basis)};
    if (!verify_character_system(sys))
        throw InternalCheckError("assembled character system fails verification");
    return sys;
}

// Deterministic separating-element candidates, as coordinates c_1..c_d (the
// x_0 coefficient shifts every eigenvalue equally, so it is pinned to zero).
// Over F_p with at most 4096 coefficient vectors the search is exhaustive;
// otherwise partial sums x_1, x_1+x_2, ... then seeded pseudorandom
// small-coefficient draws, max_attempts in total.
inline std::vector<std::vector<Scalar>> separating_candidates(const FieldSpec& spec,
                                                              std::size_t d,
                                                              std::size_t max_attempts) {
    std::vector<std::vector<Scalar>> out;
    if (spec.is_prime()) {
        Int total = 1;
        for (std::size_t i = 0; i < d && total <= 4096; ++i)
            total *= spec.modulus();
        if (total <= 4096) {
            std::vector<std::int64_t> digits(d, 0);
            while (true) {
                std::size_t pos = 0;
                while (pos < d && digits[pos] == spec.modulus() - 1)
                    digits[pos++] = 0;
                if (pos == d)
                    break;
                ++digits[pos];
                std::vector<Scalar> c;
                for (std::int64_t v : digits)
                    c.push_back(Scalar::of_int(spec, v));
                out.push_back(std::move(c));
            }
            return out;
        }
    }
    for (std::size_t len = 1; len <= d && out.size() < max_attempts; ++len) {
        std::vector<Scalar> c(d, Scalar::zero(spec));
        for (std::size_t i = 0; i < len; ++i)
            c[i] = Scalar::one(spec);
        out.push_back(std::move(c));
    }
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    while (out.size() < max_attempts) {
        std::vector<Scalar> c;
        bool all_zero = true;
        for (std::size_t i = 0; i < d; ++i) {
            c.push_back(Scalar::of_int(spec, coeff(rng)));
            all_zero = all_zero && c.back().is_zero();
        }
        if (!all_zero)
            out.push_back(std::move(c));
    }
    return out;
}

} // namespace detail

// left-regular representation of x_i: column j lists the coordinates of x_i x_j
inline Matrix regular_representation(const CharacterAlgebra& alg, std::size_t i) {
    const std::size_t n = alg.dim();
    Matrix l(alg.spec(), n, n);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t j = 0; j < n; ++j)
            l.at(h, j) = alg.pnum.at(i, j, h);
    return l;
}

// Split the algebra into its primitive idempotents over its own field, if a
// separating element with d+1 distinct eigenvalues in the field exists within
// the candidate budget. The idempotent set is canonical, so the resulting
// eigenmatrix does not depend on which candidate succeeds.
inline CharacterSystem semisimple_decompose(const CharacterAlgebra& alg,
                                            std::size_t max_attempts = 64) {
    {
        const std::vector<std::string> failures = detail::algebra_axiom_failures(alg);
        if (!failures.empty())
            throw AxiomViolationError("character algebra axioms fail: " + failures.front());
    }
    const FieldSpec& spec = alg.spec();
    const std::size_t n = alg.dim();
    if (n == 1)
        return detail::system_from_idempotents(alg, {alg_unit(alg)}, {0});
    std::vector<Matrix> regular;
    for (std::size_t i = 0; i < n; ++i)
        regular.push_back(regular_representation(alg, i));
    for (const std::vector<Scalar>& c : detail::separating_candidates(spec, alg.d(), max_attempts)) {
        Matrix ly(spec, n, n);
        std::vector<Scalar> y(n, Scalar::zero(spec));
        for (std::size_t i = 1; i < n; ++i) {
            if (c[i - 1].is_zero())
                continue;
            y[i] = c[i - 1];
            ly = ly + scale(c[i - 1], regular[i]);
        }
        const auto eigenvalues = split_distinct_eigenvalues(ly);
        if (!eigenvalues)
            continue;
        // Lagrange projectors e_j = prod_{l != j} (y - lambda_l x_0) / (lambda_j - lambda_l)
        std::vector<std::vector<Scalar>> e;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> acc = alg_unit(alg);
            for (std::size_t l = 0; l < n; ++l) {
                if (l == j)
                    continue;
                std::vector<Scalar> term = y;
                term[0] = term[0] - (*eigenvalues)[l];
                const Scalar inv = ((*eigenvalues)[j] - (*eigenvalues)[l]).inverse();
                acc = alg_mul(alg, acc, term);
                for (Scalar& s : acc)
                    s = s * inv;
            }
            e.push_back(std::move(acc));
        }
        std::vector<Scalar> total(n, Scalar::zero(spec));
        for (std::size_t j = 0; j < n; ++j) {
            if (alg_mul(alg, e[j], e[j]) != e[j])
                throw InternalCheckError("eigenprojection is not idempotent");
            for (std::size_t h = 0; h < n; ++h)
                total[h] = total[h] + e[j][h];
        }
        if (total != alg_unit(alg))
            throw InternalCheckError("eigenprojections do not sum to the identity");
        return detail::system_from_idempotents(alg, e, detail::idempotent_order(alg, e));
    }
    throw NotSplitSemisimpleError(
        "no separating element found with d+1 distinct eigenvalues in the field");
}

// reorder a system's idempotents by the deterministic decomposition rule
inline CharacterSystem canonicalize(const CharacterSystem& sys) {
    {
        const std::vector<std::string> failures = detail::system_failures(sys);
        if (!failures.empty())
            throw AxiomViolationError("character system invalid: " + failures.front());
    }
    const std::vector<std::vector<Scalar>> e = idempotent_coordinates(sys);
    return detail::system_from_idempotents(sys.algebra, e, detail::idempotent_order(sys.algebra, e));
}

// Read the whole system off an AO normalized matrix P: structure constants
// p^h_{ij} = sum_r (P^{-1})_{h,r} P_{r,i} P_{r,j}, valencies across row 0.
inline CharacterSystem build_psi_p(const Matrix& p) {
    p.require_square();
    if (!is_normalized(p) || !check_ao(p))
        throw NotAONError("matrix is not AO normalized");
    const FieldSpec& spec = p.spec();
    const std::size_t n = p.rows();
    const Matrix pinv = mat_inverse(p);
    StructureConstants pnum(spec, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t h = 0; h < n; ++h) {
                Scalar acc = Scalar::zero(spec);
                for (std::size_t r = 0; r < n; ++r)
                    acc = acc + pinv.at(h, r) * p.at(r, i) * p.at(r, j);
                pnum.at(i, j, h) = acc;
            }
    std::vector<Scalar> k;
    for (std::size_t j = 0; j < n; ++j)
        k.push_back(p.at(0, j));
    CharacterSystem sys{CharacterAlgebra{std::move(pnum), std::move(k)}, p};
    const std::vector<std::string> failures = detail::system_failures(sys);
    if (!failures.empty())
        throw InternalCheckError("system built from an AO normalized matrix fails verification: " +
                                 failures.front());
    return sys;
}

struct BilinearFormTable {
    std::vector<Scalar> gram_x;
    std::vector<Scalar> gram_e;
    Scalar nu;
    std::vector<Scalar> kstar;
};

// The diagonal form <x_i,x_j> = delta_{ij} k_i together with the derived
// idempotent norms m_i, nu = 1/m_0 and dual valencies k*_i = nu m_i. The
// classical identities relating them are re-checked on every call.
inline BilinearFormTable bilinear_form(const CharacterSystem& sys) {
    {
        const std::vector<std::string> failures = detail::system_failures(sys);
        if (!failures.empty())
            throw AxiomViolationError("character system invalid: " + failures.front());
    }
    const FieldSpec& spec = sys.spec();
    const std::size_t n = sys.algebra.dim();
    const Scalar zero = Scalar::zero(spec);
    const Scalar one = Scalar::one(spec);
    const std::vector<std::vector<Scalar>> e = idempotent_coordinates(sys);
    auto pair_x = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
        Scalar acc = zero;
        for (std::size_t l = 0; l < n; ++l)
            acc = acc + u[l] * v[l] * sys.algebra.k[l];
        return acc;
    };
    std::vector<Scalar> m;
    for (std::size_t i = 0; i < n; ++i) {
        m.push_back(pair_x(e[i], e[i]));
        if (m.back().is_zero())
            throw DegenerateFormError("an idempotent has norm zero");
    }
    const Scalar nu = m[0].inverse();
    std::vector<Scalar> kstar;
    for (std::size_t i = 0; i < n; ++i)
        kstar.push_back(nu * m[i]);
    // <u,v> = <uv, x_0> over all basis pairs, plus idempotent orthogonality
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if ((i == j ? sys.algebra.k[i] : zero) != sys.algebra.pnum.at(i, j, 0))
                throw InternalCheckError("form does not match constant terms on the x basis");
            const Scalar ee = pair_x(e[i], e[j]);
            if (ee != (i == j ? m[i] : zero))
                throw InternalCheckError("idempotents are not orthogonal for the form");
            std::vector<Scalar> xi(n, zero);
            xi[i] = one;
            if (pair_x(xi, e[j]) != alg_mul(sys.algebra, xi, e[j])[0])
                throw InternalCheckError("form pairing of x_i with e_j fails");
        }
    const Matrix pinv = mat_inverse(sys.p);
    for (std::size_t i = 0; i < n; ++i) {
        // phi(x_i) = nu <x_i, e_0> and sum_j x_j = nu e_0
        if (sys.algebra.k[i] != nu * e[0][i] * sys.algebra.k[i])
            throw InternalCheckError("valency map does not agree with pairing against e_0");
        if (one != nu * e[0][i])
            throw InternalCheckError("sum of the x basis is not nu e_0");
        if (pinv.at(i, 0) != nu.inverse())
            throw InternalCheckError("column 0 of the inverse eigenmatrix is not 1/nu");
        if (pinv.at(0, i) != nu.inverse() * kstar[i])
            throw InternalCheckError("row 0 of the inverse eigenmatrix is not k*/nu");
        for (std::size_t j = 0; j < n; ++j)
            if (nu.inverse() * sys.p.at(j, i) * kstar[j] != sys.algebra.k[i] * pinv.at(i, j))
                throw InternalCheckError("dual pairing identity fails entrywise");
    }
    std::vector<Scalar> gram_x = sys.algebra.k;
    return BilinearFormTable{std::move(gram_x), std::move(m), nu, std::move(kstar)};
}

inline Matrix eigenmatrix(const CharacterSystem& sys) {
    {
        const std::vector<std::string> failures = detail::system_failures(sys);
        if (!failures.empty())
            throw AxiomViolationError("character system invalid: " + failures.front());
    }
    if (!is_normalized(sys.p) || !check_ao(sys.p))
        throw InternalCheckError("eigenmatrix of a valid system is not AO normalized");
    return sys.p;
}

} // namespace aon
