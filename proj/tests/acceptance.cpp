// Acceptance gate: one line per criterion, exit 0 only when all pass.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <aon/aon.hpp>

#include "corpus.hpp"

using namespace aon;

namespace {

struct Gate {
    bool all_passed = true;

    void run(const std::string& name, const std::function<void()>& body) {
        try {
            body();
            std::cout << "[PASS] " << name << "\n";
        } catch (const std::exception& e) {
            all_passed = false;
            std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    }
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::runtime_error(what);
}

Scalar brack(const CharacterAlgebra& alg, const std::vector<Scalar>& u,
             const std::vector<Scalar>& v) {
    Scalar acc = Scalar::zero(alg.spec());
    for (std::size_t l = 0; l < alg.dim(); ++l)
        acc = acc + u[l] * v[l] * alg.k[l];
    return acc;
}

Matrix random_square(const FieldSpec& spec, std::size_t n, std::mt19937& rng) {
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

Scalar random_nonzero(const FieldSpec& spec, std::mt19937& rng) {
    if (spec.is_prime()) {
        std::uniform_int_distribution<std::int64_t> dist(1, spec.modulus() - 1);
        return Scalar::of_int(spec, dist(rng));
    }
    std::uniform_int_distribution<int> dist(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    return Scalar::of_int(spec, sign(rng) ? dist(rng) : -dist(rng));
}

Matrix random_diag(const FieldSpec& spec, std::size_t n, std::mt19937& rng) {
    std::vector<Scalar> entries;
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back(random_nonzero(spec, rng));
    return Matrix::diagonal(entries);
}

void criterion_d1_exactness() {
    const FieldSpec q = FieldSpec::rational();
    std::vector<Scalar> ks = {Scalar::of_int(q, 2), Scalar::of_int(q, 3), Scalar::of_int(q, 5),
                              Scalar::of_fraction(q, -1, 2)};
    for (const Scalar& k : ks) {
        const Scalar one = Scalar::one(q);
        const CharacterSystem sys = semisimple_decompose(build_d1_algebra(k));
        require(sys.p == corpus::d1_matrix(k), "P differs from [[1,k],[1,-1]]");

        const Matrix pinv = mat_inverse(sys.p);
        const Scalar w = (k + one).inverse();
        require(pinv.at(0, 0) == w && pinv.at(0, 1) == w * k && pinv.at(1, 0) == w &&
                    pinv.at(1, 1) == -w,
                "P^{-1} differs from [[1,k],[1,-1]]/(k+1)");

        require(sys.algebra.pnum.at(1, 1, 1) == k - one, "p^1_{11} differs from k-1");

        const std::vector<std::vector<Scalar>> e = idempotent_coordinates(sys);
        require(e[0] == std::vector<Scalar>{w, w}, "e_0 differs from (1,1)/(k+1)");
        require(e[1] == std::vector<Scalar>{w * k, -w}, "e_1 differs from (k,-1)/(k+1)");
    }
    try {
        semisimple_decompose(build_d1_algebra(Scalar::of_int(q, -1)));
        require(false, "k=-1 unexpectedly decomposed");
    } catch (const NotSplitSemisimpleError&) {
    }
}

void criterion_normalization_uniqueness() {
    std::mt19937 rng(640);
    for (const FieldSpec& spec :
         {FieldSpec::rational(), FieldSpec::prime(5), FieldSpec::prime(7)}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 2 + trial % 3;
            Matrix r(spec, n, n);
            do {
                r = random_square(spec, n, rng);
            } while (!is_solid(r));
            const Matrix p = normalize(r);
            require(is_normalized(p), "normalize produced a non-normalized matrix");
            require(normalize(p) == p, "normalize is not idempotent");
            const Matrix h = random_diag(spec, n, rng);
            const Matrix k = random_diag(spec, n, rng);
            require(normalize(h * r * k) == p,
                    "normalize differs across a diagonal equivalence class");
        }
    }
}

void criterion_eigenmatrix_identities() {
    for (const Matrix& p : corpus::all_aon()) {
        const FieldSpec& spec = p.spec();
        const std::size_t n = p.rows();
        const Scalar zero = Scalar::zero(spec);
        const Scalar one = Scalar::one(spec);
        const EigendataReport e = eigendata(build_phi_r(p));

        require(e.p * e.q == scale(e.nu, Matrix::identity(spec, n)), "PQ != nu I");
        require(transpose(e.p) * Matrix::diagonal(e.kstar) == Matrix::diagonal(e.k) * e.q,
                "P^t K* != K Q");

        Scalar msum = zero, mssum = zero, ksum = zero, kssum = zero;
        for (std::size_t i = 0; i < n; ++i) {
            msum = msum + e.m[i];
            mssum = mssum + e.mstar[i];
            ksum = ksum + e.k[i];
            kssum = kssum + e.kstar[i];
        }
        require(msum == one && mssum == one, "multiplicities do not sum to 1");
        require(ksum == e.nu && kssum == e.nu, "valencies do not sum to nu");
        require(e.k[0] == one && e.kstar[0] == one, "k_0 or k*_0 differs from 1");

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                require(e.pnum.at(i, j, 0) == (i == j ? e.k[i] : zero),
                        "p^0_{ij} != delta_{ij} k_i");
                Scalar hom = zero;
                for (std::size_t h = 0; h < n; ++h)
                    hom = hom + e.pnum.at(i, j, h) * e.k[h];
                require(hom == e.k[i] * e.k[j], "valency homomorphism fails");
            }

        const Matrix pinv = mat_inverse(e.p);
        for (std::size_t i = 0; i < n; ++i) {
            require(e.p.at(i, 0) == one, "P_{i,0} != 1");
            require(e.q.at(i, 0) == one, "Q_{i,0} != 1");
            require(e.p.at(0, i) == e.k[i], "P_{0,j} != k_j");
            require(pinv.at(0, i) == e.nu.inverse() * e.kstar[i], "(P^{-1})_{0,j} != k*_j/nu");
        }
    }
}

void criterion_bijections() {
    for (const Matrix& p : corpus::all_aon()) {
        const IdempotentSystem phi = build_phi_r(p);
        const CharacterSystem sys = build_psi_p(p);
        require(eigendata(phi).p == p, "matrix -> system -> matrix moved P");
        require(eigenmatrix(sys) == p, "matrix -> character -> matrix moved P");
        require(phi_of_psi(psi_of_phi(phi)) == phi, "system roundtrip moved the system");
        require(psi_of_phi(phi_of_psi(sys)) == sys, "character roundtrip moved the system");
    }
}

void criterion_duality() {
    for (const Matrix& p : corpus::all_aon()) {
        const Matrix dual = dual_aon(p);
        require(dual_aon(dual) == p, "duality is not an involution");
        const Matrix prod = p * dual;
        const Scalar nu = eigendata(build_phi_r(p)).nu;
        require(prod == scale(nu, Matrix::identity(p.spec(), p.rows())), "P P* != nu I");
        require(eigenmatrix(dual_cs(build_psi_p(p))) == dual, "dual_cs disagrees with dual_aon");
        require(eigendata(dual_sis(build_phi_r(p))).p == dual,
                "dual_sis disagrees with dual_aon");
    }
    const FieldSpec q = FieldSpec::rational();
    for (const Scalar& k : corpus::rational_k_values())
        require(dual_aon(corpus::d1_matrix(k)) == corpus::d1_matrix(k),
                "a diameter one member is not self-dual");
}

void criterion_censuses() {
    const auto start = std::chrono::steady_clock::now();
    for (const std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        const CensusResult zero = enumerate_census(0, p);
        require(zero.aon_count == 1, "degree zero census is not a single point");

        const CensusResult one = enumerate_census(1, p);
        // independent count: members are parametrized by k outside {0, -1}
        std::size_t expected = 0;
        for (std::int64_t k = 1; k < p; ++k)
            expected += (k != p - 1) ? 1 : 0;
        require(one.aon_count == expected, "degree one census disagrees with the residue count");
        require(one.aon_count == static_cast<std::size_t>(p - 2 > 0 ? p - 2 : 0),
                "degree one census is not p-2");

        for (const CensusEntry& entry : one.normalized_solid)
            if (entry.ao)
                require(run_matrix_suite(entry.matrix).all_passed(),
                        "an enumerated AON matrix fails the suite");
    }
    for (const std::int64_t p : {2, 3}) {
        const CensusResult two = enumerate_census(2, p);
        for (const CensusEntry& entry : two.normalized_solid)
            if (entry.ao)
                require(run_matrix_suite(entry.matrix).all_passed(),
                        "an enumerated AON matrix fails the suite");
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(elapsed).count();
    std::ostringstream msg;
    msg << "census sweep took " << seconds << "s, over the 60s budget";
    require(seconds < 60, msg.str());
}

void criterion_symmetry() {
    const FieldSpec q = FieldSpec::rational();
    std::mt19937 rng(641);
    for (const Matrix& p : corpus::all_aon()) {
        const IdempotentSystem phi = build_phi_r(p);
        const auto w = symmetry_witness(phi);
        require(w.has_value(), "AO member lacks a symmetry witness");
        const Matrix winv = mat_inverse(*w);
        const IdempotentSystem canonical = canonicalize(phi);
        std::size_t fixed = 0;
        for (const auto* fam : {&canonical.e, &canonical.estar})
            for (const Matrix& x : *fam) {
                require(*w * transpose(x) * winv == x, "witness moves an idempotent");
                ++fixed;
            }
        require(fixed == 2 * p.rows(), "wrong number of idempotents checked");
    }

    const IdempotentSystem phi2 = build_phi_r(corpus::d1_matrix(Scalar::of_int(q, 2)));
    const Matrix w = *symmetry_witness(phi2);
    const Matrix winv = mat_inverse(w);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix a = random_square(q, 2, rng);
        const Matrix once = w * transpose(a) * winv;
        require(w * transpose(once) * winv == a, "antiautomorphism is not an involution");
    }

    Matrix not_ao(q, 3, 3);
    const long long rows[3][3] = {{1, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            not_ao.at(i, j) = Scalar::of_int(q, rows[i][j]);
    require(!symmetry_witness(build_phi_r(not_ao)).has_value(),
            "non AO matrix has a symmetry witness");
}

void criterion_bilinear_form() {
    for (const Matrix& p : corpus::all_aon()) {
        const FieldSpec& spec = p.spec();
        const std::size_t n = p.rows();
        const Scalar zero = Scalar::zero(spec);
        const Scalar one = Scalar::one(spec);
        const CharacterSystem sys = build_psi_p(p);
        const CharacterAlgebra& alg = sys.algebra;
        const std::vector<std::vector<Scalar>> e = idempotent_coordinates(sys);
        const Matrix pinv = mat_inverse(p);

        std::vector<Scalar> m;
        for (std::size_t i = 0; i < n; ++i)
            m.push_back(pinv.at(0, i));
        const Scalar nu = m[0].inverse();

        std::vector<std::vector<Scalar>> x;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Scalar> xi(n, zero);
            xi[i] = one;
            x.push_back(std::move(xi));
        }

        for (std::size_t i = 0; i < n; ++i) {
            require(!m[i].is_zero(), "an idempotent norm vanishes");
            require(brack(alg, e[i], e[i]) == m[i], "<e_i,e_i> != m_i");
            for (std::size_t j = 0; j < n; ++j) {
                require(brack(alg, x[i], x[j]) == (i == j ? alg.k[i] : zero),
                        "<x_i,x_j> != delta_{ij} k_i");
                if (i != j)
                    require(brack(alg, e[i], e[j]) == zero, "idempotents are not orthogonal");
                // associativity of the pairing with the product, on all pairs
                require(brack(alg, x[i], e[j]) == alg_mul(alg, x[i], e[j])[0],
                        "<u,v> != <uv,x_0> on a basis pair");
            }
            require(phi(alg, x[i]) == nu * brack(alg, x[i], e[0]), "phi(x_i) != nu <x_i,e_0>");
            require(one == nu * e[0][i], "sum of x basis is not nu e_0");
            require(pinv.at(i, 0) == nu.inverse(), "(P^{-1})_{i,0} != 1/nu");
            for (std::size_t j = 0; j < n; ++j)
                require(nu.inverse() * p.at(j, i) * (nu * m[j]) == alg.k[i] * pinv.at(i, j),
                        "entrywise dual pairing identity fails");
        }

        const BilinearFormTable table = bilinear_form(sys);
        require(table.nu == nu && table.gram_e == m, "library form table disagrees");
        Scalar msum = zero;
        for (const Scalar& mi : m)
            msum = msum + mi;
        require(msum == one, "idempotent norms do not sum to 1");
    }
}

}  // namespace

int main() {
    Gate gate;
    gate.run("diameter one family is exact in k", criterion_d1_exactness);
    gate.run("normalization is unique per diagonal class", criterion_normalization_uniqueness);
    gate.run("eigenmatrix identities hold across the corpus", criterion_eigenmatrix_identities);
    gate.run("matrix, system and character correspondences are bijections", criterion_bijections);
    gate.run("duality is an exact involution", criterion_duality);
    gate.run("finite field censuses match the closed counts", criterion_censuses);
    gate.run("symmetry witnesses exist exactly for AO members", criterion_symmetry);
    gate.run("bilinear form identities hold across the corpus", criterion_bilinear_form);
    return gate.all_passed ? 0 : 1;
}
