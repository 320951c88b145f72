#include <catch2/catch_amalgamated.hpp>

#include <variant>

#include <aon/correspondences.hpp>
#include <aon/errors.hpp>

#include "corpus.hpp"

using namespace aon;

TEST_CASE("a symmetric idempotent system yields its character system") {
    const FieldSpec q = FieldSpec::rational();
    const Matrix p2 = corpus::d1_matrix(Scalar::of_int(q, 2));
    const CharacterSystem sys = psi_of_phi(build_phi_r(p2));
    CHECK(sys == build_psi_p(p2));
    CHECK(sys.p == p2);
}

TEST_CASE("a character system is realized by matrix idempotents") {
    const FieldSpec q = FieldSpec::rational();
    const Matrix p2 = corpus::d1_matrix(Scalar::of_int(q, 2));
    const IdempotentSystem phi = phi_of_psi(build_psi_p(p2));
    CHECK(phi == build_phi_r(p2));
}

TEST_CASE("both directions compose to the identity across the corpus") {
    for (const Matrix& p : corpus::all_aon()) {
        const IdempotentSystem phi = build_phi_r(p);
        const CharacterSystem sys = build_psi_p(p);
        CHECK(phi_of_psi(psi_of_phi(phi)) == canonicalize(phi));
        CHECK(psi_of_phi(phi_of_psi(sys)) == sys);
        CHECK(eigendata(phi).p == p);
        CHECK(eigenmatrix(sys) == p);
    }
}

TEST_CASE("matrix duality is an involution with the expected fixed points") {
    const FieldSpec q = FieldSpec::rational();

    const Matrix one = Matrix::identity(q, 1);
    CHECK(dual_aon(one) == one);

    // P^2 = (1+k) I makes every diameter one member self-dual
    const Matrix p2 = corpus::d1_matrix(Scalar::of_int(q, 2));
    CHECK(dual_aon(p2) == p2);

    for (const Matrix& p : corpus::all_aon()) {
        const Matrix dual = dual_aon(p);
        CHECK(dual_aon(dual) == p);
        CHECK(is_aon(dual));
        const Matrix prod = p * dual;
        const Scalar nu = prod.at(0, 0);
        CHECK(prod == scale(nu, Matrix::identity(p.spec(), p.rows())));
    }

    CHECK_THROWS_AS(dual_aon(Matrix::identity(q, 2)), NotAONError);
}

TEST_CASE("duality distributes over Kronecker products") {
    const FieldSpec q = FieldSpec::rational();
    const Matrix pa = corpus::d1_matrix(Scalar::of_int(q, 2));
    const Matrix pb = corpus::d1_matrix(Scalar::of_int(q, 3));
    CHECK(dual_aon(kron(pa, pb)) == kron(dual_aon(pa), dual_aon(pb)));
}

TEST_CASE("system duality swaps families up to canonical form") {
    const FieldSpec q = FieldSpec::rational();
    for (const Matrix& p : corpus::all_aon()) {
        const IdempotentSystem phi = build_phi_r(p);
        const IdempotentSystem dual = dual_sis(phi);
        CHECK(eigendata(dual).p == dual_aon(p));
        CHECK(eigendata(dual_sis(dual)).p == p);
    }

    Matrix solid_not_ao(q, 3, 3);
    const long long rows[3][3] = {{1, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            solid_not_ao.at(i, j) = Scalar::of_int(q, rows[i][j]);
    CHECK_THROWS_AS(dual_sis(build_phi_r(solid_not_ao)), NotSymmetricError);
}

TEST_CASE("character system duality pairs the eigenmatrices") {
    const FieldSpec q = FieldSpec::rational();
    const CharacterSystem sys = build_psi_p(corpus::d1_matrix(Scalar::of_int(q, 2)));
    const CharacterSystem dual = dual_cs(sys);
    CHECK(dual == sys);

    for (const Matrix& p : corpus::all_aon()) {
        const CharacterSystem s = build_psi_p(p);
        const CharacterSystem d = dual_cs(s);
        CHECK(d.p == dual_aon(p));
        CHECK(dual_cs(d) == s);
    }
}

TEST_CASE("correspondence reports carry the image and confirm the roundtrip") {
    for (const Matrix& p : corpus::all_aon()) {
        const IdempotentSystem phi = build_phi_r(p);
        const CharacterSystem sys = build_psi_p(p);

        const CorrespondenceReport a2s = correspond_aon_sis(p);
        CHECK(a2s.roundtrip_equal);
        CHECK(std::get<IdempotentSystem>(a2s.image) == phi);

        const CorrespondenceReport a2c = correspond_aon_cs(p);
        CHECK(a2c.roundtrip_equal);
        CHECK(std::get<CharacterSystem>(a2c.image) == sys);

        const CorrespondenceReport s2a = correspond_sis_aon(phi);
        CHECK(s2a.roundtrip_equal);
        CHECK(std::get<Matrix>(s2a.image) == p);

        const CorrespondenceReport s2c = correspond_sis_cs(phi);
        CHECK(s2c.roundtrip_equal);
        CHECK(std::get<CharacterSystem>(s2c.image) == sys);

        const CorrespondenceReport c2a = correspond_cs_aon(sys);
        CHECK(c2a.roundtrip_equal);
        CHECK(std::get<Matrix>(c2a.image) == p);

        const CorrespondenceReport c2s = correspond_cs_sis(sys);
        CHECK(c2s.roundtrip_equal);
        CHECK(std::get<IdempotentSystem>(c2s.image) == phi);
    }
}

TEST_CASE("system kinds have stable names") {
    CHECK(std::string(kind_name(SystemKind::aon)) == "aon");
    CHECK(std::string(kind_name(SystemKind::sis)) == "sis");
    CHECK(std::string(kind_name(SystemKind::cs)) == "cs");
}
