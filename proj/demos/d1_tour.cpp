// Tour of the diameter-one family over the rationals and a small census
// over F_5: the same objects reached from three directions (matrix,
// idempotent system, character algebra) agree exactly.

#include <iostream>

#include <aon/aon.hpp>

using namespace aon;

namespace {

void show(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << " " << m.at(i, j).str();
        std::cout << " ]\n";
    }
}

} // namespace

int main() {
    const FieldSpec q = FieldSpec::rational();

    for (const long long kval : {2LL, 3LL, -7LL}) {
        const Scalar k = Scalar::of_int(q, kval);
        const CharacterAlgebra alg = build_d1_algebra(k);
        const CharacterSystem sys = semisimple_decompose(alg);
        std::cout << "d=1, k = " << k.str() << ", eigenmatrix\n";
        show(sys.p);

        const Matrix p = eigenmatrix(sys);
        std::cout << "  self-dual: " << (dual_aon(p) == p ? "yes" : "no") << "\n";

        const EigendataReport rep = eigendata(build_phi_r(p));
        std::cout << "  nu = " << rep.nu.str() << ", m = " << rep.m[0].str() << ", "
                  << rep.m[1].str() << "\n";

        const BilinearFormTable form = bilinear_form(sys);
        std::cout << "  k* = " << form.kstar[0].str() << ", " << form.kstar[1].str() << "\n\n";
    }

    const CensusResult census = enumerate_census(1, 5);
    std::cout << "AON census over F_5, d = 1: " << census.aon_count << " of "
              << census.normalized_solid.size() << " normalized solid matrices\n";
    for (const CensusEntry& entry : census.normalized_solid) {
        std::cout << (entry.ao ? "AO:\n" : "not AO:\n");
        show(entry.matrix);
    }
    return 0;
}
