#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "esla/models.hpp"
#include "esla/superalg.hpp"

using namespace esla::superalg;
using esla::cyclo::Cyc;
using esla::cyclo::constants;
using esla::linalg::is_zero_vec;
using esla::models::build_D;

TEST_CASE("sl2 satisfies the axioms and is simple") {
    SuperAlgebra L = esla::models::sl2::algebra();
    auto rep = verify_axioms(L);
    CHECK(rep.pass());
    auto ir = ideals_and_center(L);
    CHECK(ir.center_dim == 0);
    CHECK(ir.derived_dim == 3);
    CHECK(ir.simple);
    CHECK(ir.minimal_ideals.empty());
}

TEST_CASE("antisymmetry convention: odd-odd brackets are symmetric") {
    SuperAlgebra L = build_D(Cyc(1), constants().omega, constants().omega * constants().omega);
    for (std::size_t i = 9; i < 17; ++i)
        for (std::size_t j = 9; j < 17; ++j)
            CHECK(is_zero_vec(L.bracket_basis(i, j) - L.bracket_basis(j, i)));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 17; ++j)
            CHECK(is_zero_vec(L.bracket_basis(i, j) + L.bracket_basis(j, i)));
}

TEST_CASE("the triple-sum-zero condition decides Jacobi for the sigma family") {
    const Cyc om = constants().omega;

    SuperAlgebra good = build_D(Cyc(1), om, -(Cyc(1) + om));
    auto grep = verify_axioms(good);
    CHECK(grep.pass());

    SuperAlgebra bad = build_D(Cyc(1), Cyc(1), Cyc(1));
    auto brep = verify_axioms(bad);
    CHECK(brep.antisymmetry);
    CHECK(brep.parity_respected);
    CHECK(!brep.jacobi);
    CHECK(brep.first_failure.substr(0, 6) == "jacobi");
}

TEST_CASE("degenerate sigma produces the expected proper ideal") {
    // sigma = (1,-1,0): the third p-map never appears, so the two first sl2
    // summands plus the whole odd part close up into a 14-dim ideal.
    SuperAlgebra L = build_D(Cyc(1), Cyc(-1), Cyc(0));
    CHECK(verify_axioms(L).pass());
    auto ir = ideals_and_center(L);
    CHECK(!ir.simple);
    CHECK(ir.center_dim == 0);
    REQUIRE(ir.minimal_ideals.size() == 1);
    CHECK(ir.minimal_ideals[0].size() == 14);
}

TEST_CASE("center and derived subalgebra of a direct sum with a line") {
    // sl2 + K z (z central): center dim 1, derived = the sl2 copy
    SuperAlgebra L(4);
    L.labels = {"H", "E", "F", "z"};
    L.set_entry(0, 1, {{1, Cyc(2)}});
    L.set_entry(0, 2, {{2, Cyc(-2)}});
    L.set_entry(1, 2, {{0, Cyc(1)}});
    L.symmetrize();
    CHECK(verify_axioms(L).pass());
    auto ir = ideals_and_center(L);
    CHECK(ir.center_dim == 1);
    CHECK(ir.derived_dim == 3);
    CHECK(!ir.simple);
    REQUIRE(ir.center_basis.size() == 1);
    CHECK(!ir.center_basis[0][3].is_zero());
}

TEST_CASE("parity map is an automorphism, shifted scalings are not") {
    SuperAlgebra L = build_D(Cyc(1), constants().omega, constants().omega * constants().omega);
    CHECK(is_automorphism(L, delta_map(L)));
    Mat bad = Mat::identity(17);
    bad.at(9, 9) = Cyc(2);  // scaling one odd coordinate alone breaks [w,w]
    CHECK(!is_automorphism(L, bad));
    Mat sing(17, 17);
    CHECK(!is_automorphism(L, sing));
}

TEST_CASE("declared form symmetry is checked against the gram matrix") {
    auto Q = esla::models::build_quaternion();
    CHECK(Q.form.matches_declared_symmetry());

    BilinearForm alt;
    alt.kind = BilinearForm::Kind::alternating;
    alt.gram = Mat(2, 2);
    alt.gram.at(0, 1) = Cyc(1);
    alt.gram.at(1, 0) = Cyc(-1);
    CHECK(alt.matches_declared_symmetry());
    alt.gram.at(1, 0) = Cyc(1);
    CHECK(!alt.matches_declared_symmetry());

    // supersymmetric: symmetric on even, alternating on odd, no mixing
    std::vector<int> parity{0, 1};
    BilinearForm super;
    super.kind = BilinearForm::Kind::supersymmetric;
    super.gram = Mat(2, 2);
    super.gram.at(0, 0) = Cyc(1);
    CHECK(super.matches_declared_symmetry(&parity));
    super.gram.at(0, 1) = Cyc(1);
    CHECK(!super.matches_declared_symmetry(&parity));
}

TEST_CASE("structure constants survive the cache round trip") {
    SuperAlgebra L = build_D(Cyc(1), constants().omega, constants().omega * constants().omega);
    SuperAlgebra back = from_cache_json(to_cache_json(L));
    CHECK(back.dim == L.dim);
    CHECK(back.parity == L.parity);
    CHECK(back.labels == L.labels);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            CHECK(is_zero_vec(back.bracket_basis(i, j) - L.bracket_basis(i, j)));
    // serialization is deterministic
    CHECK(to_cache_json(L) == to_cache_json(back));
}

TEST_CASE("version mismatch is rejected") {
    CHECK_THROWS_AS(from_cache_json("{\"format_version\": 99}"), std::runtime_error);
}
