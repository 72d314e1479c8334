#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "esla/families.hpp"
#include "esla/gradings.hpp"
#include "esla/models.hpp"

using namespace esla;
using abelian::AbGroup;
using abelian::GroupElem;
using cyclo::Cyc;

namespace {
GroupElem el(const AbGroup& G, std::vector<long> v) { return abelian::reduce(G, {std::move(v)}); }
}

TEST_CASE("cartan grading of sl2 verifies and a corrupted degree fails") {
    AbGroup Z{1, {}};
    auto g = families::sl2_cartan(Z, el(Z, {1}));
    auto rep = gradings::verify_grading(g);
    CHECK(rep.pass());

    auto bad = g;
    bad.degree[1] = el(Z, {2});  // deg E corrupted: [E,F] lands outside its component
    auto brep = gradings::verify_grading(bad);
    CHECK_FALSE(brep.compatible);
    CHECK(brep.first_failure.find("E") != std::string::npos);
}

TEST_CASE("m2 cartan: universal group Z, types (2,1) and (0,2)") {
    AbGroup Z{1, {}};
    auto g = families::m2_cartan(Z, el(Z, {1}));
    CHECK(gradings::verify_grading(g).pass());
    CHECK(gradings::grading_type(g) == std::vector<std::size_t>{2, 1});
    auto ug = gradings::universal_group(g);
    CHECK(ug.u == Z);

    AbGroup Z2{0, {2}};
    auto h = families::m2_cartan(Z2, el(Z2, {1}));
    CHECK(gradings::verify_grading(h).pass());
    CHECK(gradings::grading_type(h) == std::vector<std::size_t>{0, 2});
    // over Z2 the universal group of the coarsened grading is Z2
    CHECK(gradings::universal_group(h).u == Z2);
}

TEST_CASE("m2 and sl2 pauli gradings: universal group Z2 x Z2") {
    AbGroup G{0, {2, 2}};
    auto g = families::m2_pauli(G, el(G, {1, 0}), el(G, {0, 1}));
    CHECK(gradings::verify_grading(g).pass());
    CHECK(gradings::grading_type(g) == std::vector<std::size_t>{4});
    CHECK(gradings::universal_group(g).u == G);

    auto s = families::sl2_pauli(G, el(G, {1, 0}), el(G, {0, 1}));
    CHECK(gradings::verify_grading(s).pass());
    CHECK(gradings::grading_type(s) == std::vector<std::size_t>{3});
    CHECK(gradings::universal_group(s).u == G);

    AbGroup Z2{0, {2}};
    CHECK_THROWS_AS(families::m2_pauli(Z2, el(Z2, {1}), el(Z2, {1})), std::invalid_argument);
}

TEST_CASE("elementary gradings of M_n") {
    AbGroup Z{1, {}};
    auto g = families::mn_elementary(2, Z, {el(Z, {0}), el(Z, {-1})});
    CHECK(gradings::verify_grading(g).pass());
    CHECK(gradings::grading_type(g) == std::vector<std::size_t>{2, 1});
    CHECK(gradings::universal_group(g).u == Z);

    AbGroup G{0, {2, 2}};
    auto h = families::mn_elementary(4, G,
                                     {el(G, {0, 0}), el(G, {1, 0}), el(G, {0, 1}), el(G, {1, 1})});
    CHECK(gradings::verify_grading(h).pass());
    CHECK(gradings::grading_type(h) == std::vector<std::size_t>{0, 0, 0, 4});
}

TEST_CASE("generalized pauli gradings of M_2 and M_4") {
    AbGroup G{0, {2, 2}};
    auto g = families::mn_pauli(2, G, el(G, {1, 0}), el(G, {0, 1}));
    CHECK(gradings::verify_grading(g).pass());
    CHECK(gradings::grading_type(g) == std::vector<std::size_t>{4});

    AbGroup H{0, {4, 4}};
    auto p = families::mn_pauli(4, H, el(H, {1, 0}), el(H, {0, 1}));
    CHECK(gradings::verify_grading(p).pass());
    CHECK(gradings::grading_type(p) == std::vector<std::size_t>{16});
    CHECK(gradings::universal_group(p).u == H);
}

TEST_CASE("cayley cartan and pauli gradings") {
    AbGroup Z2f{2, {}};
    std::array<GroupElem, 3> hs{el(Z2f, {1, 0}), el(Z2f, {0, 1}), el(Z2f, {-1, -1})};
    auto g = families::cayley_cartan(Z2f, hs);
    CHECK(gradings::verify_grading(g).pass());
    CHECK(gradings::grading_type(g) == std::vector<std::size_t>{6, 1});
    CHECK(gradings::universal_group(g).u == Z2f);

    std::array<GroupElem, 3> bad{el(Z2f, {1, 0}), el(Z2f, {0, 1}), el(Z2f, {0, 0})};
    CHECK_THROWS_AS(families::cayley_cartan(Z2f, bad), std::invalid_argument);

    AbGroup T{0, {2, 2, 2}};
    std::array<GroupElem, 3> as{el(T, {1, 0, 0}), el(T, {0, 1, 0}), el(T, {0, 0, 1})};
    auto p = families::cayley_pauli(T, as);
    CHECK(gradings::verify_grading(p).pass());
    CHECK(gradings::grading_type(p) == std::vector<std::size_t>{8});
    CHECK(gradings::universal_group(p).u == T);
}

TEST_CASE("induce composes degrees and merges components") {
    AbGroup Z2f{2, {}};
    std::array<GroupElem, 3> hs{el(Z2f, {1, 0}), el(Z2f, {0, 1}), el(Z2f, {-1, -1})};
    auto g = families::cayley_cartan(Z2f, hs);

    AbGroup Z2{0, {2}};
    abelian::GroupHom alpha{Z2f, Z2, {el(Z2, {1}), el(Z2, {1})}};
    auto ind = gradings::induce(g, alpha);
    CHECK(gradings::verify_grading(ind).pass());
    // u3, v3 fall into the identity component alongside e1, e2
    CHECK(gradings::grading_type(ind) == std::vector<std::size_t>{0, 0, 0, 2});
}

TEST_CASE("admissibility of homomorphisms") {
    AbGroup Z{1, {}};
    auto cart = families::m2_cartan(Z, el(Z, {1}));

    AbGroup Z4{0, {4}};
    // free parts separate the support of the Cartan grading: everything admissible
    for (long k = 0; k < 4; ++k) {
        abelian::GroupHom a{Z, Z4, {el(Z4, {k})}};
        CHECK(gradings::is_admissible(a, cart));
    }

    AbGroup P{0, {2, 2}};
    auto pauli = families::m2_pauli(P, el(P, {1, 0}), el(P, {0, 1}));
    abelian::GroupHom inj{P, P, {el(P, {1, 0}), el(P, {0, 1})}};
    CHECK(gradings::is_admissible(inj, pauli));
    abelian::GroupHom noninj{P, P, {el(P, {1, 0}), el(P, {1, 0})}};
    CHECK_FALSE(gradings::is_admissible(noninj, pauli));
}

TEST_CASE("almost-fine coarsenings: torsion-free universal group has none") {
    AbGroup Z2f{2, {}};
    std::array<GroupElem, 3> hs{el(Z2f, {1, 0}), el(Z2f, {0, 1}), el(Z2f, {-1, -1})};
    auto g = families::cayley_cartan(Z2f, hs);
    CHECK(gradings::almost_fine_coarsenings(g).empty());
}

TEST_CASE("parity homomorphism exists for purely even gradings") {
    AbGroup Z{1, {}};
    auto g = families::sl2_cartan(Z, el(Z, {1}));
    auto p = gradings::parity_hom(g);
    REQUIRE(p.has_value());
    CHECK(abelian::is_zero(p->apply(el(Z, {5}))));
}

TEST_CASE("so algebras from monomial forms") {
    auto so3 = models::so_split(1, 1);
    CHECK(so3.algebra.dim == 3);
    CHECK(superalg::verify_axioms(so3.algebra).pass());

    auto so7 = models::so_split(7, 0);
    CHECK(so7.algebra.dim == 21);
    CHECK(superalg::verify_axioms(so7.algebra).pass());

    // the norm form of the traceless Cayley subspace: one norm -2 vector
    // plus three hyperbolic pairs
    std::vector<std::size_t> sig{0, 2, 1, 4, 3, 6, 5};
    std::vector<Cyc> t{Cyc(-2), Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(1)};
    auto soc = models::so_of_monomial_form(sig, t);
    CHECK(soc.algebra.dim == 21);
    CHECK(superalg::verify_axioms(soc.algebra).pass());
}

TEST_CASE("so3 elementary grading and constraint checking") {
    AbGroup Z{1, {}};
    auto se = models::build_so_elementary(1, 1, Z, {el(Z, {0}), el(Z, {1}), el(Z, {-1})});
    CHECK(gradings::verify_grading(se.grading).pass());
    CHECK(gradings::grading_type(se.grading) == std::vector<std::size_t>{3});

    CHECK_THROWS_AS(models::build_so_elementary(1, 1, Z, {el(Z, {0}), el(Z, {1}), el(Z, {1})}),
                    std::invalid_argument);
}

TEST_CASE("so7 elementary grading over Z2^6 is fine with universal group Z2^6") {
    AbGroup G{0, {2, 2, 2, 2, 2, 2}};
    std::vector<GroupElem> gamma{el(G, {0, 0, 0, 0, 0, 0}), el(G, {1, 0, 0, 0, 0, 0}),
                                 el(G, {0, 1, 0, 0, 0, 0}), el(G, {0, 0, 1, 0, 0, 0}),
                                 el(G, {0, 0, 0, 1, 0, 0}), el(G, {0, 0, 0, 0, 1, 0}),
                                 el(G, {0, 0, 0, 0, 0, 1})};
    auto se = models::build_so_elementary(7, 0, G, gamma);
    CHECK(gradings::verify_grading(se.grading).pass());
    CHECK(gradings::grading_type(se.grading) == std::vector<std::size_t>{21});
    CHECK(gradings::universal_group(se.grading).u == G);
}

TEST_CASE("derivations of the graded cayley algebra split into homogeneous pieces") {
    auto c = models::build_cayley();
    auto der = models::derivation_algebra(c, "D");

    AbGroup Z2f{2, {}};
    std::array<GroupElem, 3> hs{el(Z2f, {1, 0}), el(Z2f, {0, 1}), el(Z2f, {-1, -1})};
    auto cart = families::cayley_cartan(Z2f, hs);
    auto pieces = families::homogeneous_operator_basis(der.matrices, Z2f, cart.degree);
    std::size_t total = 0, zero_dim = 0;
    for (const auto& [d, basis] : pieces) {
        total += basis.size();
        if (abelian::is_zero(d)) zero_dim = basis.size();
    }
    CHECK(total == 14);
    CHECK(zero_dim == 2);       // the Cartan subalgebra of g2
    CHECK(pieces.size() == 13); // 12 root spaces + the Cartan

    AbGroup T{0, {2, 2, 2}};
    std::array<GroupElem, 3> as{el(T, {1, 0, 0}), el(T, {0, 1, 0}), el(T, {0, 0, 1})};
    auto pauli = families::cayley_pauli(T, as);
    // the pauli degrees index the adapted basis, so move the operators there first
    auto adapted_ops = linalg::conjugate_operators(der.matrices, pauli.adapted);
    auto ppieces = families::homogeneous_operator_basis(adapted_ops, T, pauli.degree);
    CHECK(ppieces.size() == 7);
    for (const auto& [d, basis] : ppieces) {
        CHECK(basis.size() == 2);
        CHECK_FALSE(abelian::is_zero(d));
    }
}
