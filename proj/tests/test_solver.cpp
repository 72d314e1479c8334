#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "esla/models.hpp"
#include "esla/solver.hpp"

using namespace esla::models;
using esla::cyclo::Cyc;
using esla::solver::BracketAnsatz;
using esla::superalg::ModulePresentation;
using esla::superalg::SuperAlgebra;

namespace {

constexpr std::uint64_t kPrime = 2013265921;  // 1 + 15 * 2^27, so 24 | p - 1

Vec dense(const esla::superalg::SparseVec& sv, std::size_t n) {
    Vec v(n, Cyc::zero());
    for (const auto& [i, c] : sv) v[i] = v[i] + c;
    return v;
}

Mat mat_of_2x2(const Mat2& m) {
    Mat r(2, 2);
    r.at(0, 0) = m[0];
    r.at(0, 1) = m[1];
    r.at(1, 0) = m[2];
    r.at(1, 1) = m[3];
    return r;
}

/// sl2 acting on its natural module V: the smallest presentation the solver
/// accepts, and the one whose completion is a known five-dimensional algebra.
ModulePresentation sl2_on_v() {
    ModulePresentation p;
    p.l0 = sl2::algebra();
    p.ideals = {{0, 3}};
    for (std::size_t k = 0; k < 3; ++k) {
        Vec hef(3, Cyc::zero());
        hef[k] = Cyc::one();
        p.rho.push_back(mat_of_2x2(sl2::action_on_V(hef)));
    }
    p.module_labels = {"u", "v"};
    p.name = "sl2 on V";
    return p;
}

std::size_t even_closure(const SuperAlgebra& L, std::size_t lo, std::size_t hi) {
    esla::linalg::SpanBasis span(L.dim);
    std::vector<Vec> work;
    for (std::size_t i = lo; i < hi; ++i) work.push_back(L.basis_vec(i));
    while (!work.empty()) {
        Vec v = work.back();
        work.pop_back();
        if (!span.add(v)) continue;
        for (std::size_t i = 0; i < L.dim; ++i)
            if (!L.parity[i]) work.push_back(L.bracket(L.basis_vec(i), v));
    }
    return span.rank();
}

void check_completed_simple(const SuperAlgebra& L, std::size_t dim) {
    CHECK(L.dim == dim);
    CHECK(esla::superalg::verify_axioms(L).pass());
    auto ir = esla::superalg::ideals_and_center(L);
    CHECK(ir.center_dim == 0);
    CHECK(ir.derived_dim == dim);
    CHECK(ir.simple);
}

}  // namespace

TEST_CASE("invariant form and dual pairing on the natural sl2 module") {
    auto p = sl2_on_v();
    REQUIRE(esla::superalg::verify_presentation(p));

    Mat b = esla::solver::invariant_module_form(p);
    CHECK(b.at(0, 0).is_zero());
    CHECK(b.at(1, 1).is_zero());
    CHECK(b.at(0, 1) == Cyc::one());
    CHECK(b.at(1, 0) == Cyc(-1));

    // the canonical pairing is a multiple of p(x,y) = x psi(y,.) + y psi(x,.)
    auto blocks = esla::solver::dual_action_pairing(p, b, 0);
    Cyc lam;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t ap = a; ap < 2; ++ap)
            for (std::size_t m = 0; m < 3; ++m) {
                Cyc printed = sl2::p_map(a, ap)[m];
                if (lam.is_zero() && !printed.is_zero()) lam = blocks[m].at(a, ap) * printed.inv();
                CHECK(blocks[m].at(a, ap) == lam * printed);
            }
    CHECK_FALSE(lam.is_zero());

    // the ansatz spans every equivariant symmetric map, and the completion is
    // the simple superalgebra of type B(0,1)
    CHECK(esla::solver::equivariant_space_dim(p) == 1);
    auto comp = esla::solver::complete_unique(p);
    CHECK(comp.algebra.even_dim() == 3);
    CHECK(comp.algebra.odd_dim() == 2);
    check_completed_simple(comp.algebra, 5);
}

TEST_CASE("calibration: the three-factor module recovers the printed bracket") {
    auto p = d_presentation();
    auto a = esla::solver::build_ansatz(p);

    // invariant form = psi (x) psi (x) psi, already normalized
    auto bit = [](std::size_t w, std::size_t f) { return (w >> (2 - f)) & 1; };
    for (std::size_t w = 0; w < 8; ++w)
        for (std::size_t wp = 0; wp < 8; ++wp) {
            Cyc expect = Cyc::one();
            for (std::size_t f = 0; f < 3; ++f)
                expect = expect * sl2::psi(bit(w, f), bit(wp, f));
            CHECK(a.b.at(w, wp) == expect);
        }

    // the ideal-f block is lam_f * p_f (x) psi (x) psi, one scale for all
    // sixty-four pairs and all three coordinates
    auto printed = [&](std::size_t f, std::size_t hef, std::size_t w, std::size_t wp) {
        Cyc c = sl2::p_map(bit(w, f), bit(wp, f))[hef];
        for (std::size_t g = 0; g < 3; ++g)
            if (g != f) c = c * sl2::psi(bit(w, g), bit(wp, g));
        return c;
    };
    std::array<Cyc, 3> lam;
    for (std::size_t f = 0; f < 3; ++f) {
        for (std::size_t w = 0; w < 8 && lam[f].is_zero(); ++w)
            for (std::size_t wp = w; wp < 8 && lam[f].is_zero(); ++wp)
                for (std::size_t hef = 0; hef < 3; ++hef) {
                    Cyc pr = printed(f, hef, w, wp);
                    if (!pr.is_zero()) {
                        lam[f] = a.blocks[f][3 * f + hef].at(w, wp) * pr.inv();
                        break;
                    }
                }
        REQUIRE_FALSE(lam[f].is_zero());
        for (std::size_t w = 0; w < 8; ++w)
            for (std::size_t wp = w; wp < 8; ++wp)
                for (std::size_t hef = 0; hef < 3; ++hef)
                    CHECK(a.blocks[f][3 * f + hef].at(w, wp) == lam[f] * printed(f, hef, w, wp));
    }

    // Jacobi constraints: exactly the plane sigma1 + sigma2 + sigma3 = 0 in
    // the printed coordinates tau_f = lam_f sigma_f
    auto cs = esla::solver::jacobi_constraint_space(a);
    REQUIRE(cs.size() == 2);
    for (const auto& s : cs) CHECK((s[0] * lam[0] + s[1] * lam[1] + s[2] * lam[2]).is_zero());

    // completing at a printed admissible point reproduces the model bracket
    // coefficient for coefficient
    Vec sig(3);
    const long tau[3] = {1, 1, -2};
    for (std::size_t f = 0; f < 3; ++f) sig[f] = Cyc(tau[f]) * lam[f].inv();
    auto L = esla::solver::complete_superalgebra(a, sig);
    auto D = build_D(Cyc(1), Cyc(1), Cyc(-2));
    REQUIRE(L.dim == D.dim);
    CHECK(L.parity == D.parity);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            CHECK(dense(L.entry(i, j), L.dim) == dense(D.entry(i, j), D.dim));

    // no distinguished ray here: the admissible set is a whole plane
    CHECK_THROWS_AS(esla::solver::complete_unique(a), std::runtime_error);

    // exhaustiveness: one equivariant pairing per factor and nothing else
    CHECK(esla::solver::equivariant_space_dim(p) == 3);
    CHECK(esla::solver::equivariant_space_dim_modp(a, kPrime) == 3);
}

TEST_CASE("completion: sl2 and the cayley derivations give a 31-dim simple algebra") {
    auto p = spin_module_data(SpinModel::g3);
    auto a = esla::solver::build_ansatz(p);
    CHECK(esla::solver::jacobi_constraint_space(a).size() == 1);

    auto comp = esla::solver::complete_unique(a);
    CHECK(comp.algebra.even_dim() == 17);
    CHECK(comp.algebra.odd_dim() == 14);
    check_completed_simple(comp.algebra, 31);

    // the derivation-ideal block pairs u (x) u1 with v (x) v1 to an actual
    // derivation: it kills the unit and is traceless
    auto C = build_cayley();
    auto der = derivation_algebra(C, "d");
    Mat D8(8, 8);
    bool nonzero = false;
    for (std::size_t m = 3; m < 17; ++m) {
        const Cyc& c = a.blocks[1][m].at(1, 9);  // u (x) u1 at 1, v (x) v1 at 9
        if (c.is_zero()) continue;
        nonzero = true;
        for (std::size_t e = 0; e < 64; ++e) D8.a[e] = D8.a[e] + c * der.matrices[m - 3].a[e];
    }
    CHECK(nonzero);
    Vec unit(8, Cyc::zero());
    unit[cayley::e1] = Cyc::one();
    unit[cayley::e2] = Cyc::one();
    CHECK(esla::linalg::is_zero_vec(D8 * unit));
    Cyc tr;
    for (std::size_t i = 0; i < 8; ++i) tr = tr + D8.at(i, i);
    CHECK(tr.is_zero());

    CHECK(esla::solver::equivariant_space_dim_modp(a, kPrime) == 2);
    CHECK(esla::solver::equivariant_space_dim(p) == 2);
}

TEST_CASE("completion: the spin presentation gives a 40-dim simple algebra") {
    auto p = spin_module_data(SpinModel::f4_spin);
    auto a = esla::solver::build_ansatz(p);
    CHECK(esla::solver::jacobi_constraint_space(a).size() == 1);

    auto comp = esla::solver::complete_unique(a);
    CHECK(comp.algebra.even_dim() == 24);
    CHECK(comp.algebra.odd_dim() == 16);
    check_completed_simple(comp.algebra, 40);
    CHECK(even_closure(comp.algebra, 0, 3) == 3);
    CHECK(even_closure(comp.algebra, 3, 24) == 21);

    CHECK(esla::solver::equivariant_space_dim_modp(a, kPrime) == 2);
}

TEST_CASE("completion: the pauli-triple presentation gives a 40-dim simple algebra") {
    auto p = spin_module_data(SpinModel::f4_pauli);
    auto a = esla::solver::build_ansatz(p);
    CHECK(esla::solver::jacobi_constraint_space(a).size() == 1);

    auto comp = esla::solver::complete_unique(a);
    CHECK(comp.algebra.even_dim() == 24);
    CHECK(comp.algebra.odd_dim() == 16);
    check_completed_simple(comp.algebra, 40);
    CHECK(even_closure(comp.algebra, 0, 3) == 3);
    CHECK(even_closure(comp.algebra, 3, 24) == 21);

    CHECK(esla::solver::equivariant_space_dim_modp(a, kPrime) == 2);
}
