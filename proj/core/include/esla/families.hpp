#ifndef ESLA_FAMILIES_HPP
#define ESLA_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "esla/gradings.hpp"
#include "esla/models.hpp"

namespace esla::families {

using abelian::AbGroup;
using abelian::GroupElem;
using gradings::Grading;

/// The multiplication table of a unital algebra in a SuperAlgebra container
/// (all parities even), so the grading machinery treats associative products
/// and Lie brackets uniformly.
superalg::SuperAlgebra product_container(const models::AlgebraWithForm& a);

/// Throws std::invalid_argument(<what>) unless the subgroup generated by
/// gens in G has the expected invariant-factor type.
void require_subgroup_type(const AbGroup& G, const std::vector<GroupElem>& gens,
                           const AbGroup& expected, const std::string& what);

// ---------------------------------------------------------------------------
// Building blocks: the model gradings on M2, sl2, M_n and the Cayley algebra.
// ---------------------------------------------------------------------------

/// M2, basis {I,H,E,F}: deg I = deg H = e, deg E = g, deg F = -g.
Grading m2_cartan(const AbGroup& G, const GroupElem& g);

/// M2, basis {I,A,B,C}: deg I = e, A = a, B = b, C = a+b; <a,b> must be
/// isomorphic to Z_2 x Z_2.
Grading m2_pauli(const AbGroup& G, const GroupElem& a, const GroupElem& b);

/// sl2 = span{H,E,F}, Cartan degrees as in m2_cartan.
Grading sl2_cartan(const AbGroup& G, const GroupElem& g);

/// sl2 on the basis {A,B,C}: deg A = a, B = b, C = a+b; <a,b> = Z_2 x Z_2.
Grading sl2_pauli(const AbGroup& G, const GroupElem& a, const GroupElem& b);

/// M_n elementary: deg E_jk = gamma_j - gamma_k.
Grading mn_elementary(std::size_t n, const AbGroup& G, const std::vector<GroupElem>& gamma);

/// M_n generalized Pauli on the basis X^j Y^k, X = diag(1, z, ..., z^{n-1}),
/// Y the cyclic permutation, z a primitive n-th root of unity (n must divide
/// 24): deg X^j Y^k = j a + k b; <a,b> = Z_n x Z_n.
Grading mn_pauli(std::size_t n, const AbGroup& G, const GroupElem& a, const GroupElem& b);

/// Cayley algebra, good basis: deg e_1 = deg e_2 = e, deg u_i = h_i,
/// deg v_i = -h_i; requires h_1 + h_2 + h_3 = 0.
Grading cayley_cartan(const AbGroup& G, const std::array<GroupElem, 3>& h);

/// Cayley algebra graded by <a_1,a_2,a_3> = Z_2^3 on the adapted basis
/// {e_1+e_2, e_1-e_2, u_i+v_i, u_i-v_i}.
Grading cayley_pauli(const AbGroup& G, const std::array<GroupElem, 3>& a);

/// Homogeneous basis of a space of operators on a graded vector space:
/// operators[m] spans some subspace S of End(A); the result splits S into
/// homogeneous pieces (degree d maps component g into component g + d).
/// Returns one (degree, coordinate vectors in the operators[] basis) pair
/// per occurring degree; throws if S is not a graded subspace.
std::vector<std::pair<GroupElem, std::vector<linalg::Vec>>> homogeneous_operator_basis(
    const std::vector<linalg::Mat>& operators, const AbGroup& G,
    const std::vector<GroupElem>& degree);

// ---------------------------------------------------------------------------
// Ambient models for the exceptional families, built once per process.
// ---------------------------------------------------------------------------

const superalg::SuperAlgebra& ambient_g3();        // dim 31
const superalg::SuperAlgebra& ambient_f4_spin();   // dim 40, so7 on the Cayley trace-zero form
const superalg::SuperAlgebra& ambient_f4_pauli();  // dim 40, so7 on seven anticommuting triples
const models::TkkAlgebra& ambient_f4_tkk();        // dim 40, (sl2 (x) K10) + Der(K10)
const models::Psl22& ambient_psl22();              // dim 14

/// D(1, alpha, -1-alpha), dim 17. Throws on alpha in {0, -1} (not simple).
superalg::SuperAlgebra ambient_d(const cyclo::Cyc& alpha);

// ---------------------------------------------------------------------------
// Grading families on the exceptional algebras. Parameters are checked
// against the defining constraints (subgroup types, order conditions,
// product relations); violations throw std::invalid_argument naming the
// failed condition. Every constructor returns a grading whose `algebra` is
// the ambient model rewritten on the adapted basis.
// ---------------------------------------------------------------------------

/// G(3), Cartan Cayley type: sl2 Cartan degrees from g, Cayley Cartan
/// degrees from h (h1 + h2 + h3 = 0). Fine over Z^3 with type (28,0,1).
Grading g3_cartan(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 3>& h);

/// G(3), Cayley-Dickson doubling type: sl2 Cartan degrees from g, Cayley
/// Pauli degrees from <a1,a2,a3> = Z_2^3. Fine over Z x Z_2^3, type (17,7).
Grading g3_pauli(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 3>& a);

/// F(4), Cartan type: h1 h2 h3 h4 = e; spin-module degrees (e1,e2,u_i,v_i) =
/// (h4, -h4, h_i, -h_i). Fine over Z^4 with type (36,0,0,1).
Grading f4_cartan(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 4>& h);

/// F(4), Cayley-Dickson doubling type: spin module carries the full Cayley
/// Pauli grading by <a1,a2,a3> = Z_2^3. Fine over Z x Z_2^3, type (19,0,7).
Grading f4_doubling(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 3>& a);

/// F(4), Kac-superalgebra tensor type on the TKK model: K3 (x) K3 Cartan
/// degrees from (g1,g2), sl2 Pauli degrees from <a,b> = Z_2^2. Fine over
/// Z^2 x Z_2^2 with type (32,4).
Grading f4_tkk_cartan(const AbGroup& G, const GroupElem& g1, const GroupElem& g2,
                      const GroupElem& a, const GroupElem& b);

/// F(4), factor-swap refinement on the TKK model: the swap-symmetric part of
/// the (g,g) tensor grading keeps its degree, the skew part shifts by h;
/// <a,b,h> = Z_2^3. Fine over Z x Z_2^3 with type (31,0,3).
Grading f4_tkk_swap(const AbGroup& G, const GroupElem& g, const GroupElem& h,
                    const GroupElem& a, const GroupElem& b);

/// F(4), quaternion Pauli type: module (Q' (x) Q)^[g] with Pauli degrees
/// from (a,b) and (h,g^2); <g,h,a,b> = Z_4 x Z_2^3. Fine at that group with
/// type (24,6,0,1).
Grading f4_pauli(const AbGroup& G, const GroupElem& g, const GroupElem& h, const GroupElem& a,
                 const GroupElem& b);

/// D(alpha), inner Cartan type: h1 h2 h3 h4 = e; sl2 summand i gets Cartan
/// degrees from the product of {h1,h2,h3} omitting h_i; deg w_i = h_i.
/// Fine over Z^3 with type (14,0,1).
Grading d_cartan(const cyclo::Cyc& alpha, const AbGroup& G, const std::array<GroupElem, 4>& h);

/// D(alpha), inner Pauli type: <s,a,b> = Z_4 x Z_2^2, summands get Pauli
/// degrees from (a, s^2 a), (b, s^2 b), (ab, s^2 ab); odd characters of
/// <a,b> pair w's at degree s h. Fine at that group with type (14,0,1).
Grading d_pauli(const cyclo::Cyc& alpha, const AbGroup& G, const GroupElem& s, const GroupElem& a,
                const GroupElem& b);

/// D(alpha), inner mixed type: summand `which` (1..3) gets Cartan degrees
/// from g^2, the other two Pauli degrees from <a,b> = Z_2^2; odd part is
/// M2 (x) V through x (x) y -> x psi(y, .) on the Pauli factors. Fine over
/// Z x Z_2^2 with type (11,3).
Grading d_mixed(const cyclo::Cyc& alpha, std::size_t which, const AbGroup& G, const GroupElem& g,
                const GroupElem& a, const GroupElem& b);

/// D(omega), outer type with an order-3 cyclic component: h^3 = e != h;
/// X^(i) = (X, w^i X, w^2i X) has degree h^i times the Cartan degree from
/// g^2. Fine over Z x Z_3 with type (17).
Grading d_outer3(const AbGroup& G, const GroupElem& g, const GroupElem& h);

/// D(1) or D(-1) (alpha = +-1), outer mixed type: T = <a,b> = Z_2^2,
/// h^2 = e, h not in T \ {e} (h = e degenerates to the inner mixed family);
/// X^(i) = (X, (-1)^i X) on the first two summands, Cartan from g^2 on the
/// third. Fine over Z x Z_2^3 with type (17).
Grading d_outer_mixed(const cyclo::Cyc& alpha, const AbGroup& G, const GroupElem& g,
                      const GroupElem& h, const GroupElem& a, const GroupElem& b);

/// D(1) or D(-1), outer Cartan type: h^2 = e != h; swap-eigenvector Cartan
/// degrees from g2 and h on the first two summands, Cartan from g1^2 on the
/// third. Fine over Z^2 x Z_2 with type (15,1).
Grading d_outer_cartan(const cyclo::Cyc& alpha, const AbGroup& G, const GroupElem& g1,
                       const GroupElem& g2, const GroupElem& h);

/// D(1) or D(-1), outer Pauli type: <a,b> = Z_4^2; even part graded by
/// <a^2, b^2> plus the a^{+-1} eigenvectors, odd part by the characters of
/// <a> at degrees b^{+-1} h. Fine at Z_4^2 with type (13,2).
Grading d_outer_pauli(const cyclo::Cyc& alpha, const AbGroup& G, const GroupElem& a,
                      const GroupElem& b);

/// A(1,1) = psl(2|2) on the 4x4 matrix model; the six families below are
/// the restrictions of the D(-1) families through the distinguished ideal.

/// Elementary: deg E_jk = gamma_j - gamma_k. Fine over Z^3, type (12,1).
Grading a11_elementary(const AbGroup& G, const std::array<GroupElem, 4>& gamma);

/// Inner Pauli counterpart: <s,a,b> = Z_4 x Z_2^2. Fine there, type (12,1).
Grading a11_product(const AbGroup& G, const GroupElem& s, const GroupElem& a, const GroupElem& b);

/// Inner mixed counterpart: <a,b> = Z_2^2. Fine over Z x Z_2^2, type (14).
Grading a11_mixed(const AbGroup& G, const GroupElem& g, const GroupElem& a, const GroupElem& b);

/// Outer mixed counterpart: T = <a,b> = Z_2^2, h^2 = e, h not in T \ {e}.
/// Fine over Z x Z_2^3, type (14).
Grading a11_outer_mixed(const AbGroup& G, const GroupElem& g, const GroupElem& h,
                        const GroupElem& a, const GroupElem& b);

/// Outer Cartan counterpart: h^2 = e != h. Fine over Z^2 x Z_2, type (14).
Grading a11_outer_cartan(const AbGroup& G, const GroupElem& g1, const GroupElem& g2,
                         const GroupElem& h);

/// Pauli counterpart: <a,b> = Z_4^2, M4 Pauli basis with the block structure
/// carried by the parity idempotent X^2. Fine at Z_4^2, type (14).
Grading a11_pauli(const AbGroup& G, const GroupElem& a, const GroupElem& b);

// ---------------------------------------------------------------------------
// Uniform construction interface.
// ---------------------------------------------------------------------------

enum class Family {
    G3_C, G3_P,
    F4_1, F4_2, F4_3, F4_4, F4_5,
    D_IC, D_IP, D_IM1, D_IM2, D_IM3, D_III, D_IIM, D_IIC, D_IIP,
    A_1, A_2, A_3, A_4, A_5, A_6,
    M2_C, M2_P, SL2_C, SL2_P, CAYLEY_C, CAYLEY_P, SO_ELEM, MN_ELEM, MN_PAULI,
};

const char* family_name(Family f);
std::optional<Family> family_from_string(const std::string& name);

/// Parameters for construct(). `params` is the family's tuple in definition
/// order:
///   G3_C {g,h1,h2,h3}  G3_P {g,a1,a2,a3}  F4_1 {g,h1..h4}  F4_2 {g,a1,a2,a3}
///   F4_3 {g1,g2,a,b}   F4_4 {g,h,a,b}     F4_5 {g,h,a,b}
///   D_IC {h1..h4}  D_IP {s,a,b}  D_IM* {g,a,b}  D_III {g,h}
///   D_IIM {g,h,a,b}  D_IIC {g1,g2,h}  D_IIP {a,b}
///   A_1 {g1..g4}  A_2 {s,a,b}  A_3 {g,a,b}  A_4 {g,h,a,b}  A_5 {g1,g2,h}
///   A_6 {a,b}
///   M2_C/SL2_C {g}  M2_P/SL2_P {a,b}  CAYLEY_C {h1,h2,h3}  CAYLEY_P {a1,a2,a3}
///   SO_ELEM {gamma_1..gamma_{q+2s}} with n = q   MN_ELEM {gamma_1..gamma_n}
///   with n = n   MN_PAULI {a,b} with n = n
/// `alpha` selects the D(alpha) model for the D families (default: 2 for the
/// inner families, omega for D_III, 1 for the outer order-2 families).
struct FamilySpec {
    Family family = Family::M2_C;
    AbGroup group;
    std::vector<GroupElem> params;
    std::optional<cyclo::Cyc> alpha;
    std::size_t n = 0;
};

/// Builds the family member; throws std::invalid_argument on a parameter
/// tuple violating the family's defining constraints.
Grading construct(const FamilySpec& spec);

} // namespace esla::families

#endif
