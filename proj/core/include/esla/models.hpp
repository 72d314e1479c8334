#ifndef ESLA_MODELS_HPP
#define ESLA_MODELS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "esla/abelian.hpp"
#include "esla/cyclo.hpp"
#include "esla/gradings.hpp"
#include "esla/linalg.hpp"
#include "esla/superalg.hpp"

namespace esla::models {

using cyclo::Cyc;
using linalg::Mat;
using linalg::Vec;
using superalg::SparseVec;
using superalg::SuperAlgebra;

/// Unital non-super algebra with a polarized norm form. The quadratic norm
/// is n(x) = form(x,x)/2; the standard involution is bar(x) = n(x,1)1 - x.
struct AlgebraWithForm {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<SparseVec> mult;  // mult[i*dim+j] = b_i * b_j
    superalg::BilinearForm form;  // full polarization n(x,y)
    Vec unity;

    Vec mul(const Vec& x, const Vec& y) const;
    Vec basis_vec(std::size_t i) const;
    Cyc norm_quad(const Vec& x) const;  // n(x)
    Cyc norm(const Vec& x, const Vec& y) const { return form.eval(x, y); }
    Vec conj(const Vec& x) const;
};

/// M2 as the split quaternion algebra: norm = det, basis {I,H,E,F} with a
/// second distinguished basis {I,A,B,C}, A = diag(i,-i), B = F - E,
/// C = -i(E+F), satisfying A^2 = B^2 = C^2 = -I, AB = C.
AlgebraWithForm build_quaternion();

/// Indices and the {I,A,B,C} basis in {I,H,E,F} coordinates.
namespace quat {
inline constexpr std::size_t I = 0, H = 1, E = 2, F = 3;
Vec mat_I();
Vec mat_A();
Vec mat_B();
Vec mat_C();
}  // namespace quat

/// The split Cayley algebra on the good basis {e1,e2,u1,u2,u3,v1,v2,v3}.
/// Certified post hoc: unital, alternative, multiplicative norm, dim Der = 14.
AlgebraWithForm build_cayley();

namespace cayley {
inline constexpr std::size_t e1 = 0, e2 = 1, u1 = 2, u2 = 3, u3 = 4, v1 = 5, v2 = 6, v3 = 7;
}

/// Derivation algebra of an AlgebraWithForm as a purely even SuperAlgebra;
/// also returns the derivation matrices (the defining representation).
struct DerivationAlgebra {
    SuperAlgebra algebra;
    std::vector<Mat> matrices;  // per basis element of `algebra`
};
DerivationAlgebra derivation_algebra(const AlgebraWithForm& A, const std::string& label_prefix);

/// Skew algebra K(M_n, phi) of the orthogonal involution phi(X) =
/// Phi^{-1} X^T Phi attached to a monomial symmetric form: Phi has exactly
/// one nonzero entry t_j = Phi(j, sigma(j)) per row, sigma an involution,
/// t_{sigma(j)} = t_j. Basis element m is E_{jk} - (t_j/t_k) E_{sigma(k)sigma(j)}
/// with (j,k) = pairs[m] the lexicographically least position of its orbit.
struct SoAlgebra {
    superalg::SuperAlgebra algebra;  // purely even, dim n(n-1)/2
    std::size_t n = 0;
    std::vector<std::size_t> sigma;
    std::vector<Cyc> t;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Mat> matrices;  // defining representation

    /// Coordinates of a matrix X in K(M_n, phi) on the canonical basis.
    Vec coords(const Mat& x) const;
};

SoAlgebra so_of_monomial_form(const std::vector<std::size_t>& sigma, const std::vector<Cyc>& t);

/// Split form: Phi = id_q (+) s hyperbolic blocks [[0,1],[1,0]], n = q + 2s.
SoAlgebra so_split(std::size_t q, std::size_t s);

/// Elementary grading: deg E_jk = gamma_j - gamma_k restricted to the skew
/// algebra. Requires gamma_j + gamma_{sigma(j)} independent of j (else the
/// involution is not degree-preserving); throws std::invalid_argument.
struct SoElementary {
    SoAlgebra so;
    gradings::Grading grading;
};
SoElementary build_so_elementary(std::size_t q, std::size_t s, const abelian::AbGroup& G,
                                 const std::vector<abelian::GroupElem>& gamma);

/// 2x2 matrices over K as flat arrays {a,b,c,d} = [[a,b],[c,d]].
using Mat2 = std::array<Cyc, 4>;
Mat2 m2(long a, long b, long c, long d);
Mat2 m2_mul(const Mat2& x, const Mat2& y);
Mat2 m2_scale(const Cyc& s, const Mat2& x);
std::optional<Mat2> m2_inv(const Mat2& x);

/// sl2 structure helpers: coordinates (H,E,F), the natural 2-dim module V
/// with basis (u,v) and psi(u,v) = 1, and the symmetric map
/// p(x,y) = x psi(y,.) + y psi(x,.) expressed in sl2 coordinates.
namespace sl2 {
SuperAlgebra algebra();                       // dim 3, purely even
Mat2 to_matrix(const Vec& hef);               // (H,E,F) -> 2x2 trace-zero
Vec from_matrix(const Mat2& m);               // inverse of to_matrix
/// action on V: column index 0 = u, 1 = v
Mat2 action_on_V(const Vec& hef);
Cyc psi(std::size_t a, std::size_t b);        // psi(x_a, x_b), 0 = u, 1 = v
Vec p_map(std::size_t a, std::size_t b);      // p(x_a, x_b) in (H,E,F)
}  // namespace sl2

/// D(sigma1,sigma2,sigma3): dim 17 = (sl2)^3 + V (x) V (x) V.
/// Basis order: H1,E1,F1,H2,E2,F2,H3,E3,F3, then the 8 odd x_a(x)x_b(x)x_c
/// with 0 = u, 1 = v at odd index 9 + 4a + 2b + c.
SuperAlgebra build_D(const Cyc& s1, const Cyc& s2, const Cyc& s3);

namespace dmodel {
std::size_t even_index(std::size_t factor, std::size_t hef);  // factor 0..2, hef 0..2
std::size_t odd_index(std::size_t a, std::size_t b, std::size_t c);
/// Shorthand accessors: w(i) and wp(i), i = 0..3.
std::size_t w_index(std::size_t i);
std::size_t wp_index(std::size_t i);

/// The automorphism iota(f,g,h) for f,g,h in SL2(K): conjugation on each
/// sl2 summand, f (x) g (x) h on the odd part. Requires det = 1.
Mat iota(const Mat2& f, const Mat2& g, const Mat2& h);

/// Outer automorphism from a factor permutation: content at slot j moves to
/// slot perm[j]; the odd part is additionally scaled by mu. It maps
/// D(sigma) -> D(sigma') with sigma'_{perm[k]} = mu^{-2} sigma_k.
Mat outer(const std::array<std::size_t, 3>& perm, const Cyc& mu);
}  // namespace dmodel

/// Isomorphism D(sigma) -> D(sigma') with sigma'_{pi(k)} = lambda sigma_k,
/// odd part scaled by lambda^{-1/2}. Fails with nullopt when the square root
/// lies outside K. The returned matrix is verified to intertwine brackets.
struct DAlphaIso {
    Mat map;
    std::array<Cyc, 3> target_sigma;
};
std::optional<DAlphaIso> d_alpha_iso(const std::array<Cyc, 3>& sigma,
                                     const std::array<std::size_t, 3>& pi, const Cyc& lambda);

/// psl(2|2): 2x2 block matrices over M2 with equal diagonal-block traces,
/// modulo scalars; parity is by blocks. Basis: the sl2 parts of the two
/// diagonal blocks (H,E,F each), then the four entries of the upper-right
/// block row-major, then of the lower-left block. Carries the transport
/// data identifying it with the distinguished ideal of D(1,-1,0): the two
/// sl2 summands become the diagonal blocks and x (x) y (x) u goes to the
/// upper-right block sqrt2 x psi(y,.), x (x) y (x) v to the lower-left
/// block sqrt2 y psi(x,.).
struct Psl22 {
    superalg::SuperAlgebra algebra;          // dim 14
    std::vector<Mat> lifts;                  // basis lifts to 4x4 matrices
    std::vector<std::size_t> ideal_indices;  // D-model positions of the ideal basis
    Mat omega;                               // 14 x 17, zero on the third sl2 summand

    /// Coordinates of a 4x4 matrix with tr X11 = tr X22, taken mod scalars.
    Vec coords(const Mat& x) const;
    /// The transported inner automorphism: conjugation by diag(f, g) on the
    /// blocks composed with the action of h in the third sl2 slot, which
    /// mixes each off-diagonal block with the psi-adjoint of the other.
    Mat theta_iota(const Mat2& f, const Mat2& g, const Mat2& h) const;
    /// The transported factor-swap automorphism.
    Mat theta_phi() const;
};
Psl22 build_psl22();

/// Transport an automorphism of D(1,1,-2) to one of D(1,-1,0) on the same
/// underlying space: unchanged when its restriction to the even part fixes
/// the two distinguished sl2 summands, composed with the square root of the
/// parity automorphism (identity on even, i on odd) when it swaps them.
/// Input and output are both verified; throws std::invalid_argument.
Mat perturb_to_dminus1(const Mat& psi);

/// Supercommutative algebra by structure constants: xy = (-1)^{|x||y|} yx.
struct CommSuperAlgebra {
    std::size_t dim = 0;
    std::vector<int> parity;
    std::vector<std::string> labels;
    std::vector<SparseVec> mult;  // mult[i*dim+j] = b_i * b_j

    Vec mul(const Vec& x, const Vec& y) const;
    Vec basis_vec(std::size_t i) const;
    Mat left_mult(std::size_t i) const;  // operator x -> b_i x
    bool is_supercommutative() const;
};

/// Kaplansky superalgebra: Fe + V with V odd two-dimensional, e^2 = e,
/// ex = x/2, and xy = psi(x,y) e on V. Basis {e, u, v}, psi(u, v) = 1.
CommSuperAlgebra build_kaplansky3();

/// Kac ten-dimensional superalgebra F1 + (K (x) K) over the Kaplansky
/// algebra K, with unity 1 and product
///   (x (x) y)(x' (x) y') = (-1)^{|y||x'|} (xx' (x) yy' - 3/4 (x|x')(y|y') 1),
/// where (.|.) extends psi by (e|e) = 1/2, (e|V) = 0. Basis: index 0 = 1,
/// index 1 + 3a + b = t_a (x) t_b over the K basis {t_0 = e, t_1 = u,
/// t_2 = v}. Ships with its derivation superalgebra (two commuting copies
/// of osp(V): sp(V) even and V odd per tensor factor), the factor-swap
/// automorphism tau, and the idempotent spanning the copy of F that splits
/// off the even part.
struct Kac10 {
    CommSuperAlgebra algebra;
    std::vector<Mat> der;  // 10 matrices; first factor then second
    std::vector<int> der_parity;
    std::vector<std::string> der_labels;
    Mat tau;
    Vec central_idempotent;
};
Kac10 build_kac10();

/// The 40-dimensional Lie superalgebra (sl2 (x) K10) + Der(K10) with
///   [a (x) x, b (x) y] = [a,b] (x) xy - 2 n(a,b) [l_x, l_y],
///   [d, a (x) x] = a (x) d(x),
/// n the polarized determinant on sl2 = span{H,E,F} and l_x left
/// multiplication. Basis: index s*10 + k = sl2_s (x) k10_k for s in (H,E,F),
/// then 30..39 the derivation basis. The even part splits into two ideals:
/// sl2 (x) c for the central idempotent c (dim 3) and its complement
/// (dim 21, an so_7).
struct TkkAlgebra {
    SuperAlgebra algebra;
    Kac10 k10;
    std::vector<Vec> ideal_sl2;  // 3 vectors in algebra coordinates
    std::vector<Vec> ideal_so7;  // 21 vectors

    static std::size_t tensor_index(std::size_t s, std::size_t k) { return s * 10 + k; }
    static std::size_t der_index(std::size_t m) { return 30 + m; }
};
TkkAlgebra build_tkk_f4();

/// Module presentations handed to the bracket solver. The even parts and
/// actions:
///  - d_model: sl2^3 on V (x) V (x) V (dim 8), basis index 4a + 2b + c;
///  - g3: sl2 + Der(Cayley) on V (x) C0 (dim 14), C0 the trace-zero
///    Cayley elements on the basis {e1-e2, u1, v1, u2, v2, u3, v3};
///  - f4_spin: sl2 + so(C0, n) on V (x) C (dim 16), the so part acting
///    through half-commutators of left multiplications (the spin
///    representation: l_x l_y + l_y l_x = -n(x,y) id on C0);
///  - f4_pauli: sl2 + so(U, q) on Q' (x) Q (dim 16) for two quaternion
///    copies; U is spanned by seven anticommuting operators built from
///    Pauli-graded triples, sl2 acts by z: x (x) y -> -x (x) (yz).
enum class SpinModel { g3, f4_spin, f4_pauli };
superalg::ModulePresentation spin_module_data(SpinModel which);
superalg::ModulePresentation d_presentation();

/// The seven operators behind spin_module_data(f4_pauli):
/// Phi(q1 (x) q2 (x) q3): x (x) y -> (q1 x conj(q2)) (x) (q3 y), with each
/// op_i^2 = square[i] * id and op_i op_j = -op_j op_i for i != j.
struct AnticommutingSeven {
    std::vector<Mat> ops;  // 16 x 16
    std::vector<Cyc> square;
    std::vector<std::string> labels;
};
AnticommutingSeven pauli_triple_generators();

} // namespace esla::models

#endif
