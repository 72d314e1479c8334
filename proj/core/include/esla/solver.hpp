#ifndef ESLA_SOLVER_HPP
#define ESLA_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "esla/cyclo.hpp"
#include "esla/linalg.hpp"
#include "esla/superalg.hpp"

/// Completes a Lie superalgebra from a module presentation: the odd-odd
/// bracket is solved for as a combination of one canonical equivariant
/// pairing per simple ideal of the even part, subject to the three-odd
/// Jacobi identity (the Jacobi cases with at most two odd entries hold for
/// any combination, by equivariance).
namespace esla::solver {

using cyclo::Cyc;
using linalg::Mat;
using linalg::Vec;

/// Invariant bilinear form on the module: b(Xw, w') + b(w, Xw') = 0 for all
/// X in l0, computed by intersecting kernels generator by generator. Throws
/// unless the space is one-dimensional and the form alternating; the result
/// is scaled so its first nonzero entry (row major) is 1.
Mat invariant_module_form(const superalg::ModulePresentation& p);

/// The pairing W x W -> ideal_i defined by <d(w,w'), X>_kappa = b(Xw, w')
/// for X in the ideal, kappa the trace form of the action there. Returned
/// as one coefficient matrix per basis element of l0 (zero outside the
/// ideal block): d(w,w') = sum_m coeff[m].at(w,w') X_m. Verified symmetric
/// and equivariant under all of l0 before returning.
std::vector<Mat> dual_action_pairing(const superalg::ModulePresentation& p, const Mat& b,
                                     std::size_t ideal);

/// The data complete_superalgebra consumes: the module form and the dual
/// pairing blocks of every ideal.
struct BracketAnsatz {
    superalg::ModulePresentation pres;
    Mat b;
    std::vector<std::vector<Mat>> blocks;  // blocks[i][m], m over all of l0
};
BracketAnsatz build_ansatz(const superalg::ModulePresentation& p);

/// Basis of the sigma with [w,w'] = sum_i sigma_i d_i(w,w') satisfying the
/// three-odd Jacobi identity.
std::vector<Vec> jacobi_constraint_space(const BracketAnsatz& a);

/// Assembles the superalgebra at an admissible coefficient vector; basis is
/// l0 first, then the module.
superalg::SuperAlgebra complete_superalgebra(const BracketAnsatz& a, const Vec& sigma);

/// complete_superalgebra at the unique admissible ray (throws if the
/// constraint space is not a line), rescaled so the calibration pair — the
/// lexicographically first (w, w', m) with a nonzero bracket coefficient —
/// has coefficient exactly 1.
struct Completed {
    superalg::SuperAlgebra algebra;
    Vec sigma;
    std::size_t cal_w = 0, cal_wp = 0, cal_m = 0;
};
Completed complete_unique(const BracketAnsatz& a);
Completed complete_unique(const superalg::ModulePresentation& p);

/// Dimension of the full space of symmetric equivariant maps W x W -> l0.
/// A value equal to the number of ideals certifies the per-ideal ansatz
/// exhaustive. Exact over Q(zeta24); slow for the larger presentations.
std::size_t equivariant_space_dim(const superalg::ModulePresentation& p);

/// Same dimension certified over Z/p for a prime p = 1 (mod 24), entries
/// specialized at a primitive 24th root of unity. Rank only drops under
/// specialization, so the modular solution space contains the images of the
/// ansatz blocks; once those images are checked independent mod p, a modular
/// rank forcing nullity = ideal count proves the exact dimension (the
/// elimination can stop at that rank, since it cannot be exceeded). Throws
/// when the prime is unlucky (block images dependent mod p).
std::size_t equivariant_space_dim_modp(const BracketAnsatz& a, std::uint64_t prime);

}  // namespace esla::solver

#endif
