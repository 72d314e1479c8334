#ifndef ESLA_SUPERALG_HPP
#define ESLA_SUPERALG_HPP

#include <string>
#include <utility>
#include <vector>

#include "esla/cyclo.hpp"
#include "esla/linalg.hpp"

namespace esla::superalg {

using cyclo::Cyc;
using linalg::Mat;
using linalg::Vec;

/// Sparse coordinate vector: (basis index, coefficient) pairs.
using SparseVec = std::vector<std::pair<std::size_t, Cyc>>;

/// Finite-dimensional superalgebra by structure constants over Q(zeta_24).
///
/// Sign convention: the even part is an ordinary Lie algebra, the odd-odd
/// bracket is symmetric; super-antisymmetry reads
/// [x,y] = -(-1)^{|x||y|} [y,x], and the Jacobi identity is checked in the
/// derivation form [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]].
struct SuperAlgebra {
    std::size_t dim = 0;
    std::vector<int> parity;             // 0 even, 1 odd
    std::vector<std::string> labels;
    std::vector<SparseVec> c;            // c[i*dim+j] = [b_i, b_j]

    SuperAlgebra() = default;
    explicit SuperAlgebra(std::size_t d)
        : dim(d), parity(d, 0), labels(d), c(d * d) {}

    const SparseVec& entry(std::size_t i, std::size_t j) const { return c[i * dim + j]; }
    void add_term(std::size_t i, std::size_t j, std::size_t k, const Cyc& coeff);
    void set_entry(std::size_t i, std::size_t j, SparseVec v);

    /// Fill [b_j, b_i] for i < j from [b_i, b_j] via super-antisymmetry.
    /// Builders may then define only the upper triangle plus odd diagonals.
    void symmetrize();

    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;          // y -> [x, y]
    Vec basis_vec(std::size_t i) const;

    std::size_t even_dim() const;
    std::size_t odd_dim() const;

    /// Parity of a homogeneous vector; -1 if mixed or zero.
    int parity_of(const Vec& x) const;
};

struct AxiomReport {
    bool antisymmetry = false;
    bool parity_respected = false;
    bool jacobi = false;
    std::string first_failure;
    bool pass() const { return antisymmetry && parity_respected && jacobi; }
};

/// Exhaustive exact check over all basis pairs/triples.
AxiomReport verify_axioms(const SuperAlgebra& L);

struct IdealReport {
    std::size_t center_dim = 0;
    std::size_t derived_dim = 0;
    std::vector<Vec> center_basis;
    /// Proper nontrivial ideals found from the seed closure search, minimal
    /// under containment, as echelonized bases. Parity-graded by
    /// construction (homogeneous seeds).
    std::vector<std::vector<Vec>> minimal_ideals;
    bool simple = false;
};

/// Center, derived subalgebra and minimal-ideal search. Seeds: every basis
/// vector plus caller-provided vectors (e.g. eigenvectors of a Cartan
/// element's adjoint action). The simplicity flag is the operational check:
/// trivial center, perfect, and every seed closure is the whole algebra.
IdealReport ideals_and_center(const SuperAlgebra& L, const std::vector<Vec>& extra_seeds = {});

/// Closure of a subspace under bracketing with the whole algebra.
linalg::SpanBasis ideal_closure(const SuperAlgebra& L, const std::vector<Vec>& seeds);

/// The parity automorphism x -> (-1)^{|x|} x.
Mat delta_map(const SuperAlgebra& L);

/// phi(bracket(x,y)) = bracket(phi x, phi y) on all basis pairs, phi invertible.
bool is_automorphism(const SuperAlgebra& L, const Mat& phi);

/// Same check between two algebras: m maps src coordinates to dst coordinates.
bool is_bracket_isomorphism(const SuperAlgebra& src, const SuperAlgebra& dst, const Mat& m);

/// The same algebra on a new basis (columns of `basis` in old coordinates).
/// Each new basis vector must be parity-homogeneous; throws otherwise.
SuperAlgebra conjugate_basis(const SuperAlgebra& L, const std::vector<Vec>& basis,
                             std::vector<std::string> labels);

/// Direct sum: block-diagonal structure constants, labels concatenated.
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

/// Bilinear form with a declared symmetry kind.
struct BilinearForm {
    enum class Kind { symmetric, alternating, supersymmetric };
    Kind kind = Kind::symmetric;
    Mat gram;

    Cyc eval(const Vec& x, const Vec& y) const;
    bool matches_declared_symmetry(const std::vector<int>* parity = nullptr) const;
};

/// Structure-constant cache serialization (JSON envelope, format-versioned).
std::string to_cache_json(const SuperAlgebra& L);
SuperAlgebra from_cache_json(const std::string& text);

/// A purely even Lie algebra l0, a split of its basis range into simple
/// ideals, and a faithful action on the space that will become the odd part.
/// This is all the data the bracket solver needs to complete the odd-odd
/// product.
struct ModulePresentation {
    SuperAlgebra l0;  // purely even
    /// Disjoint [begin, end) basis ranges covering l0, one per simple ideal.
    std::vector<std::pair<std::size_t, std::size_t>> ideals;
    std::vector<Mat> rho;  // action of each l0 basis vector on the module
    std::vector<std::string> module_labels;
    std::string name;

    std::size_t module_dim() const { return rho.empty() ? 0 : rho[0].rows; }
};

/// Checks that the ideal ranges partition the l0 basis, that each range is
/// closed under bracketing with all of l0, and that rho is a Lie-algebra
/// homomorphism on all basis pairs.
bool verify_presentation(const ModulePresentation& p);

} // namespace esla::superalg

#endif
