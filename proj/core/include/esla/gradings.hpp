#ifndef ESLA_GRADINGS_HPP
#define ESLA_GRADINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "esla/abelian.hpp"
#include "esla/linalg.hpp"
#include "esla/superalg.hpp"

namespace esla::gradings {

using abelian::AbGroup;
using abelian::GroupElem;
using abelian::GroupHom;

/// Group grading stored via an adapted basis: every basis vector of
/// `algebra` is homogeneous, vector i having degree `degree[i]` in `group`.
/// When the grading lives on a change of basis of an ambient model,
/// `adapted` keeps the adapted basis in ambient coordinates (provenance for
/// tests; empty means the ambient basis itself).
struct Grading {
    superalg::SuperAlgebra algebra;
    AbGroup group;
    std::vector<GroupElem> degree;
    std::vector<linalg::Vec> adapted;
    std::string name;
};

struct GradingReport {
    bool compatible = false;         // [L_g, L_h] subset of L_{gh}
    bool parity_constant = false;    // each component purely even or purely odd
    std::string first_failure;
    bool pass() const { return compatible && parity_constant; }
};

/// Exact check of the grading axioms over every basis pair.
GradingReport verify_grading(const Grading& g);

/// Sorted list of distinct degrees with nonzero component.
std::vector<GroupElem> support(const Grading& g);

/// Degrees of the even (parity 0) basis vectors only — the support of the
/// grading induced on inner derivations (= even part for the centerless
/// algebras in this library).
std::vector<GroupElem> even_support(const Grading& g);

/// Type tuple (h_1, h_2, ...): h_i = number of components of dimension i;
/// trailing zeros trimmed.
std::vector<std::size_t> grading_type(const Grading& g);

struct UniversalGroup {
    AbGroup u;
    /// Canonical degree of each basis vector, in U coordinates.
    std::vector<GroupElem> degree;
    /// Realization U -> G carrying the canonical degrees to the given ones.
    GroupHom realization;
};

/// Universal group: one generator per support element, one relation
/// s_a + s_b = s_c per nonzero component bracket. Throws std::runtime_error
/// if the canonical map Supp -> U fails to stay injective.
UniversalGroup universal_group(const Grading& g);

/// The same grading re-expressed over its universal group.
Grading over_universal_group(const Grading& g);

/// Coarsening: compose every degree with alpha (alpha.source must equal
/// g.group).
Grading induce(const Grading& g, const GroupHom& alpha);

/// Admissibility of alpha: U -> G for a grading over its universal group:
/// (alpha, projection mod torsion) injective on the support.
bool is_admissible(const GroupHom& alpha, const Grading& fine);

/// Nontrivial subgroups E of the torsion of U with E meeting the even
/// support only at the identity: coarsening by any such E (and only these)
/// stays almost fine. Each subgroup is returned as its full element list in
/// U coordinates, deterministically ordered.
std::vector<std::vector<GroupElem>> almost_fine_coarsenings(const Grading& fine);

/// The parity homomorphism U -> Z_2 sending Supp(L_j) to j, if well defined.
std::optional<GroupHom> parity_hom(const Grading& g);

} // namespace esla::gradings

#endif
