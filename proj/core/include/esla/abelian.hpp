#ifndef ESLA_ABELIAN_HPP
#define ESLA_ABELIAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace esla::abelian {

/// Dense integer matrix (presentation matrices, Weyl generator matrices).
/// Entries are arbitrary precision: Smith normal form can inflate
/// intermediate values well past 64 bits.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    static IntMatrix identity(std::size_t n);

    mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
};

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + ... with d1 | d2 | ..., each dk >= 2.
/// Canonical generator order: free generators first, then torsion.
struct AbGroup {
    long free_rank = 0;
    std::vector<long> torsion;

    std::size_t ngens() const { return static_cast<std::size_t>(free_rank) + torsion.size(); }
    bool is_finite() const { return free_rank == 0; }
    long order() const;  // throws if infinite
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbGroup& o) const = default;

    std::string to_string() const;  // "free_rank;d1,d2,..."
    static AbGroup parse(const std::string& s);
};

/// Element in canonical coordinates: length = ngens(), free part first,
/// torsion entries reduced to [0, dk).
struct GroupElem {
    std::vector<long> v;
    bool operator==(const GroupElem& o) const = default;
    auto operator<=>(const GroupElem& o) const = default;
};

GroupElem zero_elem(const AbGroup& G);
GroupElem reduce(const AbGroup& G, GroupElem x);
GroupElem add(const AbGroup& G, const GroupElem& x, const GroupElem& y);
GroupElem neg(const AbGroup& G, const GroupElem& x);
GroupElem sub(const AbGroup& G, const GroupElem& x, const GroupElem& y);
GroupElem scal(const AbGroup& G, long k, const GroupElem& x);
bool is_zero(const GroupElem& x);
/// Order of x in G; 0 encodes infinite order.
long order_of(const AbGroup& G, const GroupElem& x);
/// Generator i as an element.
GroupElem gen_elem(const AbGroup& G, std::size_t i);

/// Dense index <-> element for finite G (mixed radix over torsion).
long elem_index(const AbGroup& G, const GroupElem& x);
GroupElem elem_at(const AbGroup& G, long index);
std::vector<GroupElem> elements(const AbGroup& G);  // finite G only

/// Homomorphism given by images of the source's canonical generators.
struct GroupHom {
    AbGroup source, target;
    std::vector<GroupElem> images;

    GroupElem apply(const GroupElem& x) const;
    bool well_defined() const;  // torsion relations map to zero
    bool operator==(const GroupHom& o) const = default;
};

GroupHom compose(const GroupHom& f, const GroupHom& g);  // x -> f(g(x))
GroupHom identity_hom(const AbGroup& G);

/// Result of presenting a group by generators and relations.
struct Presentation {
    AbGroup group;
    /// Image of each abstract generator in canonical coordinates.
    std::vector<GroupElem> gen_images;
    /// For each canonical generator, an integer combination of the abstract
    /// generators mapping onto it (a section of the projection).
    std::vector<std::vector<long>> gen_preimages;
};

/// Cokernel of the relation matrix in Smith normal form. relations[r] is a
/// vector of length ngens meaning sum_i relations[r][i] * gen_i = 0.
Presentation normalize_presentation(std::size_t ngens,
                                    const std::vector<std::vector<long>>& relations);

struct Subgroup {
    AbGroup group;       // abstract isomorphism type
    GroupHom inclusion;  // embedding into the ambient group
};

/// Subgroup generated by the given elements, with its inclusion map.
Subgroup subgroup_generated(const AbGroup& G, const std::vector<GroupElem>& gens);

/// Quotient G / <gens>, with the projection map.
struct Quotient {
    AbGroup group;
    GroupHom projection;
};
Quotient quotient(const AbGroup& G, const std::vector<GroupElem>& gens);

enum class HomConstraint { none, injective_on_torsion, injective };

/// All homomorphisms U -> G for finite G, optionally filtered.
/// Throws std::invalid_argument when G is infinite.
std::vector<GroupHom> enumerate_homs(const AbGroup& U, const AbGroup& G,
                                     HomConstraint constraint = HomConstraint::none);

/// Number of homomorphisms U -> G for finite U, G by the gcd product formula
/// (cross-check for enumerate_homs).
long hom_count_formula(const AbGroup& U, const AbGroup& G);

/// All subgroups of a finite group, each as a sorted list of element indices.
/// Deterministic order (sorted lexicographically).
std::vector<std::vector<long>> all_subgroups(const AbGroup& G);

/// Closure of a subset under addition (finite G), as sorted element indices.
std::vector<long> subgroup_closure(const AbGroup& G, const std::vector<GroupElem>& gens);

/// Invariant factors of the subgroup of G given by element indices.
AbGroup subgroup_type(const AbGroup& G, const std::vector<long>& elem_indices);

/// All abelian groups of order exactly n, in invariant-factor form.
std::vector<AbGroup> abelian_groups_of_order(long n);

/// Smith normal form D = L * B * R with all transforms tracked.
struct SmithResult {
    IntMatrix D, L, Linv, R;
};
SmithResult smith_normal_form(const IntMatrix& B);

} // namespace esla::abelian

#endif
