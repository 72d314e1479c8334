#include "esla/gradings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace esla::gradings {

namespace ab = esla::abelian;

GradingReport verify_grading(const Grading& g) {
    GradingReport rep;
    rep.compatible = true;
    rep.parity_constant = true;
    const auto& L = g.algebra;
    if (g.degree.size() != L.dim) {
        rep.compatible = false;
        rep.first_failure = "degree list length != dim";
        return rep;
    }

    std::map<GroupElem, int> comp_parity;
    for (std::size_t i = 0; i < L.dim; ++i) {
        auto [it, fresh] = comp_parity.try_emplace(g.degree[i], L.parity[i]);
        if (!fresh && it->second != L.parity[i]) {
            rep.parity_constant = false;
            rep.first_failure = "component of " + L.labels[i] + " mixes parities";
            break;
        }
    }

    for (std::size_t i = 0; i < L.dim && rep.compatible; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            GroupElem target = ab::add(g.group, g.degree[i], g.degree[j]);
            for (const auto& [k, coeff] : L.entry(i, j))
                if (!(g.degree[k] == target)) {
                    rep.compatible = false;
                    rep.first_failure = "[" + L.labels[i] + "," + L.labels[j] +
                                        "] leaves its component";
                    break;
                }
            if (!rep.compatible) break;
        }
    return rep;
}

std::vector<GroupElem> support(const Grading& g) {
    std::vector<GroupElem> s(g.degree.begin(), g.degree.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<GroupElem> even_support(const Grading& g) {
    std::vector<GroupElem> s;
    for (std::size_t i = 0; i < g.algebra.dim; ++i)
        if (g.algebra.parity[i] == 0) s.push_back(g.degree[i]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<std::size_t> grading_type(const Grading& g) {
    std::map<GroupElem, std::size_t> comp_dim;
    for (const auto& d : g.degree) comp_dim[d]++;
    std::size_t maxdim = 0;
    for (const auto& [d, n] : comp_dim) maxdim = std::max(maxdim, n);
    std::vector<std::size_t> type(maxdim, 0);
    for (const auto& [d, n] : comp_dim) type[n - 1]++;
    return type;
}

UniversalGroup universal_group(const Grading& g) {
    auto supp = support(g);
    auto idx = [&](const GroupElem& d) {
        auto it = std::lower_bound(supp.begin(), supp.end(), d);
        if (it == supp.end() || !(*it == d))
            throw std::runtime_error("universal_group: degree outside support");
        return static_cast<std::size_t>(it - supp.begin());
    };

    const auto& L = g.algebra;
    std::vector<std::vector<long>> relations;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            if (L.entry(i, j).empty()) continue;
            GroupElem prod = ab::add(g.group, g.degree[i], g.degree[j]);
            std::vector<long> rel(supp.size(), 0);
            rel[idx(g.degree[i])] += 1;
            rel[idx(g.degree[j])] += 1;
            rel[idx(prod)] -= 1;
            if (std::any_of(rel.begin(), rel.end(), [](long v) { return v != 0; }))
                relations.push_back(std::move(rel));
        }
    std::sort(relations.begin(), relations.end());
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

    auto pres = ab::normalize_presentation(supp.size(), relations);

    UniversalGroup out;
    out.u = pres.group;
    // injectivity of Supp -> U
    std::vector<GroupElem> images = pres.gen_images;
    {
        auto sorted = images;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::runtime_error("not a group grading: support does not embed in U");
    }
    out.degree.resize(L.dim);
    for (std::size_t i = 0; i < L.dim; ++i) out.degree[i] = images[idx(g.degree[i])];

    // realization U -> G via the tracked preimages of the canonical generators
    GroupHom real;
    real.source = out.u;
    real.target = g.group;
    for (std::size_t k = 0; k < out.u.ngens(); ++k) {
        GroupElem im = ab::zero_elem(g.group);
        const auto& comb = pres.gen_preimages[k];
        for (std::size_t s = 0; s < comb.size(); ++s)
            if (comb[s] != 0) im = ab::add(g.group, im, ab::scal(g.group, comb[s], supp[s]));
        real.images.push_back(im);
    }
    if (!real.well_defined())
        throw std::runtime_error("universal_group: realization map ill-defined");
    // the realization must reproduce the given degrees
    for (std::size_t i = 0; i < L.dim; ++i)
        if (!(real.apply(out.degree[i]) == g.degree[i]))
            throw std::runtime_error("universal_group: realization does not factor the degrees");
    out.realization = std::move(real);
    return out;
}

Grading over_universal_group(const Grading& g) {
    auto ug = universal_group(g);
    Grading out = g;
    out.group = ug.u;
    out.degree = ug.degree;
    return out;
}

Grading induce(const Grading& g, const GroupHom& alpha) {
    if (!(alpha.source == g.group))
        throw std::invalid_argument("induce: homomorphism source mismatch");
    Grading out = g;
    out.group = alpha.target;
    for (auto& d : out.degree) d = alpha.apply(d);
    return out;
}

bool is_admissible(const GroupHom& alpha, const Grading& fine) {
    if (!(alpha.source == fine.group))
        throw std::invalid_argument("is_admissible: homomorphism source mismatch");
    auto supp = support(fine);
    long fr = fine.group.free_rank;
    // (alpha, projection mod torsion) injective on the support
    std::vector<std::pair<std::vector<long>, GroupElem>> keys;
    keys.reserve(supp.size());
    for (const auto& s : supp) {
        std::vector<long> free_part(s.v.begin(), s.v.begin() + fr);
        keys.emplace_back(std::move(free_part), alpha.apply(s));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::vector<std::vector<GroupElem>> almost_fine_coarsenings(const Grading& fine) {
    const auto& U = fine.group;
    ab::AbGroup tors{0, U.torsion};
    std::vector<std::vector<GroupElem>> out;
    if (tors.is_trivial()) return out;

    // even support restricted to torsion, in U coordinates
    auto sigma = even_support(fine);
    auto lift = [&](const GroupElem& t) {
        GroupElem u = ab::zero_elem(U);
        for (std::size_t i = 0; i < tors.torsion.size(); ++i)
            u.v[static_cast<std::size_t>(U.free_rank) + i] = t.v[i];
        return u;
    };

    for (const auto& sub : ab::all_subgroups(tors)) {
        if (sub.size() <= 1) continue;  // trivial subgroup never coarsens
        bool ok = true;
        std::vector<GroupElem> elems;
        for (long id : sub) {
            GroupElem u = lift(ab::elem_at(tors, id));
            if (!ab::is_zero(u) &&
                std::binary_search(sigma.begin(), sigma.end(), u))
                ok = false;
            elems.push_back(std::move(u));
        }
        if (ok) {
            std::sort(elems.begin(), elems.end());
            out.push_back(std::move(elems));
        }
    }
    return out;
}

std::optional<GroupHom> parity_hom(const Grading& g) {
    ab::AbGroup z2{0, {2}};
    for (const auto& h : ab::enumerate_homs(g.group, z2)) {
        bool ok = true;
        for (std::size_t i = 0; i < g.algebra.dim && ok; ++i)
            ok = h.apply(g.degree[i]).v[0] == g.algebra.parity[i];
        if (ok) return h;
    }
    return std::nullopt;
}

} // namespace esla::gradings
