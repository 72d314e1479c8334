#include "esla/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace esla::abelian {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix r(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

long AbGroup::order() const {
    if (!is_finite()) throw std::domain_error("AbGroup::order: infinite group");
    long n = 1;
    for (long d : torsion) n *= d;
    return n;
}

std::string AbGroup::to_string() const {
    std::string s = std::to_string(free_rank) + ";";
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(torsion[i]);
    }
    return s;
}

AbGroup AbGroup::parse(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("AbGroup::parse: missing ';'");
    AbGroup g;
    g.free_rank = std::stol(s.substr(0, semi));
    if (g.free_rank < 0) throw std::invalid_argument("AbGroup::parse: negative free rank");
    std::string rest = s.substr(semi + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        long d = std::stol(rest.substr(pos, comma - pos));
        if (d < 2) throw std::invalid_argument("AbGroup::parse: invariant factor < 2");
        if (!g.torsion.empty() && d % g.torsion.back() != 0)
            throw std::invalid_argument("AbGroup::parse: broken divisibility chain");
        g.torsion.push_back(d);
        pos = comma + 1;
    }
    return g;
}

GroupElem zero_elem(const AbGroup& G) { return GroupElem{std::vector<long>(G.ngens(), 0)}; }

GroupElem reduce(const AbGroup& G, GroupElem x) {
    for (std::size_t k = 0; k < G.torsion.size(); ++k) {
        long d = G.torsion[k];
        long& c = x.v[static_cast<std::size_t>(G.free_rank) + k];
        c %= d;
        if (c < 0) c += d;
    }
    return x;
}

GroupElem add(const AbGroup& G, const GroupElem& x, const GroupElem& y) {
    GroupElem r = x;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += y.v[i];
    return reduce(G, std::move(r));
}

GroupElem neg(const AbGroup& G, const GroupElem& x) {
    GroupElem r = x;
    for (auto& c : r.v) c = -c;
    return reduce(G, std::move(r));
}

GroupElem sub(const AbGroup& G, const GroupElem& x, const GroupElem& y) {
    return add(G, x, neg(G, y));
}

GroupElem scal(const AbGroup& G, long k, const GroupElem& x) {
    GroupElem r = x;
    for (auto& c : r.v) c *= k;
    return reduce(G, std::move(r));
}

bool is_zero(const GroupElem& x) {
    return std::all_of(x.v.begin(), x.v.end(), [](long c) { return c == 0; });
}

long order_of(const AbGroup& G, const GroupElem& x) {
    for (long i = 0; i < G.free_rank; ++i)
        if (x.v[static_cast<std::size_t>(i)] != 0) return 0;
    long n = 1;
    for (std::size_t k = 0; k < G.torsion.size(); ++k) {
        long d = G.torsion[k];
        long c = x.v[static_cast<std::size_t>(G.free_rank) + k];
        long o = d / std::gcd(d, c);
        n = std::lcm(n, o);
    }
    return n;
}

GroupElem gen_elem(const AbGroup& G, std::size_t i) {
    GroupElem e = zero_elem(G);
    e.v.at(i) = 1;
    return reduce(G, std::move(e));
}

long elem_index(const AbGroup& G, const GroupElem& x) {
    if (!G.is_finite()) throw std::domain_error("elem_index: infinite group");
    long idx = 0;
    for (std::size_t k = 0; k < G.torsion.size(); ++k) idx = idx * G.torsion[k] + x.v[k];
    return idx;
}

GroupElem elem_at(const AbGroup& G, long index) {
    if (!G.is_finite()) throw std::domain_error("elem_at: infinite group");
    GroupElem x = zero_elem(G);
    for (std::size_t k = G.torsion.size(); k-- > 0;) {
        x.v[k] = index % G.torsion[k];
        index /= G.torsion[k];
    }
    return x;
}

std::vector<GroupElem> elements(const AbGroup& G) {
    long n = G.order();
    std::vector<GroupElem> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.push_back(elem_at(G, i));
    return out;
}

GroupElem GroupHom::apply(const GroupElem& x) const {
    GroupElem r = zero_elem(target);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (x.v[i] == 0) continue;
        r = add(target, r, scal(target, x.v[i], images[i]));
    }
    return r;
}

bool GroupHom::well_defined() const {
    for (std::size_t k = 0; k < source.torsion.size(); ++k) {
        std::size_t i = static_cast<std::size_t>(source.free_rank) + k;
        if (!is_zero(scal(target, source.torsion[k], images[i]))) return false;
    }
    return true;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
    if (!(g.target == f.source)) throw std::invalid_argument("compose: middle group mismatch");
    GroupHom h;
    h.source = g.source;
    h.target = f.target;
    for (const auto& img : g.images) h.images.push_back(f.apply(img));
    return h;
}

GroupHom identity_hom(const AbGroup& G) {
    GroupHom h;
    h.source = h.target = G;
    for (std::size_t i = 0; i < G.ngens(); ++i) h.images.push_back(gen_elem(G, i));
    return h;
}

// ---------------------------------------------------------------------------
// Smith normal form with transform tracking. D = L * B * R; Linv accumulates
// the inverse row transforms so that preimages stay available.
// ---------------------------------------------------------------------------

namespace {

struct SnfWork {
    IntMatrix D, L, Linv, R;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < L.cols; ++c) std::swap(L.at(i, c), L.at(j, c));
        for (std::size_t r = 0; r < Linv.rows; ++r) std::swap(Linv.at(r, i), Linv.at(r, j));
    }
    // row_i += k * row_j
    void row_add(std::size_t i, std::size_t j, const mpz_class& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < D.cols; ++c) D.at(i, c) += k * D.at(j, c);
        for (std::size_t c = 0; c < L.cols; ++c) L.at(i, c) += k * L.at(j, c);
        for (std::size_t r = 0; r < Linv.rows; ++r) Linv.at(r, j) -= k * Linv.at(r, i);
    }
    void row_neg(std::size_t i) {
        for (std::size_t c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
        for (std::size_t c = 0; c < L.cols; ++c) L.at(i, c) = -L.at(i, c);
        for (std::size_t r = 0; r < Linv.rows; ++r) Linv.at(r, i) = -Linv.at(r, i);
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < R.rows; ++r) std::swap(R.at(r, i), R.at(r, j));
    }
    // col_j += k * col_i
    void col_add(std::size_t j, std::size_t i, const mpz_class& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < D.rows; ++r) D.at(r, j) += k * D.at(r, i);
        for (std::size_t r = 0; r < R.rows; ++r) R.at(r, j) += k * R.at(r, i);
    }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& B) {
    SnfWork w;
    w.D = B;
    w.L = IntMatrix::identity(B.rows);
    w.Linv = IntMatrix::identity(B.rows);
    w.R = IntMatrix::identity(B.cols);

    const std::size_t n = std::min(B.rows, B.cols);
    for (std::size_t t = 0; t < n; ++t) {
        // pivot: entry of least absolute value in the trailing submatrix
        bool found = false;
        std::size_t pr = t, pc = t;
        mpz_class best;
        for (std::size_t i = t; i < B.rows; ++i)
            for (std::size_t j = t; j < B.cols; ++j) {
                if (w.D.at(i, j) == 0) continue;
                mpz_class v = abs(w.D.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < B.rows; ++i) {
                if (w.D.at(i, t) == 0) continue;
                mpz_class q = w.D.at(i, t) / w.D.at(t, t);  // truncated division
                w.row_add(i, t, -q);
                if (w.D.at(i, t) != 0) {  // remainder smaller than pivot
                    w.row_swap(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < B.cols; ++j) {
                if (w.D.at(t, j) == 0) continue;
                mpz_class q = w.D.at(t, j) / w.D.at(t, t);
                w.col_add(j, t, -q);
                if (w.D.at(t, j) != 0) {
                    w.col_swap(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide the whole trailing submatrix for the
            // divisibility chain; fold a bad row in and redo
            bool bad = false;
            for (std::size_t i = t + 1; i < B.rows && !bad; ++i)
                for (std::size_t j = t + 1; j < B.cols && !bad; ++j)
                    if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        bad = true;
                    }
            if (!bad) break;
        }
        if (w.D.at(t, t) < 0) w.row_neg(t);
    }
    return SmithResult{w.D, w.L, w.Linv, w.R};
}

namespace {

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("abelian: coefficient exceeds long");
    return z.get_si();
}

} // namespace

Presentation normalize_presentation(std::size_t ngens,
                                    const std::vector<std::vector<long>>& relations) {
    // Columns of B span the relation subgroup of Z^ngens.
    IntMatrix B(ngens, std::max<std::size_t>(relations.size(), 1));
    for (std::size_t r = 0; r < relations.size(); ++r) {
        if (relations[r].size() != ngens)
            throw std::invalid_argument("normalize_presentation: relation length mismatch");
        for (std::size_t i = 0; i < ngens; ++i) B.at(i, r) = relations[r][i];
    }
    SmithResult s = smith_normal_form(B);

    // Row i of the diagonalized coordinates contributes Z/d_i (d_i >= 2),
    // Z (d_i = 0) or nothing (d_i = 1).
    std::vector<long> diag(ngens, 0);
    for (std::size_t i = 0; i < ngens && i < B.cols; ++i) diag[i] = to_long(s.D.at(i, i));

    Presentation out;
    std::vector<long> slot_of_row(ngens, -1);
    std::vector<std::size_t> free_rows, tor_rows;
    for (std::size_t i = 0; i < ngens; ++i) {
        if (diag[i] == 0)
            free_rows.push_back(i);
        else if (diag[i] >= 2)
            tor_rows.push_back(i);
    }
    out.group.free_rank = static_cast<long>(free_rows.size());
    for (std::size_t i : tor_rows) out.group.torsion.push_back(diag[i]);

    std::vector<std::size_t> row_of_slot;
    for (std::size_t i : free_rows) row_of_slot.push_back(i);
    for (std::size_t i : tor_rows) row_of_slot.push_back(i);
    for (std::size_t slot = 0; slot < row_of_slot.size(); ++slot)
        slot_of_row[row_of_slot[slot]] = static_cast<long>(slot);

    for (std::size_t j = 0; j < ngens; ++j) {
        GroupElem e = zero_elem(out.group);
        for (std::size_t i = 0; i < ngens; ++i)
            if (slot_of_row[i] >= 0)
                e.v[static_cast<std::size_t>(slot_of_row[i])] = to_long(s.L.at(i, j));
        out.gen_images.push_back(reduce(out.group, std::move(e)));
    }
    for (std::size_t slot = 0; slot < row_of_slot.size(); ++slot) {
        std::vector<long> pre(ngens, 0);
        for (std::size_t r = 0; r < ngens; ++r) pre[r] = to_long(s.Linv.at(r, row_of_slot[slot]));
        out.gen_preimages.push_back(std::move(pre));
    }
    return out;
}

namespace {

// Kernel of the map Z^k -> G, e_i -> gens[i], as relation rows on Z^k.
std::vector<std::vector<long>> kernel_relations(const AbGroup& G,
                                                const std::vector<GroupElem>& gens) {
    const std::size_t k = gens.size();
    const std::size_t n = G.ngens();
    const std::size_t s = G.torsion.size();
    IntMatrix M(n, k + s);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = gens[j].v[i];
    for (std::size_t t = 0; t < s; ++t)
        M.at(static_cast<std::size_t>(G.free_rank) + t, k + t) = G.torsion[t];

    SmithResult sr = smith_normal_form(M);
    std::vector<std::vector<long>> rels;
    for (std::size_t j = 0; j < k + s; ++j) {
        bool zero_col = true;
        for (std::size_t i = 0; i < n && zero_col; ++i)
            if (sr.D.at(i, j) != 0) zero_col = false;
        if (!zero_col) continue;
        std::vector<long> rel(k, 0);
        for (std::size_t i = 0; i < k; ++i) rel[i] = to_long(sr.R.at(i, j));
        rels.push_back(std::move(rel));
    }
    return rels;
}

} // namespace

Subgroup subgroup_generated(const AbGroup& G, const std::vector<GroupElem>& gens) {
    Presentation p = normalize_presentation(gens.size(), kernel_relations(G, gens));
    Subgroup sub;
    sub.group = p.group;
    sub.inclusion.source = p.group;
    sub.inclusion.target = G;
    for (const auto& pre : p.gen_preimages) {
        GroupElem img = zero_elem(G);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (pre[i] != 0) img = add(G, img, scal(G, pre[i], gens[i]));
        sub.inclusion.images.push_back(std::move(img));
    }
    return sub;
}

Quotient quotient(const AbGroup& G, const std::vector<GroupElem>& gens) {
    std::vector<std::vector<long>> rels;
    for (std::size_t t = 0; t < G.torsion.size(); ++t) {
        std::vector<long> r(G.ngens(), 0);
        r[static_cast<std::size_t>(G.free_rank) + t] = G.torsion[t];
        rels.push_back(std::move(r));
    }
    for (const auto& g : gens) rels.push_back(g.v);
    Presentation p = normalize_presentation(G.ngens(), rels);
    Quotient q;
    q.group = p.group;
    q.projection.source = G;
    q.projection.target = p.group;
    q.projection.images = p.gen_images;
    return q;
}

std::vector<GroupHom> enumerate_homs(const AbGroup& U, const AbGroup& G,
                                     HomConstraint constraint) {
    if (!G.is_finite()) throw std::invalid_argument("enumerate_homs: target not finite");
    if (constraint == HomConstraint::injective && !U.is_finite()) return {};

    const auto elems = elements(G);
    std::vector<std::vector<GroupElem>> candidates;
    for (std::size_t i = 0; i < U.ngens(); ++i) {
        if (static_cast<long>(i) < U.free_rank) {
            candidates.push_back(elems);
        } else {
            long d = U.torsion[i - static_cast<std::size_t>(U.free_rank)];
            std::vector<GroupElem> c;
            for (const auto& g : elems)
                if (d % order_of(G, g) == 0) c.push_back(g);
            candidates.push_back(std::move(c));
        }
    }

    // torsion subgroup of U, enumerated once for the injectivity filters
    std::vector<GroupElem> torsion_elems;
    {
        AbGroup T{0, U.torsion};
        long n = T.order();
        for (long idx = 1; idx < n; ++idx) {  // skip zero
            GroupElem t = elem_at(T, idx);
            GroupElem x = zero_elem(U);
            for (std::size_t k = 0; k < U.torsion.size(); ++k)
                x.v[static_cast<std::size_t>(U.free_rank) + k] = t.v[k];
            torsion_elems.push_back(std::move(x));
        }
    }

    for (const auto& c : candidates)
        if (c.empty()) return {};  // some generator has no legal image

    // For a finite U the free part is empty, so injectivity on torsion is
    // global injectivity; the two constraints coincide there.
    std::vector<GroupHom> out;
    std::vector<std::size_t> idx(U.ngens(), 0);
    for (;;) {
        GroupHom h;
        h.source = U;
        h.target = G;
        for (std::size_t i = 0; i < U.ngens(); ++i) h.images.push_back(candidates[i][idx[i]]);
        bool ok = true;
        if (constraint != HomConstraint::none) {
            for (const auto& x : torsion_elems)
                if (is_zero(h.apply(x))) {
                    ok = false;
                    break;
                }
        }
        if (ok) out.push_back(std::move(h));

        std::size_t p = 0;
        for (; p < idx.size(); ++p) {
            if (++idx[p] < candidates[p].size()) break;
            idx[p] = 0;
        }
        if (p == idx.size()) break;
    }
    return out;
}

long hom_count_formula(const AbGroup& U, const AbGroup& G) {
    if (!G.is_finite()) throw std::invalid_argument("hom_count_formula: target not finite");
    long n = 1;
    for (long i = 0; i < U.free_rank; ++i) n *= G.order();
    for (long du : U.torsion)
        for (long dg : G.torsion) n *= std::gcd(du, dg);
    return n;
}

std::vector<long> subgroup_closure(const AbGroup& G, const std::vector<GroupElem>& gens) {
    std::set<long> seen{elem_index(G, zero_elem(G))};
    std::vector<GroupElem> frontier{zero_elem(G)};
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                GroupElem y = add(G, x, g);
                if (seen.insert(elem_index(G, y)).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<long>> all_subgroups(const AbGroup& G) {
    const auto elems = elements(G);
    std::set<std::vector<long>> found;
    found.insert(subgroup_closure(G, {}));
    std::vector<std::pair<std::vector<long>, std::vector<GroupElem>>> frontier{
        {subgroup_closure(G, {}), {}}};
    while (!frontier.empty()) {
        std::vector<std::pair<std::vector<long>, std::vector<GroupElem>>> next;
        for (const auto& [set, gens] : frontier)
            for (const auto& g : elems) {
                if (std::binary_search(set.begin(), set.end(), elem_index(G, g))) continue;
                auto bigger_gens = gens;
                bigger_gens.push_back(g);
                auto closure = subgroup_closure(G, bigger_gens);
                if (found.insert(closure).second) next.push_back({closure, bigger_gens});
            }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

AbGroup subgroup_type(const AbGroup& G, const std::vector<long>& elem_indices) {
    std::vector<GroupElem> gens;
    for (long i : elem_indices) gens.push_back(elem_at(G, i));
    return subgroup_generated(G, gens).group;
}

namespace {

void partitions_rec(long n, long maxpart, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

} // namespace

std::vector<AbGroup> abelian_groups_of_order(long n) {
    if (n <= 0) return {};
    if (n == 1) return {AbGroup{}};
    std::map<long, long> fact;
    long m = n;
    for (long p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++fact[p];
            m /= p;
        }
    if (m > 1) ++fact[m];

    std::vector<std::vector<std::pair<long, std::vector<long>>>> choices;  // per prime
    for (auto [p, e] : fact) {
        std::vector<std::pair<long, std::vector<long>>> c;
        for (auto& part : partitions(e)) c.push_back({p, part});
        choices.push_back(std::move(c));
    }

    std::vector<AbGroup> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
        std::size_t L = 0;
        for (std::size_t i = 0; i < choices.size(); ++i)
            L = std::max(L, choices[i][idx[i]].second.size());
        std::vector<long> inv(L, 1);  // inv[0] = largest invariant factor
        for (std::size_t i = 0; i < choices.size(); ++i) {
            auto [p, part] = choices[i][idx[i]];
            for (std::size_t k = 0; k < part.size(); ++k)
                for (long t = 0; t < part[k]; ++t) inv[k] *= p;
        }
        std::reverse(inv.begin(), inv.end());
        out.push_back(AbGroup{0, inv});

        std::size_t p = 0;
        for (; p < idx.size(); ++p) {
            if (++idx[p] < choices[p].size()) break;
            idx[p] = 0;
        }
        if (p == idx.size()) break;
    }
    return out;
}

} // namespace esla::abelian
