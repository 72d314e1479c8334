#include "esla/superalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace esla::superalg {

void SuperAlgebra::add_term(std::size_t i, std::size_t j, std::size_t k, const Cyc& coeff) {
    if (coeff.is_zero()) return;
    auto& e = c[i * dim + j];
    for (auto& [kk, cc] : e)
        if (kk == k) {
            cc += coeff;
            if (cc.is_zero()) e.erase(std::find_if(e.begin(), e.end(), [&](auto& t) {
                                  return t.first == k;
                              }));
            return;
        }
    e.emplace_back(k, coeff);
}

void SuperAlgebra::set_entry(std::size_t i, std::size_t j, SparseVec v) {
    std::erase_if(v, [](const auto& t) { return t.second.is_zero(); });
    c[i * dim + j] = std::move(v);
}

void SuperAlgebra::symmetrize() {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            SparseVec v = c[i * dim + j];
            // [b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j]
            Cyc s = (parity[i] && parity[j]) ? Cyc::one() : Cyc(-1);
            for (auto& [k, coeff] : v) coeff = s * coeff;
            c[j * dim + i] = std::move(v);
        }
}

Vec SuperAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec r(dim);
    for (const auto& [k, coeff] : entry(i, j)) r[k] += coeff;
    return r;
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim)
        throw std::invalid_argument("bracket: wrong vector length");
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Cyc f = x[i] * y[j];
            for (const auto& [k, coeff] : entry(i, j)) r[k] += f * coeff;
        }
    }
    return r;
}

Mat SuperAlgebra::ad(const Vec& x) const {
    Mat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = bracket(x, basis_vec(j));
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Vec SuperAlgebra::basis_vec(std::size_t i) const {
    Vec v(dim);
    v[i] = Cyc::one();
    return v;
}

std::size_t SuperAlgebra::even_dim() const {
    return static_cast<std::size_t>(std::count(parity.begin(), parity.end(), 0));
}

std::size_t SuperAlgebra::odd_dim() const { return dim - even_dim(); }

int SuperAlgebra::parity_of(const Vec& x) const {
    int p = -1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        if (p == -1)
            p = parity[i];
        else if (p != parity[i])
            return -1;
    }
    return p;
}

AxiomReport verify_axioms(const SuperAlgebra& L) {
    AxiomReport rep;
    rep.antisymmetry = true;
    rep.parity_respected = true;
    rep.jacobi = true;

    for (std::size_t i = 0; i < L.dim && rep.parity_respected; ++i)
        for (std::size_t j = 0; j < L.dim && rep.parity_respected; ++j)
            for (const auto& [k, coeff] : L.entry(i, j))
                if ((L.parity[i] + L.parity[j]) % 2 != L.parity[k]) {
                    rep.parity_respected = false;
                    rep.first_failure = "parity: [" + L.labels[i] + "," + L.labels[j] + "]";
                    break;
                }

    for (std::size_t i = 0; i < L.dim && rep.antisymmetry; ++i)
        for (std::size_t j = i; j < L.dim; ++j) {
            Vec lhs = L.bracket_basis(i, j);
            Vec rhs = L.bracket_basis(j, i);
            Cyc s = (L.parity[i] && L.parity[j]) ? Cyc::one() : Cyc(-1);
            if (!linalg::is_zero_vec(lhs - (s * rhs))) {
                rep.antisymmetry = false;
                rep.first_failure = "antisymmetry: [" + L.labels[i] + "," + L.labels[j] + "]";
                break;
            }
        }

    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]], accumulated sparsely;
    // once antisymmetry holds the (j,i) instance is the (i,j) one rescaled
    Vec acc(L.dim);
    std::vector<std::size_t> touched;
    auto bump = [&](std::size_t l, const Cyc& c) {
        if (acc[l].is_zero() && !c.is_zero()) touched.push_back(l);
        acc[l] += c;
    };
    for (std::size_t i = 0; i < L.dim && rep.jacobi; ++i)
        for (std::size_t j = rep.antisymmetry ? i : 0; j < L.dim && rep.jacobi; ++j) {
            Cyc s = (L.parity[i] && L.parity[j]) ? Cyc(-1) : Cyc::one();
            for (std::size_t k = 0; k < L.dim; ++k) {
                for (const auto& [m, c1] : L.entry(j, k))
                    for (const auto& [l, c2] : L.entry(i, m)) bump(l, c1 * c2);
                for (const auto& [m, c1] : L.entry(i, j))
                    for (const auto& [l, c2] : L.entry(m, k)) bump(l, Cyc(-1) * c1 * c2);
                for (const auto& [m, c1] : L.entry(i, k))
                    for (const auto& [l, c2] : L.entry(j, m)) bump(l, Cyc(-1) * s * c1 * c2);
                bool ok = true;
                for (std::size_t l : touched) {
                    ok = ok && acc[l].is_zero();
                    acc[l] = Cyc::zero();
                }
                touched.clear();
                if (!ok) {
                    rep.jacobi = false;
                    rep.first_failure = "jacobi: (" + L.labels[i] + "," + L.labels[j] + "," +
                                        L.labels[k] + ")";
                    break;
                }
            }
        }
    return rep;
}

linalg::SpanBasis ideal_closure(const SuperAlgebra& L, const std::vector<Vec>& seeds) {
    linalg::SpanBasis span(L.dim);
    std::vector<Vec> frontier;
    for (const auto& s : seeds)
        if (span.add(s)) frontier.push_back(s);
    while (!frontier.empty() && span.rank() < L.dim) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (std::size_t b = 0; b < L.dim && span.rank() < L.dim; ++b) {
                Vec w = L.bracket(L.basis_vec(b), v);
                if (span.add(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span;
}

IdealReport ideals_and_center(const SuperAlgebra& L, const std::vector<Vec>& extra_seeds) {
    IdealReport rep;

    // center: nullspace of the stacked adjoint system
    Mat sys(L.dim * L.dim, L.dim);
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            for (const auto& [k, coeff] : L.entry(i, j)) sys.at(j * L.dim + k, i) += coeff;
        }
    rep.center_basis = linalg::nullspace(sys);
    rep.center_dim = rep.center_basis.size();

    linalg::SpanBasis derived(L.dim);
    for (std::size_t i = 0; i < L.dim && derived.rank() < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim && derived.rank() < L.dim; ++j)
            derived.add(L.bracket_basis(i, j));
    rep.derived_dim = derived.rank();

    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < L.dim; ++i) seeds.push_back(L.basis_vec(i));
    seeds.insert(seeds.end(), extra_seeds.begin(), extra_seeds.end());
    for (const auto& z : rep.center_basis) seeds.push_back(z);

    std::vector<std::vector<Vec>> proper;
    std::vector<std::size_t> proper_ranks;
    bool all_full = true;
    for (const auto& s : seeds) {
        if (linalg::is_zero_vec(s)) continue;
        auto span = ideal_closure(L, {s});
        if (span.rank() == L.dim) continue;
        all_full = false;
        // dedupe by echelon basis equality
        bool dup = false;
        for (std::size_t q = 0; q < proper.size(); ++q)
            if (proper_ranks[q] == span.rank() && proper[q] == span.basis()) dup = true;
        if (!dup) {
            proper.push_back(span.basis());
            proper_ranks.push_back(span.rank());
        }
    }
    // keep the minimal ones under containment
    for (std::size_t a = 0; a < proper.size(); ++a) {
        bool minimal = true;
        linalg::SpanBasis sa(L.dim);
        for (const auto& v : proper[a]) sa.add(v);
        for (std::size_t b = 0; b < proper.size() && minimal; ++b) {
            if (a == b || proper_ranks[b] >= proper_ranks[a]) continue;
            bool contained = true;
            for (const auto& v : proper[b])
                if (!sa.contains(v)) {
                    contained = false;
                    break;
                }
            if (contained) minimal = false;
        }
        if (minimal) rep.minimal_ideals.push_back(proper[a]);
    }
    rep.simple = all_full && rep.center_dim == 0 && rep.derived_dim == L.dim && L.dim > 1;
    return rep;
}

Mat delta_map(const SuperAlgebra& L) {
    Mat m(L.dim, L.dim);
    for (std::size_t i = 0; i < L.dim; ++i) m.at(i, i) = L.parity[i] ? Cyc(-1) : Cyc(1);
    return m;
}

bool is_automorphism(const SuperAlgebra& L, const Mat& phi) {
    return is_bracket_isomorphism(L, L, phi);
}

bool is_bracket_isomorphism(const SuperAlgebra& src, const SuperAlgebra& dst, const Mat& m) {
    if (m.rows != dst.dim || m.cols != src.dim || src.dim != dst.dim) return false;
    if (!linalg::inverse(m)) return false;
    for (std::size_t i = 0; i < src.dim; ++i) {
        Vec mi = m * src.basis_vec(i);
        for (std::size_t j = 0; j < src.dim; ++j) {
            Vec lhs = m * src.bracket_basis(i, j);
            Vec rhs = dst.bracket(mi, m * src.basis_vec(j));
            if (!linalg::is_zero_vec(lhs - rhs)) return false;
        }
    }
    return true;
}

Cyc BilinearForm::eval(const Vec& x, const Vec& y) const {
    Cyc r;
    for (std::size_t i = 0; i < gram.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < gram.cols; ++j)
            if (!y[j].is_zero() && !gram.at(i, j).is_zero()) r += x[i] * gram.at(i, j) * y[j];
    }
    return r;
}

bool BilinearForm::matches_declared_symmetry(const std::vector<int>* parity) const {
    for (std::size_t i = 0; i < gram.rows; ++i)
        for (std::size_t j = 0; j < gram.cols; ++j) {
            Cyc s;
            switch (kind) {
                case Kind::symmetric: s = gram.at(j, i); break;
                case Kind::alternating: s = -gram.at(j, i); break;
                case Kind::supersymmetric: {
                    if (!parity) return false;
                    bool both_odd = (*parity)[i] && (*parity)[j];
                    s = both_odd ? -gram.at(j, i) : gram.at(j, i);
                    // mixed-parity pairs must vanish for a homogeneous form
                    if ((*parity)[i] != (*parity)[j] && !gram.at(i, j).is_zero()) return false;
                    break;
                }
            }
            if (!(gram.at(i, j) == s)) return false;
        }
    return true;
}

SuperAlgebra conjugate_basis(const SuperAlgebra& L, const std::vector<Vec>& basis,
                             std::vector<std::string> labels) {
    if (basis.size() != L.dim)
        throw std::invalid_argument("conjugate_basis: basis size != dim");
    Mat p(L.dim, L.dim);
    for (std::size_t j = 0; j < L.dim; ++j)
        for (std::size_t i = 0; i < L.dim; ++i) p.at(i, j) = basis[j][i];
    auto pinv = linalg::inverse(p);
    if (!pinv) throw std::invalid_argument("conjugate_basis: basis is singular");

    SuperAlgebra out(L.dim);
    out.labels = std::move(labels);
    if (out.labels.size() != L.dim) out.labels.resize(L.dim);
    for (std::size_t j = 0; j < L.dim; ++j) {
        int par = L.parity_of(basis[j]);
        if (par < 0)
            throw std::invalid_argument("conjugate_basis: basis vector " + std::to_string(j) +
                                        " is not parity-homogeneous");
        out.parity[j] = par;
    }
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) {
            Vec w = (*pinv) * L.bracket(basis[i], basis[j]);
            SparseVec sv;
            for (std::size_t k = 0; k < L.dim; ++k)
                if (!w[k].is_zero()) sv.emplace_back(k, w[k]);
            out.set_entry(i, j, std::move(sv));
        }
    return out;
}

bool verify_presentation(const ModulePresentation& p) {
    if (p.l0.even_dim() != p.l0.dim) return false;
    if (p.rho.size() != p.l0.dim) return false;
    std::size_t md = p.module_dim();
    for (const Mat& m : p.rho)
        if (m.rows != md || m.cols != md) return false;
    if (!p.module_labels.empty() && p.module_labels.size() != md) return false;
    // the ideal ranges must partition the basis...
    std::vector<char> covered(p.l0.dim, 0);
    for (auto [b, e] : p.ideals) {
        if (b >= e || e > p.l0.dim) return false;
        for (std::size_t i = b; i < e; ++i) {
            if (covered[i]) return false;
            covered[i] = 1;
        }
    }
    for (char c : covered)
        if (!c) return false;
    // ...and each must absorb brackets with everything
    for (auto [b, e] : p.ideals)
        for (std::size_t i = b; i < e; ++i)
            for (std::size_t j = 0; j < p.l0.dim; ++j)
                for (const auto& [k, coeff] : p.l0.entry(i, j)) {
                    (void)coeff;
                    if (k < b || k >= e) return false;
                }
    // Lie homomorphism on the module
    for (std::size_t i = 0; i < p.l0.dim; ++i)
        for (std::size_t j = 0; j < p.l0.dim; ++j) {
            Mat lhs = p.rho[i] * p.rho[j] - p.rho[j] * p.rho[i];
            Mat rhs(md, md);
            for (const auto& [k, coeff] : p.l0.entry(i, j))
                for (std::size_t r = 0; r < rhs.rows; ++r)
                    for (std::size_t cc = 0; cc < rhs.cols; ++cc)
                        rhs.at(r, cc) += coeff * p.rho[k].at(r, cc);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
    SuperAlgebra out(a.dim + b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        out.parity[i] = a.parity[i];
        out.labels[i] = a.labels[i];
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
        out.parity[a.dim + i] = b.parity[i];
        out.labels[a.dim + i] = b.labels[i];
    }
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) out.set_entry(i, j, a.entry(i, j));
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j) {
            SparseVec v = b.entry(i, j);
            for (auto& [k, coeff] : v) k += a.dim;
            out.set_entry(a.dim + i, a.dim + j, std::move(v));
        }
    return out;
}

std::string to_cache_json(const SuperAlgebra& L) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["dim"] = L.dim;
    j["parity"] = L.parity;
    j["labels"] = L.labels;
    auto entries = nlohmann::json::array();
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t jj = 0; jj < L.dim; ++jj)
            for (const auto& [k, coeff] : L.entry(i, jj)) {
                nlohmann::json e;
                e.push_back(i);
                e.push_back(jj);
                e.push_back(k);
                auto strs = coeff.to_strings();
                e.push_back(std::vector<std::string>(strs.begin(), strs.end()));
                entries.push_back(std::move(e));
            }
    j["entries"] = std::move(entries);
    return j.dump();
}

SuperAlgebra from_cache_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.contains("format_version") || j["format_version"].get<int>() != 1)
        throw std::runtime_error("structure-constant cache: unsupported format version");
    SuperAlgebra L(j["dim"].get<std::size_t>());
    L.parity = j["parity"].get<std::vector<int>>();
    L.labels = j["labels"].get<std::vector<std::string>>();
    for (const auto& e : j["entries"]) {
        auto strs = e[3].get<std::vector<std::string>>();
        std::array<std::string, 8> arr;
        std::copy_n(strs.begin(), 8, arr.begin());
        L.add_term(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(),
                   Cyc::from_strings(arr));
    }
    return L;
}

} // namespace esla::superalg
