#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "esla/solver.hpp"

namespace esla::solver {

namespace {

using superalg::ModulePresentation;
using superalg::SparseVec;
using superalg::SuperAlgebra;

std::size_t pair_count(std::size_t md) { return md * (md + 1) / 2; }

/// index of the unordered pair {w, w'} among w <= w', row-major upper triangle
std::size_t pidx(std::size_t md, std::size_t w, std::size_t wp) {
    if (w > wp) std::swap(w, wp);
    return w * md - w * (w - 1) / 2 + (wp - w);
}

Cyc trace_prod(const Mat& A, const Mat& B) {
    Cyc s;
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t c = 0; c < A.cols; ++c) s = s + A.at(r, c) * B.at(c, r);
    return s;
}

Mat unvec(const Vec& v, std::size_t md) {
    Mat B(md, md);
    for (std::size_t i = 0; i < v.size(); ++i) B.a[i] = v[i];
    return B;
}

bool is_diagonal(const Mat& m) {
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (r != c && !m.at(r, c).is_zero()) return false;
    return true;
}

std::size_t nnz(const Mat& m) {
    std::size_t n = 0;
    for (const Cyc& e : m.a)
        if (!e.is_zero()) ++n;
    return n;
}

/// [X_t, X_m'] is diagonal when every bracket is a multiple of X_m' itself
bool ad_is_diagonal(const SuperAlgebra& l0, std::size_t t) {
    for (std::size_t mp = 0; mp < l0.dim; ++mp)
        for (const auto& [m, c] : l0.entry(t, mp))
            if (m != mp && !c.is_zero()) return false;
    return true;
}

Cyc ad_eigenvalue(const SuperAlgebra& l0, std::size_t t, std::size_t mp) {
    for (const auto& [m, c] : l0.entry(t, mp))
        if (m == mp) return c;
    return Cyc::zero();
}

/// nonzero entries of each column of rho, as (row, value)
std::vector<std::vector<std::pair<std::size_t, Cyc>>> column_entries(const Mat& rho) {
    std::vector<std::vector<std::pair<std::size_t, Cyc>>> out(rho.cols);
    for (std::size_t r = 0; r < rho.rows; ++r)
        for (std::size_t c = 0; c < rho.cols; ++c)
            if (!rho.at(r, c).is_zero()) out[c].emplace_back(r, rho.at(r, c));
    return out;
}

}  // namespace

Mat invariant_module_form(const ModulePresentation& p) {
    std::size_t md = p.module_dim(), n = md * md, n0 = p.l0.dim;
    if (md == 0 || p.rho.size() != n0) throw std::invalid_argument("module form: bad presentation");

    // kernel intersection generator by generator; diagonal and sparse actions
    // first so the space collapses while the linear systems are still cheap
    std::vector<std::size_t> order(n0);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        auto key = [&](std::size_t t) {
            return std::pair<int, std::size_t>{is_diagonal(p.rho[t]) ? 0 : 1, nnz(p.rho[t])};
        };
        return key(x) < key(y);
    });

    std::vector<Vec> basis;
    bool first = true;
    for (std::size_t t : order) {
        const Mat& rho = p.rho[t];
        if (first) {
            // operator B -> rho^T B + B rho on all of gl(W), assembled sparsely
            Mat op(n, n);
            for (std::size_t k = 0; k < md; ++k)
                for (std::size_t j = 0; j < md; ++j) {
                    const Cyc& v = rho.at(k, j);
                    if (v.is_zero()) continue;
                    for (std::size_t c = 0; c < md; ++c)
                        op.at(j * md + c, k * md + c) = op.at(j * md + c, k * md + c) + v;
                    for (std::size_t r = 0; r < md; ++r)
                        op.at(r * md + j, r * md + k) = op.at(r * md + j, r * md + k) + v;
                }
            basis = linalg::nullspace(op);
            first = false;
        } else {
            Mat M(n, basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Mat B = unvec(basis[j], md);
                Mat L = rho.transpose() * B + B * rho;
                for (std::size_t i = 0; i < n; ++i) M.at(i, j) = L.a[i];
            }
            auto ns = linalg::nullspace(M);
            std::vector<Vec> next;
            for (const Vec& comb : ns) {
                Vec w(n, Cyc::zero());
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!comb[k].is_zero()) w = w + comb[k] * basis[k];
                next.push_back(std::move(w));
            }
            basis = std::move(next);
        }
        if (basis.empty()) throw std::runtime_error("module form: no invariant form");
    }
    if (basis.size() != 1)
        throw std::runtime_error("module form: invariant space has dimension " +
                                 std::to_string(basis.size()));

    Mat B = unvec(basis[0], md);
    if (!(B + B.transpose() == Mat(md, md)))
        throw std::runtime_error("module form: invariant form is not alternating");
    for (const Cyc& e : B.a)
        if (!e.is_zero()) {
            Cyc s = e.inv();
            for (Cyc& x : B.a) x = s * x;
            break;
        }
    return B;
}

std::vector<Mat> dual_action_pairing(const ModulePresentation& p, const Mat& b,
                                     std::size_t ideal) {
    auto [lo, hi] = p.ideals.at(ideal);
    std::size_t ni = hi - lo, md = p.module_dim(), n0 = p.l0.dim;

    Mat K(ni, ni);
    for (std::size_t x = 0; x < ni; ++x)
        for (std::size_t y = x; y < ni; ++y) {
            K.at(x, y) = trace_prod(p.rho[lo + x], p.rho[lo + y]);
            K.at(y, x) = K.at(x, y);
        }
    auto Ki = linalg::inverse(K);
    if (!Ki) throw std::runtime_error("dual pairing: degenerate trace form");

    std::vector<Mat> T;
    for (std::size_t x = 0; x < ni; ++x) T.push_back(p.rho[lo + x].transpose() * b);

    std::vector<Mat> C(n0, Mat(md, md));
    for (std::size_t w = 0; w < md; ++w)
        for (std::size_t wp = w; wp < md; ++wp) {
            Vec rhs(ni);
            for (std::size_t x = 0; x < ni; ++x) {
                rhs[x] = T[x].at(w, wp);
                if (!(T[x].at(wp, w) == rhs[x]))
                    throw std::runtime_error("dual pairing: pairing is not symmetric");
            }
            Vec xi = (*Ki) * rhs;
            for (std::size_t x = 0; x < ni; ++x) {
                C[lo + x].at(w, wp) = xi[x];
                C[lo + x].at(wp, w) = xi[x];
            }
        }

    // equivariance under all of l0 (other ideals must act trivially on the
    // result; that is exactly the two-odd-one-even Jacobi case)
    for (std::size_t t = 0; t < n0; ++t) {
        auto cols = column_entries(p.rho[t]);
        for (std::size_t w = 0; w < md; ++w)
            for (std::size_t wp = w; wp < md; ++wp) {
                Vec lhs(ni, Cyc::zero());
                for (const auto& [a2, v] : cols[w])
                    for (std::size_t x = 0; x < ni; ++x)
                        lhs[x] = lhs[x] + v * C[lo + x].at(a2, wp);
                for (const auto& [a2, v] : cols[wp])
                    for (std::size_t x = 0; x < ni; ++x)
                        lhs[x] = lhs[x] + v * C[lo + x].at(w, a2);
                Vec rl0(n0, Cyc::zero());
                for (std::size_t x = 0; x < ni; ++x) {
                    const Cyc& c = C[lo + x].at(w, wp);
                    if (c.is_zero()) continue;
                    for (const auto& [m, cc] : p.l0.entry(t, lo + x)) rl0[m] = rl0[m] + c * cc;
                }
                for (std::size_t m = 0; m < n0; ++m) {
                    Cyc expect = (m >= lo && m < hi) ? lhs[m - lo] : Cyc::zero();
                    if (!(rl0[m] == expect))
                        throw std::runtime_error("dual pairing: equivariance failed");
                }
            }
    }
    return C;
}

BracketAnsatz build_ansatz(const ModulePresentation& p) {
    BracketAnsatz a;
    a.pres = p;
    a.b = invariant_module_form(p);
    for (std::size_t i = 0; i < p.ideals.size(); ++i)
        a.blocks.push_back(dual_action_pairing(p, a.b, i));
    return a;
}

std::vector<Vec> jacobi_constraint_space(const BracketAnsatz& a) {
    const auto& p = a.pres;
    std::size_t md = p.module_dim(), k = p.ideals.size(), np = pair_count(md);

    // P[i][pair] = rho(d_i(w, w')) as a matrix, so each Jacobi entry is a
    // single lookup
    std::vector<std::vector<Mat>> P(k, std::vector<Mat>(np, Mat(md, md)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t w = 0; w < md; ++w)
            for (std::size_t wp = w; wp < md; ++wp) {
                Mat& out = P[i][pidx(md, w, wp)];
                for (std::size_t m = p.ideals[i].first; m < p.ideals[i].second; ++m) {
                    const Cyc& c = a.blocks[i][m].at(w, wp);
                    if (c.is_zero()) continue;
                    for (std::size_t e = 0; e < md * md; ++e)
                        out.a[e] = out.a[e] + c * p.rho[m].a[e];
                }
            }

    // incremental echelon over the k unknowns
    std::vector<Vec> rows;
    for (std::size_t x = 0; x < md && rows.size() < k; ++x)
        for (std::size_t y = x; y < md && rows.size() < k; ++y)
            for (std::size_t z = y; z < md && rows.size() < k; ++z)
                for (std::size_t r = 0; r < md; ++r) {
                    Vec row(k);
                    bool any = false;
                    for (std::size_t i = 0; i < k; ++i) {
                        row[i] = P[i][pidx(md, x, y)].at(r, z) + P[i][pidx(md, y, z)].at(r, x) +
                                 P[i][pidx(md, x, z)].at(r, y);
                        any = any || !row[i].is_zero();
                    }
                    if (!any) continue;
                    for (const Vec& er : rows) {
                        std::size_t piv = 0;
                        while (er[piv].is_zero()) ++piv;
                        if (!row[piv].is_zero()) row = row - row[piv] * er;
                    }
                    if (!std::all_of(row.begin(), row.end(),
                                     [](const Cyc& c) { return c.is_zero(); })) {
                        std::size_t piv = 0;
                        while (row[piv].is_zero()) ++piv;
                        row = row[piv].inv() * row;
                        rows.push_back(row);
                    }
                }

    Mat R(rows.empty() ? 1 : rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) R.at(i, j) = rows[i][j];
    return linalg::nullspace(R);
}

SuperAlgebra complete_superalgebra(const BracketAnsatz& a, const Vec& sigma) {
    const auto& p = a.pres;
    std::size_t n0 = p.l0.dim, md = p.module_dim();
    if (sigma.size() != p.ideals.size())
        throw std::invalid_argument("complete: sigma length != ideal count");

    SuperAlgebra L(n0 + md);
    for (std::size_t i = 0; i < n0; ++i) L.labels[i] = p.l0.labels[i];
    for (std::size_t w = 0; w < md; ++w) {
        L.parity[n0 + w] = 1;
        L.labels[n0 + w] =
            p.module_labels.empty() ? "w" + std::to_string(w) : p.module_labels[w];
    }
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = i + 1; j < n0; ++j) {
            SparseVec sv = p.l0.entry(i, j);
            if (!sv.empty()) L.set_entry(i, j, sv);
        }
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t w = 0; w < md; ++w) {
            SparseVec sv;
            for (std::size_t r = 0; r < md; ++r)
                if (!p.rho[i].at(r, w).is_zero()) sv.emplace_back(n0 + r, p.rho[i].at(r, w));
            if (!sv.empty()) L.set_entry(i, n0 + w, sv);
        }
    for (std::size_t w = 0; w < md; ++w)
        for (std::size_t wp = w; wp < md; ++wp) {
            SparseVec sv;
            for (std::size_t i = 0; i < p.ideals.size(); ++i)
                for (std::size_t m = p.ideals[i].first; m < p.ideals[i].second; ++m) {
                    Cyc c = sigma[i] * a.blocks[i][m].at(w, wp);
                    if (!c.is_zero()) sv.emplace_back(m, c);
                }
            if (!sv.empty()) L.set_entry(n0 + w, n0 + wp, sv);
        }
    L.symmetrize();
    return L;
}

Completed complete_unique(const ModulePresentation& p) { return complete_unique(build_ansatz(p)); }

Completed complete_unique(const BracketAnsatz& a) {
    const auto& p = a.pres;
    auto cs = jacobi_constraint_space(a);
    if (cs.size() != 1)
        throw std::runtime_error("solver: admissible space has dimension " +
                                 std::to_string(cs.size()) + ", not a single ray");
    Vec sigma = cs[0];

    std::vector<std::size_t> ideal_of(p.l0.dim, 0);
    for (std::size_t i = 0; i < p.ideals.size(); ++i)
        for (std::size_t m = p.ideals[i].first; m < p.ideals[i].second; ++m) ideal_of[m] = i;

    Completed out;
    std::size_t md = p.module_dim();
    bool found = false;
    for (std::size_t w = 0; w < md && !found; ++w)
        for (std::size_t wp = w; wp < md && !found; ++wp)
            for (std::size_t m = 0; m < p.l0.dim && !found; ++m) {
                Cyc c = sigma[ideal_of[m]] * a.blocks[ideal_of[m]][m].at(w, wp);
                if (c.is_zero()) continue;
                out.cal_w = w;
                out.cal_wp = wp;
                out.cal_m = m;
                sigma = c.inv() * sigma;
                found = true;
            }
    if (!found) throw std::runtime_error("solver: admissible bracket is zero");
    out.sigma = sigma;
    out.algebra = complete_superalgebra(a, sigma);
    return out;
}

namespace {

/// Unknown layout for the generic solver: u = m * npairs + pair.
struct GenericProblem {
    std::size_t n0 = 0, md = 0, np = 0, total = 0;
    std::vector<char> keep;                 // unit survives every diagonal generator
    std::vector<std::size_t> rest;          // generators that need elimination
};

GenericProblem classify_generic(const ModulePresentation& p) {
    GenericProblem g;
    g.n0 = p.l0.dim;
    g.md = p.module_dim();
    g.np = pair_count(g.md);
    g.total = g.n0 * g.np;
    g.keep.assign(g.total, 1);
    for (std::size_t t = 0; t < g.n0; ++t) {
        if (is_diagonal(p.rho[t]) && ad_is_diagonal(p.l0, t)) {
            // T is diagonal on units: filter directly
            for (std::size_t m = 0; m < g.n0; ++m) {
                Cyc am = ad_eigenvalue(p.l0, t, m);
                for (std::size_t w = 0; w < g.md; ++w)
                    for (std::size_t wp = w; wp < g.md; ++wp) {
                        Cyc eig = am - p.rho[t].at(w, w) - p.rho[t].at(wp, wp);
                        if (!eig.is_zero()) g.keep[m * g.np + pidx(g.md, w, wp)] = 0;
                    }
            }
        } else {
            g.rest.push_back(t);
        }
    }
    return g;
}

/// image of a symmetric map under B -> [X_t, B(.,.)] - B(X_t., .) - B(., X_t.)
Vec apply_generic(const ModulePresentation& p, const GenericProblem& g, std::size_t t,
                  const Vec& B) {
    Vec out(g.total, Cyc::zero());
    for (std::size_t mp = 0; mp < g.n0; ++mp)
        for (const auto& [m, c] : p.l0.entry(t, mp))
            for (std::size_t q = 0; q < g.np; ++q)
                if (!B[mp * g.np + q].is_zero())
                    out[m * g.np + q] = out[m * g.np + q] + c * B[mp * g.np + q];
    auto cols = column_entries(p.rho[t]);
    for (std::size_t w = 0; w < g.md; ++w)
        for (std::size_t wp = w; wp < g.md; ++wp) {
            std::size_t q = pidx(g.md, w, wp);
            for (const auto& [a2, v] : cols[w])
                for (std::size_t m = 0; m < g.n0; ++m) {
                    const Cyc& x = B[m * g.np + pidx(g.md, a2, wp)];
                    if (!x.is_zero()) out[m * g.np + q] = out[m * g.np + q] - v * x;
                }
            for (const auto& [a2, v] : cols[wp])
                for (std::size_t m = 0; m < g.n0; ++m) {
                    const Cyc& x = B[m * g.np + pidx(g.md, w, a2)];
                    if (!x.is_zero()) out[m * g.np + q] = out[m * g.np + q] - v * x;
                }
        }
    return out;
}

}  // namespace

std::size_t equivariant_space_dim(const ModulePresentation& p) {
    GenericProblem g = classify_generic(p);
    std::vector<Vec> basis;
    for (std::size_t u = 0; u < g.total; ++u)
        if (g.keep[u]) {
            Vec e(g.total, Cyc::zero());
            e[u] = Cyc::one();
            basis.push_back(std::move(e));
        }
    for (std::size_t t : g.rest) {
        if (basis.empty()) return 0;
        Mat M(g.total, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Vec img = apply_generic(p, g, t, basis[j]);
            for (std::size_t i = 0; i < g.total; ++i) M.at(i, j) = img[i];
        }
        auto ns = linalg::nullspace(M);
        std::vector<Vec> next;
        for (const Vec& comb : ns) {
            Vec w(g.total, Cyc::zero());
            for (std::size_t k2 = 0; k2 < basis.size(); ++k2)
                if (!comb[k2].is_zero()) w = w + comb[k2] * basis[k2];
            next.push_back(std::move(w));
        }
        basis = std::move(next);
    }
    return basis.size();
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t root24(std::uint64_t p) {
    if ((p - 1) % 24 != 0) throw std::invalid_argument("modular: need p = 1 (mod 24)");
    for (std::uint64_t gen = 2; gen < p; ++gen) {
        std::uint64_t r = powmod(gen, (p - 1) / 24, p);
        if (powmod(r, 12, p) != 1 && powmod(r, 8, p) != 1) return r;
    }
    throw std::runtime_error("modular: no primitive 24th root");
}

std::uint64_t rat_mod(const cyclo::Rat& r, std::uint64_t p) {
    std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), static_cast<unsigned long>(p));
    std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), static_cast<unsigned long>(p));
    if (den == 0) throw std::runtime_error("modular: denominator divisible by p");
    return num * powmod(den, p - 2, p) % p;
}

std::uint64_t cyc_mod(const Cyc& c, std::uint64_t p, const std::array<std::uint64_t, 8>& zp) {
    std::uint64_t s = 0;
    auto co = c.coeffs();
    for (std::size_t i = 0; i < 8; ++i) {
        if (co[i] == 0) continue;
        s = (s + rat_mod(co[i], p) * zp[i]) % p;
    }
    return s;
}

/// incremental mod-p echelon keyed by pivot column
struct ModElim {
    std::uint64_t p;
    std::size_t cols;
    std::vector<std::vector<std::uint64_t>> row_at;  // by pivot column; empty = none
    std::size_t rank = 0;

    ModElim(std::uint64_t prime, std::size_t c) : p(prime), cols(c), row_at(c) {}

    bool add(std::vector<std::uint64_t>& buf) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (buf[c] == 0) continue;
            if (!row_at[c].empty()) {
                std::uint64_t f = p - buf[c];
                const auto& r = row_at[c];
                for (std::size_t j = c; j < cols; ++j)
                    if (r[j]) buf[j] = (buf[j] + f * r[j]) % p;
                continue;
            }
            std::uint64_t inv = powmod(buf[c], p - 2, p);
            for (std::size_t j = c; j < cols; ++j)
                if (buf[j]) buf[j] = buf[j] * inv % p;
            row_at[c] = buf;
            ++rank;
            return true;
        }
        return false;
    }
};

}  // namespace

std::size_t equivariant_space_dim_modp(const BracketAnsatz& a, std::uint64_t prime) {
    const auto& p = a.pres;
    if (prime >= (std::uint64_t{1} << 31)) throw std::invalid_argument("modular: prime too large");
    std::array<std::uint64_t, 8> zp;
    zp[0] = 1;
    std::uint64_t r24 = root24(prime);
    for (std::size_t i = 1; i < 8; ++i) zp[i] = zp[i - 1] * r24 % prime;

    GenericProblem g = classify_generic(p);
    std::vector<std::size_t> remap(g.total, SIZE_MAX);
    std::size_t nkeep = 0;
    for (std::size_t u = 0; u < g.total; ++u)
        if (g.keep[u]) remap[u] = nkeep++;
    std::size_t k0 = p.ideals.size();

    // the ansatz blocks are exact solutions; certify their images stay
    // independent mod p, so the modular nullity is at least k0
    {
        ModElim known(prime, nkeep);
        for (std::size_t i = 0; i < k0; ++i) {
            std::vector<std::uint64_t> buf(nkeep, 0);
            for (std::size_t m = p.ideals[i].first; m < p.ideals[i].second; ++m)
                for (std::size_t w = 0; w < g.md; ++w)
                    for (std::size_t wp = w; wp < g.md; ++wp) {
                        std::size_t u = m * g.np + pidx(g.md, w, wp);
                        if (remap[u] == SIZE_MAX) {
                            if (cyc_mod(a.blocks[i][m].at(w, wp), prime, zp) != 0)
                                throw std::runtime_error("modular: block escapes the unit filter");
                            continue;
                        }
                        buf[remap[u]] = cyc_mod(a.blocks[i][m].at(w, wp), prime, zp);
                    }
            if (!known.add(buf))
                throw std::runtime_error("modular: unlucky prime, blocks dependent mod p");
        }
    }

    // eliminate the equivariance equations of the non-diagonal generators;
    // rank can never exceed nkeep - k0, so reaching it settles the dimension
    std::size_t target = nkeep - k0;
    ModElim elim(prime, nkeep);
    std::vector<std::uint64_t> buf(nkeep);
    for (std::size_t t : g.rest) {
        // mod-p images of ad_t rows and of rho_t columns
        std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> ad_row(g.n0);
        for (std::size_t mp = 0; mp < g.n0; ++mp)
            for (const auto& [m, c] : p.l0.entry(t, mp)) {
                std::uint64_t v = cyc_mod(c, prime, zp);
                if (v) ad_row[m].emplace_back(mp, v);
            }
        auto cols = column_entries(p.rho[t]);
        std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> colm(g.md);
        for (std::size_t w = 0; w < g.md; ++w)
            for (const auto& [a2, v] : cols[w]) {
                std::uint64_t vm = cyc_mod(v, prime, zp);
                if (vm) colm[w].emplace_back(a2, vm);
            }

        for (std::size_t w = 0; w < g.md && elim.rank < target; ++w)
            for (std::size_t wp = w; wp < g.md && elim.rank < target; ++wp) {
                std::size_t q = pidx(g.md, w, wp);
                for (std::size_t m = 0; m < g.n0 && elim.rank < target; ++m) {
                    std::fill(buf.begin(), buf.end(), 0);
                    bool any = false;
                    auto put = [&](std::size_t u, std::uint64_t v) {
                        if (remap[u] == SIZE_MAX || v == 0) return;
                        buf[remap[u]] = (buf[remap[u]] + v) % prime;
                        any = true;
                    };
                    for (const auto& [mp, v] : ad_row[m]) put(mp * g.np + q, v);
                    for (const auto& [a2, v] : colm[w])
                        put(m * g.np + pidx(g.md, a2, wp), prime - v);
                    for (const auto& [a2, v] : colm[wp])
                        put(m * g.np + pidx(g.md, w, a2), prime - v);
                    if (any) elim.add(buf);
                }
            }
        if (elim.rank >= target) return k0;
    }
    return nkeep - elim.rank;
}

}  // namespace esla::solver
