#include <stdexcept>

#include "esla/models.hpp"

namespace esla::models {

Vec SoAlgebra::coords(const Mat& x) const {
    Vec v(pairs.size());
    for (std::size_t m = 0; m < pairs.size(); ++m) v[m] = x.at(pairs[m].first, pairs[m].second);
    return v;
}

SoAlgebra so_of_monomial_form(const std::vector<std::size_t>& sigma, const std::vector<Cyc>& t) {
    std::size_t n = sigma.size();
    if (t.size() != n) throw std::invalid_argument("so: sigma/t length mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        if (sigma[j] >= n || sigma[sigma[j]] != j)
            throw std::invalid_argument("so: sigma is not an involution");
        if (t[j].is_zero() || !(t[sigma[j]] == t[j]))
            throw std::invalid_argument("so: form is not symmetric nondegenerate");
    }

    SoAlgebra so;
    so.n = n;
    so.sigma = sigma;
    so.t = t;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            std::pair<std::size_t, std::size_t> pos{j, k}, partner{sigma[k], sigma[j]};
            if (pos >= partner) continue;  // partner or fixed position
            so.pairs.push_back(pos);
            Mat b(n, n);
            b.at(j, k) = Cyc::one();
            b.at(sigma[k], sigma[j]) -= t[j] * t[k].inv();
            so.matrices.push_back(std::move(b));
        }

    std::size_t dim = so.pairs.size();
    superalg::SuperAlgebra L(dim);
    for (std::size_t m = 0; m < dim; ++m)
        L.labels[m] = "B" + std::to_string(so.pairs[m].first) + "_" +
                      std::to_string(so.pairs[m].second);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Mat comm = so.matrices[a] * so.matrices[b] - so.matrices[b] * so.matrices[a];
            Vec v = so.coords(comm);
            superalg::SparseVec sv;
            for (std::size_t k = 0; k < dim; ++k)
                if (!v[k].is_zero()) sv.emplace_back(k, v[k]);
            L.set_entry(a, b, std::move(sv));
        }
    so.algebra = std::move(L);
    return so;
}

SoAlgebra so_split(std::size_t q, std::size_t s) {
    std::size_t n = q + 2 * s;
    std::vector<std::size_t> sigma(n);
    std::vector<Cyc> t(n, Cyc::one());
    for (std::size_t j = 0; j < q; ++j) sigma[j] = j;
    for (std::size_t p = 0; p < s; ++p) {
        sigma[q + 2 * p] = q + 2 * p + 1;
        sigma[q + 2 * p + 1] = q + 2 * p;
    }
    return so_of_monomial_form(sigma, t);
}

SoElementary build_so_elementary(std::size_t q, std::size_t s, const abelian::AbGroup& G,
                                 const std::vector<abelian::GroupElem>& gamma) {
    SoElementary out{so_split(q, s), {}};
    const auto& so = out.so;
    if (gamma.size() != so.n) throw std::invalid_argument("so elementary: gamma length != n");
    abelian::GroupElem common = abelian::add(G, gamma[0], gamma[so.sigma[0]]);
    for (std::size_t j = 1; j < so.n; ++j)
        if (!(abelian::add(G, gamma[j], gamma[so.sigma[j]]) == common))
            throw std::invalid_argument(
                "so elementary: gamma_j + gamma_{sigma(j)} must not depend on j");

    gradings::Grading g;
    g.algebra = so.algebra;
    g.group = G;
    g.degree.reserve(so.pairs.size());
    for (const auto& [j, k] : so.pairs) g.degree.push_back(abelian::sub(G, gamma[j], gamma[k]));
    g.name = "so" + std::to_string(so.n) + "-elementary";
    out.grading = std::move(g);
    return out;
}

} // namespace esla::models
