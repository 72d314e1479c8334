#include "esla/models.hpp"

#include <stdexcept>

namespace esla::models {

namespace sl2 {

SuperAlgebra algebra() {
    SuperAlgebra L(3);
    L.labels = {"H", "E", "F"};
    L.set_entry(0, 1, {{1, Cyc(2)}});   // [H,E] = 2E
    L.set_entry(0, 2, {{2, Cyc(-2)}});  // [H,F] = -2F
    L.set_entry(1, 2, {{0, Cyc(1)}});   // [E,F] = H
    L.symmetrize();
    return L;
}

Mat2 to_matrix(const Vec& hef) {
    return {hef[0], hef[1], hef[2], -hef[0]};
}

Vec from_matrix(const Mat2& m) {
    if (!(m[3] + m[0]).is_zero()) throw std::invalid_argument("from_matrix: nonzero trace");
    return {m[0], m[1], m[2]};
}

Mat2 action_on_V(const Vec& hef) { return to_matrix(hef); }

Cyc psi(std::size_t a, std::size_t b) {
    if (a == 0 && b == 1) return Cyc(1);
    if (a == 1 && b == 0) return Cyc(-1);
    return Cyc(0);
}

// p(x,y)(z) = x psi(y,z) + y psi(x,z): p(u,u) = 2E, p(u,v) = -H, p(v,v) = -2F
Vec p_map(std::size_t a, std::size_t b) {
    Vec r(3);
    if (a == 0 && b == 0) r[1] = Cyc(2);
    else if (a == 1 && b == 1) r[2] = Cyc(-2);
    else r[0] = Cyc(-1);
    return r;
}

} // namespace sl2

namespace dmodel {

std::size_t even_index(std::size_t factor, std::size_t hef) { return 3 * factor + hef; }
std::size_t odd_index(std::size_t a, std::size_t b, std::size_t c) { return 9 + 4 * a + 2 * b + c; }

std::size_t w_index(std::size_t i) {
    static constexpr std::size_t tab[4] = {9 + 7, 9 + 4, 9 + 2, 9 + 1};  // vvv, vuu, uvu, uuv
    return tab[i];
}

std::size_t wp_index(std::size_t i) {
    static constexpr std::size_t tab[4] = {9 + 0, 9 + 3, 9 + 5, 9 + 6};  // uuu, uvv, vuv, vvu
    return tab[i];
}

} // namespace dmodel

namespace {

// module action of the unit H/E/F on x_a; at most one term
std::optional<std::pair<std::size_t, Cyc>> act(std::size_t hef, std::size_t a) {
    switch (hef) {
        case 0: return {{a, Cyc(a == 0 ? 1 : -1)}};              // H
        case 1: return a == 1 ? std::optional<std::pair<std::size_t, Cyc>>{{0u, Cyc(1)}}
                              : std::nullopt;                    // E: v -> u
        default: return a == 0 ? std::optional<std::pair<std::size_t, Cyc>>{{1u, Cyc(1)}}
                               : std::nullopt;                   // F: u -> v
    }
}

} // namespace

SuperAlgebra build_D(const Cyc& s1, const Cyc& s2, const Cyc& s3) {
    using namespace dmodel;
    const std::array<Cyc, 3> sigma{s1, s2, s3};
    SuperAlgebra L(17);
    static const char* hef_name[3] = {"H", "E", "F"};
    for (std::size_t f = 0; f < 3; ++f)
        for (std::size_t k = 0; k < 3; ++k)
            L.labels[even_index(f, k)] = std::string(hef_name[k]) + std::to_string(f + 1);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                std::size_t idx = odd_index(a, b, c);
                L.parity[idx] = 1;
                const char* uv = "uv";
                L.labels[idx] = std::string(1, uv[a]) + uv[b] + uv[c];
            }

    // sl2 x sl2 x sl2
    for (std::size_t f = 0; f < 3; ++f) {
        L.set_entry(even_index(f, 0), even_index(f, 1), {{even_index(f, 1), Cyc(2)}});
        L.set_entry(even_index(f, 0), even_index(f, 2), {{even_index(f, 2), Cyc(-2)}});
        L.set_entry(even_index(f, 1), even_index(f, 2), {{even_index(f, 0), Cyc(1)}});
    }

    // even action on V (x) V (x) V, one tensor slot at a time
    for (std::size_t f = 0; f < 3; ++f)
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t c = 0; c < 2; ++c) {
                        std::array<std::size_t, 3> t{a, b, c};
                        auto hit = act(k, t[f]);
                        if (!hit) continue;
                        t[f] = hit->first;
                        L.set_entry(even_index(f, k), odd_index(a, b, c),
                                    {{odd_index(t[0], t[1], t[2]), hit->second}});
                    }

    // odd-odd: sum over factors of sigma_k p_k scaled by the psi's elsewhere
    for (std::size_t i = 9; i < 17; ++i)
        for (std::size_t j = i; j < 17; ++j) {
            std::array<std::size_t, 3> x{(i - 9) >> 2 & 1, (i - 9) >> 1 & 1, (i - 9) & 1};
            std::array<std::size_t, 3> y{(j - 9) >> 2 & 1, (j - 9) >> 1 & 1, (j - 9) & 1};
            SparseVec out;
            for (std::size_t f = 0; f < 3; ++f) {
                Cyc scale = sigma[f];
                for (std::size_t g = 0; g < 3; ++g)
                    if (g != f) scale *= sl2::psi(x[g], y[g]);
                if (scale.is_zero()) continue;
                Vec p = sl2::p_map(x[f], y[f]);
                for (std::size_t k = 0; k < 3; ++k)
                    if (!p[k].is_zero()) out.emplace_back(even_index(f, k), scale * p[k]);
            }
            L.set_entry(i, j, std::move(out));
        }

    L.symmetrize();
    return L;
}

namespace dmodel {

Mat iota(const Mat2& f, const Mat2& g, const Mat2& h) {
    const std::array<Mat2, 3> m{f, g, h};
    for (const auto& x : m)
        if (!(x[0] * x[3] - x[1] * x[2] - Cyc(1)).is_zero())
            throw std::invalid_argument("iota: determinant must be 1");
    Mat phi(17, 17);
    for (std::size_t fac = 0; fac < 3; ++fac) {
        Mat2 inv = *m2_inv(m[fac]);
        for (std::size_t k = 0; k < 3; ++k) {
            Vec unit(3);
            unit[k] = Cyc(1);
            Vec img = sl2::from_matrix(m2_mul(m[fac], m2_mul(sl2::to_matrix(unit), inv)));
            for (std::size_t r = 0; r < 3; ++r)
                phi.at(even_index(fac, r), even_index(fac, k)) = img[r];
        }
    }
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t ap = 0; ap < 2; ++ap)
                    for (std::size_t bp = 0; bp < 2; ++bp)
                        for (std::size_t cp = 0; cp < 2; ++cp)
                            phi.at(odd_index(ap, bp, cp), odd_index(a, b, c)) =
                                f[ap * 2 + a] * g[bp * 2 + b] * h[cp * 2 + c];
    return phi;
}

Mat outer(const std::array<std::size_t, 3>& perm, const Cyc& mu) {
    Mat phi(17, 17);
    for (std::size_t fac = 0; fac < 3; ++fac)
        for (std::size_t k = 0; k < 3; ++k)
            phi.at(even_index(perm[fac], k), even_index(fac, k)) = Cyc(1);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                std::array<std::size_t, 3> src{a, b, c}, dst{};
                for (std::size_t j = 0; j < 3; ++j) dst[perm[j]] = src[j];
                phi.at(odd_index(dst[0], dst[1], dst[2]), odd_index(a, b, c)) = mu;
            }
    return phi;
}

} // namespace dmodel

std::optional<DAlphaIso> d_alpha_iso(const std::array<Cyc, 3>& sigma,
                                     const std::array<std::size_t, 3>& pi, const Cyc& lambda) {
    if (lambda.is_zero()) return std::nullopt;
    auto root = cyclo::sqrt_in_field(lambda);
    if (!root) return std::nullopt;
    DAlphaIso iso;
    for (std::size_t k = 0; k < 3; ++k) iso.target_sigma[pi[k]] = lambda * sigma[k];
    iso.map = dmodel::outer(pi, root->inv());
    SuperAlgebra src = build_D(sigma[0], sigma[1], sigma[2]);
    SuperAlgebra dst = build_D(iso.target_sigma[0], iso.target_sigma[1], iso.target_sigma[2]);
    if (!superalg::is_bracket_isomorphism(src, dst, iso.map))
        throw std::logic_error("d_alpha_iso: intertwiner check failed");
    return iso;
}

} // namespace esla::models
