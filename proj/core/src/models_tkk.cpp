#include "esla/models.hpp"

#include <stdexcept>

namespace esla::models {

using cyclo::rat;

Vec CommSuperAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Cyc f = x[i] * y[j];
            for (const auto& [k, c] : mult[i * dim + j]) r[k] += f * c;
        }
    }
    return r;
}

Vec CommSuperAlgebra::basis_vec(std::size_t i) const {
    Vec v(dim);
    v[i] = Cyc::one();
    return v;
}

Mat CommSuperAlgebra::left_mult(std::size_t i) const {
    Mat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (const auto& [k, c] : mult[i * dim + j]) m.at(k, j) = c;
    return m;
}

bool CommSuperAlgebra::is_supercommutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec lhs = mul(basis_vec(i), basis_vec(j));
            Vec rhs = mul(basis_vec(j), basis_vec(i));
            Cyc sign{(parity[i] && parity[j]) ? -1 : 1};
            for (std::size_t k = 0; k < dim; ++k)
                if (!(lhs[k] - sign * rhs[k]).is_zero()) return false;
        }
    return true;
}

CommSuperAlgebra build_kaplansky3() {
    CommSuperAlgebra A;
    A.dim = 3;
    A.parity = {0, 1, 1};
    A.labels = {"e", "u", "v"};
    A.mult.assign(9, {});
    Cyc one = Cyc::one(), half{rat(1, 2)};
    auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Cyc& c) {
        A.mult[i * 3 + j] = {{k, c}};
    };
    put(0, 0, 0, one);
    put(0, 1, 1, half);
    put(1, 0, 1, half);
    put(0, 2, 2, half);
    put(2, 0, 2, half);
    put(1, 2, 0, one);
    put(2, 1, 0, -one);
    return A;
}

namespace {

// Derivations of the Kaplansky algebra: sp(V) acts on V alone, the odd part
// is D_z with D_z(e) = z and D_z(x) = -2 psi(z,x) e. Order: H, E, F, u, v.
std::vector<Mat> kaplansky_derivations() {
    std::vector<Mat> d(5, Mat(3, 3));
    Cyc one = Cyc::one(), two{2};
    d[0].at(1, 1) = one;  // H: u -> u, v -> -v
    d[0].at(2, 2) = -one;
    d[1].at(1, 2) = one;  // E: v -> u
    d[2].at(2, 1) = one;  // F: u -> v
    d[3].at(1, 0) = one;  // D_u: e -> u, v -> -2 psi(u,v) e
    d[3].at(0, 2) = -two;
    d[4].at(2, 0) = one;  // D_v: e -> v, u -> -2 psi(v,u) e
    d[4].at(0, 1) = two;
    return d;
}

void sparse_add(superalg::SparseVec& v, std::size_t k, const Cyc& c) {
    if (c.is_zero()) return;
    for (auto& [idx, coeff] : v)
        if (idx == k) {
            coeff += c;
            return;
        }
    v.emplace_back(k, c);
}

superalg::SparseVec prune(superalg::SparseVec v) {
    superalg::SparseVec out;
    for (auto& [k, c] : v)
        if (!c.is_zero()) out.emplace_back(k, c);
    return out;
}

}  // namespace

Kac10 build_kac10() {
    CommSuperAlgebra k3 = build_kaplansky3();
    Kac10 K;
    CommSuperAlgebra& A = K.algebra;
    A.dim = 10;
    A.parity.assign(10, 0);
    A.labels.assign(10, {});
    A.labels[0] = "1";
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            A.parity[1 + 3 * a + b] = (k3.parity[a] + k3.parity[b]) % 2;
            A.labels[1 + 3 * a + b] = k3.labels[a] + k3.labels[b];
        }
    A.mult.assign(100, {});
    Cyc one = Cyc::one();
    for (std::size_t j = 0; j < 10; ++j) {
        A.mult[j] = {{j, one}};
        A.mult[j * 10] = {{j, one}};
    }

    // the supersymmetric form on the Kaplansky algebra
    Mat f3(3, 3);
    f3.at(0, 0) = Cyc{rat(1, 2)};
    f3.at(1, 2) = one;
    f3.at(2, 1) = -one;

    Cyc threequarters{rat(3, 4)};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t a2 = 0; a2 < 3; ++a2)
                for (std::size_t b2 = 0; b2 < 3; ++b2) {
                    std::size_t i = 1 + 3 * a + b, j = 1 + 3 * a2 + b2;
                    Cyc sign{(k3.parity[b] && k3.parity[a2]) ? -1 : 1};
                    superalg::SparseVec out;
                    for (const auto& [c, xc] : k3.mult[a * 3 + a2])
                        for (const auto& [d, yd] : k3.mult[b * 3 + b2])
                            sparse_add(out, 1 + 3 * c + d, sign * xc * yd);
                    sparse_add(out, 0, -sign * threequarters * f3.at(a, a2) * f3.at(b, b2));
                    A.mult[i * 10 + j] = prune(std::move(out));
                }

    // derivations: first factor then second, osp order H, E, F, u, v each
    std::vector<Mat> d3 = kaplansky_derivations();
    const char* osp_names[5] = {"H", "E", "F", "u", "v"};
    K.der.assign(10, Mat(10, 10));
    K.der_parity = {0, 0, 0, 1, 1, 0, 0, 0, 1, 1};
    for (std::size_t m = 0; m < 5; ++m) {
        K.der_labels.push_back(std::string("d1") + osp_names[m]);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                for (std::size_t c = 0; c < 3; ++c)
                    K.der[m].at(1 + 3 * c + b, 1 + 3 * a + b) = d3[m].at(c, a);
    }
    for (std::size_t m = 0; m < 5; ++m) {
        K.der_labels.push_back(std::string("d2") + osp_names[m]);
        int dpar = (m >= 3) ? 1 : 0;
        for (std::size_t a = 0; a < 3; ++a) {
            Cyc sign{(dpar && k3.parity[a]) ? -1 : 1};
            for (std::size_t b = 0; b < 3; ++b)
                for (std::size_t c = 0; c < 3; ++c)
                    K.der[5 + m].at(1 + 3 * a + c, 1 + 3 * a + b) = sign * d3[m].at(c, b);
        }
    }

    K.tau = Mat(10, 10);
    K.tau.at(0, 0) = one;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            K.tau.at(1 + 3 * b + a, 1 + 3 * a + b) =
                Cyc{(k3.parity[a] && k3.parity[b]) ? -1 : 1};

    K.central_idempotent = Vec(10);
    K.central_idempotent[0] = Cyc{rat(-1, 2)};
    K.central_idempotent[1] = Cyc{2};
    return K;
}

TkkAlgebra build_tkk_f4() {
    TkkAlgebra T;
    T.k10 = build_kac10();
    const CommSuperAlgebra& K = T.k10.algebra;
    SuperAlgebra sl = sl2::algebra();

    std::vector<Mat> ell(10);
    for (std::size_t k = 0; k < 10; ++k) ell[k] = K.left_mult(k);

    // express operators in the derivation basis
    Mat dm(100, 10);
    for (std::size_t m = 0; m < 10; ++m)
        for (std::size_t r = 0; r < 10; ++r)
            for (std::size_t c = 0; c < 10; ++c) dm.at(r * 10 + c, m) = T.k10.der[m].at(r, c);
    auto der_coords = [&](const Mat& x) {
        Vec b(100);
        for (std::size_t r = 0; r < 10; ++r)
            for (std::size_t c = 0; c < 10; ++c) b[r * 10 + c] = x.at(r, c);
        auto s = linalg::solve(dm, b);
        if (!s) throw std::runtime_error("tkk: operator lies outside the derivation span");
        return *s;
    };

    // polarized determinant on (H, E, F)
    Mat n(3, 3);
    n.at(0, 0) = Cyc{-2};
    n.at(1, 2) = Cyc{-1};
    n.at(2, 1) = Cyc{-1};

    SuperAlgebra L(40);
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t k = 0; k < 10; ++k) {
            std::size_t i = TkkAlgebra::tensor_index(s, k);
            L.parity[i] = K.parity[k];
            L.labels[i] = sl.labels[s] + "." + K.labels[k];
        }
    for (std::size_t m = 0; m < 10; ++m) {
        L.parity[TkkAlgebra::der_index(m)] = T.k10.der_parity[m];
        L.labels[TkkAlgebra::der_index(m)] = T.k10.der_labels[m];
    }

    Cyc two{2};
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t k = 0; k < 10; ++k)
            for (std::size_t s2 = 0; s2 < 3; ++s2)
                for (std::size_t k2 = 0; k2 < 10; ++k2) {
                    superalg::SparseVec out;
                    for (const auto& [s3, c] : sl.entry(s, s2))
                        for (const auto& [k3, m] : K.mult[k * 10 + k2])
                            sparse_add(out, TkkAlgebra::tensor_index(s3, k3), c * m);
                    if (!n.at(s, s2).is_zero()) {
                        Mat rest = ell[k2] * ell[k];
                        Mat comm = (K.parity[k] && K.parity[k2]) ? ell[k] * ell[k2] + rest
                                                                 : ell[k] * ell[k2] - rest;
                        Vec mu = der_coords(comm);
                        for (std::size_t m = 0; m < 10; ++m)
                            sparse_add(out, TkkAlgebra::der_index(m), -two * n.at(s, s2) * mu[m]);
                    }
                    L.set_entry(TkkAlgebra::tensor_index(s, k), TkkAlgebra::tensor_index(s2, k2),
                                prune(std::move(out)));
                }

    for (std::size_t m = 0; m < 10; ++m)
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t k = 0; k < 10; ++k) {
                superalg::SparseVec fwd;
                for (std::size_t r = 0; r < 10; ++r)
                    sparse_add(fwd, TkkAlgebra::tensor_index(s, r), T.k10.der[m].at(r, k));
                superalg::SparseVec rev;
                Cyc sign{(T.k10.der_parity[m] && K.parity[k]) ? 1 : -1};
                for (const auto& [idx, c] : fwd) rev.emplace_back(idx, sign * c);
                L.set_entry(TkkAlgebra::der_index(m), TkkAlgebra::tensor_index(s, k), fwd);
                L.set_entry(TkkAlgebra::tensor_index(s, k), TkkAlgebra::der_index(m), rev);
            }

    for (std::size_t m = 0; m < 10; ++m)
        for (std::size_t m2 = 0; m2 < 10; ++m2) {
            Mat rest = T.k10.der[m2] * T.k10.der[m];
            Mat comm = (T.k10.der_parity[m] && T.k10.der_parity[m2])
                           ? T.k10.der[m] * T.k10.der[m2] + rest
                           : T.k10.der[m] * T.k10.der[m2] - rest;
            Vec mu = der_coords(comm);
            superalg::SparseVec out;
            for (std::size_t m3 = 0; m3 < 10; ++m3)
                sparse_add(out, TkkAlgebra::der_index(m3), mu[m3]);
            L.set_entry(TkkAlgebra::der_index(m), TkkAlgebra::der_index(m2), prune(std::move(out)));
        }

    T.algebra = std::move(L);

    // even ideals: sl2 (x) c and its complement
    const Vec& c = T.k10.central_idempotent;
    Vec unit_minus_c(10);
    unit_minus_c[0] = Cyc::one() - c[0];
    unit_minus_c[1] = -c[1];
    for (std::size_t s = 0; s < 3; ++s) {
        Vec v(40);
        for (std::size_t k = 0; k < 10; ++k) v[TkkAlgebra::tensor_index(s, k)] = c[k];
        T.ideal_sl2.push_back(std::move(v));
    }
    for (std::size_t s = 0; s < 3; ++s) {
        Vec v(40);
        for (std::size_t k = 0; k < 10; ++k) v[TkkAlgebra::tensor_index(s, k)] = unit_minus_c[k];
        T.ideal_so7.push_back(std::move(v));
    }
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t k : {5, 6, 8, 9}) {
            Vec v(40);
            v[TkkAlgebra::tensor_index(s, k)] = Cyc::one();
            T.ideal_so7.push_back(std::move(v));
        }
    for (std::size_t m : {0, 1, 2, 5, 6, 7}) {
        Vec v(40);
        v[TkkAlgebra::der_index(m)] = Cyc::one();
        T.ideal_so7.push_back(std::move(v));
    }
    return T;
}

} // namespace esla::models
