#include "esla/models.hpp"

#include <stdexcept>
#include <string>

namespace esla::models {

namespace {

Mat2 get_block(const Mat& m, std::size_t r0, std::size_t c0) {
    return {m.at(r0, c0), m.at(r0, c0 + 1), m.at(r0 + 1, c0), m.at(r0 + 1, c0 + 1)};
}

void put_block(Mat& m, std::size_t r0, std::size_t c0, const Mat2& b) {
    m.at(r0, c0) = b[0];
    m.at(r0, c0 + 1) = b[1];
    m.at(r0 + 1, c0) = b[2];
    m.at(r0 + 1, c0 + 1) = b[3];
}

// X-bar = tr(X) I - X, the adjoint of X with respect to psi.
Mat2 bar(const Mat2& x) {
    Cyc t = x[0] + x[3];
    return {t - x[0], Cyc(-1) * x[1], Cyc(-1) * x[2], t - x[3]};
}

Mat2 m2_add(const Mat2& x, const Mat2& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

// Super bracket of 4x4 lifts: blocks 0..1 even, 2..3 odd.
Mat super_bracket(const Mat& x, const Mat& y, bool both_odd) {
    Mat xy = x * y;
    Mat yx = y * x;
    Mat out(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            out.at(r, c) = both_odd ? xy.at(r, c) + yx.at(r, c) : xy.at(r, c) - yx.at(r, c);
    return out;
}

}  // namespace

Vec Psl22::coords(const Mat& x) const {
    Mat2 x11 = get_block(x, 0, 0);
    Mat2 x22 = get_block(x, 2, 2);
    Cyc t = x11[0] + x11[3];
    if (!(t - (x22[0] + x22[3])).is_zero())
        throw std::invalid_argument("psl22: matrix is not in sl(2|2)");
    const Cyc& half = cyclo::constants().half;
    Cyc s = t * half;  // subtract the scalar part
    Vec out(14, Cyc(0));
    Vec d1 = sl2::from_matrix({x11[0] - s, x11[1], x11[2], x11[3] - s});
    Vec d2 = sl2::from_matrix({x22[0] - s, x22[1], x22[2], x22[3] - s});
    for (std::size_t k = 0; k < 3; ++k) {
        out[k] = d1[k];
        out[3 + k] = d2[k];
    }
    Mat2 x12 = get_block(x, 0, 2);
    Mat2 x21 = get_block(x, 2, 0);
    for (std::size_t k = 0; k < 4; ++k) {
        out[6 + k] = x12[k];
        out[10 + k] = x21[k];
    }
    return out;
}

Mat Psl22::theta_iota(const Mat2& f, const Mat2& g, const Mat2& h) const {
    auto fi_opt = m2_inv(f);
    auto gi_opt = m2_inv(g);
    if (!fi_opt || !gi_opt) throw std::invalid_argument("theta_iota: singular block");
    Mat2 fi = *fi_opt;
    Mat2 gi = *gi_opt;
    Mat out(14, 14);
    for (std::size_t j = 0; j < 14; ++j) {
        const Mat& x = lifts[j];
        // Conjugation by diag(f, g).
        Mat2 y11 = m2_mul(m2_mul(f, get_block(x, 0, 0)), fi);
        Mat2 y22 = m2_mul(m2_mul(g, get_block(x, 2, 2)), gi);
        Mat2 y12 = m2_mul(m2_mul(f, get_block(x, 0, 2)), gi);
        Mat2 y21 = m2_mul(m2_mul(g, get_block(x, 2, 0)), fi);
        // The third-slot action mixes each odd block with the bar of the other.
        Mat2 z12 = m2_add(m2_scale(h[0], y12), m2_scale(Cyc(-1) * h[1], bar(y21)));
        Mat2 z21 = m2_add(m2_scale(Cyc(-1) * h[2], bar(y12)), m2_scale(h[3], y21));
        Mat img(4, 4);
        put_block(img, 0, 0, y11);
        put_block(img, 2, 2, y22);
        put_block(img, 0, 2, z12);
        put_block(img, 2, 0, z21);
        Vec col = coords(img);
        for (std::size_t r = 0; r < 14; ++r) out.at(r, j) = col[r];
    }
    return out;
}

Mat Psl22::theta_phi() const {
    const Cyc& i = cyclo::constants().i;
    Cyc mi = Cyc(-1) * i;
    Mat out(14, 14);
    for (std::size_t j = 0; j < 14; ++j) {
        const Mat& x = lifts[j];
        Mat img(4, 4);
        put_block(img, 0, 0, get_block(x, 2, 2));
        put_block(img, 2, 2, get_block(x, 0, 0));
        put_block(img, 0, 2, m2_scale(mi, bar(get_block(x, 0, 2))));
        put_block(img, 2, 0, m2_scale(mi, bar(get_block(x, 2, 0))));
        Vec col = coords(img);
        for (std::size_t r = 0; r < 14; ++r) out.at(r, j) = col[r];
    }
    return out;
}

Psl22 build_psl22() {
    Psl22 P;

    // Basis lifts: sl2 in each diagonal block, matrix units off the diagonal.
    auto hef = [](std::size_t k) {
        Vec v(3, Cyc(0));
        v[k] = Cyc(1);
        return sl2::to_matrix(v);
    };
    static const char* kHef = "HEF";
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < 3; ++k) {
        Mat m(4, 4);
        put_block(m, 0, 0, hef(k));
        P.lifts.push_back(m);
        labels.push_back(std::string(1, kHef[k]) + "'");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        Mat m(4, 4);
        put_block(m, 2, 2, hef(k));
        P.lifts.push_back(m);
        labels.push_back(std::string(1, kHef[k]) + "''");
    }
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            Mat m(4, 4);
            m.at(r, 2 + c) = Cyc(1);
            P.lifts.push_back(m);
            labels.push_back("x" + std::to_string(r + 1) + std::to_string(c + 1));
        }
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            Mat m(4, 4);
            m.at(2 + r, c) = Cyc(1);
            P.lifts.push_back(m);
            labels.push_back("y" + std::to_string(r + 1) + std::to_string(c + 1));
        }

    SuperAlgebra L(14);
    L.labels = labels;
    for (std::size_t k = 6; k < 14; ++k) L.parity[k] = 1;
    for (std::size_t i = 0; i < 14; ++i)
        for (std::size_t j = i; j < 14; ++j) {
            if (i == j && L.parity[i] == 0) continue;
            bool both_odd = L.parity[i] == 1 && L.parity[j] == 1;
            Vec c = P.coords(super_bracket(P.lifts[i], P.lifts[j], both_odd));
            superalg::SparseVec sv;
            for (std::size_t r = 0; r < 14; ++r)
                if (!c[r].is_zero()) sv.push_back({r, c[r]});
            L.set_entry(i, j, sv);
        }
    L.symmetrize();
    P.algebra = L;

    // The ideal (s1 + s2) + L1 of D(1,-1,0): everything except the third sl2.
    P.ideal_indices = {0, 1, 2, 3, 4, 5, 9, 10, 11, 12, 13, 14, 15, 16};

    // Omega: identity on the two sl2 summands; on the odd part
    // x_a (x) x_b (x) u -> sqrt2 x_a psi(x_b,.) upper-right,
    // x_a (x) x_b (x) v -> sqrt2 x_b psi(x_a,.) lower-left,
    // where x_e psi(x_f,.) = (-1)^f E_{e,1-f}.
    const Cyc& s2 = cyclo::constants().sqrt2;
    Mat om(14, 17);
    for (std::size_t k = 0; k < 6; ++k) om.at(k, k) = Cyc(1);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                std::size_t col = 9 + 4 * a + 2 * b + c;
                std::size_t e = c == 0 ? a : b;
                std::size_t f = c == 0 ? b : a;
                std::size_t row = (c == 0 ? 6 : 10) + 2 * e + (1 - f);
                om.at(row, col) = f == 0 ? s2 : Cyc(-1) * s2;
            }
    P.omega = om;
    return P;
}

Mat perturb_to_dminus1(const Mat& psi) {
    SuperAlgebra d1 = build_D(Cyc(1), Cyc(1), Cyc(-2));
    if (psi.rows != 17 || psi.cols != 17 || !superalg::is_automorphism(d1, psi))
        throw std::invalid_argument("perturb: not an automorphism of D(1)");

    // Which sl2 summand receives the first one?  Automorphisms of D(1,1,-2)
    // fix the third summand and permute the first two, so the image of H1
    // lies entirely in one of them.
    bool in_s1 = false, in_s2 = false;
    for (std::size_t r = 0; r < 17; ++r) {
        if (psi.at(r, 0).is_zero()) continue;
        if (r < 3)
            in_s1 = true;
        else if (r < 6)
            in_s2 = true;
        else
            throw std::invalid_argument("perturb: image of H1 leaves the first two summands");
    }
    if (in_s1 == in_s2) throw std::invalid_argument("perturb: image of H1 straddles the summands");

    Mat out = psi;
    if (in_s2) {
        const Cyc& i = cyclo::constants().i;
        for (std::size_t r = 9; r < 17; ++r)
            for (std::size_t c = 0; c < 17; ++c) out.at(r, c) = i * out.at(r, c);
    }
    SuperAlgebra dm = build_D(Cyc(1), Cyc(-1), Cyc(0));
    if (!superalg::is_automorphism(dm, out))
        throw std::invalid_argument("perturb: transported map is not an automorphism of D(-1)");
    return out;
}

}  // namespace esla::models
