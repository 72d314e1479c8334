#include "esla/models.hpp"

#include <stdexcept>

namespace esla::models {

Vec AlgebraWithForm::mul(const Vec& x, const Vec& y) const {
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

Vec AlgebraWithForm::basis_vec(std::size_t i) const {
    Vec v(dim);
    v[i] = Cyc::one();
    return v;
}

Cyc AlgebraWithForm::norm_quad(const Vec& x) const {
    return cyclo::rat(1, 2) * form.eval(x, x);
}

Vec AlgebraWithForm::conj(const Vec& x) const {
    Cyc t = form.eval(x, unity);
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = t * unity[i] - x[i];
    return r;
}

namespace {

// 2x2 matrix basis I, H = diag(1,-1), E = E12, F = E21
Mat2 basis_matrix(std::size_t i) {
    const auto& K = cyclo::constants();
    switch (i) {
        case quat::I: return {Cyc(1), Cyc(0), Cyc(0), Cyc(1)};
        case quat::H: return {Cyc(1), Cyc(0), Cyc(0), Cyc(-1)};
        case quat::E: return {Cyc(0), Cyc(1), Cyc(0), Cyc(0)};
        case quat::F: return {Cyc(0), Cyc(0), Cyc(1), Cyc(0)};
        default: throw std::out_of_range("quaternion basis index");
    }
    (void)K;
}

// expand a 2x2 matrix in the I,H,E,F basis
Vec expand(const Mat2& m) {
    const Cyc half(cyclo::rat(1, 2));
    Vec r(4);
    r[quat::I] = half * (m[0] + m[3]);
    r[quat::H] = half * (m[0] - m[3]);
    r[quat::E] = m[1];
    r[quat::F] = m[2];
    return r;
}

} // namespace

Mat2 m2(long a, long b, long c, long d) { return {Cyc(a), Cyc(b), Cyc(c), Cyc(d)}; }

Mat2 m2_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 m2_scale(const Cyc& s, const Mat2& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

std::optional<Mat2> m2_inv(const Mat2& x) {
    Cyc det = x[0] * x[3] - x[1] * x[2];
    if (det.is_zero()) return std::nullopt;
    Cyc d = det.inv();
    return Mat2{d * x[3], -(d * x[1]), -(d * x[2]), d * x[0]};
}

AlgebraWithForm build_quaternion() {
    AlgebraWithForm A;
    A.dim = 4;
    A.labels = {"I", "H", "E", "F"};
    A.mult.resize(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Vec prod = expand(m2_mul(basis_matrix(i), basis_matrix(j)));
            SparseVec s;
            for (std::size_t k = 0; k < 4; ++k)
                if (!prod[k].is_zero()) s.emplace_back(k, prod[k]);
            A.mult[i * 4 + j] = std::move(s);
        }
    A.unity = A.basis_vec(quat::I);
    // polarized determinant: n(x,y) = tr(x)tr(y) - tr(xy)
    A.form.kind = superalg::BilinearForm::Kind::symmetric;
    A.form.gram = Mat(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Mat2 x = basis_matrix(i), y = basis_matrix(j);
            Mat2 xy = m2_mul(x, y);
            A.form.gram.at(i, j) = (x[0] + x[3]) * (y[0] + y[3]) - (xy[0] + xy[3]);
        }
    return A;
}

namespace quat {

Vec mat_I() { return {Cyc(1), Cyc(0), Cyc(0), Cyc(0)}; }

Vec mat_A() {  // diag(i,-i) = i H
    Vec v(4);
    v[H] = cyclo::constants().i;
    return v;
}

Vec mat_B() {  // [[0,-1],[1,0]] = F - E
    Vec v(4);
    v[E] = Cyc(-1);
    v[F] = Cyc(1);
    return v;
}

Vec mat_C() {  // [[0,-i],[-i,0]] = -i(E+F)
    Vec v(4);
    v[E] = -cyclo::constants().i;
    v[F] = -cyclo::constants().i;
    return v;
}

} // namespace quat

} // namespace esla::models
