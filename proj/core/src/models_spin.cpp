#include <stdexcept>

#include "esla/models.hpp"

namespace esla::models {

namespace {

using linalg::kron;
using superalg::ModulePresentation;

Mat mat_of_2x2(const Mat2& m) {
    Mat out(2, 2);
    out.at(0, 0) = m[0];
    out.at(0, 1) = m[1];
    out.at(1, 0) = m[2];
    out.at(1, 1) = m[3];
    return out;
}

Mat scale(const Cyc& s, Mat m) {
    for (auto& e : m.a) e = s * e;
    return m;
}

Mat left_mult_matrix(const AlgebraWithForm& A, const Vec& x) {
    Mat m(A.dim, A.dim);
    for (std::size_t j = 0; j < A.dim; ++j) {
        Vec img = A.mul(x, A.basis_vec(j));
        for (std::size_t r = 0; r < A.dim; ++r) m.at(r, j) = img[r];
    }
    return m;
}

/// sl2 acting on V, one matrix per basis element H, E, F.
std::vector<Mat> sl2_v_action() {
    auto s = sl2::algebra();
    std::vector<Mat> out;
    for (std::size_t k = 0; k < 3; ++k) out.push_back(mat_of_2x2(sl2::action_on_V(s.basis_vec(k))));
    return out;
}

/// Trace-zero part of the Cayley algebra on the basis where the norm is
/// monomial: {e1-e2, u1, v1, u2, v2, u3, v3}.
std::vector<Vec> trace_zero_cayley_basis(const AlgebraWithForm& C) {
    using namespace cayley;
    std::vector<Vec> out;
    out.push_back(C.basis_vec(e1) - C.basis_vec(e2));
    for (std::size_t i = 0; i < 3; ++i) {
        out.push_back(C.basis_vec(u1 + i));
        out.push_back(C.basis_vec(v1 + i));
    }
    return out;
}

const std::vector<std::string>& c0_labels() {
    static const std::vector<std::string> l = {"e1-e2", "u1", "v1", "u2", "v2", "u3", "v3"};
    return l;
}

ModulePresentation spin_g3() {
    ModulePresentation p;
    p.name = "g3";
    auto C = build_cayley();
    auto der = derivation_algebra(C, "d");
    p.l0 = superalg::direct_sum(sl2::algebra(), der.algebra);
    p.ideals = {{0, 3}, {3, 17}};

    // derivations kill 1 and preserve the trace-zero part, so in the basis
    // {1} + C0 they are block diagonal with a zero first block
    std::vector<Vec> cols;
    cols.push_back(C.basis_vec(cayley::e1) + C.basis_vec(cayley::e2));
    for (const Vec& c : trace_zero_cayley_basis(C)) cols.push_back(c);
    auto adapted = linalg::conjugate_operators(der.matrices, cols);

    Mat id2 = Mat::identity(2), id7 = Mat::identity(7);
    auto v_act = sl2_v_action();
    for (const Mat& m : v_act) p.rho.push_back(kron(m, id7));
    for (const Mat& d : adapted) {
        Mat block(7, 7);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) {
                bool border = r == 0 || c == 0;
                if (border && !d.at(r, c).is_zero())
                    throw std::logic_error("g3: derivation does not preserve the trace-zero split");
                if (!border) block.at(r - 1, c - 1) = d.at(r, c);
            }
        p.rho.push_back(kron(id2, block));
    }

    const char* uv[2] = {"u", "v"};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t m = 0; m < 7; ++m)
            p.module_labels.push_back(std::string(uv[a]) + "." + c0_labels()[m]);
    return p;
}

ModulePresentation spin_f4() {
    ModulePresentation p;
    p.name = "f4_spin";
    auto C = build_cayley();
    auto c0 = trace_zero_cayley_basis(C);

    std::vector<std::size_t> sigma = {0, 2, 1, 4, 3, 6, 5};
    std::vector<Cyc> t(7, Cyc::one());
    t[0] = Cyc{-2};
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t l = 0; l < 7; ++l) {
            Cyc expect = (l == sigma[j]) ? t[j] : Cyc::zero();
            if (!(C.norm(c0[j], c0[l]) == expect))
                throw std::logic_error("f4_spin: norm form is not the declared monomial form");
        }
    auto so = so_of_monomial_form(sigma, t);
    p.l0 = superalg::direct_sum(sl2::algebra(), so.algebra);
    p.ideals = {{0, 3}, {3, 24}};

    // spin representation: m_(j,k) = S(c_sigma(k), c_j)/t_k with
    // S(x,y) -> [l_x, l_y]/2, using l_x l_y + l_y l_x = -n(x,y) id on C0
    std::vector<Mat> ell;
    for (const Vec& c : c0) ell.push_back(left_mult_matrix(C, c));

    Mat id2 = Mat::identity(2), id8 = Mat::identity(8);
    for (const Mat& m : sl2_v_action()) p.rho.push_back(kron(m, id8));
    for (const auto& [j, k] : so.pairs) {
        Mat comm = ell[sigma[k]] * ell[j] - ell[j] * ell[sigma[k]];
        p.rho.push_back(kron(id2, scale(cyclo::rat(1, 2) * so.t[k].inv(), comm)));
    }

    const char* uv[2] = {"u", "v"};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t m = 0; m < 8; ++m)
            p.module_labels.push_back(std::string(uv[a]) + "." + C.labels[m]);
    return p;
}

ModulePresentation spin_f4_pauli() {
    ModulePresentation p;
    p.name = "f4_pauli";
    auto Q = build_quaternion();
    auto seven = pauli_triple_generators();

    std::vector<std::size_t> sigma(7);
    for (std::size_t j = 0; j < 7; ++j) sigma[j] = j;
    std::vector<Cyc> t;
    for (const Cyc& q : seven.square) t.push_back(Cyc{2} * q);
    auto so = so_of_monomial_form(sigma, t);
    p.l0 = superalg::direct_sum(sl2::algebra(), so.algebra);
    p.ideals = {{0, 3}, {3, 24}};

    // sl2 inside the second quaternion factor acts by x(x)y -> -x(x)(yz);
    // the sign makes right multiplication a homomorphism rather than an
    // anti-homomorphism
    Mat id4 = Mat::identity(4);
    for (std::size_t z = 1; z < 4; ++z) {
        Mat rz(4, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            Vec img = Q.mul(Q.basis_vec(j), Q.basis_vec(z));
            for (std::size_t r = 0; r < 4; ++r) rz.at(r, j) = Cyc{-1} * img[r];
        }
        p.rho.push_back(kron(id4, rz));
    }
    // here the operators satisfy F_u F_u' + F_u' F_u = +n(u,u') id, which
    // flips the sign of the half-commutator relative to the Cayley case
    for (const auto& [j, k] : so.pairs) {
        Mat comm = seven.ops[j] * seven.ops[k] - seven.ops[k] * seven.ops[j];
        p.rho.push_back(scale(cyclo::rat(1, 2) * so.t[k].inv(), comm));
    }

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) p.module_labels.push_back(Q.labels[i] + "." + Q.labels[j]);
    return p;
}

}  // namespace

AnticommutingSeven pauli_triple_generators() {
    auto Q = build_quaternion();
    Vec I = quat::mat_I(), A = quat::mat_A(), B = quat::mat_B(), C = quat::mat_C();
    struct Triple {
        Vec a, b, c;
        std::string label;
    };
    std::vector<Triple> triples = {
        {A, I, I, "A.I.I"}, {C, I, I, "C.I.I"}, {B, I, A, "B.I.A"}, {B, C, B, "B.C.B"},
        {B, A, B, "B.A.B"}, {B, I, C, "B.I.C"}, {B, B, B, "B.B.B"},
    };

    AnticommutingSeven out;
    for (const auto& tr : triples) {
        // x (x) y -> (q1 x conj(q2)) (x) (q3 y) on the 16-dim space Q (x) Q
        Mat op(16, 16);
        Vec q2bar = Q.conj(tr.b);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Vec f = Q.mul(Q.mul(tr.a, Q.basis_vec(i)), q2bar);
                Vec g = Q.mul(tr.c, Q.basis_vec(j));
                for (std::size_t r = 0; r < 4; ++r)
                    for (std::size_t s = 0; s < 4; ++s) op.at(r * 4 + s, i * 4 + j) = f[r] * g[s];
            }
        out.ops.push_back(op);
        out.labels.push_back(tr.label);
    }
    for (const Mat& op : out.ops) {
        Mat sq = op * op;
        Cyc s = sq.at(0, 0);
        if (!(sq == scale(s, Mat::identity(16))))
            throw std::logic_error("pauli triples: square is not scalar");
        out.square.push_back(s);
    }
    return out;
}

ModulePresentation d_presentation() {
    ModulePresentation p;
    p.name = "d_model";
    auto s = sl2::algebra();
    p.l0 = superalg::direct_sum(superalg::direct_sum(s, s), s);
    const char* hef[3] = {"H", "E", "F"};
    for (std::size_t f = 0; f < 3; ++f) {
        for (std::size_t k = 0; k < 3; ++k) p.l0.labels[3 * f + k] = hef[k] + std::to_string(f + 1);
        p.ideals.emplace_back(3 * f, 3 * f + 3);
    }

    Mat id2 = Mat::identity(2);
    auto v_act = sl2_v_action();
    for (std::size_t f = 0; f < 3; ++f)
        for (std::size_t k = 0; k < 3; ++k) {
            Mat slots[3] = {id2, id2, id2};
            slots[f] = v_act[k];
            p.rho.push_back(kron(slots[0], kron(slots[1], slots[2])));
        }

    const char uv[2] = {'u', 'v'};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                p.module_labels.push_back(std::string(1, uv[a]) + uv[b] + uv[c]);
    return p;
}

ModulePresentation spin_module_data(SpinModel which) {
    switch (which) {
        case SpinModel::g3:
            return spin_g3();
        case SpinModel::f4_spin:
            return spin_f4();
        case SpinModel::f4_pauli:
            return spin_f4_pauli();
    }
    throw std::invalid_argument("spin_module_data: unknown model");
}

}  // namespace esla::models
