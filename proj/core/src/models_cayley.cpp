#include "esla/models.hpp"

#include <stdexcept>

namespace esla::models {

using namespace cayley;

namespace {

// good-basis table: indices mod 3 on the u/v triples
std::size_t U(std::size_t i) { return u1 + (i % 3); }
std::size_t V(std::size_t i) { return v1 + (i % 3); }

} // namespace

AlgebraWithForm build_cayley() {
    AlgebraWithForm A;
    A.dim = 8;
    A.labels = {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};
    A.mult.resize(64);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long coeff) {
        A.mult[i * 8 + j] = SparseVec{{k, Cyc(coeff)}};
    };
    set(e1, e1, e1, 1);
    set(e2, e2, e2, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        set(e1, U(i), U(i), 1);   // e1 u_i = u_i = u_i e2
        set(U(i), e2, U(i), 1);
        set(e2, V(i), V(i), 1);   // e2 v_i = v_i = v_i e1
        set(V(i), e1, V(i), 1);
        set(U(i), V(i), e1, -1);  // u_i v_i = -e1
        set(V(i), U(i), e2, -1);  // v_i u_i = -e2
        set(U(i), U(i + 1), V(i + 2), 1);   // u_i u_{i+1} = v_{i+2} = -u_{i+1} u_i
        set(U(i + 1), U(i), V(i + 2), -1);
        set(V(i), V(i + 1), U(i + 2), 1);   // v_i v_{i+1} = u_{i+2} = -v_{i+1} v_i
        set(V(i + 1), V(i), U(i + 2), -1);
    }
    A.unity = A.basis_vec(e1) + A.basis_vec(e2);
    A.form.kind = superalg::BilinearForm::Kind::symmetric;
    A.form.gram = Mat(8, 8);
    A.form.gram.at(e1, e2) = A.form.gram.at(e2, e1) = Cyc(1);
    for (std::size_t i = 0; i < 3; ++i)
        A.form.gram.at(U(i), V(i)) = A.form.gram.at(V(i), U(i)) = Cyc(1);
    return A;
}

DerivationAlgebra derivation_algebra(const AlgebraWithForm& A, const std::string& label_prefix) {
    const std::size_t n = A.dim;
    // unknowns: D as n x n matrix, column-major index c*n + r
    // equations: D(b_i b_j) - D(b_i) b_j - b_i D(b_j) = 0 for all pairs
    Mat sys(n * n * n, n * n);
    std::size_t row0 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, row0 += n) {
            // D applied to the product vector
            for (const auto& [k, c] : A.mult[i * n + j])
                for (std::size_t r = 0; r < n; ++r) sys.at(row0 + r, k * n + r) += c;
            // -(D b_i) b_j: D b_i = sum_r D_{r,i} b_r; b_r b_j known
            for (std::size_t r = 0; r < n; ++r)
                for (const auto& [k, c] : A.mult[r * n + j]) sys.at(row0 + k, i * n + r) -= c;
            // -b_i (D b_j)
            for (std::size_t r = 0; r < n; ++r)
                for (const auto& [k, c] : A.mult[i * n + r]) sys.at(row0 + k, j * n + r) -= c;
        }
    auto basis = linalg::nullspace(sys);

    DerivationAlgebra out;
    for (const auto& v : basis) {
        Mat m(n, n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t r = 0; r < n; ++r) m.at(r, col) = v[col * n + r];
        out.matrices.push_back(std::move(m));
    }
    const std::size_t d = out.matrices.size();
    out.algebra = SuperAlgebra(d);
    for (std::size_t i = 0; i < d; ++i)
        out.algebra.labels[i] = label_prefix + std::to_string(i);
    // structure constants of the commutator: solve [D_i, D_j] in the basis
    Mat coords(n * n, d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t idx = 0; idx < n * n; ++idx) coords.at(idx, b) = out.matrices[b].a[idx];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            Mat comm = out.matrices[i] * out.matrices[j] - out.matrices[j] * out.matrices[i];
            Vec rhs(n * n);
            for (std::size_t idx = 0; idx < n * n; ++idx) rhs[idx] = comm.a[idx];
            auto sol = linalg::solve(coords, rhs);
            if (!sol) throw std::logic_error("derivation_algebra: commutator left the span");
            SparseVec e;
            for (std::size_t k = 0; k < d; ++k)
                if (!(*sol)[k].is_zero()) e.emplace_back(k, (*sol)[k]);
            out.algebra.set_entry(i, j, std::move(e));
        }
    return out;
}

} // namespace esla::models
