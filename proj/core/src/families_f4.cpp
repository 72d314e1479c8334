#include <stdexcept>

#include "esla/families.hpp"
#include "esla/solver.hpp"

namespace esla::families {

namespace ab = esla::abelian;
using cyclo::Cyc;
using linalg::Mat;
using linalg::Vec;
using superalg::SuperAlgebra;

const SuperAlgebra& ambient_f4_spin() {
    static const SuperAlgebra L =
        solver::complete_unique(models::spin_module_data(models::SpinModel::f4_spin)).algebra;
    return L;
}

const SuperAlgebra& ambient_f4_pauli() {
    static const SuperAlgebra L =
        solver::complete_unique(models::spin_module_data(models::SpinModel::f4_pauli)).algebra;
    return L;
}

const models::TkkAlgebra& ambient_f4_tkk() {
    static const models::TkkAlgebra T = models::build_tkk_f4();
    return T;
}

namespace {

/// so(C0, n) in the monomial form used by the spin model.
const models::SoAlgebra& spin_so7() {
    static const models::SoAlgebra so = [] {
        std::vector<Cyc> t(7, Cyc::one());
        t[0] = Cyc{-2};
        return models::so_of_monomial_form({0, 2, 1, 4, 3, 6, 5}, t);
    }();
    return so;
}

/// so(U, q) on the seven anticommuting triples, plus their degree letters.
struct PauliSo {
    models::SoAlgebra so;
    std::vector<std::array<char, 3>> letters;  // per generator, e.g. {'B','I','A'}
};

const PauliSo& pauli_so7() {
    static const PauliSo data = [] {
        auto seven = models::pauli_triple_generators();
        std::vector<Cyc> t;
        for (const Cyc& q : seven.square) t.push_back(Cyc{2} * q);
        std::vector<std::size_t> sigma(7);
        for (std::size_t j = 0; j < 7; ++j) sigma[j] = j;
        PauliSo out{models::so_of_monomial_form(sigma, t), {}};
        for (const std::string& l : seven.labels) {
            if (l.size() != 5) throw std::logic_error("pauli triple label has unexpected shape");
            out.letters.push_back({l[0], l[2], l[4]});
        }
        return out;
    }();
    return data;
}

/// Degree of one Pauli letter for the pair (x, y): I -> e, A -> x, B -> y,
/// C -> xy.
GroupElem pauli_letter_degree(const AbGroup& G, char letter, const GroupElem& x,
                              const GroupElem& y) {
    switch (letter) {
        case 'I': return ab::zero_elem(G);
        case 'A': return x;
        case 'B': return y;
        case 'C': return ab::add(G, x, y);
        default: throw std::logic_error("unknown Pauli letter");
    }
}

/// {A, B, C} of sl2 in (H,E,F) coordinates.
const std::array<Vec, 3>& sl2_pauli_coords() {
    static const std::array<Vec, 3> abc = [] {
        const Cyc i = cyclo::constants().i;
        return std::array<Vec, 3>{Vec{i, Cyc(0), Cyc(0)}, Vec{Cyc(0), Cyc(-1), Cyc(1)},
                                  Vec{Cyc(0), -i, -i}};
    }();
    return abc;
}

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, Cyc(0));
    v[i] = Cyc::one();
    return v;
}

/// Common TKK frame: sl2 Pauli degrees (pa, pb) on the tensor factor, an
/// adapted homogeneous basis of K10 with its degrees, derivation degrees
/// induced mechanically.
Grading assemble_tkk(const AbGroup& G, const GroupElem& pa, const GroupElem& pb,
                     const std::vector<Vec>& k10ad, const std::vector<GroupElem>& k10deg,
                     const std::string& name) {
    const auto& tkk = ambient_f4_tkk();
    const SuperAlgebra& L = tkk.algebra;
    const char* abc_name[3] = {"A", "B", "C"};
    const auto& abc = sl2_pauli_coords();
    std::array<GroupElem, 3> pdeg = {pa, pb, ab::add(G, pa, pb)};

    Grading out;
    out.group = G;
    out.name = name;
    out.degree.resize(L.dim);
    std::vector<Vec> adapted(L.dim, Vec(L.dim, Cyc(0)));
    std::vector<std::string> labels(L.dim);

    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t k = 0; k < 10; ++k) {
            std::size_t i = models::TkkAlgebra::tensor_index(s, k);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t m = 0; m < 10; ++m)
                    adapted[i][models::TkkAlgebra::tensor_index(r, m)] = abc[s][r] * k10ad[k][m];
            labels[i] = std::string(abc_name[s]) + ".k" + std::to_string(k);
            out.degree[i] = ab::add(G, pdeg[s], k10deg[k]);
        }

    // derivations: grade the conjugated operator space, even and odd parts
    // separately so the combinations stay parity-homogeneous
    auto ops = linalg::conjugate_operators(tkk.k10.der, k10ad);
    std::size_t pos = 30;
    for (int par : {0, 1}) {
        std::vector<Mat> part;
        std::vector<std::size_t> idx;
        for (std::size_t m = 0; m < ops.size(); ++m)
            if (tkk.k10.der_parity[m] == par) {
                part.push_back(ops[m]);
                idx.push_back(m);
            }
        for (const auto& [d, combos] : homogeneous_operator_basis(part, G, k10deg))
            for (const Vec& c : combos) {
                for (std::size_t mi = 0; mi < c.size(); ++mi)
                    adapted[pos][models::TkkAlgebra::der_index(idx[mi])] = c[mi];
                labels[pos] = "d." + std::to_string(pos - 30);
                out.degree[pos] = d;
                ++pos;
            }
    }
    if (pos != 40) throw std::logic_error(name + ": derivation grading is incomplete");

    out.adapted = std::move(adapted);
    out.algebra = superalg::conjugate_basis(L, out.adapted, std::move(labels));
    return out;
}

} // namespace

Grading f4_cartan(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 4>& h) {
    GroupElem sum = ab::zero_elem(G);
    for (const auto& x : h) sum = ab::add(G, sum, x);
    if (!ab::is_zero(sum))
        throw std::invalid_argument("f4-cartan: h1 h2 h3 h4 must multiply to the identity");

    const SuperAlgebra& L = ambient_f4_spin();
    const auto& so = spin_so7();
    Grading out;
    out.group = G;
    out.name = "F4_1";
    out.degree.resize(L.dim);

    GroupElem e = ab::zero_elem(G), g2 = ab::scal(G, 2, g);
    out.degree[0] = e;
    out.degree[1] = g2;
    out.degree[2] = ab::neg(G, g2);

    // gamma over the trace-zero basis {e1-e2, u1, v1, u2, v2, u3, v3}
    std::vector<GroupElem> gamma(7, e);
    for (std::size_t i = 0; i < 3; ++i) {
        gamma[1 + 2 * i] = ab::add(G, h[i], h[3]);
        gamma[2 + 2 * i] = ab::neg(G, gamma[1 + 2 * i]);
    }
    for (std::size_t m = 0; m < so.pairs.size(); ++m)
        out.degree[3 + m] = ab::sub(G, gamma[so.pairs[m].first], gamma[so.pairs[m].second]);

    // spin module on the full Cayley basis (e1, e2, u1, u2, u3, v1, v2, v3)
    std::vector<GroupElem> wdeg = {h[3],            ab::neg(G, h[3]), h[0],
                                   h[1],            h[2],             ab::neg(G, h[0]),
                                   ab::neg(G, h[1]), ab::neg(G, h[2])};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t m = 0; m < 8; ++m)
            out.degree[24 + a * 8 + m] = ab::add(G, a == 0 ? g : ab::neg(G, g), wdeg[m]);
    return out;
}

Grading f4_doubling(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 3>& a) {
    auto cp = cayley_pauli(G, a);  // validates <a1,a2,a3> = Z_2^3
    const SuperAlgebra& L = ambient_f4_spin();
    const auto& so = spin_so7();

    // trace-zero part of the Pauli-adapted basis, in {e1-e2, u_i, v_i} coords
    namespace cx = models::cayley;
    std::vector<Vec> c0ad;
    std::vector<GroupElem> c0deg;
    for (std::size_t j = 1; j < 8; ++j) {
        const Vec& v = cp.adapted[j];
        c0ad.push_back({v[cx::e1], v[cx::u1], v[cx::v1], v[cx::u2], v[cx::v2], v[cx::u3],
                        v[cx::v3]});
        c0deg.push_back(cp.degree[j]);
    }

    Grading out;
    out.group = G;
    out.name = "F4_2";
    out.degree.resize(L.dim);
    std::vector<Vec> adapted(L.dim, Vec(L.dim, Cyc(0)));
    std::vector<std::string> labels(L.dim);

    GroupElem g2 = ab::scal(G, 2, g);
    for (std::size_t i = 0; i < 3; ++i) {
        adapted[i][i] = Cyc::one();
        labels[i] = L.labels[i];
    }
    out.degree[0] = ab::zero_elem(G);
    out.degree[1] = g2;
    out.degree[2] = ab::neg(G, g2);

    auto ops = linalg::conjugate_operators(so.matrices, c0ad);
    std::size_t pos = 3;
    for (const auto& [d, combos] : homogeneous_operator_basis(ops, G, c0deg))
        for (const Vec& c : combos) {
            for (std::size_t m = 0; m < c.size(); ++m) adapted[pos][3 + m] = c[m];
            labels[pos] = "so." + std::to_string(pos - 3);
            out.degree[pos] = d;
            ++pos;
        }
    if (pos != 24) throw std::logic_error("F4_2: so7 grading is incomplete");

    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t j = 0; j < 8; ++j) {
            std::size_t i = 24 + s * 8 + j;
            for (std::size_t m = 0; m < 8; ++m) adapted[i][24 + s * 8 + m] = cp.adapted[j][m];
            labels[i] = (s == 0 ? "u.c" : "v.c") + std::to_string(j);
            out.degree[i] = ab::add(G, s == 0 ? g : ab::neg(G, g), cp.degree[j]);
        }

    out.adapted = std::move(adapted);
    out.algebra = superalg::conjugate_basis(L, out.adapted, std::move(labels));
    return out;
}

Grading f4_tkk_cartan(const AbGroup& G, const GroupElem& g1, const GroupElem& g2,
                      const GroupElem& a, const GroupElem& b) {
    require_subgroup_type(G, {a, b}, AbGroup{0, {2, 2}}, "f4-tensor: <a,b>");
    // K3 (x) K3 Cartan degrees: e -> e, u -> g, v -> -g per factor
    auto dK = [&](std::size_t p, const GroupElem& g) {
        if (p == 0) return ab::zero_elem(G);
        return p == 1 ? g : ab::neg(G, g);
    };
    std::vector<Vec> k10ad;
    std::vector<GroupElem> k10deg;
    for (std::size_t k = 0; k < 10; ++k) k10ad.push_back(unit(10, k));
    k10deg.push_back(ab::zero_elem(G));
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q)
            k10deg.push_back(ab::add(G, dK(p, g1), dK(q, g2)));
    return assemble_tkk(G, a, b, k10ad, k10deg, "F4_3");
}

Grading f4_tkk_swap(const AbGroup& G, const GroupElem& g, const GroupElem& h, const GroupElem& a,
                    const GroupElem& b) {
    require_subgroup_type(G, {a, b, h}, AbGroup{0, {2, 2, 2}}, "f4-swap: <a,b,h>");
    auto idx = [](std::size_t p, std::size_t q) { return 1 + 3 * p + q; };
    auto pm = [&](std::size_t i, std::size_t j, bool plus) {
        Vec v = unit(10, i);
        v[j] = plus ? Cyc::one() : Cyc(-1);
        return v;
    };
    // swap-symmetric combinations keep the (g,g) tensor degree, skew ones
    // shift by h; u(x)u and v(x)v are themselves skew
    std::vector<Vec> k10ad = {unit(10, 0),
                              unit(10, idx(0, 0)),
                              pm(idx(0, 1), idx(1, 0), true),
                              pm(idx(0, 1), idx(1, 0), false),
                              pm(idx(0, 2), idx(2, 0), true),
                              pm(idx(0, 2), idx(2, 0), false),
                              pm(idx(1, 2), idx(2, 1), false),
                              pm(idx(1, 2), idx(2, 1), true),
                              unit(10, idx(1, 1)),
                              unit(10, idx(2, 2))};
    GroupElem e = ab::zero_elem(G), ng = ab::neg(G, g), g2 = ab::scal(G, 2, g);
    std::vector<GroupElem> k10deg = {e,
                                     e,
                                     g,
                                     ab::add(G, g, h),
                                     ng,
                                     ab::add(G, ng, h),
                                     e,
                                     h,
                                     ab::add(G, g2, h),
                                     ab::add(G, ab::neg(G, g2), h)};
    return assemble_tkk(G, a, b, k10ad, k10deg, "F4_4");
}

Grading f4_pauli(const AbGroup& G, const GroupElem& g, const GroupElem& h, const GroupElem& a,
                 const GroupElem& b) {
    require_subgroup_type(G, {g, h, a, b}, AbGroup{0, {2, 2, 2, 4}}, "f4-pauli: <g,h,a,b>");
    const SuperAlgebra& L = ambient_f4_pauli();
    const auto& ps = pauli_so7();
    GroupElem g2 = ab::scal(G, 2, g);

    Grading out;
    out.group = G;
    out.name = "F4_5";
    out.degree.resize(L.dim);
    std::vector<Vec> adapted(L.dim, Vec(L.dim, Cyc(0)));
    std::vector<std::string> labels(L.dim);

    const char* abc_name[3] = {"A", "B", "C"};
    const auto& abc = sl2_pauli_coords();
    std::array<GroupElem, 3> sdeg = {h, g2, ab::add(G, h, g2)};
    for (std::size_t s = 0; s < 3; ++s) {
        for (std::size_t r = 0; r < 3; ++r) adapted[s][r] = abc[s][r];
        labels[s] = abc_name[s];
        out.degree[s] = sdeg[s];
    }

    // gamma: left/right quaternion letters graded by (a,b), the second
    // factor by (h, g^2)
    std::vector<GroupElem> gamma;
    for (const auto& l : ps.letters) {
        GroupElem d = ab::add(G, pauli_letter_degree(G, l[0], a, b),
                              pauli_letter_degree(G, l[1], a, b));
        gamma.push_back(ab::add(G, d, pauli_letter_degree(G, l[2], h, g2)));
    }
    for (std::size_t m = 0; m < ps.so.pairs.size(); ++m) {
        adapted[3 + m][3 + m] = Cyc::one();
        labels[3 + m] = L.labels[3 + m];
        out.degree[3 + m] =
            ab::sub(G, gamma[ps.so.pairs[m].first], gamma[ps.so.pairs[m].second]);
    }

    // module (Q' (x) Q)^[g]: Pauli basis per factor, all degrees shifted by g
    const std::array<Vec, 4> pq = {models::quat::mat_I(), models::quat::mat_A(),
                                   models::quat::mat_B(), models::quat::mat_C()};
    const char pq_name[4] = {'I', 'A', 'B', 'C'};
    const char* letters = "IABC";
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::size_t pos = 24 + i * 4 + j;
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t s = 0; s < 4; ++s)
                    adapted[pos][24 + r * 4 + s] = pq[i][r] * pq[j][s];
            labels[pos] = std::string(1, pq_name[i]) + "." + pq_name[j];
            GroupElem d = ab::add(G, pauli_letter_degree(G, letters[i], a, b),
                                  pauli_letter_degree(G, letters[j], h, g2));
            out.degree[pos] = ab::add(G, d, g);
        }

    out.adapted = std::move(adapted);
    out.algebra = superalg::conjugate_basis(L, out.adapted, std::move(labels));
    return out;
}

} // namespace esla::families
