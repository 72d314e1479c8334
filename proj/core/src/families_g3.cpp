#include <stdexcept>

#include "esla/families.hpp"
#include "esla/solver.hpp"

namespace esla::families {

namespace ab = esla::abelian;
using cyclo::Cyc;
using linalg::Mat;
using linalg::Vec;
using superalg::SuperAlgebra;

const SuperAlgebra& ambient_g3() {
    static const SuperAlgebra L =
        solver::complete_unique(models::spin_module_data(models::SpinModel::g3)).algebra;
    return L;
}

namespace {

struct CayleyData {
    models::AlgebraWithForm C;
    models::DerivationAlgebra der;
};

const CayleyData& cayley_data() {
    static const CayleyData d = [] {
        auto C = models::build_cayley();
        auto der = models::derivation_algebra(C, "d");
        return CayleyData{std::move(C), std::move(der)};
    }();
    return d;
}

/// Coordinates of a trace-zero Cayley vector on {e1-e2, u1, v1, u2, v2, u3, v3}.
Vec c0_coords(const Vec& v) {
    namespace cx = models::cayley;
    if (!(v[cx::e1] + v[cx::e2]).is_zero())
        throw std::logic_error("g3: vector is not trace-zero in the Cayley algebra");
    return {v[cx::e1], v[cx::u1], v[cx::v1], v[cx::u2], v[cx::v2], v[cx::u3], v[cx::v3]};
}

/// Common frame: sl2 Cartan degrees from g on indices 0..2, derivation
/// combinations on 3..16 (from the operator grading over `derops`/`cdeg`),
/// and V (x) C0 on 17..30 from 7 adapted trace-zero vectors.
Grading assemble_g3(const AbGroup& G, const GroupElem& g, const std::vector<Mat>& derops,
                    const std::vector<GroupElem>& cdeg, const std::vector<Vec>& c0ad,
                    const std::vector<GroupElem>& c0deg, const std::string& name) {
    const SuperAlgebra& L = ambient_g3();
    Grading out;
    out.group = G;
    out.name = name;
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

    std::size_t pos = 3;
    for (const auto& [d, combos] : homogeneous_operator_basis(derops, G, cdeg))
        for (const Vec& c : combos) {
            for (std::size_t m = 0; m < c.size(); ++m) adapted[pos][3 + m] = c[m];
            labels[pos] = "d." + std::to_string(pos - 3);
            out.degree[pos] = d;
            ++pos;
        }

    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t j = 0; j < 7; ++j) {
            std::size_t i = 17 + a * 7 + j;
            for (std::size_t m = 0; m < 7; ++m) adapted[i][17 + a * 7 + m] = c0ad[j][m];
            labels[i] = (a == 0 ? "u." : "v.") + std::to_string(j);
            out.degree[i] = ab::add(G, a == 0 ? g : ab::neg(G, g), c0deg[j]);
        }

    out.adapted = std::move(adapted);
    out.algebra = superalg::conjugate_basis(L, out.adapted, std::move(labels));
    return out;
}

} // namespace

Grading g3_cartan(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 3>& h) {
    auto cc = cayley_cartan(G, h);  // validates h1 + h2 + h3 = 0
    std::vector<Vec> c0ad;
    for (std::size_t j = 0; j < 7; ++j) {
        Vec v(7, Cyc(0));
        v[j] = Cyc::one();
        c0ad.push_back(std::move(v));
    }
    GroupElem e = ab::zero_elem(G);
    std::vector<GroupElem> c0deg = {e,    h[0], ab::neg(G, h[0]), h[1], ab::neg(G, h[1]),
                                    h[2], ab::neg(G, h[2])};
    return assemble_g3(G, g, cayley_data().der.matrices, cc.degree, c0ad, c0deg, "G3_C");
}

Grading g3_pauli(const AbGroup& G, const GroupElem& g, const std::array<GroupElem, 3>& a) {
    auto cp = cayley_pauli(G, a);  // validates <a1,a2,a3> = Z_2^3
    auto ops = linalg::conjugate_operators(cayley_data().der.matrices, cp.adapted);
    std::vector<Vec> c0ad;
    std::vector<GroupElem> c0deg;
    for (std::size_t j = 1; j < 8; ++j) {
        c0ad.push_back(c0_coords(cp.adapted[j]));
        c0deg.push_back(cp.degree[j]);
    }
    return assemble_g3(G, g, ops, cp.degree, c0ad, c0deg, "G3_P");
}

} // namespace esla::families
