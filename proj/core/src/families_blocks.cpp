#include <stdexcept>

#include "esla/families.hpp"

namespace esla::families {

namespace ab = esla::abelian;
using cyclo::Cyc;
using linalg::Mat;
using linalg::Vec;
using superalg::SuperAlgebra;

SuperAlgebra product_container(const models::AlgebraWithForm& a) {
    SuperAlgebra L(a.dim);
    L.labels = a.labels;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) L.set_entry(i, j, a.mult[i * a.dim + j]);
    return L;
}

void require_subgroup_type(const AbGroup& G, const std::vector<GroupElem>& gens,
                           const AbGroup& expected, const std::string& what) {
    auto sub = ab::subgroup_generated(G, gens);
    if (!(sub.group == expected))
        throw std::invalid_argument(what + ": generated subgroup has type " +
                                    sub.group.to_string() + ", expected " + expected.to_string());
}

Grading m2_cartan(const AbGroup& G, const GroupElem& g) {
    Grading out;
    out.algebra = product_container(models::build_quaternion());
    out.group = G;
    out.degree = {ab::zero_elem(G), ab::zero_elem(G), g, ab::neg(G, g)};
    out.name = "m2-cartan";
    return out;
}

Grading m2_pauli(const AbGroup& G, const GroupElem& a, const GroupElem& b) {
    require_subgroup_type(G, {a, b}, AbGroup{0, {2, 2}}, "m2-pauli");
    auto q = models::build_quaternion();
    Grading out;
    out.adapted = {q.basis_vec(models::quat::I), models::quat::mat_A(), models::quat::mat_B(),
                   models::quat::mat_C()};
    out.algebra = superalg::conjugate_basis(product_container(q), out.adapted, {"I", "A", "B", "C"});
    out.group = G;
    out.degree = {ab::zero_elem(G), a, b, ab::add(G, a, b)};
    out.name = "m2-pauli";
    return out;
}

Grading sl2_cartan(const AbGroup& G, const GroupElem& g) {
    Grading out;
    out.algebra = models::sl2::algebra();
    out.group = G;
    out.degree = {ab::zero_elem(G), g, ab::neg(G, g)};
    out.name = "sl2-cartan";
    return out;
}

Grading sl2_pauli(const AbGroup& G, const GroupElem& a, const GroupElem& b) {
    require_subgroup_type(G, {a, b}, AbGroup{0, {2, 2}}, "sl2-pauli");
    const Cyc i = cyclo::constants().i;
    // A = iH, B = F - E, C = -i(E + F) in (H,E,F) coordinates
    Vec A{i, Cyc(0), Cyc(0)}, B{Cyc(0), Cyc(-1), Cyc(1)}, C{Cyc(0), -i, -i};
    Grading out;
    out.adapted = {A, B, C};
    out.algebra = superalg::conjugate_basis(models::sl2::algebra(), out.adapted, {"A", "B", "C"});
    out.group = G;
    out.degree = {a, b, ab::add(G, a, b)};
    out.name = "sl2-pauli";
    return out;
}

namespace {

SuperAlgebra matrix_algebra(std::size_t n) {
    SuperAlgebra L(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            L.labels[r * n + c] = "E" + std::to_string(r + 1) + std::to_string(c + 1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d)
                L.add_term(a * n + b, b * n + d, a * n + d, Cyc::one());
    return L;
}

} // namespace

Grading mn_elementary(std::size_t n, const AbGroup& G, const std::vector<GroupElem>& gamma) {
    if (gamma.size() != n) throw std::invalid_argument("mn-elementary: gamma length != n");
    Grading out;
    out.algebra = matrix_algebra(n);
    out.group = G;
    out.degree.resize(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.degree[r * n + c] = ab::sub(G, gamma[r], gamma[c]);
    out.name = "m" + std::to_string(n) + "-elementary";
    return out;
}

Grading mn_pauli(std::size_t n, const AbGroup& G, const GroupElem& a, const GroupElem& b) {
    if (24 % n != 0) throw std::invalid_argument("mn-pauli: need a primitive n-th root in K");
    std::vector<long> inv(2, static_cast<long>(n));
    require_subgroup_type(G, {a, b}, AbGroup{0, inv}, "mn-pauli");
    Grading out;
    out.group = G;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            // X^j Y^k = sum_c z^{jr} E_{rc}, r = (c + k) mod n, z = zeta_24^{24/n}
            Vec m(n * n, Cyc(0));
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t r = (c + k) % n;
                long e = static_cast<long>(j) * static_cast<long>(r);
                m[r * n + c] = Cyc::zeta_pow(static_cast<long>(24 / n) * e);
            }
            out.adapted.push_back(std::move(m));
            labels.push_back("X" + std::to_string(j) + "Y" + std::to_string(k));
            out.degree.push_back(ab::add(G, ab::scal(G, static_cast<long>(j), a),
                                         ab::scal(G, static_cast<long>(k), b)));
        }
    out.algebra = superalg::conjugate_basis(matrix_algebra(n), out.adapted, std::move(labels));
    out.name = "m" + std::to_string(n) + "-pauli";
    return out;
}

Grading cayley_cartan(const AbGroup& G, const std::array<GroupElem, 3>& h) {
    if (!ab::is_zero(ab::add(G, ab::add(G, h[0], h[1]), h[2])))
        throw std::invalid_argument("cayley-cartan: h1 + h2 + h3 must vanish");
    Grading out;
    out.algebra = product_container(models::build_cayley());
    out.group = G;
    auto e = ab::zero_elem(G);
    out.degree = {e, e, h[0], h[1], h[2], ab::neg(G, h[0]), ab::neg(G, h[1]), ab::neg(G, h[2])};
    out.name = "cayley-cartan";
    return out;
}

Grading cayley_pauli(const AbGroup& G, const std::array<GroupElem, 3>& a) {
    require_subgroup_type(G, {a[0], a[1], a[2]}, AbGroup{0, {2, 2, 2}}, "cayley-pauli");
    auto c = models::build_cayley();
    namespace cx = models::cayley;
    auto pm = [&](std::size_t p, std::size_t q, bool plus) {
        Vec v(c.dim, Cyc(0));
        v[p] = Cyc::one();
        v[q] = plus ? Cyc::one() : Cyc(-1);
        return v;
    };
    Grading out;
    out.adapted = {pm(cx::e1, cx::e2, true),  pm(cx::e1, cx::e2, false),
                   pm(cx::u1, cx::v1, true),  pm(cx::u1, cx::v1, false),
                   pm(cx::u2, cx::v2, true),  pm(cx::u2, cx::v2, false),
                   pm(cx::u3, cx::v3, true),  pm(cx::u3, cx::v3, false)};
    out.algebra = superalg::conjugate_basis(
        product_container(c), out.adapted,
        {"1", "k", "p1+", "p1-", "p2+", "p2-", "p3+", "p3-"});
    out.group = G;
    auto add = [&](const GroupElem& x, const GroupElem& y) { return ab::add(G, x, y); };
    out.degree = {ab::zero_elem(G), a[0], a[1], add(a[0], a[1]),
                  a[2],             add(a[0], a[2]), add(a[1], a[2]),
                  add(add(a[0], a[1]), a[2])};
    out.name = "cayley-pauli";
    return out;
}

std::vector<std::pair<GroupElem, std::vector<Vec>>> homogeneous_operator_basis(
    const std::vector<Mat>& operators, const AbGroup& G, const std::vector<GroupElem>& degree) {
    if (operators.empty()) return {};
    std::size_t N = operators[0].rows;
    std::size_t s = operators.size();

    // candidate degrees: differences occurring at nonzero positions
    std::vector<GroupElem> candidates;
    for (const auto& op : operators)
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c)
                if (!op.at(r, c).is_zero()) candidates.push_back(ab::sub(G, degree[r], degree[c]));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::pair<GroupElem, std::vector<Vec>>> out;
    std::size_t total = 0;
    for (const auto& d : candidates) {
        // constraints: the combination vanishes at every position of degree != d
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                if (ab::sub(G, degree[r], degree[c]) == d) continue;
                Vec row(s, Cyc(0));
                bool nonzero = false;
                for (std::size_t m = 0; m < s; ++m) {
                    row[m] = operators[m].at(r, c);
                    nonzero = nonzero || !row[m].is_zero();
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        Mat sys(rows.size(), s);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t m = 0; m < s; ++m) sys.at(r, m) = rows[r][m];
        auto ns = linalg::nullspace(sys);
        if (!ns.empty()) {
            total += ns.size();
            out.emplace_back(d, std::move(ns));
        }
    }
    if (total != s)
        throw std::invalid_argument("homogeneous_operator_basis: span is not graded (" +
                                    std::to_string(total) + " of " + std::to_string(s) + ")");
    return out;
}

} // namespace esla::families
