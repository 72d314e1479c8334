#include "esla/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace esla::cyclo {

Rat rat(long num, long den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Cyc::Cyc() { c_.fill(Rat(0)); }

Cyc::Cyc(const Rat& rational) : Cyc() { c_[0] = rational; }

Cyc::Cyc(long integer) : Cyc() { c_[0] = Rat(integer); }

Cyc::Cyc(std::array<Rat, 8> coeffs) : c_(std::move(coeffs)) {}

Cyc Cyc::zero() { return Cyc(); }

Cyc Cyc::one() { return Cyc(1); }

Cyc Cyc::zeta_pow(long k) {
    k %= 24;
    if (k < 0) k += 24;
    // z^k for k < 8 is a basis vector; higher powers reduce via z^8 = z^4 - 1.
    Cyc r;
    if (k < 8) {
        r.c_[k] = 1;
        return r;
    }
    r.c_[0] = 1;
    Cyc z;
    z.c_[1] = 1;
    for (long t = 0; t < k; ++t) r *= z;
    return r;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t j = 1; j < 8; ++j)
        if (c_[j] != 0) return false;
    return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc r(*this);
    r += o;
    return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc r(*this);
    r -= o;
    return r;
}

Cyc Cyc::operator-() const {
    Cyc r;
    for (std::size_t j = 0; j < 8; ++j) r.c_[j] = -c_[j];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (std::size_t j = 0; j < 8; ++j) c_[j] += o.c_[j];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (std::size_t j = 0; j < 8; ++j) c_[j] -= o.c_[j];
    return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
    // Convolution product, degree <= 14, then reduction by x^8 = x^4 - 1.
    std::array<Rat, 15> p;
    p.fill(Rat(0));
    for (std::size_t a = 0; a < 8; ++a) {
        if (c_[a] == 0) continue;
        for (std::size_t b = 0; b < 8; ++b) {
            if (o.c_[b] == 0) continue;
            p[a + b] += c_[a] * o.c_[b];
        }
    }
    for (std::size_t k = 14; k >= 8; --k) {
        if (p[k] == 0) continue;
        p[k - 4] += p[k];
        p[k - 8] -= p[k];
        p[k] = 0;
    }
    Cyc r;
    for (std::size_t j = 0; j < 8; ++j) r.c_[j] = p[j];
    return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    *this = *this * o;
    return *this;
}

namespace {

using Poly = std::vector<Rat>;  // coefficient list, lowest degree first

int degree(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

// Division with remainder in Q[x]: a = q*b + r.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    r = a;
    q.assign(a.size(), Rat(0));
    for (int da = degree(r); da >= db; da = degree(r)) {
        Rat f = r[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        std::size_t shift = static_cast<std::size_t>(da - db);
        q[shift] += f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(j) + shift] -= f * b[static_cast<std::size_t>(j)];
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly p(a.size() + b.size(), Rat(0));
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] == 0) continue;
        for (std::size_t y = 0; y < b.size(); ++y)
            if (b[y] != 0) p[x + y] += a[x] * b[y];
    }
    return p;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly p(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j < a.size()) p[j] += a[j];
        if (j < b.size()) p[j] -= b[j];
    }
    return p;
}

Poly phi24() {
    Poly m(9, Rat(0));
    m[0] = 1;
    m[4] = -1;
    m[8] = 1;
    return m;
}

} // namespace

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("Cyc::inv: zero element");
    // Extended Euclid: u*a + v*Phi = gcd = nonzero constant (Phi irreducible).
    Poly a(c_.begin(), c_.end());
    Poly b = phi24();
    Poly u0{Rat(1)}, u1{};  // Bezout coefficients for a
    while (degree(b) > 0) {
        Poly q, r;
        divmod(a, b, q, r);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        a = b;
        b = r;
        u0 = u1;
        u1 = u2;
    }
    int db = degree(b);
    Poly* bez = &u1;
    Poly* g = &b;
    if (db < 0) {  // a divided evenly: gcd is in a (possible when a is constant)
        g = &a;
        bez = &u0;
        db = degree(a);
    }
    Rat lead = (*g)[static_cast<std::size_t>(db)];
    Cyc r;
    for (std::size_t j = 0; j < 8 && j < bez->size(); ++j) r.c_[j] = (*bez)[j] / lead;
    return r;
}

Cyc Cyc::conj() const {
    Cyc r;
    for (long j = 0; j < 8; ++j) {
        if (c_[static_cast<std::size_t>(j)] == 0) continue;
        r += c_[static_cast<std::size_t>(j)] * zeta_pow(-j);
    }
    return r;
}

std::complex<double> Cyc::embed() const {
    const std::complex<double> z = std::polar(1.0, std::numbers::pi / 12.0);
    std::complex<double> acc = 0.0;
    for (int j = 7; j >= 0; --j)
        acc = acc * z + c_[static_cast<std::size_t>(j)].get_d();
    return acc;
}

std::array<std::string, 8> Cyc::to_strings() const {
    std::array<std::string, 8> out;
    for (std::size_t j = 0; j < 8; ++j) out[j] = rat_to_string(c_[j]);
    return out;
}

Cyc Cyc::from_strings(const std::array<std::string, 8>& parts) {
    std::array<Rat, 8> c;
    for (std::size_t j = 0; j < 8; ++j) c[j] = rat_from_string(parts[j]);
    return Cyc(c);
}

Cyc operator*(const Rat& s, const Cyc& a) {
    std::array<Rat, 8> c;
    for (std::size_t j = 0; j < 8; ++j) c[j] = s * a.coeffs()[j];
    return Cyc(c);
}

const Constants& constants() {
    static const Constants k = [] {
        Constants c;
        c.zeta = Cyc::zeta_pow(1);
        c.i = Cyc::zeta_pow(6);
        c.omega = Cyc::zeta_pow(8);
        c.sqrt2 = Cyc::zeta_pow(3) + Cyc::zeta_pow(21);
        c.sqrt3 = Cyc::zeta_pow(2) + Cyc::zeta_pow(22);
        c.half = Cyc(rat(1, 2));
        c.half_one_plus_i = c.half * (Cyc::one() + c.i);
        return c;
    }();
    return k;
}

namespace {

// Squarefree part of a positive integer (trial division; inputs are small).
mpz_class squarefree_part(mpz_class n) {
    mpz_class m = 1;
    for (mpz_class p = 2; p * p <= n; ++p) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) &&
               mpz_divisible_p(mpz_class(n / p).get_mpz_t(), p.get_mpz_t())) {
            n /= p * p;
        }
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            m *= p;
            n /= p;
        }
    }
    return m * n;
}

// sqrt of a positive rational within K: q = s^2 * m with m squarefree;
// representable iff m | 6.
std::optional<Cyc> sqrt_positive_rational(const Rat& q) {
    mpz_class a = q.get_num(), b = q.get_den();
    mpz_class ab = a * b;
    mpz_class m = squarefree_part(ab);
    mpz_class s2 = ab / m;
    mpz_class s = sqrt(s2);
    if (s * s != s2) return std::nullopt;  // defensive; cannot happen
    Rat ratio(s, b);
    ratio.canonicalize();
    const auto& K = constants();
    if (m == 1) return Cyc(ratio);
    if (m == 2) return ratio * K.sqrt2;
    if (m == 3) return ratio * K.sqrt3;
    if (m == 6) return ratio * (K.sqrt2 * K.sqrt3);
    return std::nullopt;
}

} // namespace

std::optional<Cyc> sqrt_in_field(const Cyc& c) {
    if (c.is_zero()) return Cyc::zero();
    for (long k = 0; k < 24; ++k) {
        Cyc d = c * Cyc::zeta_pow(-k);
        if (!d.is_rational()) continue;
        Rat q = d.rational_part();
        long kk = k;
        if (q < 0) {  // fold the sign into the root of unity: -1 = zeta^12
            q = -q;
            kk = (k + 12) % 24;
        }
        if (kk % 2 != 0) return std::nullopt;
        auto root = sqrt_positive_rational(q);
        if (!root) return std::nullopt;
        Cyc candidate = *root * Cyc::zeta_pow(kk / 2);
        if (candidate * candidate == c) return candidate;
        return std::nullopt;
    }
    return std::nullopt;  // not of catalog form q * zeta^k
}

} // namespace esla::cyclo
