#ifndef ESLA_CYCLO_HPP
#define ESLA_CYCLO_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace esla::cyclo {

/// Arbitrary-precision rational. GMP keeps values canonical (gcd-reduced,
/// positive denominator) as long as they are produced by arithmetic; values
/// built from raw numerator/denominator pairs go through rat() below.
using Rat = mpq_class;

/// Canonical rational from a (possibly unreduced) fraction.
Rat rat(long num, long den = 1);

/// Parse "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

/// Serialize as "p/q" with q >= 1, always with an explicit denominator.
std::string rat_to_string(const Rat& r);

/// Element of the cyclotomic field K = Q(zeta_24), zeta_24 a primitive 24th
/// root of unity. Coordinates in the power basis 1, z, ..., z^7 of
/// Q[x]/(Phi_24), Phi_24(x) = x^8 - x^4 + 1. All operations reduce eagerly,
/// so equality is coefficient-wise. K contains i, the primitive cube roots
/// of unity, sqrt(2) and sqrt(3), which covers every scalar the models and
/// Weyl generators need.
class Cyc {
public:
    Cyc();                            // zero
    explicit Cyc(const Rat& rational);
    explicit Cyc(long integer);
    explicit Cyc(std::array<Rat, 8> coeffs);

    static Cyc zero();
    static Cyc one();
    /// zeta^k for any integer k (negative allowed).
    static Cyc zeta_pow(long k);

    const std::array<Rat, 8>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;         // coeffs 1..7 all zero
    Rat rational_part() const { return c_[0]; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    bool operator==(const Cyc& o) const = default;

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_24. Throws std::domain_error on zero.
    Cyc inv() const;

    /// Complex conjugate (the automorphism zeta -> zeta^-1).
    Cyc conj() const;

    /// Numeric embedding at zeta = exp(i pi / 12).
    std::complex<double> embed() const;

    /// Serialization: 8 "p/q" strings, basis order 1, z, ..., z^7.
    std::array<std::string, 8> to_strings() const;
    static Cyc from_strings(const std::array<std::string, 8>& parts);

private:
    std::array<Rat, 8> c_;
};

Cyc operator*(const Rat& s, const Cyc& a);

/// Named constants of K used throughout the models.
struct Constants {
    Cyc zeta;             // primitive 24th root of unity
    Cyc i;                // zeta^6
    Cyc omega;            // zeta^8, primitive cube root of unity
    Cyc sqrt2;            // zeta^3 + zeta^21
    Cyc sqrt3;            // zeta^2 + zeta^22
    Cyc half;             // 1/2
    Cyc half_one_plus_i;  // (1+i)/2
};

const Constants& constants();

/// Square root within K, solved over the multiplicative catalog
/// c = q * zeta^k with q rational: the root lies in K exactly when, after
/// folding the sign of q into the root-of-unity part, k is even and the
/// squarefree part of |q| divides 6. Returns nullopt when c is not of
/// catalog form or the root falls outside K; the result is verified by
/// squaring before it is returned.
std::optional<Cyc> sqrt_in_field(const Cyc& c);

} // namespace esla::cyclo

#endif
