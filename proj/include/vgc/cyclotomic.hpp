#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown on division by an exact zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

/// Thrown by binomial_roots when the radicand is not a rational times a root of unity.
class UnsupportedRadicand : public std::invalid_argument {
public:
    explicit UnsupportedRadicand(const std::string& what) : std::invalid_argument(what) {}
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Element of Q(zeta_n) stored in the power basis of Q[x]/(Phi_n).
///
/// The representation is canonical for a fixed conductor: coefficients are
/// reduced modulo Phi_n and kept in lowest terms, so equality within one
/// conductor is coefficient equality. Binary operations between different
/// conductors first embed both operands into Q(zeta_lcm).
class CycNum {
public:
    CycNum() : n_(1), c_(1) {}
    CycNum(int value) : n_(1), c_{Rational(value)} {}  // NOLINT(implicit)
    CycNum(long value) : n_(1), c_{Rational(value)} {}  // NOLINT(implicit)
    CycNum(const Rational& value) : n_(1), c_{value} {}  // NOLINT(implicit)
    CycNum(int conductor, std::vector<Rational> coeffs);

    /// zeta_n^power, with power taken modulo n.
    static CycNum zeta(int n, long power = 1);

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value; throws when the element is not rational.
    Rational rational_value() const;

    /// Image in Q(zeta_m); m must be a multiple of the conductor.
    CycNum promoted(int m) const;
    /// Preimage in Q(zeta_d) for d dividing the conductor, if the element lies there.
    std::optional<CycNum> projected(int d) const;
    /// The same element written over the smallest conductor that contains it.
    CycNum simplified() const;

    CycNum inverse() const;
    CycNum pow(long e) const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Human-readable form, e.g. "-1 - z3" for omega^2.
    std::string to_string() const;

    /// Hash of the value over its smallest conductor, consistent with operator==.
    std::size_t hash() const;

private:
    void reduce();

    int n_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

/// Common conductor of a collection (lcm of the individual conductors).
int common_conductor(const std::vector<CycNum>& values);

/// Parse "p/q" or "p" into an exact rational.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

/// Decomposition c = q * zeta_N^e with q rational, if it exists.
struct RootOfUnityForm {
    Rational scale;
    int order;     // N
    long exponent; // e in [0, N)
};
std::optional<RootOfUnityForm> as_rational_times_root_of_unity(const CycNum& c);

/// All k-th roots of c that are rational multiples of roots of unity.
///
/// The result has either k elements or none (when the rational part has no
/// rational k-th root). The roots share a common conductor. c = 0 and
/// radicands that are not a rational times a root of unity are rejected.
std::vector<CycNum> binomial_roots(int k, const CycNum& c);

}  // namespace vgc

template <>
struct std::hash<vgc::CycNum> {
    std::size_t operator()(const vgc::CycNum& a) const noexcept { return a.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<vgc::CycNum> : GenericNumTraits<vgc::CycNum> {
    using Real = vgc::CycNum;
    using NonInteger = vgc::CycNum;
    using Literal = vgc::CycNum;
    using Nested = vgc::CycNum;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
