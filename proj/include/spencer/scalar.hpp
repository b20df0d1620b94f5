#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace spencer {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

struct PoleAtAlpha : std::runtime_error {
    explicit PoleAtAlpha(const std::string& what) : std::runtime_error(what) {}
};

/// Univariate polynomial over Q in the indeterminate `a` (the parameter
/// usually written alpha). Coefficients are dense, lowest degree first;
/// the zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat c);
    Poly(std::vector<Rat> coeffs);
    static Poly variable();  // the monomial a

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& coeff(int d) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // division with remainder; o must be nonzero
    static void divmod(const Poly& n, const Poly& d, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b);  // monic gcd, zero if both zero

    Poly monic() const;
    Rat eval(const Rat& x) const;
    std::string str() const;  // canonical form, e.g. "a^2 - 4/3*a + 1"

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Exact field element: either a rational number or a rational function
/// in one indeterminate `a` over Q. Canonical form is maintained by all
/// operations: rationals are reduced with positive denominator (gmp does
/// this), rational functions have gcd(num, den) = 1 and monic denominator,
/// and a constant rational function collapses to the rational variant.
class Scalar {
  public:
    Scalar() : v_(Rat(0)) {}
    Scalar(int n) : v_(Rat(n)) {}
    Scalar(long n) : v_(Rat(n)) {}
    Scalar(Rat r) : v_(std::move(r)) {}
    Scalar(int num, int den) : v_(Rat(num, den)) {}
    Scalar(Poly num, Poly den);  // reduces to canonical form

    static Scalar alpha();  // the indeterminate a

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_zero() const;
    bool is_one() const;
    const Rat& rat() const;  // throws unless rational
    Poly num() const;
    Poly den() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // o must be nonzero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inv() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // total order for use as map keys (weights); not a field order
    bool operator<(const Scalar& o) const;

    /// Exact substitution a := x. Throws PoleAtAlpha if the denominator
    /// vanishes at x.
    Scalar eval_alpha(const Rat& x) const;

    std::string str() const;  // "p/q" or rational-function string in a

  private:
    struct RatFunc {
        Poly num, den;  // den monic, gcd(num, den) = 1, num nonconstant or den != 1
        bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    };
    std::variant<Rat, RatFunc> v_;
};

inline Scalar operator*(int n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace spencer
