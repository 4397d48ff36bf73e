/**
 * @file scalar.hpp
 * @brief Exact field arithmetic over prime fields F_p and the rationals,
 *        plus univariate polynomial factorization over F_p.
 *
 * Scalars are kept in canonical form at all times (reduced residues mod p,
 * lowest-terms fractions with positive denominator), so equality is plain
 * structural equality. Only prime fields and Q are supported; there are no
 * extension fields and no floating point anywhere.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cat2vect/error.hpp"

namespace cat2vect {

/// Ground field selector: F_p for a prime p, or the rationals.
class FieldSpec {
  public:
    static FieldSpec prime(long long p);
    static FieldSpec rationals();

    bool is_prime_field() const { return p_ != 0; }
    bool is_rationals() const { return p_ == 0; }

    /// Characteristic: p for F_p, 0 for Q.
    long long characteristic() const { return p_; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    /// "Fp:7" or "Q"; the same syntax the CLI accepts.
    std::string str() const;
    static FieldSpec parse(const std::string& s);

  private:
    explicit FieldSpec(long long p) : p_(p) {}
    long long p_ = 0;
};

bool is_prime(long long n);

/// An element of the selected ground field in canonical form.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()), num_(0), den_(1) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long long n);
    /// num/den in the given field (den reduced mod p for prime fields).
    static Scalar fraction(const FieldSpec& f, long long num, long long den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  ///< throws DivisionByZero on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "3", "-1/2"; residues print as plain decimal.
    std::string str() const;
    /// Parses what str() emits.
    static Scalar parse(const FieldSpec& f, const std::string& s);

  private:
    Scalar(FieldSpec f, long long num, long long den) : field_(f), num_(num), den_(den) {}
    static void check_same_field(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    long long num_;
    long long den_;  // always 1 for prime fields
};

/// Dense univariate polynomial, coefficient of x^i at index i.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly f);
int poly_deg(const Poly& f);  ///< -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Scalar& c, const Poly& f);
/// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  ///< monic gcd
Poly poly_derivative(const Poly& f);
Scalar poly_eval(const Poly& f, const Scalar& x);
Poly poly_monic(const Poly& f);
std::string poly_str(const Poly& f, const std::string& var = "x");

struct PolyFactor {
    Poly factor;       // monic irreducible
    int multiplicity = 0;
};

struct PolyFactorization {
    Scalar leading;    // input = leading * prod factor^multiplicity
    std::vector<PolyFactor> factors;
};

/// Full factorization over a prime field (Berlekamp). Throws ZeroPolynomial
/// on the zero input and FieldMismatch when the coefficients are rational.
PolyFactorization poly_factor(const Poly& f);

}  // namespace cat2vect
