#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cherd/errors.hpp"

namespace cherd {

// mpq_class(num, den) does not canonicalize; this always does.
inline mpq_class exact_ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Exact Laurent polynomial in one variable t over Q.
// Invariants: no stored coefficient is zero; support is finite.
// Values are immutable after construction; all operations are pure.
class LaurentPoly {
public:
    LaurentPoly() = default;                      // zero
    explicit LaurentPoly(const mpq_class& c);     // constant
    explicit LaurentPoly(long c);

    static LaurentPoly monomial(long exponent, const mpq_class& coeff = 1);
    static LaurentPoly one() { return LaurentPoly(1); }
    // Builds from (exponent, coefficient) pairs, merging duplicates.
    static LaurentPoly from_terms(const std::vector<std::pair<long, mpq_class>>& terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Degree/valuation are undefined on the zero polynomial and throw.
    long degree() const;
    long valuation() const;
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<long, mpq_class>& terms() const { return terms_; }
    mpq_class coeff(long exponent) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const mpq_class& c) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // t -> t^-1
    LaurentPoly reversed() const;
    // * t^k
    LaurentPoly shifted(long k) const;

    mpq_class eval(const mpq_class& x) const;     // x must be nonzero if valuation < 0
    mpq_class at_one() const;

    // Exact division; throws NotDivisible when the remainder is nonzero.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

    std::string str() const;

private:
    std::map<long, mpq_class> terms_;
    void insert_term(long e, const mpq_class& c);
};

// Quotient and remainder for ordinary polynomials (valuation >= 0), deg r < deg b.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

// Monic gcd of two polynomials with valuation >= 0 (gcd(0,0) = 0).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact rational function in t over Q, stored in canonical form:
// denominator has valuation 0, constant term 1, and shares no factor with
// the numerator (monomial units absorbed into the numerator). Equality of
// canonical forms is equality in the field.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}            // zero
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);   // canonicalizes
    explicit RatFunc(const LaurentPoly& num);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    bool is_polynomial() const { return den_.is_one(); }
    // Throws NotPolynomial unless the denominator is a unit; a failure here
    // signals a false identity or bad input upstream.
    LaurentPoly to_poly() const;

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void normalize();
};

RatFunc rf_sum(std::span<const RatFunc> terms);

} // namespace cherd
