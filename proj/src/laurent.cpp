#include "cherd/laurent.hpp"

#include <sstream>

namespace cherd {

LaurentPoly::LaurentPoly(const mpq_class& c) {
    mpq_class v = c;
    v.canonicalize();
    if (v != 0) terms_[0] = v;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = mpq_class(c);
}

LaurentPoly LaurentPoly::monomial(long exponent, const mpq_class& coeff) {
    LaurentPoly p;
    mpq_class v = coeff;
    v.canonicalize();
    if (v != 0) p.terms_[exponent] = v;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<long, mpq_class>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.insert_term(e, c);
    return p;
}

void LaurentPoly::insert_term(long e, const mpq_class& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial is undefined");
    return terms_.rbegin()->first;
}

long LaurentPoly::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero polynomial is undefined");
    return terms_.begin()->first;
}

mpq_class LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.insert_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const mpq_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
    if (is_zero()) return 0;
    if (x == 0 && valuation() < 0)
        throw std::domain_error("evaluating a Laurent polynomial with poles at 0");
    // Horner over the exponent gaps, from the top term down.
    mpq_class acc = 0;
    long prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (long k = prev; k > it->first; --k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    mpq_class xpow = 1;
    if (prev > 0)
        for (long k = 0; k < prev; ++k) xpow *= x;
    else if (prev < 0)
        for (long k = 0; k < -prev; ++k) xpow /= x;
    return acc * xpow;
}

mpq_class LaurentPoly::at_one() const {
    mpq_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Cancel the Laurent shifts first, then do ordinary long division.
    long va = a.valuation(), vb = b.valuation();
    LaurentPoly an = a.shifted(-va), bn = b.shifted(-vb);
    auto [q, r] = poly_divmod(an, bn);
    if (!r.is_zero()) throw NotDivisible("exact_div: nonzero remainder " + r.str());
    return q.shifted(va - vb);
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod by zero");
    if (!(b.valuation() >= 0) || (!a.is_zero() && a.valuation() < 0))
        throw std::domain_error("poly_divmod expects ordinary polynomials");
    LaurentPoly q, r = a;
    long db = b.degree();
    mpq_class lead_b = b.coeff(db);
    while (!r.is_zero() && r.degree() >= db) {
        long e = r.degree() - db;
        mpq_class c = r.coeff(r.degree()) / lead_b;
        LaurentPoly term = LaurentPoly::monomial(e, c);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = poly_divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (mpq_class(1) / x.coeff(x.degree()));  // monic
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    normalize();
}

RatFunc::RatFunc(const LaurentPoly& num) : num_(num), den_(LaurentPoly::one()) {}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Absorb monomial units into the numerator so den has valuation 0.
    long vn = num_.valuation(), vd = den_.valuation();
    LaurentPoly n = num_.shifted(-vn), d = den_.shifted(-vd);
    LaurentPoly g = poly_gcd(n, d);
    n = LaurentPoly::exact_div(n, g);
    d = LaurentPoly::exact_div(d, g);
    mpq_class c0 = d.coeff(0);
    // After gcd removal the denominator keeps a nonzero constant term; scale it to 1.
    n = n * (mpq_class(1) / c0);
    d = d * (mpq_class(1) / c0);
    num_ = n.shifted(vn - vd);
    den_ = d;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

LaurentPoly RatFunc::to_poly() const {
    if (!den_.is_one())
        throw NotPolynomial("denominator " + den_.str() + " is not a unit");
    return num_;
}

RatFunc rf_sum(std::span<const RatFunc> terms) {
    RatFunc acc;
    for (const RatFunc& r : terms) acc = acc + r;
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpq_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && e != 0;
        if (!unit_coeff) os << a.get_str();
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace cherd
