#include "cherd/graded.hpp"

#include <algorithm>

namespace cherd {

LaurentPoly GradedWCharacter::coeff(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? LaurentPoly() : it->second;
}

mpq_class GradedWCharacter::dim_at_one() const {
    mpq_class s = 0;
    for (const auto& [p, f] : coeffs) s += f.at_one() * mpq_class(p.syt_count());
    return s;
}

bool GradedWCharacter::operator==(const GradedWCharacter& o) const {
    if (n != o.n) return false;
    // Zero coefficients may or may not be stored; compare semantically.
    for (const auto& [p, f] : coeffs)
        if (o.coeff(p) != f) return false;
    for (const auto& [p, f] : o.coeffs)
        if (coeff(p) != f) return false;
    return true;
}

LaurentPoly hook_poly(const Partition& lambda) {
    LaurentPoly h = LaurentPoly::one();
    for (int hk : lambda.hooks())
        h = h * (LaurentPoly::one() - LaurentPoly::monomial(hk));
    return h;
}

namespace {

LaurentPoly poincare_series_numerator(int n) {
    // prod_{j=1}^{n} (1 - t^j)
    LaurentPoly p = LaurentPoly::one();
    for (int j = 1; j <= n; ++j)
        p = p * (LaurentPoly::one() - LaurentPoly::monomial(j));
    return p;
}

LaurentPoly cycle_type_det(const Partition& rho) {
    // det(1 - t w) for a permutation of cycle type rho on n coordinates.
    LaurentPoly p = LaurentPoly::one();
    for (int part : rho.parts())
        p = p * (LaurentPoly::one() - LaurentPoly::monomial(part));
    return p;
}

} // namespace

FakeDegreeRecord fake_degree(const Partition& lambda) {
    if (lambda.n() < 1) throw std::invalid_argument("fake_degree needs n >= 1");
    LaurentPoly f = LaurentPoly::exact_div(poincare_series_numerator(lambda.n()),
                                           hook_poly(lambda))
                        .shifted(lambda.nstat());
    FakeDegreeRecord r{lambda, f, f.valuation(), f.degree()};
    if (r.b != lambda.nstat())
        throw IdentityViolation("fake degree of " + lambda.str() +
                                " does not start at n(lambda)");
    if (f.at_one() != mpq_class(lambda.syt_count()))
        throw IdentityViolation("fake degree of " + lambda.str() + " has f(1) != dim");
    return r;
}

LaurentPoly fake_degree_molien(const Partition& lambda, const CharacterTable& table) {
    if (lambda.n() != table.n())
        throw SizeMismatch("fake_degree_molien: table size mismatch");
    int li = table.index_of(lambda);
    std::vector<RatFunc> terms;
    terms.reserve(table.size());
    for (int r = 0; r < table.size(); ++r) {
        LaurentPoly num(exact_ratio(mpz_class(table.chi(li, r)), table.z(r)));
        terms.emplace_back(num, cycle_type_det(table.labels()[r]));
    }
    RatFunc molien = rf_sum(terms);
    return (molien * RatFunc(poincare_series_numerator(lambda.n()))).to_poly();
}

LaurentPoly kostka_poly(const Partition& lambda) {
    return LaurentPoly::exact_div(poincare_series_numerator(lambda.n()), hook_poly(lambda));
}

std::vector<LaurentPoly> km_tt_row(const Partition& lambda, const CharacterTable& table) {
    int li = table.index_of(lambda);
    int k = table.size();
    // r_rho = z_rho^{-1} chi^lambda_rho H_lambda(t) / prod_i (1 - t^{rho_i});
    // then K_{mu,lambda}(t,t) = sum_rho chi^mu_rho r_rho.
    LaurentPoly h = hook_poly(lambda);
    std::vector<RatFunc> r_rho;
    r_rho.reserve(k);
    for (int r = 0; r < k; ++r) {
        LaurentPoly num = h * exact_ratio(mpz_class(table.chi(li, r)), table.z(r));
        r_rho.emplace_back(num, cycle_type_det(table.labels()[r]));
    }
    std::vector<LaurentPoly> out;
    out.reserve(k);
    for (int mi = 0; mi < k; ++mi) {
        RatFunc acc;
        for (int r = 0; r < k; ++r)
            acc = acc + r_rho[r] * RatFunc(LaurentPoly(mpq_class(table.chi(mi, r))));
        out.push_back(acc.to_poly());
    }
    return out;
}

LaurentPoly km_tt(const Partition& mu, const Partition& lambda, const CharacterTable& table) {
    if (mu.n() != lambda.n()) throw SizeMismatch("km_tt: |mu| != |lambda|");
    return km_tt_row(lambda, table)[table.index_of(mu)];
}

GradedWCharacter verma_class(const Partition& lambda, const CharacterTable& table) {
    GradedWCharacter out;
    out.n = lambda.n();
    for (const Partition& t : table.labels()) {
        LaurentPoly ft = fake_degree(t).f;
        for (const auto& [mu, mult] : kronecker(t, lambda, table)) {
            auto it = out.coeffs.find(mu);
            if (it == out.coeffs.end())
                out.coeffs.emplace(mu, ft * mpq_class(mult));
            else
                it->second = it->second + ft * mpq_class(mult);
        }
    }
    return out;
}

GradedWCharacter lsimple_class(const Partition& lambda, const CharacterTable& table) {
    GradedWCharacter out;
    out.n = lambda.n();
    std::vector<LaurentPoly> row = km_tt_row(lambda, table);
    for (int mi = 0; mi < table.size(); ++mi)
        if (!row[mi].is_zero()) out.coeffs.emplace(table.labels()[mi], row[mi]);
    return out;
}

LaurentPoly poincare_from_fakes(const LaurentPoly& f_s, const LaurentPoly& f_sdual) {
    long shift = f_sdual.valuation() - f_s.valuation();
    return (f_s * f_sdual.reversed()).shifted(shift);
}

LaurentPoly poincare_p(const Partition& lambda) {
    LaurentPoly k = kostka_poly(lambda);
    LaurentPoly p = k * k.reversed();
    // Every S_n-module is self-dual, so the fake-degree route uses f twice.
    LaurentPoly f = fake_degree(lambda).f;
    if (p != poincare_from_fakes(f, f))
        throw IdentityViolation("poincare_p routes disagree for " + lambda.str());
    return p;
}

VerifyReport verify_simmult(int n, const CharacterTable& table, bool perturb) {
    VerifyReport rep{"simmult", n, 0, {}};
    for (const Partition& lambda : table.labels()) {
        GradedWCharacter lhs = verma_class(lambda, table);
        std::vector<LaurentPoly> row = km_tt_row(lambda, table);
        if (perturb && lambda == table.labels()[0] && !row.empty())
            row[0] = row[0] + LaurentPoly::monomial(1);
        LaurentPoly fshift = fake_degree(lambda).f.shifted(-lambda.nstat());
        GradedWCharacter rhs;
        rhs.n = n;
        for (int mi = 0; mi < table.size(); ++mi) {
            LaurentPoly c = fshift * row[mi];
            if (!c.is_zero()) rhs.coeffs.emplace(table.labels()[mi], c);
        }
        for (const Partition& mu : table.labels()) {
            ++rep.cases;
            if (lhs.coeff(mu) != rhs.coeff(mu))
                rep.failures.push_back({"simmult", lambda, mu,
                                        lhs.coeff(mu).str(), rhs.coeff(mu).str()});
        }
    }
    return rep;
}

VerifyReport verify_import(int n, const CharacterTable& table) {
    VerifyReport rep{"import", n, 0, {}};
    int k = table.size();
    std::vector<std::vector<LaurentPoly>> km(k);
    for (int li = 0; li < k; ++li) km[li] = km_tt_row(table.labels()[li], table);
    for (int li = 0; li < k; ++li) {
        const Partition& lambda = table.labels()[li];
        RatFunc hl{hook_poly(lambda)};
        for (int ri = 0; ri < k; ++ri) {
            const Partition& rho = table.labels()[ri];
            ++rep.cases;
            LaurentPoly lhs;
            for (int mi = 0; mi < k; ++mi)
                lhs = lhs + km[li][mi] * mpq_class(table.chi(mi, ri));
            RatFunc rhs = hl / RatFunc(cycle_type_det(rho)) *
                          RatFunc(LaurentPoly(mpq_class(table.chi(li, ri))));
            if (RatFunc(lhs) != rhs)
                rep.failures.push_back({"import", lambda, rho, rhs.str(), lhs.str()});
        }
    }
    // K_{mu,(n)}(t,t) = f_mu(t)
    int top = table.index_of(Partition(std::vector<int>{n}));
    for (int mi = 0; mi < k; ++mi) {
        ++rep.cases;
        LaurentPoly f = fake_degree(table.labels()[mi]).f;
        if (km[top][mi] != f)
            rep.failures.push_back({"fional", table.labels()[mi], std::nullopt,
                                    f.str(), km[top][mi].str()});
    }
    return rep;
}

VerifyReport verify_oracles(int n, const CharacterTable& table) {
    VerifyReport rep{"oracles", n, 0, {}};
    for (const Partition& lambda : table.labels()) {
        ++rep.cases;
        LaurentPoly product = fake_degree(lambda).f;
        LaurentPoly molien = fake_degree_molien(lambda, table);
        if (product != molien)
            rep.failures.push_back({"fake_degree_molien", lambda, std::nullopt,
                                    product.str(), molien.str()});
        ++rep.cases;
        LaurentPoly prod_form = kostka_poly(lambda).shifted(lambda.nstat());
        LaurentPoly charge_form = charge_kostka(lambda, std::max(n, 10));
        if (prod_form != charge_form)
            rep.failures.push_back({"charge_kostka", lambda, std::nullopt,
                                    prod_form.str(), charge_form.str()});
    }
    return rep;
}

std::pair<Partition, long> common_component(const Partition& lambda) {
    auto left = induced_young_character(lambda.conjugate(), InducedFlag::Trivial);
    auto right = induced_young_character(lambda, InducedFlag::Sign);
    std::vector<std::pair<Partition, long>> common;
    for (const auto& [mu, m] : left) {
        auto it = right.find(mu);
        if (it != right.end()) common.emplace_back(mu, std::min(m, it->second));
    }
    if (common.size() != 1 || !(common[0].first == lambda.conjugate()) ||
        common[0].second != 1)
        throw IdentityViolation("common constituent of the two inductions is not (" +
                                lambda.conjugate().str() + ", 1)");
    return common[0];
}

} // namespace cherd
