#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cherd/characters.hpp"
#include "cherd/laurent.hpp"
#include "cherd/partition.hpp"

namespace cherd {

// A class in the graded Grothendieck group of S_n: irreducible label ->
// graded multiplicity.
struct GradedWCharacter {
    int n = 0;
    std::map<Partition, LaurentPoly, RevLexLess> coeffs;

    LaurentPoly coeff(const Partition& p) const;
    // Dimension functional at t = 1: sum of coeff(lambda)(1) * dim S_lambda.
    mpq_class dim_at_one() const;
    bool operator==(const GradedWCharacter& o) const;
};

struct FakeDegreeRecord {
    Partition lambda;
    LaurentPoly f;
    long b = 0;  // lowest exponent
    long j = 0;  // highest exponent
};

// Fake degree via the hook product formula
//   f = t^{n(lambda)} prod_{j=1}^{n}(1-t^j) / prod_{u}(1-t^{h(u)}).
FakeDegreeRecord fake_degree(const Partition& lambda);

// Independent route: z-weighted Molien sum over cycle types, scaled by
// prod_{j<=n}(1-t^j). Must agree with fake_degree.
LaurentPoly fake_degree_molien(const Partition& lambda, const CharacterTable& table);

// One-variable Kostka polynomial, product form: prod(1-t^j)/prod(1-t^{h(u)}).
LaurentPoly kostka_poly(const Partition& lambda);

// Hook length polynomial H_lambda(t) = prod_u (1 - t^{h(u)}).
LaurentPoly hook_poly(const Partition& lambda);

// Kostka-Macdonald specialization K_{mu,lambda}(t,t), by orthogonality
// inversion of the character-sum identity; always a Laurent polynomial.
LaurentPoly km_tt(const Partition& mu, const Partition& lambda, const CharacterTable& table);
// All mu at once (same lambda); cheaper than repeated km_tt calls.
std::vector<LaurentPoly> km_tt_row(const Partition& lambda, const CharacterTable& table);

// [M(S_lambda)] = sum_T f_T(t) [T (x) S_lambda].
GradedWCharacter verma_class(const Partition& lambda, const CharacterTable& table);

// [L(S_lambda)] = sum_mu K_{mu,lambda}(t,t) [S_mu].
GradedWCharacter lsimple_class(const Partition& lambda, const CharacterTable& table);

// General form of the Poincare polynomial from a pair of fake degrees:
// t^{b_{S*} - b_S} f_S(t) f_{S*}(t^{-1}).
LaurentPoly poincare_from_fakes(const LaurentPoly& f_s, const LaurentPoly& f_sdual);

// p_{S_lambda}(t), computed both as K_lambda(t) K_lambda(t^{-1}) and through
// the fake-degree form; throws IdentityViolation if the routes disagree.
LaurentPoly poincare_p(const Partition& lambda);

struct VerifyFailure {
    std::string identity;
    Partition lambda;
    std::optional<Partition> rho;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    int n = 0;
    int cases = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Coefficient-by-coefficient check of the baby Verma expansion
// [M(S_lambda)] = sum_mu t^{-b_lambda} f_lambda(t) K_{mu,lambda}(t,t) [S_mu].
// `perturb` flips one Kostka-Macdonald coefficient (negative-control hook).
VerifyReport verify_simmult(int n, const CharacterTable& table, bool perturb = false);

// Checks sum_mu K_{mu,lambda}(t,t) chi^mu_rho = H_lambda(t)/prod(1-t^{rho_i})
// chi^lambda_rho for all lambda, rho, plus K_{mu,(n)}(t,t) = f_mu(t).
VerifyReport verify_import(int n, const CharacterTable& table);

// Oracle cross-checks: hook-product fake degree vs Molien sum, and
// t^{n(lambda)} kostka_poly vs the charge statistic.
VerifyReport verify_oracles(int n, const CharacterTable& table);

// The unique common constituent of Ind_{S_{lambda'}} 1 and Ind_{S_lambda} sign;
// asserts it is (lambda', 1).
std::pair<Partition, long> common_component(const Partition& lambda);

} // namespace cherd
