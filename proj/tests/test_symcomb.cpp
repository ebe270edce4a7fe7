#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cherd/characters.hpp"
#include "cherd/partition.hpp"

using cherd::CharacterTable;
using cherd::InducedFlag;
using cherd::Partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Brute-force partition count by enumeration over bounded part vectors.
long count_partitions_brute(int n) {
    long count = 0;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) { ++count; return; }
        for (int p = std::min(rem, maxp); p >= 1; --p) self(self, rem - p, p);
    };
    rec(rec, n, n);
    return count;
}

// --- brute-force S_n machinery for oracle checks (n <= 5) ---

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Partition cycle_type(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::vector<int> cyc;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = perm[j]; ++len; }
        cyc.push_back(len);
    }
    std::sort(cyc.rbegin(), cyc.rend());
    return Partition(cyc);
}

int perm_sign(const std::vector<int>& perm) {
    Partition ct = cycle_type(perm);
    int n = ct.n(), len = ct.length();
    return ((n - len) % 2 == 0) ? 1 : -1;
}

// Character of the Young permutation module M^lambda = action on tabloids,
// evaluated by counting fixed cosets of S_lambda (trivial or sign induced).
mpq_class induced_char_value(const Partition& lambda, const std::vector<int>& g,
                             InducedFlag flag) {
    int n = lambda.n();
    // Members of the Young subgroup: permutations preserving each row block.
    std::vector<int> block(n);
    int idx = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) block[idx++] = i;
    auto in_subgroup = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (block[p[i]] != block[i]) return false;
        return true;
    };
    // Ind chi (g) = (1/|H|) sum_{x in G} [x^-1 g x in H] chi(x^-1 g x)
    mpz_class horder = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), lambda.part(i));
        horder *= f;
    }
    mpz_class acc = 0;
    for (const auto& x : all_perms(n)) {
        std::vector<int> xinv(n);
        for (int i = 0; i < n; ++i) xinv[x[i]] = i;
        std::vector<int> conj(n);
        for (int i = 0; i < n; ++i) conj[i] = xinv[g[x[i]]];
        if (!in_subgroup(conj)) continue;
        acc += (flag == InducedFlag::Trivial) ? 1 : perm_sign(conj);
    }
    return cherd::exact_ratio(acc, horder);
}

} // namespace

TEST_CASE("partitions enumeration") {
    auto p1 = cherd::partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == P({1}));
    CHECK(cherd::partitions(5).size() == static_cast<size_t>(count_partitions_brute(5)));
    CHECK(cherd::partitions(5).size() == 7);
    CHECK(cherd::partitions(8).size() == static_cast<size_t>(count_partitions_brute(8)));
    CHECK(cherd::partitions(8).size() == 22);
    CHECK(cherd::partitions(0).size() == 1);
    CHECK(cherd::partitions(0)[0] == Partition());
}

TEST_CASE("reverse lexicographic listing order") {
    auto p3 = cherd::partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P({3}));
    CHECK(p3[1] == P({2, 1}));
    CHECK(p3[2] == P({1, 1, 1}));
    for (int n = 1; n <= 8; ++n) {
        auto ps = cherd::partitions(n);
        for (size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(cherd::revlex_less(ps[i], ps[i + 1]));
    }
}

TEST_CASE("partition statistics") {
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    std::vector<int> h = P({2, 1}).hooks();
    CHECK(h == std::vector<int>{3, 1, 1});
    CHECK(P({1, 1, 1, 1}).zrho() == 24);
    CHECK(P({3, 1}).nstat() == 1);
    CHECK(P({1, 1}).nstat() == 1);
    CHECK(P({2, 2}).nstat() == 2);

    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : cherd::partitions(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("hook length formula against brute SYT enumeration") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& p : cherd::partitions(n))
            CHECK(p.syt_count() ==
                  mpz_class(static_cast<long>(cherd::standard_tableau_words(p).size())));
}

TEST_CASE("murnaghan-nakayama basics") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& rho : cherd::partitions(n)) {
            CHECK(cherd::mn_character(P({n}), rho) == 1);
            int expect = ((n - rho.length()) % 2 == 0) ? 1 : -1;
            std::vector<int> ones(n, 1);
            CHECK(cherd::mn_character(P(ones), rho) == expect);
        }
    CHECK(cherd::mn_character(P({2, 1}), P({3})) == -1);
    CHECK_THROWS_AS(cherd::mn_character(P({2}), P({3})), cherd::SizeMismatch);
}

TEST_CASE("characters match brute-force permutation-module traces") {
    // chi^lambda from induced (trivial) characters by unitriangular Kostka
    // inversion: ind^lambda = sum_mu K_{mu,lambda} chi^mu with K_{lambda,lambda}=1
    // and K_{mu,lambda} = 0 unless mu >= lambda; peel from the top.
    for (int n = 2; n <= 5; ++n) {
        auto parts = cherd::partitions(n);
        auto perms = all_perms(n);
        // one representative per cycle type
        std::map<std::vector<int>, std::vector<int>> reps;
        for (const auto& g : perms) reps.emplace(cycle_type(g).parts(), g);

        std::map<std::vector<int>, std::map<std::vector<int>, mpq_class>> brute; // lambda -> rho -> chi
        for (size_t li = 0; li < parts.size(); ++li) {
            const Partition& lambda = parts[li];
            for (const auto& [rho, g] : reps) {
                mpq_class v = induced_char_value(lambda, g, InducedFlag::Trivial);
                for (size_t mi = 0; mi < li; ++mi) {
                    long k = cherd::kostka_number(parts[mi], lambda);
                    if (k != 0) v -= mpq_class(k) * brute[parts[mi].parts()][rho];
                }
                brute[lambda.parts()][rho] = v;
            }
        }
        for (const Partition& lambda : parts)
            for (const Partition& rho : parts)
                CHECK(mpq_class(cherd::mn_character(lambda, rho)) ==
                      brute[lambda.parts()][rho.parts()]);
    }
}

TEST_CASE("character table for n = 2") {
    CharacterTable t = CharacterTable::build(2);
    REQUIRE(t.size() == 2);
    CHECK(t.labels()[0] == P({2}));
    CHECK(t.labels()[1] == P({1, 1}));
    // columns follow the same reverse-lex order, so the class (2) comes first
    CHECK(t.chi(0, 0) == 1);
    CHECK(t.chi(0, 1) == 1);
    CHECK(t.chi(1, 0) == -1);
    CHECK(t.chi(1, 1) == 1);
    CHECK(t.chi(P({1, 1}), P({1, 1})) == 1);
    CHECK(t.chi(P({1, 1}), P({2})) == -1);
}

TEST_CASE("character table orthogonality and dimensions") {
    for (int n = 1; n <= 8; ++n) {
        CharacterTable t = CharacterTable::build(n);
        CHECK(t.orthogonality_first_kind());
        CHECK(t.orthogonality_second_kind());
        int ones_idx = t.size() - 1;  // (1^n) is last in reverse-lex order
        for (int i = 0; i < t.size(); ++i)
            CHECK(mpz_class(t.chi(i, ones_idx)) == t.labels()[i].syt_count());
    }
    CharacterTable t5 = CharacterTable::build(5);
    CHECK(t5.chi(P({3, 2}), P({1, 1, 1, 1, 1})) == 5);
    CHECK_THROWS_AS(CharacterTable::build(11), cherd::TooLarge);
}

TEST_CASE("kronecker products") {
    CharacterTable t3 = CharacterTable::build(3);
    auto dec = cherd::kronecker(P({2, 1}), P({2, 1}), t3);
    REQUIRE(dec.size() == 3);
    CHECK(dec.at(P({3})) == 1);
    CHECK(dec.at(P({2, 1})) == 1);
    CHECK(dec.at(P({1, 1, 1})) == 1);

    for (int n = 2; n <= 6; ++n) {
        CharacterTable t = CharacterTable::build(n);
        std::vector<int> ones(n, 1);
        for (const Partition& lambda : t.labels()) {
            auto with_triv = cherd::kronecker(lambda, P({n}), t);
            REQUIRE(with_triv.size() == 1);
            CHECK(with_triv.at(lambda) == 1);
            auto with_sign = cherd::kronecker(lambda, P(ones), t);
            REQUIRE(with_sign.size() == 1);
            CHECK(with_sign.at(lambda.conjugate()) == 1);
        }
    }
}

TEST_CASE("kronecker symmetry and conjugation") {
    CharacterTable t = CharacterTable::build(5);
    for (const Partition& a : t.labels())
        for (const Partition& b : t.labels()) {
            auto ab = cherd::kronecker(a, b, t);
            CHECK(ab == cherd::kronecker(b, a, t));
            auto conj = cherd::kronecker(a.conjugate(), b.conjugate(), t);
            for (const auto& [nu, m] : ab) CHECK(conj.at(nu) == m);
            // dimension bookkeeping
            mpz_class total = 0;
            for (const auto& [nu, m] : ab) total += mpz_class(m) * nu.syt_count();
            CHECK(total == a.syt_count() * b.syt_count());
        }
}

TEST_CASE("kostka numbers") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& mu : cherd::partitions(n)) {
            CHECK(cherd::kostka_number(mu, mu) == 1);
            CHECK(cherd::kostka_number(P({n}), mu) == 1);
        }
    CHECK(cherd::kostka_number(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(cherd::kostka_number(P({2, 1, 1}), P({2, 2})) == 0);
    CHECK_THROWS_AS(cherd::kostka_number(P({2}), P({3})), cherd::SizeMismatch);
}

TEST_CASE("induced characters from Young subgroups") {
    auto whole = cherd::induced_young_character(P({4}), InducedFlag::Trivial);
    REQUIRE(whole.size() == 1);
    CHECK(whole.at(P({4})) == 1);

    auto regular = cherd::induced_young_character(P({1, 1, 1, 1}), InducedFlag::Trivial);
    for (const auto& [mu, m] : regular) CHECK(mpz_class(m) == mu.syt_count());

    auto s22 = cherd::induced_young_character(P({2, 2}), InducedFlag::Sign);
    REQUIRE(s22.size() == 3);
    CHECK(s22.at(P({2, 2})) == 1);
    CHECK(s22.at(P({2, 1, 1})) == 1);
    CHECK(s22.at(P({1, 1, 1, 1})) == 1);
}

TEST_CASE("induced characters against brute-force coset computation") {
    for (int n = 2; n <= 5; ++n) {
        CharacterTable t = CharacterTable::build(n);
        auto perms = all_perms(n);
        std::map<std::vector<int>, std::vector<int>> reps;
        for (const auto& g : perms) reps.emplace(cycle_type(g).parts(), g);
        for (const Partition& lambda : t.labels())
            for (InducedFlag flag : {InducedFlag::Trivial, InducedFlag::Sign}) {
                auto dec = cherd::induced_young_character(lambda, flag);
                for (const auto& [rho, g] : reps) {
                    mpq_class direct = induced_char_value(lambda, g, flag);
                    mpq_class fromdec = 0;
                    for (const auto& [mu, m] : dec)
                        fromdec += mpq_class(m) * t.chi(mu, Partition(rho));
                    CHECK(direct == fromdec);
                }
            }
    }
}

TEST_CASE("induced trivial character has index dimension") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& lambda : cherd::partitions(n)) {
            mpz_class dim = 0;
            for (const auto& [mu, m] : cherd::induced_young_character(lambda, InducedFlag::Trivial))
                dim += mpz_class(m) * mu.syt_count();
            mpz_class expect;
            mpz_fac_ui(expect.get_mpz_t(), n);
            for (int p : lambda.parts()) {
                mpz_class f;
                mpz_fac_ui(f.get_mpz_t(), p);
                expect /= f;
            }
            CHECK(dim == expect);
        }
}

TEST_CASE("charge statistic") {
    using cherd::LaurentPoly;
    CHECK(cherd::charge_kostka(P({4})) == LaurentPoly::one());
    CHECK(cherd::charge_kostka(P({1, 1})) == LaurentPoly::monomial(1));
    CHECK(cherd::charge_kostka(P({2, 1})) ==
          LaurentPoly::monomial(1) + LaurentPoly::monomial(2));
    CHECK_THROWS_AS(cherd::charge_kostka(P({11}), 10), cherd::TooLarge);

    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : cherd::partitions(n))
            CHECK(cherd::charge_kostka(lambda).at_one() == mpq_class(lambda.syt_count()));
}
