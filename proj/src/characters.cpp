#include "cherd/characters.hpp"

#include <algorithm>
#include <map>

namespace cherd {

namespace {

// Beta-set of a partition padded to `len` rows: {lambda_i + (len - i)}.
std::vector<int> beta_set(const Partition& p, int len) {
    std::vector<int> b(len);
    for (int i = 0; i < len; ++i) b[i] = p.part(i) + (len - 1 - i);
    return b;
}

Partition partition_from_beta(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    int len = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = b[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
        else if (p < 0) throw std::logic_error("invalid beta set");
    }
    return Partition(std::move(parts));
}

using MnKey = std::pair<std::vector<int>, int>;  // (partition parts, #rho parts consumed)

// chi^lambda on the suffix rho[k..]: strip a border strip of length rho[k].
// Strips are removed for the largest remaining part first (rho is sorted
// decreasing), which keeps the memo small.
long mn_rec(const Partition& lambda, const std::vector<int>& rho, int k,
                 std::map<MnKey, long>& memo) {
    if (lambda.n() == 0) return 1;
    MnKey key{lambda.parts(), k};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = rho[k];
    int len = lambda.length();
    std::vector<int> beta = beta_set(lambda, len);
    long total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // Height of the strip = number of beta entries strictly between.
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = target;
        long sub = mn_rec(partition_from_beta(nb), rho, k + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

} // namespace

long mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.n() != rho.n())
        throw SizeMismatch("mn_character: |lambda| != |rho|");
    std::map<MnKey, long> memo;
    return mn_rec(lambda, rho.parts(), 0, memo);
}

CharacterTable CharacterTable::build(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("character table needs n >= 1");
    if (n > max_n)
        throw TooLarge("character_table: n = " + std::to_string(n) +
                       " exceeds the configured maximum " + std::to_string(max_n));
    CharacterTable t;
    t.n_ = n;
    t.parts_ = partitions(n);
    int k = t.size();
    t.zrho_.reserve(k);
    for (const Partition& rho : t.parts_) t.zrho_.push_back(rho.zrho());
    t.chi_.assign(k, std::vector<long>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            // The memo key is (shape, #parts consumed), so it is only valid
            // within a single cycle type.
            std::map<MnKey, long> memo;
            t.chi_[i][j] = mn_rec(t.parts_[i], t.parts_[j].parts(), 0, memo);
        }
    if (!t.orthogonality_first_kind() || !t.orthogonality_second_kind())
        throw IdentityViolation("character table fails orthogonality for n = " +
                                std::to_string(n));
    return t;
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), p, revlex_less);
    if (it == parts_.end() || !(*it == p))
        throw std::invalid_argument("partition " + p.str() + " is not a label of this table");
    return static_cast<int>(it - parts_.begin());
}

long CharacterTable::chi(const Partition& lambda, const Partition& rho) const {
    return chi_[index_of(lambda)][index_of(rho)];
}

mpz_class CharacterTable::group_order() const {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n_);
    return f;
}

mpz_class CharacterTable::class_size(int rho_idx) const {
    return group_order() / zrho_[rho_idx];
}

bool CharacterTable::orthogonality_first_kind() const {
    int k = size();
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            mpq_class s = 0;
            for (int r = 0; r < k; ++r)
                s += exact_ratio(mpz_class(chi_[a][r]) * chi_[b][r], zrho_[r]);
            s.canonicalize();
            if (s != (a == b ? 1 : 0)) return false;
        }
    return true;
}

bool CharacterTable::orthogonality_second_kind() const {
    int k = size();
    for (int r = 0; r < k; ++r)
        for (int s = r; s < k; ++s) {
            mpz_class acc = 0;
            for (int a = 0; a < k; ++a)
                acc += mpz_class(chi_[a][r]) * chi_[a][s];
            if (acc != (r == s ? zrho_[r] : 0)) return false;
        }
    return true;
}

std::map<Partition, long, RevLexLess> kronecker(const Partition& lambda, const Partition& mu,
                                                const CharacterTable& table) {
    if (lambda.n() != mu.n())
        throw SizeMismatch("kronecker: |lambda| != |mu|");
    int li = table.index_of(lambda), mi = table.index_of(mu);
    std::map<Partition, long, RevLexLess> out;
    for (int ni = 0; ni < table.size(); ++ni) {
        mpq_class s = 0;
        for (int r = 0; r < table.size(); ++r)
            s += exact_ratio(mpz_class(table.chi(li, r)) * table.chi(mi, r) * table.chi(ni, r),
                            table.z(r));
        s.canonicalize();
        if (s.get_den() != 1)
            throw IdentityViolation("kronecker multiplicity is not an integer");
        long m = static_cast<long>(s.get_num().get_si());
        if (m < 0) throw IdentityViolation("negative kronecker multiplicity");
        if (m != 0) out.emplace(table.labels()[ni], m);
    }
    return out;
}

std::map<Partition, long, RevLexLess> induced_young_character(const Partition& lambda,
                                                              InducedFlag flag) {
    // Ind_{S_lambda} 1 decomposes with Kostka multiplicities (Young's rule);
    // twisting by sign conjugates the labels.
    std::map<Partition, long, RevLexLess> out;
    for (const Partition& mu : partitions(lambda.n())) {
        long m = (flag == InducedFlag::Trivial) ? kostka_number(mu, lambda)
                                                : kostka_number(mu.conjugate(), lambda);
        if (m != 0) out.emplace(mu, m);
    }
    return out;
}

} // namespace cherd
