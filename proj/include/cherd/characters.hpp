#pragma once

#include <map>
#include <vector>

#include "cherd/partition.hpp"

namespace cherd {

// Murnaghan-Nakayama character value chi^lambda_rho, exact.
long mn_character(const Partition& lambda, const Partition& rho);

// Full character table of S_n, rows and columns indexed by partitions of n
// in reverse lexicographic order. Orthogonality is checked at build time.
class CharacterTable {
public:
    static CharacterTable build(int n, int max_n = 10);

    int n() const { return n_; }
    int size() const { return static_cast<int>(parts_.size()); }
    const std::vector<Partition>& labels() const { return parts_; }
    int index_of(const Partition& p) const;

    long chi(int lambda_idx, int rho_idx) const { return chi_[lambda_idx][rho_idx]; }
    long chi(const Partition& lambda, const Partition& rho) const;
    const mpz_class& z(int rho_idx) const { return zrho_[rho_idx]; }
    mpz_class class_size(int rho_idx) const;
    mpz_class group_order() const;

    bool orthogonality_first_kind() const;
    bool orthogonality_second_kind() const;

private:
    int n_ = 0;
    std::vector<Partition> parts_;
    std::vector<std::vector<long>> chi_;
    std::vector<mpz_class> zrho_;
};

// Multiplicities of irreducibles in the tensor product S_lambda (x) S_mu.
std::map<Partition, long, RevLexLess> kronecker(const Partition& lambda, const Partition& mu,
                                                const CharacterTable& table);

enum class InducedFlag { Trivial, Sign };

// Decomposition of Ind_{S_lambda}^{S_n} 1 (or sign) into irreducibles.
std::map<Partition, long, RevLexLess> induced_young_character(const Partition& lambda,
                                                              InducedFlag flag);

} // namespace cherd
