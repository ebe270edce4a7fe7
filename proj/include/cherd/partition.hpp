#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cherd/errors.hpp"
#include "cherd/laurent.hpp"

namespace cherd {

// Integer partition: weakly decreasing positive parts. The empty partition
// (n = 0) is legal and is the base case of every recursion here.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-indexed

    Partition conjugate() const;
    // Hook lengths of all cells, sorted decreasing.
    std::vector<int> hooks() const;
    // n(lambda) = sum_i (i-1) lambda_i
    long nstat() const;
    // z_rho = prod_j j^{m_j} m_j!  (centralizer order of cycle type rho)
    mpz_class zrho() const;
    // Number of standard Young tableaux, by the hook length formula.
    mpz_class syt_count() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string str() const;  // "(3,1)"

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Listing order used everywhere (tables, JSON): reverse lexicographic,
// i.e. (n) first, (1^n) last.
bool revlex_less(const Partition& a, const Partition& b);
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const { return revlex_less(a, b); }
};

// All partitions of n in reverse lexicographic order, each exactly once.
std::vector<Partition> partitions(int n);

// Number of semistandard tableaux of shape mu and content lambda.
long kostka_number(const Partition& mu, const Partition& lambda);

// Reading words of all standard Young tableaux of the given shape
// (rows read left to right, bottom row first).
std::vector<std::vector<int>> standard_tableau_words(const Partition& shape);

// Lascoux-Schutzenberger charge of a word with content (1^n).
int charge_of_word(const std::vector<int>& word);

// K_{lambda,(1^n)}(0,t) as the charge generating function over standard
// tableaux of shape lambda.
LaurentPoly charge_kostka(const Partition& lambda, int max_n = 10);

} // namespace cherd
