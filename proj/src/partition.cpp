#include "cherd/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cherd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    c.resize(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

std::vector<int> Partition::hooks() const {
    std::vector<int> conj = conjugate().parts_;
    std::vector<int> h;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j)
            h.push_back(parts_[i] - j + conj[j] - i - 1);
    std::sort(h.rbegin(), h.rend());
    return h;
}

long Partition::nstat() const {
    long s = 0;
    for (int i = 0; i < length(); ++i) s += static_cast<long>(i) * parts_[i];
    return s;
}

mpz_class Partition::zrho() const {
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    mpz_class z = 1;
    for (const auto& [j, m] : mult) {
        for (int k = 0; k < m; ++k) z *= j;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        z *= f;
    }
    return z;
}

mpz_class Partition::syt_count() const {
    mpz_class nf;
    mpz_fac_ui(nf.get_mpz_t(), n_);
    mpz_class hp = 1;
    for (int h : hooks()) hp *= h;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), nf.get_mpz_t(), hp.get_mpz_t());
    if (r != 0) throw IdentityViolation("hook length formula gave a non-integer");
    return q;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

bool revlex_less(const Partition& a, const Partition& b) {
    // Listing order: lexicographically larger sequences come first.
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Depth-first with parts tried from large to small yields reverse-lex order.
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

// Kostka recursion: peel the last part of the content as a horizontal strip.
long kostka_rec(std::vector<int> shape, std::vector<int> content,
                std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    while (!content.empty() && content.back() == 0) content.pop_back();
    if (content.empty()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, content);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int strip = content.back();
    std::vector<int> rest = content;
    rest.pop_back();
    long total = 0;
    // Choose how many cells to remove from each row; the removed cells must
    // form a horizontal strip (and leave a partition).
    int rows = static_cast<int>(shape.size());
    std::vector<int> take(rows, 0);
    auto place = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining != 0) return;
            std::vector<int> ns = shape;
            for (int i = 0; i < rows; ++i) ns[i] -= take[i];
            for (int i = 0; i + 1 < rows; ++i)
                if (ns[i] < ns[i + 1]) return;
            total += kostka_rec(ns, rest, memo);
            return;
        }
        int below = (row + 1 < rows) ? shape[row + 1] : 0;
        // Horizontal strip condition: the cells removed from row `row` must
        // lie strictly to the right of row+1's remaining cells.
        int maxt = shape[row] - below;
        int lower_bound_next = (row + 1 < rows) ? shape[row + 1] : 0;
        (void)lower_bound_next;
        for (int t = 0; t <= std::min(maxt, remaining); ++t) {
            take[row] = t;
            // The result must still be a partition w.r.t. the row above.
            if (row > 0 && shape[row] - t > shape[row - 1] - take[row - 1]) continue;
            self(self, row + 1, remaining - t);
        }
        take[row] = 0;
    };
    place(place, 0, strip);
    memo[key] = total;
    return total;
}

} // namespace

long kostka_number(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n())
        throw SizeMismatch("kostka_number: |mu| = " + std::to_string(mu.n()) +
                           " but |lambda| = " + std::to_string(lambda.n()));
    std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    return kostka_rec(mu.parts(), lambda.parts(), memo);
}

std::vector<std::vector<int>> standard_tableau_words(const Partition& shape) {
    int n = shape.n();
    int rows = shape.length();
    std::vector<std::vector<int>> tab(rows);
    for (int i = 0; i < rows; ++i) tab[i].assign(shape.part(i), 0);
    std::vector<std::vector<int>> words;
    std::vector<int> fill(rows, 0);  // cells used per row
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            std::vector<int> w;
            for (int i = rows - 1; i >= 0; --i)
                for (int j = 0; j < shape.part(i); ++j) w.push_back(tab[i][j]);
            words.push_back(std::move(w));
            return;
        }
        for (int i = 0; i < rows; ++i) {
            int j = fill[i];
            if (j >= shape.part(i)) continue;
            if (i > 0 && fill[i - 1] <= j) continue;  // column-strict placement
            tab[i][j] = next;
            ++fill[i];
            self(self, next + 1);
            --fill[i];
        }
    };
    rec(rec, 1);
    return words;
}

int charge_of_word(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (word[i] < 1 || word[i] > n || pos[word[i]] != -1)
            throw std::invalid_argument("charge_of_word expects a permutation word");
        pos[word[i]] = i;
    }
    // index(1) = 0; index(r+1) = index(r) if r+1 sits to the right of r,
    // else index(r) + 1. Charge is the sum of indices.
    int charge = 0, index = 0;
    for (int r = 2; r <= n; ++r) {
        if (pos[r] < pos[r - 1]) ++index;
        charge += index;
    }
    return charge;
}

LaurentPoly charge_kostka(const Partition& lambda, int max_n) {
    if (lambda.n() > max_n)
        throw TooLarge("charge_kostka: n = " + std::to_string(lambda.n()) +
                       " exceeds the configured maximum " + std::to_string(max_n));
    std::vector<std::pair<long, mpq_class>> terms;
    for (const auto& w : standard_tableau_words(lambda))
        terms.emplace_back(charge_of_word(w), 1);
    return LaurentPoly::from_terms(terms);
}

} // namespace cherd
