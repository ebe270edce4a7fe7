#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "cherd/errors.hpp"

namespace cherd {

class CycloNum;

// The cyclotomic field Q(zeta_m), elements represented modulo Phi_m.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    static std::shared_ptr<const CycloField> make(int m);

    int m() const { return m_; }
    int degree() const { return deg_; }
    const std::vector<mpq_class>& phi() const { return phi_; }

    CycloNum zero() const;
    CycloNum one() const;
    CycloNum rational(const mpq_class& q) const;
    CycloNum zeta(long k) const;  // zeta_m^k, any integer k

    // Reduce a coefficient vector of arbitrary length modulo Phi_m.
    std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;

private:
    CycloField() = default;
    int m_ = 1, deg_ = 1;
    std::vector<mpq_class> phi_;                 // monic, size deg_+1
    std::vector<std::vector<mpq_class>> xpow_;   // x^k mod Phi for deg_ <= k < 2*deg_
};

// An element of Q(zeta_m). Arithmetic is exact field arithmetic.
class CycloNum {
public:
    CycloNum() = default;  // unusable until assigned from a field
    CycloNum(std::shared_ptr<const CycloField> field, std::vector<mpq_class> coeffs);

    const CycloField& field() const { return *field_; }
    const std::shared_ptr<const CycloField>& field_ptr() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class to_rational() const;  // throws if the element is irrational

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator*(const mpq_class& q) const;
    CycloNum inv() const;  // throws std::domain_error on zero
    CycloNum operator/(const CycloNum& o) const { return *this * o.inv(); }

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::shared_ptr<const CycloField> field_;
    std::vector<mpq_class> c_;  // size = field degree
};

// Dense matrix over a cyclotomic field. Sizes here stay tiny (<= ~40),
// so everything is straightforward exact Gaussian elimination.
class CMat {
public:
    CMat() = default;
    CMat(std::shared_ptr<const CycloField> field, int rows, int cols);
    static CMat identity(std::shared_ptr<const CycloField> field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CycloNum& at(int i, int j) { return a_[i * cols_ + j]; }
    const CycloNum& at(int i, int j) const { return a_[i * cols_ + j]; }

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(const CycloNum& s) const;
    CMat operator*(const mpq_class& s) const;
    bool operator==(const CMat& o) const;
    bool operator!=(const CMat& o) const { return !(*this == o); }

    CMat transpose() const;
    CycloNum trace() const;
    bool is_zero() const;
    CMat pow(long e) const;  // square matrices, e >= 0

    std::shared_ptr<const CycloField> field_ptr() const { return field_; }

private:
    std::shared_ptr<const CycloField> field_;
    int rows_ = 0, cols_ = 0;
    std::vector<CycloNum> a_;
};

// Row-reduced basis of a subspace of row vectors.
struct RowBasis {
    CMat rows;                // in reduced row echelon form, no zero rows
    std::vector<int> pivots;  // pivot column per row, strictly increasing
    int dim() const { return rows.rows(); }
    int ambient() const { return rows.cols(); }
};

RowBasis rref(const CMat& m);

// Basis of { v : A v^T = 0 } as rows.
CMat kernel_basis(const CMat& a);

// Matrix E with ker(E) = rowspace(basis): E(v) = v - sum_i v[p_i] * row_i.
CMat residual_map(const RowBasis& basis, std::shared_ptr<const CycloField> field, int dim);

// Rowspace intersection.
RowBasis intersect_rowspaces(const RowBasis& a, const RowBasis& b);

bool in_rowspace(const RowBasis& basis, const CMat& row_vector);

// Stack b below a (same column count).
CMat vstack(const CMat& a, const CMat& b);

} // namespace cherd
