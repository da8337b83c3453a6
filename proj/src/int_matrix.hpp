#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qch {

using Int = mpz_class;
using Rat = mpq_class;

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// Dense matrix of arbitrary-precision integers, row-major. Values are
// immutable in spirit: algorithms copy, then work in place on the copy.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, int cols_hint = -1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Int> row(int i) const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }
    bool is_zero() const;

    void swap_rows(int i, int j);
    void negate_row(int i);
    void add_row_multiple(int dst, int src, const Int& factor);  // row_dst += factor * row_src
    void swap_cols(int i, int j);
    void negate_col(int j);
    void add_col_multiple(int dst, int src, const Int& factor);

    std::string str() const;  // for diagnostics

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMatrix h;  // row Hermite normal form: positive pivots, entries above a pivot in [0, pivot)
    IntMatrix u;  // unimodular, u * m = h
};
HnfResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
    IntMatrix u, d, v;       // u * m * v = d, u and v unimodular, d diagonal
    IntMatrix v_inv;         // exact inverse of v
    std::vector<Int> divisors;  // diagonal of d, nonnegative, d_i | d_{i+1}, zeros trail
};
SnfResult smith_normal_form(const IntMatrix& m);

Int determinant(const IntMatrix& m);  // square input; exact Bareiss elimination
int rank(const IntMatrix& m);

}  // namespace qch
