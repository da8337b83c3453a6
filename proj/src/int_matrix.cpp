#include "int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qch {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, int cols_hint) {
    int cols = cols_hint;
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: multiply shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

HnfResult hermite_normal_form(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int pivot_row = 0;
    for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
        // Euclid on the column until at most the pivot entry is nonzero.
        while (true) {
            int best = -1;
            for (int r = pivot_row; r < h.rows(); ++r) {
                if (h.at(r, col) == 0) continue;
                if (best < 0 || mpz_cmpabs(h.at(r, col).get_mpz_t(), h.at(best, col).get_mpz_t()) < 0)
                    best = r;
            }
            if (best < 0) break;
            if (best != pivot_row) {
                h.swap_rows(best, pivot_row);
                u.swap_rows(best, pivot_row);
            }
            bool clean = true;
            for (int r = pivot_row + 1; r < h.rows(); ++r) {
                if (h.at(r, col) == 0) continue;
                Int q = floor_div(h.at(r, col), h.at(pivot_row, col));
                h.add_row_multiple(r, pivot_row, -q);
                u.add_row_multiple(r, pivot_row, -q);
                if (h.at(r, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(pivot_row, col) == 0) continue;  // no pivot in this column
        if (h.at(pivot_row, col) < 0) {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for (int r = 0; r < pivot_row; ++r) {
            Int q = floor_div(h.at(r, col), h.at(pivot_row, col));
            h.add_row_multiple(r, pivot_row, -q);
            u.add_row_multiple(r, pivot_row, -q);
        }
        ++pivot_row;
    }
    return res;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res;
    res.d = m;
    res.u = IntMatrix::identity(m.rows());
    res.v = IntMatrix::identity(m.cols());
    res.v_inv = IntMatrix::identity(m.cols());
    IntMatrix& d = res.d;

    auto col_swap = [&](int i, int j) {
        d.swap_cols(i, j);
        res.v.swap_cols(i, j);
        res.v_inv.swap_rows(i, j);
    };
    auto col_add = [&](int dst, int src, const Int& f) {
        d.add_col_multiple(dst, src, f);
        res.v.add_col_multiple(dst, src, f);
        res.v_inv.add_row_multiple(src, dst, -f);
    };

    const int nmin = std::min(m.rows(), m.cols());
    for (int t = 0; t < nmin; ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < d.rows(); ++i)
            for (int j = t; j < d.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // remaining block is zero
        if (pi != t) {
            d.swap_rows(pi, t);
            res.u.swap_rows(pi, t);
        }
        if (pj != t) col_swap(pj, t);

        while (true) {
            bool dirty = false;
            for (int r = t + 1; r < d.rows(); ++r) {
                if (d.at(r, t) == 0) continue;
                Int q = floor_div(d.at(r, t), d.at(t, t));
                d.add_row_multiple(r, t, -q);
                res.u.add_row_multiple(r, t, -q);
                if (d.at(r, t) != 0) {
                    d.swap_rows(r, t);  // remainder is strictly smaller, re-pivot
                    res.u.swap_rows(r, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int c = t + 1; c < d.cols(); ++c) {
                if (d.at(t, c) == 0) continue;
                Int q = floor_div(d.at(t, c), d.at(t, t));
                col_add(c, t, -q);
                if (d.at(t, c) != 0) {
                    col_swap(c, t);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot must divide every remaining entry for the divisor chain
            int bi = -1;
            for (int i = t + 1; i < d.rows() && bi < 0; ++i)
                for (int j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            d.add_row_multiple(t, bi, 1);
            res.u.add_row_multiple(t, bi, 1);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            res.u.negate_row(t);
        }
    }
    res.divisors.resize(nmin);
    for (int t = 0; t < nmin; ++t) res.divisors[t] = d.at(t, t);
    return res;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int rank(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    int r = 0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) {
                ++r;
                break;
            }
    return r;
}

}  // namespace qch
