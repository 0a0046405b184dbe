#include "mcgfilt/zlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mcg {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int trunc_div(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_swap(MatZ& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void col_swap(MatZ& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void row_neg(MatZ& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// row i -= q * row j
void row_sub(MatZ& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}

// col i -= q * col j
void col_sub(MatZ& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
}

void row_add(MatZ& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) += m.at(j, c);
}

}  // namespace

MatZ MatZ::identity(int n) {
    MatZ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::transpose() const {
    MatZ t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool MatZ::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
    if (a.cols != b.rows) throw std::invalid_argument("dimension mismatch");
    MatZ out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Int det(const MatZ& a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant needs a square matrix");
    int n = a.rows;
    if (n == 0) return 1;
    MatZ m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            row_swap(m, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss division is exact
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

HnfResult hnf(const MatZ& a) {
    MatZ h = a;
    MatZ u = MatZ::identity(a.rows);
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        // gcd-reduce the column below r onto a single positive pivot,
        // always pivoting on the minimal absolute value
        while (true) {
            int piv = -1;
            for (int i = r; i < a.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                if (piv < 0 || cmp(abs(h.at(i, c)), abs(h.at(piv, c))) < 0) piv = i;
            }
            if (piv < 0) break;
            if (piv != r) {
                row_swap(h, r, piv);
                row_swap(u, r, piv);
            }
            bool residue = false;
            for (int i = r + 1; i < a.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = trunc_div(h.at(i, c), h.at(r, c));
                row_sub(h, i, r, q);
                row_sub(u, i, r, q);
                if (h.at(i, c) != 0) residue = true;
            }
            if (!residue) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            row_neg(h, r);
            row_neg(u, r);
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            row_sub(h, i, r, q);
            row_sub(u, i, r, q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

int rank(const MatZ& a) {
    MatZ h = hnf(a).h;
    int r = 0;
    for (int i = 0; i < h.rows; ++i) {
        bool zero = true;
        for (int c = 0; c < h.cols; ++c)
            if (h.at(i, c) != 0) {
                zero = false;
                break;
            }
        if (!zero) ++r;
    }
    return r;
}

std::vector<Int> SnfResult::divisors() const {
    std::vector<Int> out;
    int m = std::min(d.rows, d.cols);
    out.reserve(m);
    for (int i = 0; i < m; ++i) out.push_back(d.at(i, i));
    return out;
}

SnfResult snf(const MatZ& a) {
    MatZ d = a;
    MatZ u = MatZ::identity(a.rows);
    MatZ v = MatZ::identity(a.cols);
    int m = std::min(a.rows, a.cols);
    for (int t = 0; t < m; ++t) {
        bool done = false;
        while (!done) {
            // minimal absolute value pivot over the trailing submatrix
            int pi = -1, pj = -1;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi < 0 || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                done = true;
                break;
            }
            if (pi != t) {
                row_swap(d, t, pi);
                row_swap(u, t, pi);
            }
            if (pj != t) {
                col_swap(d, t, pj);
                col_swap(v, t, pj);
            }
            if (d.at(t, t) < 0) {
                row_neg(d, t);
                row_neg(u, t);
            }
            bool residue = false;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = trunc_div(d.at(i, t), d.at(t, t));
                row_sub(d, i, t, q);
                row_sub(u, i, t, q);
                if (d.at(i, t) != 0) residue = true;
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = trunc_div(d.at(t, j), d.at(t, t));
                col_sub(d, j, t, q);
                col_sub(v, j, t, q);
                if (d.at(t, j) != 0) residue = true;
            }
            if (residue) continue;
            // enforce that the pivot divides the rest of the submatrix
            bool fixed = false;
            for (int i = t + 1; i < d.rows && !fixed; ++i)
                for (int j = t + 1; j < d.cols && !fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_add(d, t, i);
                        row_add(u, t, i);
                        fixed = true;
                    }
            if (!fixed) done = true;
        }
        if (d.at(t, t) == 0) break;
    }
    return {std::move(u), std::move(d), std::move(v)};
}

MatZ kernel_basis(const MatZ& a) {
    MatZ b = a.transpose();
    HnfResult r = hnf(b);
    std::vector<int> zero_rows;
    for (int i = 0; i < r.h.rows; ++i) {
        bool zero = true;
        for (int c = 0; c < r.h.cols; ++c)
            if (r.h.at(i, c) != 0) {
                zero = false;
                break;
            }
        if (zero) zero_rows.push_back(i);
    }
    MatZ out(static_cast<int>(zero_rows.size()), a.cols);
    for (size_t k = 0; k < zero_rows.size(); ++k)
        for (int c = 0; c < a.cols; ++c) out.at(static_cast<int>(k), c) = r.u.at(zero_rows[k], c);
    return out;
}

namespace {

// Solves coeff * h = v for an echelon h (as produced by hnf); returns false
// if v is outside the row lattice.
bool solve_echelon(const MatZ& h, const std::vector<Int>& v,
                   std::vector<Int>& coeff) {
    std::vector<Int> residual = v;
    coeff.assign(h.rows, Int(0));
    for (int r = 0; r < h.rows; ++r) {
        int pc = -1;
        for (int c = 0; c < h.cols; ++c)
            if (h.at(r, c) != 0) {
                pc = c;
                break;
            }
        if (pc < 0) break;
        if (residual[pc] % h.at(r, pc) != 0) return false;
        Int q = residual[pc] / h.at(r, pc);
        coeff[r] = q;
        if (q != 0)
            for (int c = pc; c < h.cols; ++c) residual[c] -= q * h.at(r, c);
    }
    for (const Int& x : residual)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool in_row_lattice(const MatZ& b, const std::vector<Int>& v,
                    std::vector<Int>* coords) {
    if (static_cast<int>(v.size()) != b.cols)
        throw std::invalid_argument("dimension mismatch");
    HnfResult r = hnf(b);
    std::vector<Int> d;
    if (!solve_echelon(r.h, v, d)) return false;
    if (coords) {
        coords->assign(b.rows, Int(0));
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.rows; ++j) (*coords)[j] += d[i] * r.u.at(i, j);
    }
    return true;
}

std::vector<Int> lattice_quotient(const MatZ& ambient, const MatZ& sub) {
    if (ambient.cols != sub.cols && sub.rows != 0)
        throw std::invalid_argument("dimension mismatch");
    HnfResult r = hnf(ambient);
    for (int i = 0; i < r.h.rows; ++i) {
        bool zero = true;
        for (int c = 0; c < r.h.cols; ++c)
            if (r.h.at(i, c) != 0) {
                zero = false;
                break;
            }
        if (zero) throw std::invalid_argument("ambient rows are dependent");
    }
    int m = ambient.rows;
    MatZ coords(sub.rows, m);
    std::vector<Int> d;
    for (int s = 0; s < sub.rows; ++s) {
        std::vector<Int> v(sub.cols);
        for (int c = 0; c < sub.cols; ++c) v[c] = sub.at(s, c);
        if (!solve_echelon(r.h, v, d))
            throw std::invalid_argument("not a sublattice");
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) coords.at(s, j) += d[i] * r.u.at(i, j);
    }
    std::vector<Int> divisors = snf(coords).divisors();
    divisors.resize(m, Int(0));
    return divisors;
}

}  // namespace mcg
