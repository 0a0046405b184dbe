#pragma once

#include <vector>

#include "mcgfilt/bigint.hpp"

namespace mcg {

// Dense arbitrary-precision integer matrix, row-major.
struct MatZ {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    MatZ() = default;
    MatZ(int rows, int cols) : rows(rows), cols(cols), a(size_t(rows) * cols) {}
    static MatZ identity(int n);

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }
    MatZ transpose() const;
    bool is_zero() const;
    friend bool operator==(const MatZ&, const MatZ&) = default;
};

MatZ mat_mul(const MatZ& a, const MatZ& b);

// Exact determinant (Bareiss fraction-free elimination); square input.
Int det(const MatZ& a);

// Row Hermite normal form: u*a = h with u unimodular; h is in row echelon
// form with positive pivots, entries above each pivot reduced to [0, pivot),
// zero rows at the bottom.
struct HnfResult {
    MatZ h;
    MatZ u;
};
HnfResult hnf(const MatZ& a);

int rank(const MatZ& a);

// Smith normal form: u*a*v = d, u and v unimodular, d diagonal with
// d1 | d2 | ... >= 0.
struct SnfResult {
    MatZ u;
    MatZ d;
    MatZ v;
    std::vector<Int> divisors() const;
};
SnfResult snf(const MatZ& a);

// Basis of the saturated integer kernel {v : a*v^T = 0}, as matrix rows.
// Saturated: any integer vector in the rational kernel lies in the row span.
MatZ kernel_basis(const MatZ& a);

// Coordinates of v in the row lattice spanned by the rows of b, or empty if
// v is not in the lattice. b need not be square; rows must be independent.
bool in_row_lattice(const MatZ& b, const std::vector<Int>& v,
                    std::vector<Int>* coords = nullptr);

// Elementary divisors of (row lattice of ambient) / (row lattice of sub).
// ambient rows must be linearly independent; each sub row must lie in the
// ambient lattice (throws std::invalid_argument("not a sublattice")
// otherwise). The list has one entry per ambient basis vector; 0 entries
// mark free quotient factors.
std::vector<Int> lattice_quotient(const MatZ& ambient, const MatZ& sub);

}  // namespace mcg
