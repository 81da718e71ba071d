// Arbitrary-precision integer matrices, Smith normal form, and exact
// linear algebra over Z. Everything downstream (abelian group arithmetic,
// cohomology class decisions) reduces to the routines in this file.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace iyb {

using Int = mpz_class;

// Dense row-major integer matrix. Zero-sized dimensions are allowed.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMat(int rows, int cols, std::vector<Int> entries);

    static IntMat identity(int n);
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
    bool operator!=(const IntMat& rhs) const { return !(*this == rhs); }
    bool operator<(const IntMat& rhs) const;

    std::vector<Int> mul_vec(const std::vector<Int>& v) const;
    std::vector<Int> col(int j) const;
    IntMat transpose() const;
    bool is_zero() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& factor);  // row dst += factor * row src
    void add_col_multiple(int dst, int src, const Int& factor);
    void negate_row(int i);

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
    IntMat u, d, v;
    std::vector<Int> diagonal() const;
};

// Deterministic: pivot is the smallest absolute nonzero entry of the
// working submatrix, ties broken row-major.
SmithForm smith_normal_form(const IntMat& a);

// Bareiss fraction-free determinant; matrix must be square.
Int determinant(const IntMat& a);

// Canonical basis of the lattice spanned by the columns of `gens`
// (column-style Hermite form: row-echelon pivots positive, entries left
// of a pivot reduced into [0, pivot)). Equal lattices yield equal output.
IntMat lattice_canonical_basis(const IntMat& gens);

// One linear Diophantine / modular system A x = b, row i read modulo
// moduli[i] (0 means an equation over Z). Unknowns are integers.
struct ModularSolution {
    std::vector<Int> particular;          // free parameters of the SNF solve set to 0
    std::vector<std::vector<Int>> homogeneous;  // canonical lattice basis of { x : A x = 0 }
};

std::optional<ModularSolution> solve_modular(const IntMat& a, const std::vector<Int>& b,
                                             const std::vector<Int>& moduli);

// Exact solver B X = C reusing one SNF of B across many right-hand sides.
class ExactSolver {
public:
    explicit ExactSolver(const IntMat& b);
    // Unique integer solution of B x = rhs, or nullopt if none exists.
    std::optional<std::vector<Int>> solve(const std::vector<Int>& rhs) const;

private:
    SmithForm snf_;
    int rows_, cols_;
};

Int floor_div(const Int& a, const Int& b);
Int mod_reduce(const Int& a, const Int& m);  // representative in [0, m)

}  // namespace iyb
