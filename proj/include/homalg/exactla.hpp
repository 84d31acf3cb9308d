#pragma once

/* Exact dense linear algebra over prime fields F_p (machine-word residues,
 * p < 2^16) and over the integers (arbitrary precision, Smith normal form).
 * Computational substrate for every other module. All values are immutable
 * in spirit: operations are pure functions returning fresh objects. */

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "homalg/errors.hpp"

namespace exactla {

using Fp = std::uint32_t;
using FpVec = std::vector<Fp>;

bool is_prime(std::uint32_t n);

class FpMatrix {
  public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, FpVec entries);

    static FpMatrix identity(std::uint32_t p, std::size_t n);
    static FpMatrix from_rows(std::uint32_t p, const std::vector<FpVec>& rows);
    static FpMatrix from_cols(std::uint32_t p, const std::vector<FpVec>& cols);

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fp at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Fp v) { e_[i * cols_ + j] = v % p_; }

    const FpVec& entries() const { return e_; }

    FpVec row(std::size_t i) const;
    FpVec col(std::size_t j) const;

    FpMatrix transpose() const;
    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix scale(Fp c) const;
    FpVec apply(const FpVec& v) const;  // matrix * column vector

    bool operator==(const FpMatrix& rhs) const = default;

    bool is_zero() const;
    bool is_identity() const;

    // Columns of `cols` appended on the right.
    FpMatrix hstack(const FpMatrix& right) const;
    FpMatrix vstack(const FpMatrix& below) const;

  private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    FpVec e_;
};

struct RrefResult {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/* Reduced row-echelon form with deterministic first-nonzero pivoting. */
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/* Basis of the right null space, one column vector per basis element;
 * size == cols - rank. Deterministic (free columns in increasing order). */
std::vector<FpVec> kernel_basis(const FpMatrix& m);

/* Particular solution x of m*x = b, or nullopt when b is outside the
 * column space. Dimension mismatch is a usage error. */
std::optional<FpVec> solve(const FpMatrix& m, const FpVec& b);

/* Solves m*X = B column by column; nullopt if any column fails. */
std::optional<FpMatrix> solve_matrix(const FpMatrix& m, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

Fp det(const FpMatrix& m);

/* Row-echelon basis of the column span of m (pivoted, deterministic). */
FpMatrix column_space_basis(const FpMatrix& m);

/* Prepared solver for repeated solves against a fixed matrix. */
class FpSolver {
  public:
    explicit FpSolver(FpMatrix m);
    std::optional<FpVec> solve(const FpVec& b) const;
    std::size_t rank() const { return r_.rank; }

  private:
    FpMatrix orig_;
    RrefResult r_;
    FpMatrix transform_;  // transform_ * orig == r_.reduced
};

/* A subspace of F_p^n held as a reduced row-echelon row basis.
 * Supports reduction mod the subspace and membership tests. */
class FpSubspace {
  public:
    FpSubspace(std::uint32_t p, std::size_t ambient);
    /* Span of the given vectors. */
    FpSubspace(std::uint32_t p, std::size_t ambient, const std::vector<FpVec>& gens);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return n_; }
    std::uint32_t p() const { return p_; }

    /* Residue of v modulo the subspace (zero iff v is a member). */
    FpVec reduce(const FpVec& v) const;
    bool contains(const FpVec& v) const;
    /* Adds v to the span; returns true if the dimension grew. */
    bool add(const FpVec& v);

    const std::vector<FpVec>& row_basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /* Indices 0..n-1 that are not pivot columns; coordinates of the
     * quotient space F_p^n / subspace. */
    std::vector<std::size_t> complement_coords() const;

  private:
    std::uint32_t p_;
    std::size_t n_;
    std::vector<FpVec> basis_;          // reduced echelon rows
    std::vector<std::size_t> pivots_;   // pivot column of each row
};

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form
// ---------------------------------------------------------------------------

using Z = mpz_class;
using ZVec = std::vector<Z>;

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Z> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const ZVec& d);
    static IntMatrix from_rows(const std::vector<ZVec>& rows);
    static IntMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Z& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Z& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    IntMatrix hstack(const IntMatrix& right) const;

    bool is_zero() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Z> e_;
};

struct SnfResult {
    IntMatrix U, D, V;          // U*m*V == D, U and V unimodular
    ZVec invariant_factors;     // nonzero diagonal entries, d1 | d2 | ...
    std::size_t rank = 0;       // number of nonzero invariant factors
};

/* Smith normal form with unimodular certificates. Diagonal entries are
 * normalized nonnegative and divisibility-chained. */
SnfResult smith_normal_form(const IntMatrix& m);

Z int_det(const IntMatrix& m);  // square matrices, Bareiss fraction-free

std::size_t int_rank(const IntMatrix& m);

/* Particular integer solution of m*x = b, or nullopt. */
std::optional<ZVec> int_solve(const IntMatrix& m, const ZVec& b);

/* A basis (as columns) of the column span of m, via SNF. */
IntMatrix int_column_span_basis(const IntMatrix& m);

/* A basis (as columns) of the integer kernel {x : m*x = 0}. */
IntMatrix int_kernel_basis(const IntMatrix& m);

/* Invariant factors (>1) and free rank of coker(m : Z^cols -> Z^rows). */
struct ZCokernel {
    ZVec torsion;            // invariant factors > 1, divisibility-chained
    std::size_t free_rank = 0;
};
ZCokernel int_cokernel(const IntMatrix& m);

}  // namespace exactla
