/**
 * Dense and sparse matrices over an exact field, with the linear algebra the
 * cohomology computations need: rank, nullspace bases, and linear solves.
 *
 * Determinism contract: elimination pivots on the first row with a nonzero
 * entry in the leftmost unprocessed column, and solves set all free variables
 * to zero, so identical inputs give identical outputs on every run.
 */

#ifndef CATDEF_MATRIX_HPP
#define CATDEF_MATRIX_HPP

#include <optional>
#include <vector>

#include "catdef/field.hpp"

namespace catdef {

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(const Field& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix mul(const Field& f, const Matrix& o) const;
    /** Column-vector action y = M x, with |x| = cols and |y| = rows. */
    Vec apply(const Field& f, const Vec& x) const;
    bool is_zero(const Field& f) const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/** Rank over the field by exact Gaussian elimination. */
std::size_t rank(const Field& f, const Matrix& m);

/**
 * Some x with M x = b, or nothing when the system is inconsistent.  Free
 * variables are set to zero; pivoting follows first-nonzero column order.
 */
std::optional<Vec> solve_linear(const Field& f, const Matrix& m, const Vec& b);

/** Exact basis of the null space; size is cols − rank. */
std::vector<Vec> kernel_basis(const Field& f, const Matrix& m);

/**
 * Sparse matrix held as coordinate triplets.  Linear maps between cochain
 * groups are assembled in this form; only the degrees that feed a rank or a
 * solve are densified.
 */
class SparseMatrix {
public:
    struct Triplet {
        std::size_t r, c;
        Scalar v;
    };

    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Triplet>& triplets() const { return t_; }

    void add(const Field& f, std::size_t r, std::size_t c, const Scalar& v);
    /** Collapses duplicate coordinates and drops zeros. */
    void compress(const Field& f);

    SparseMatrix mul(const Field& f, const SparseMatrix& o) const;
    Vec apply(const Field& f, const Vec& x) const;
    bool is_zero(const Field& f) const;
    Matrix dense(const Field& f) const;

private:
    std::size_t rows_, cols_;
    std::vector<Triplet> t_;
};

} // namespace catdef

#endif
