#include "catdef/matrix.hpp"

#include <algorithm>
#include <map>

namespace catdef {

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = (i == j) ? f.one() : f.zero();
    return m;
}

Matrix Matrix::mul(const Field& f, const Matrix& o) const {
    if (cols_ != o.rows_)
        throw error("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(aik, o.at(k, j)));
        }
    return r;
}

Vec Matrix::apply(const Field& f, const Vec& x) const {
    if (x.size() != cols_)
        throw error("matrix-vector dimension mismatch");
    Vec y(rows_, f.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!f.is_zero(at(i, j)) && !f.is_zero(x[j]))
                y[i] = f.add(y[i], f.mul(at(i, j), x[j]));
    return y;
}

bool Matrix::is_zero(const Field& f) const {
    for (const auto& s : a_)
        if (!f.is_zero(s)) return false;
    return true;
}

namespace {

// Row-echelon elimination shared by rank/solve/kernel.  Returns the pivot
// column of each pivot row, in order.  `m` is modified in place.
std::vector<std::size_t> echelon(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && f.is_zero(m.at(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        Scalar piv_inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = f.mul(m.at(row, j), piv_inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Field& f, const Matrix& m) {
    Matrix work = m;
    return echelon(f, work).size();
}

std::optional<Vec> solve_linear(const Field& f, const Matrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw error("solve_linear: right-hand side length mismatch");
    // Eliminate the augmented matrix [M | b].
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = echelon(f, aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt; // a pivot in the b-column: inconsistent
    Vec x(m.cols(), f.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Field& f, const Matrix& m) {
    Matrix work = m;
    auto pivots = echelon(f, work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols(), f.zero());
        v[free_col] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(work.at(r, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

void SparseMatrix::add(const Field& f, std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols_)
        throw error("sparse entry out of range");
    if (!f.is_zero(v))
        t_.push_back({r, c, v});
}

void SparseMatrix::compress(const Field& f) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (const auto& t : t_) {
        auto key = std::make_pair(t.r, t.c);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, t.v);
        else
            it->second = f.add(it->second, t.v);
    }
    t_.clear();
    for (const auto& [key, v] : acc)
        if (!f.is_zero(v))
            t_.push_back({key.first, key.second, v});
}

SparseMatrix SparseMatrix::mul(const Field& f, const SparseMatrix& o) const {
    if (cols_ != o.rows_)
        throw error("sparse product dimension mismatch");
    // Index o by row, then accumulate this*o.
    std::map<std::size_t, std::vector<const Triplet*>> by_row;
    for (const auto& t : o.t_)
        by_row[t.r].push_back(&t);
    SparseMatrix r(rows_, o.cols_);
    for (const auto& a : t_) {
        auto it = by_row.find(a.c);
        if (it == by_row.end()) continue;
        for (const Triplet* b : it->second)
            r.t_.push_back({a.r, b->c, f.mul(a.v, b->v)});
    }
    r.compress(f);
    return r;
}

Vec SparseMatrix::apply(const Field& f, const Vec& x) const {
    if (x.size() != cols_)
        throw error("sparse matrix-vector dimension mismatch");
    Vec y(rows_, f.zero());
    for (const auto& t : t_)
        if (!f.is_zero(x[t.c]))
            y[t.r] = f.add(y[t.r], f.mul(t.v, x[t.c]));
    return y;
}

bool SparseMatrix::is_zero(const Field& f) const {
    for (const auto& t : t_)
        if (!f.is_zero(t.v)) return false;
    return true;
}

Matrix SparseMatrix::dense(const Field& f) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = f.zero();
    for (const auto& t : t_)
        m.at(t.r, t.c) = f.add(m.at(t.r, t.c), t.v);
    return m;
}

} // namespace catdef
