#pragma once

#include <utility>
#include <vector>

#include "fkd/scalar.hpp"

namespace fkd {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);

// Dense row-major matrix over Q(zeta).
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_columns(int rows, const std::vector<Vec>& cols);
    static Mat from_rows(int cols, const std::vector<Vec>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    Vec apply(const Vec& v) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    Mat conj() const;
    bool is_zero() const;
    bool operator==(const Mat& o) const = default;
    Scalar trace() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(Mat m);
// Columns form a basis of the right kernel; canonical (from the RREF).
Mat kernel(const Mat& m);
// Rows form an RREF basis of the column space (as row vectors).
Mat column_space_rows(const Mat& m);
Mat inverse(const Mat& m);
// Is the matrix nilpotent (all eigenvalues zero)?
bool is_nilpotent(const Mat& m);
Mat power(const Mat& m, unsigned long e);

// Subspace of k^n kept in reduced row echelon form.
class Subspace {
public:
    explicit Subspace(int n = 0) : n_(n) {}
    static Subspace span(int n, const std::vector<Vec>& vs);
    static Subspace whole(int n);

    int ambient() const { return n_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    // reduce v modulo the subspace in place
    void reduce(Vec& v) const;
    bool contains(Vec v) const;
    // add v; true if the dimension grew
    bool insert(Vec v);
    void add(const Subspace& o);
    // coordinates of v (assumed inside) in the RREF basis: v = sum c_i rows_i
    Vec coords(const Vec& v) const;
    // columns not used as pivots, in increasing order
    std::vector<int> free_columns() const;
    Mat as_columns() const;
    bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
// annihilator under the standard pairing
Subspace annihilator(const Subspace& a);

// Column-compressed sparse matrix.
class SparseMat {
public:
    using Entry = std::pair<int, Scalar>;
    SparseMat() = default;
    SparseMat(int rows, int cols) : r_(rows), cols_(std::size_t(cols)) {}

    int rows() const { return r_; }
    int cols() const { return int(cols_.size()); }
    const std::vector<Entry>& column(int j) const { return cols_[j]; }
    std::vector<Entry>& column(int j) { return cols_[j]; }
    // accumulate into (i, j); keeps columns sorted, drops zeros
    void add(int i, int j, const Scalar& v);
    Scalar get(int i, int j) const;
    std::size_t nnz() const;

    Vec apply(const Vec& v) const;
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat scaled(const Scalar& s) const;
    SparseMat transpose() const;
    bool is_zero() const { return nnz() == 0; }
    bool operator==(const SparseMat& o) const { return r_ == o.r_ && cols_ == o.cols_; }

    static SparseMat identity(int n);
    static SparseMat diagonal(const std::vector<Scalar>& d);
    static SparseMat kron(const SparseMat& a, const SparseMat& b);

private:
    int r_ = 0;
    std::vector<std::vector<Entry>> cols_;
};

}  // namespace fkd
