#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lat5/numeric.hpp"

namespace lat5 {

// Dense row-major matrix over an exact ring (Int or Rat). Dimensions are
// fixed at construction. Vectors are rows throughout the project: a lattice
// basis is a matrix whose rows are the basis vectors, and a linear map with
// matrix A sends the row vector x to x*A.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        a_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            assert(int(row.size()) == cols_);
            for (long v : row) a_.emplace_back(v);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
    }
    void set_row(int i, const std::vector<T>& v) {
        assert(int(v.size()) == cols_);
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    Mat scaled(const T& c) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    // row_i += c * row_j
    void add_row_multiple(int i, int j, const T& c) {
        if (c == 0) return;
        for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }

    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

    // vertical stack
    static Mat stack(const Mat& top, const Mat& bottom) {
        assert(top.cols_ == bottom.cols_ || top.rows_ == 0 || bottom.rows_ == 0);
        int c = top.rows_ ? top.cols_ : bottom.cols_;
        Mat r(top.rows_ + bottom.rows_, c);
        for (int i = 0; i < top.rows_; ++i)
            for (int j = 0; j < c; ++j) r(i, j) = top(i, j);
        for (int i = 0; i < bottom.rows_; ++i)
            for (int j = 0; j < c; ++j) r(top.rows_ + i, j) = bottom(i, j);
        return r;
    }

    Mat sub_rows(int begin, int end) const {
        Mat r(end - begin, cols_);
        for (int i = begin; i < end; ++i)
            for (int j = 0; j < cols_; ++j) r(i - begin, j) = (*this)(i, j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using MatZ = Mat<Int>;
using MatQ = Mat<Rat>;
using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

MatQ to_rational(const MatZ& m);
// (M, d) with input = M / d, d > 0 minimal
std::pair<MatZ, Int> clear_denominators(const MatQ& m);
MatZ to_integer(const MatQ& m);  // requires all entries integral

VecQ to_rational(const VecZ& v);
VecQ mul_vec(const VecQ& x, const MatQ& m);  // x * m
Rat dot(const VecQ& x, const VecQ& y);

// Row Hermite normal form: u * m = h with u unimodular, h in row echelon
// form with positive pivots and entries above each pivot reduced into
// [0, pivot). Zero rows of h sit at the bottom.
struct HnfResult {
    MatZ h;
    MatZ u;
    int rank = 0;
};
HnfResult hnf(const MatZ& m);

// Smith normal form: u * m * v = s with u, v unimodular and s diagonal,
// s(0,0) | s(1,1) | ..., all diagonal entries nonnegative.
struct SnfResult {
    MatZ s;
    MatZ u;
    MatZ v;
    std::vector<Int> invariants() const;  // nonzero diagonal entries
};
SnfResult snf(const MatZ& m);

Int det(const MatZ& m);  // fraction-free elimination; throws on non-square
Rat det(const MatQ& m);

// Reduced row echelon form over Q (leading entries 1, zeros above and below).
MatQ rref(const MatQ& m, int* rank_out = nullptr);

// Basis of the left kernel {x : x * m = 0}, rows in reduced echelon form.
MatQ kernel(const MatQ& m);

// Saturated basis of the integer left kernel {x in Z^rows : x * m = 0}.
MatZ integer_kernel(const MatZ& m);

// One solution x of x * m = b, or nullopt when the system is inconsistent.
// Dimension mismatch is a usage error and throws.
std::optional<VecQ> solve(const MatQ& m, const VecQ& b);
// Row-wise: X * m = b for each row of b; nullopt if any row is inconsistent.
std::optional<MatQ> solve(const MatQ& m, const MatQ& b);

MatQ inverse(const MatQ& m);  // throws on singular / non-square

int rank(const MatQ& m);

// LLL reduction acting on a Gram matrix: returns unimodular t with
// t * gram * t^T reduced at parameter delta (exact rational Gram-Schmidt).
// Requires gram symmetric positive definite and 1/4 < delta < 1.
MatZ lll_reduce(const MatQ& gram, const Rat& delta = Rat(3, 4));

}  // namespace lat5
