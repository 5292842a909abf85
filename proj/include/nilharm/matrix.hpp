#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilharm/rational.hpp"

namespace nilharm {

// Dense row-major matrix with exact rational entries.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Rational(0)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_integral() const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& s) const;

    RatVec apply(const RatVec& v) const;            // M v
    RatVec apply_transposed(const RatVec& v) const; // M^T v

    RatMatrix pow(int k) const;
    RatMatrix submatrix(int r0, int c0, int nr, int nc) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

struct RrefResult {
    RatMatrix reduced;
    std::vector<int> pivot_cols;
    int rank;
};

// Exact reduced row-echelon form (Gauss-Jordan with leading-1 normalization).
RrefResult rref(const RatMatrix& m);

// Basis of the right null space; one vector per free column, with a 1 in the
// free coordinate and 0 in every other free coordinate. Ordered by free column.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Inverse of a square invertible matrix; throws Error if singular.
RatMatrix inverse(const RatMatrix& m);

RatMatrix from_rows(const std::vector<RatVec>& rows, int cols);

}  // namespace nilharm
