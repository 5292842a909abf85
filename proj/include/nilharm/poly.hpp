#pragma once

#include <vector>

#include "nilharm/matrix.hpp"
#include "nilharm/rational.hpp"

namespace nilharm {

// Univariate polynomial over the rationals, dense by degree.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rational& v) { return RatPoly(RatVec{v}); }

    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int k) const { return k < int(c_.size()) ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& s) const;
    double eval(double s) const;

    std::string str(const std::string& var = "s") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    RatVec c_;
};

// Matrix with univariate polynomial entries; entry degrees stay below the
// nilpotency index of the generating matrix.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatPoly& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const RatPoly& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    RatMatrix eval(const Rational& s) const;
    PolyMatrix transpose() const;

    // Applies the transposed matrix to a constant vector: result_j = sum_i e(i,j) v_i.
    std::vector<RatPoly> apply_transposed(const RatVec& v) const;

private:
    int rows_, cols_;
    std::vector<RatPoly> e_;
};

}  // namespace nilharm
