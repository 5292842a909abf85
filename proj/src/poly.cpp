#include "nilharm/poly.hpp"

#include <sstream>

namespace nilharm {

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatVec r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatVec r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    RatVec r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

Rational RatPoly::eval(const Rational& s) const {
    Rational v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * s + c_[i];
    return v;
}

double RatPoly::eval(double s) const {
    double v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * s + c_[i].get_d();
    return v;
}

std::string RatPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[k]);
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

RatMatrix PolyMatrix::eval(const Rational& s) const {
    RatMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(s);
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<RatPoly> PolyMatrix::apply_transposed(const RatVec& v) const {
    std::vector<RatPoly> r(cols_);
    for (int j = 0; j < cols_; ++j) {
        RatPoly acc;
        for (int i = 0; i < rows_; ++i)
            if (v[i] != 0) acc = acc + at(i, j) * RatPoly::constant(v[i]);
        r[j] = acc;
    }
    return r;
}

}  // namespace nilharm
