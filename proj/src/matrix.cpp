#include "nilharm/matrix.hpp"

#include <sstream>

namespace nilharm {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    size_t slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw ParseError("bad rational literal '" + s + "'");
        size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) throw ParseError("bad rational literal '" + s + "'");
        for (; k < t.size(); ++k)
            if (!isdigit(static_cast<unsigned char>(t[k])))
                throw ParseError("bad rational literal '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(Int(num), d);
    q.canonicalize();
    return q;
}

std::string vec_str(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(v[i]);
    }
    os << ")";
    return os.str();
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : e_)
        if (!is_integer(x)) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    RatVec r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

RatVec RatMatrix::apply_transposed(const RatVec& v) const {
    RatVec r(cols_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[j] += at(i, j) * v[i];
    }
    return r;
}

RatMatrix RatMatrix::pow(int k) const {
    RatMatrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

RatMatrix RatMatrix::submatrix(int r0, int c0, int nr, int nc) const {
    RatMatrix s(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) s.at(i, j) = at(r0 + i, c0 + j);
    return s;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rat_str(at(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        Rational inv = Rational(1) / a.at(r, c);
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots), r};
}

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(m.cols(), Rational(0));
        v[fc] = 1;
        for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
            v[rr.pivot_cols[pi]] = -rr.reduced.at(int(pi), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) throw Error("matrix is singular");
    return rr.reduced.submatrix(0, n, n, n);
}

RatMatrix from_rows(const std::vector<RatVec>& rows, int cols) {
    RatMatrix m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
    return m;
}

}  // namespace nilharm
