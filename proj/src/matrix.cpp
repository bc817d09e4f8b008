#include "codo/matrix.hpp"

#include "codo/errors.hpp"

namespace codo {

MatrixS::MatrixS(int n, RingTag tag) : n_(n), tag_(tag) {
    CoeffElem zero = tag == RingTag::Polynomial
                         ? CoeffElem(XPolynomial())
                         : CoeffElem(TruncatedLaurent::zero());
    e_.assign(static_cast<size_t>(n) * n, zero);
}

size_t MatrixS::idx(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw SizeMismatch("MatrixS: index out of range");
    return static_cast<size_t>(i) * n_ + j;
}

MatrixS MatrixS::identity(int n, RingTag tag) {
    MatrixS m(n, tag);
    for (int i = 0; i < n; ++i)
        m.set(i, i, CoeffElem::constant(tag, AffineForm(Scalar(1))));
    return m;
}

MatrixS MatrixS::diag(CoeffElem a, CoeffElem b) {
    if (a.tag() != b.tag())
        throw MixedRing("MatrixS: diagonal entries from different rings");
    MatrixS m(2, a.tag());
    m.set(0, 0, std::move(a));
    m.set(1, 1, std::move(b));
    return m;
}

void MatrixS::set(int i, int j, CoeffElem v) {
    if (v.tag() != tag_)
        throw MixedRing("MatrixS: entry ring does not match matrix ring");
    e_[idx(i, j)] = std::move(v);
}

bool MatrixS::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero())
            return false;
    return true;
}

bool MatrixS::has_unknowns() const {
    for (const auto& c : e_)
        if (c.has_unknowns())
            return true;
    return false;
}

void MatrixS::check_size(const MatrixS& x, const MatrixS& y) {
    if (x.n_ != y.n_)
        throw SizeMismatch("MatrixS: size mismatch " + std::to_string(x.n_) +
                           " vs " + std::to_string(y.n_));
}

MatrixS MatrixS::operator-() const {
    MatrixS r = *this;
    for (auto& c : r.e_)
        c = -c;
    return r;
}

MatrixS MatrixS::operator+(const MatrixS& o) const {
    check_size(*this, o);
    MatrixS r = *this;
    for (size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k] + o.e_[k];
    return r;
}

MatrixS MatrixS::operator-(const MatrixS& o) const {
    check_size(*this, o);
    MatrixS r = *this;
    for (size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k] - o.e_[k];
    return r;
}

MatrixS MatrixS::operator*(const MatrixS& o) const {
    check_size(*this, o);
    MatrixS r(n_, tag_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            CoeffElem acc = r.at(i, j);
            for (int k = 0; k < n_; ++k)
                acc += at(i, k) * o.at(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

MatrixS MatrixS::scaled(const AffineForm& f) const {
    MatrixS r = *this;
    for (auto& c : r.e_)
        c = c.scaled(f);
    return r;
}

MatrixS MatrixS::derivative() const {
    MatrixS r = *this;
    for (auto& c : r.e_)
        c = c.derivative();
    return r;
}

MatrixS MatrixS::substitute(const std::map<UnknownId, Scalar>& values,
                            bool strict) const {
    MatrixS r = *this;
    for (auto& c : r.e_)
        c = c.substitute(values, strict);
    return r;
}

std::string MatrixS::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        s += i == 0 ? "[" : " [";
        for (int j = 0; j < n_; ++j) {
            s += at(i, j).to_string();
            if (j + 1 < n_)
                s += ", ";
        }
        s += "]";
        if (i + 1 < n_)
            s += ";";
    }
    return s + "]";
}

MatrixS invert_unit_upper_triangular(const MatrixS& u) {
    int n = u.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (!u.at(i, j).is_zero())
                throw NonInvertibleE("invert_unit_upper_triangular: not upper triangular");
    std::vector<Scalar> dinv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto c = u.at(i, i).as_constant();
        if (!c || c->is_zero() || c->norm().is_zero())
            throw NonInvertibleE(
                "invert_unit_upper_triangular: diagonal entry is not an invertible constant");
        dinv[static_cast<size_t>(i)] = c->inverse();
    }
    MatrixS inv(n, u.tag());
    for (int j = n - 1; j >= 0; --j) {
        inv.set(j, j, CoeffElem::constant(u.tag(), AffineForm(dinv[static_cast<size_t>(j)])));
        for (int i = j - 1; i >= 0; --i) {
            // Row i of U X = I:  u_ii x_ij + sum_{k>i} u_ik x_kj = 0.
            CoeffElem acc(u.tag() == RingTag::Polynomial
                              ? CoeffElem(XPolynomial())
                              : CoeffElem(TruncatedLaurent::zero()));
            for (int k = i + 1; k <= j; ++k)
                acc += u.at(i, k) * inv.at(k, j);
            inv.set(i, j, (-acc).scaled(dinv[static_cast<size_t>(i)]));
        }
    }
    return inv;
}

} // namespace codo
