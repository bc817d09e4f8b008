#include "codo/scalar.hpp"

#include "codo/errors.hpp"

namespace codo {

const Rational& Scalar::merged_d(const Scalar& x, const Scalar& y) {
    if (!x.b_.is_zero() && !y.b_.is_zero() && !(x.d_ == y.d_))
        throw MixedRing("Scalar: mixing extensions t^2 = " + x.d_.to_string() +
                        " and t^2 = " + y.d_.to_string());
    return x.b_.is_zero() ? (y.b_.is_zero() ? x.d_ : y.d_) : x.d_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(a_ + o.a_, b_ + o.b_, merged_d(*this, o));
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(a_ - o.a_, b_ - o.b_, merged_d(*this, o));
}

Scalar Scalar::operator*(const Scalar& o) const {
    const Rational& d = merged_d(*this, o);
    return Scalar(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
}

Scalar Scalar::inverse() const {
    Rational n = norm();
    if (n.is_zero())
        throw DivisionByZero("Scalar: inverse of element with zero norm");
    return Scalar(a_ / n, -b_ / n, d_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    const Rational& d = merged_d(*this, o);  // session check before the norm test
    (void)d;
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(a_ == o.a_) || !(b_ == o.b_))
        return false;
    return b_.is_zero() || d_ == o.d_;
}

std::optional<Scalar> Scalar::sqrt() const {
    if (is_zero())
        return Scalar();
    if (b_.is_zero()) {
        if (auto x = a_.sqrt())
            return Scalar(*x, Rational(0), d_);
        if (!d_.is_zero()) {
            if (auto y = (a_ / d_).sqrt())
                return Scalar(Rational(0), *y, d_);
        }
        return std::nullopt;
    }
    // (x + y t)^2 = a + b t with b != 0 forces x, y != 0,
    // x^2 = (a +- sqrt(a^2 - d b^2))/2 and y = b/(2x).
    auto r = norm().sqrt();
    if (!r)
        return std::nullopt;
    for (const Rational& root : {*r, -*r}) {
        Rational x2 = (a_ + root) / Rational(2);
        if (auto x = x2.sqrt()) {
            if (x->is_zero())
                continue;
            Rational y = b_ / (Rational(2) * *x);
            Scalar cand(*x, y, d_);
            if (cand * cand == *this)
                return cand;
        }
    }
    return std::nullopt;
}

std::string Scalar::to_string() const {
    if (b_.is_zero())
        return a_.to_display();
    std::string bs = b_.to_display();
    std::string tail;
    if (b_.is_one())
        tail = "t";
    else if ((-b_).is_one())
        tail = "-t";
    else
        tail = bs + "*t";
    if (a_.is_zero())
        return tail;
    if (b_.sign() > 0)
        return a_.to_display() + "+" + tail;
    return a_.to_display() + tail;  // tail already carries the minus
}

} // namespace codo
