#include "codo/xpoly.hpp"

#include "codo/errors.hpp"

namespace codo {

XPolynomial XPolynomial::monomial(int exp, AffineForm coeff) {
    XPolynomial p;
    p.set(exp, std::move(coeff));
    return p;
}

AffineForm XPolynomial::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? AffineForm() : it->second;
}

void XPolynomial::set(int exp, AffineForm coeff) {
    if (coeff.is_zero())
        c_.erase(exp);
    else
        c_[exp] = std::move(coeff);
}

bool XPolynomial::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

bool XPolynomial::has_unknowns() const {
    for (const auto& [e, f] : c_)
        if (f.has_unknowns())
            return true;
    return false;
}

AffineForm XPolynomial::leading() const {
    return c_.empty() ? AffineForm() : c_.rbegin()->second;
}

XPolynomial XPolynomial::operator-() const {
    XPolynomial r;
    for (const auto& [e, f] : c_)
        r.c_.emplace(e, -f);
    return r;
}

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
    XPolynomial r = *this;
    for (const auto& [e, f] : o.c_) {
        auto it = r.c_.find(e);
        if (it == r.c_.end())
            r.c_.emplace(e, f);
        else {
            it->second += f;
            if (it->second.is_zero())
                r.c_.erase(it);
        }
    }
    return r;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
    return *this + (-o);
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
    XPolynomial r;
    for (const auto& [e1, f1] : c_)
        for (const auto& [e2, f2] : o.c_) {
            AffineForm p = f1 * f2;
            if (p.is_zero())
                continue;
            auto it = r.c_.find(e1 + e2);
            if (it == r.c_.end())
                r.c_.emplace(e1 + e2, std::move(p));
            else {
                it->second += p;
                if (it->second.is_zero())
                    r.c_.erase(it);
            }
        }
    return r;
}

XPolynomial XPolynomial::scaled(const AffineForm& f) const {
    return *this * XPolynomial(f);
}

XPolynomial XPolynomial::derivative() const {
    XPolynomial r;
    for (const auto& [e, f] : c_) {
        if (e == 0)
            continue;
        r.set(e - 1, f.scaled(Scalar(e)));
    }
    return r;
}

XPolynomial XPolynomial::antiderivative(const AffineForm& constant) const {
    XPolynomial r;
    for (const auto& [e, f] : c_) {
        if (e == -1)
            throw NonIntegrableTerm("XPolynomial: x^-1 term has no polynomial primitive");
        r.set(e + 1, f.scaled(Scalar(Rational(1, e + 1))));
    }
    r.set(0, r.coeff(0) + constant);
    return r;
}

XPolynomial XPolynomial::substitute(const std::map<UnknownId, Scalar>& values,
                                    bool strict) const {
    XPolynomial r;
    for (const auto& [e, f] : c_)
        r.set(e, f.substitute(values, strict));
    return r;
}

std::string XPolynomial::to_string() const {
    if (c_.empty())
        return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!s.empty())
            s += " + ";
        s += "(" + it->second.to_string() + ")";
        if (it->first != 0)
            s += "*x^" + std::to_string(it->first);
    }
    return s;
}

} // namespace codo
