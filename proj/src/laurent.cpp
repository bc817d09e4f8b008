#include "codo/laurent.hpp"

#include "codo/errors.hpp"

namespace codo {

int TruncatedLaurent::sat_add(int a, int b) {
    if (a >= kInf || b >= kInf)
        return kInf;
    long long s = static_cast<long long>(a) + b;
    if (s >= kInf)
        return kInf;
    return static_cast<int>(s);
}

void TruncatedLaurent::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        low_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
    if (c_.empty())
        low_ = trunc_;
}

TruncatedLaurent::TruncatedLaurent(AffineForm cst, int trunc)
    : low_(0), trunc_(trunc) {
    c_.push_back(std::move(cst));
    normalize();
}

TruncatedLaurent TruncatedLaurent::zero(int trunc) {
    TruncatedLaurent s;
    s.low_ = trunc;
    s.trunc_ = trunc;
    return s;
}

TruncatedLaurent TruncatedLaurent::monomial(int exp, AffineForm coeff, int trunc) {
    TruncatedLaurent s;
    s.low_ = exp;
    s.trunc_ = trunc;
    if (exp < trunc)
        s.c_.push_back(std::move(coeff));
    s.normalize();
    return s;
}

TruncatedLaurent TruncatedLaurent::from_coeffs(int low, std::vector<AffineForm> coeffs,
                                               int trunc) {
    TruncatedLaurent s;
    s.low_ = low;
    s.trunc_ = trunc;
    s.c_ = std::move(coeffs);
    if (low + static_cast<long long>(s.c_.size()) > trunc)
        s.c_.resize(static_cast<size_t>(trunc - low));
    s.normalize();
    return s;
}

bool TruncatedLaurent::has_unknowns() const {
    for (const auto& f : c_)
        if (f.has_unknowns())
            return true;
    return false;
}

AffineForm TruncatedLaurent::coeff(int exp) const {
    if (exp >= trunc_)
        throw TruncationTooShort("TruncatedLaurent: coefficient of x^" +
                                 std::to_string(exp) + " beyond truncation x^" +
                                 std::to_string(trunc_));
    if (exp < low_ || exp >= low_ + static_cast<long long>(c_.size()))
        return AffineForm();
    return c_[static_cast<size_t>(exp - low_)];
}

TruncatedLaurent TruncatedLaurent::operator-() const {
    TruncatedLaurent r = *this;
    for (auto& f : r.c_)
        f = -f;
    return r;
}

TruncatedLaurent TruncatedLaurent::operator+(const TruncatedLaurent& o) const {
    TruncatedLaurent r;
    r.trunc_ = sat_min(trunc_, o.trunc_);
    int lo = sat_min(low_, o.low_);
    if (lo >= r.trunc_)
        return zero(r.trunc_);
    // an empty summand stores nothing, so its low_ (= trunc_, possibly the
    // exact sentinel) must not widen the materialized range
    int end_a = c_.empty() ? lo : low_ + static_cast<int>(c_.size());
    int end_b = o.c_.empty() ? lo : o.low_ + static_cast<int>(o.c_.size());
    int hi = sat_min(r.trunc_, std::max(end_a, end_b));
    r.low_ = lo;
    for (int e = lo; e < hi; ++e) {
        AffineForm a = (e < low_ || e >= low_ + static_cast<int>(c_.size()))
                           ? AffineForm()
                           : c_[static_cast<size_t>(e - low_)];
        AffineForm b = (e < o.low_ || e >= o.low_ + static_cast<int>(o.c_.size()))
                           ? AffineForm()
                           : o.c_[static_cast<size_t>(e - o.low_)];
        r.c_.push_back(a + b);
    }
    r.normalize();
    return r;
}

TruncatedLaurent TruncatedLaurent::operator-(const TruncatedLaurent& o) const {
    return *this + (-o);
}

TruncatedLaurent TruncatedLaurent::operator*(const TruncatedLaurent& o) const {
    // A factor is unknown from its trunc on, so the product is certain only
    // below min(t1 + low2, t2 + low1).
    int t = sat_min(sat_add(trunc_, o.low_), sat_add(o.trunc_, low_));
    if (c_.empty() || o.c_.empty())
        return zero(t);
    long long lo = static_cast<long long>(low_) + o.low_;
    if (lo >= t)
        return zero(t);
    long long hi_store = std::min<long long>(
        t, lo + static_cast<long long>(c_.size()) + o.c_.size() - 1);
    TruncatedLaurent r;
    r.low_ = static_cast<int>(lo);
    r.trunc_ = t;
    r.c_.assign(static_cast<size_t>(hi_store - lo), AffineForm());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            long long e = lo + static_cast<long long>(i) + j;
            if (e >= t)
                break;
            AffineForm p = c_[i] * o.c_[j];
            if (!p.is_zero())
                r.c_[static_cast<size_t>(e - lo)] += p;
        }
    }
    r.normalize();
    return r;
}

TruncatedLaurent TruncatedLaurent::scaled(const AffineForm& f) const {
    return *this * TruncatedLaurent(f);
}

TruncatedLaurent TruncatedLaurent::derivative() const {
    TruncatedLaurent r;
    r.trunc_ = is_exact() ? kInf : trunc_ - 1;
    r.low_ = r.trunc_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int e = low_ + static_cast<int>(i);
        if (e == 0 || e - 1 >= r.trunc_)
            continue;
        if (r.c_.empty())
            r.low_ = e - 1;
        r.c_.resize(static_cast<size_t>(e - 1 - r.low_) + 1);
        r.c_.back() = c_[i].scaled(Scalar(e));
    }
    r.normalize();
    return r;
}

TruncatedLaurent TruncatedLaurent::antiderivative(const AffineForm& constant) const {
    if (!known(-1))
        throw TruncationTooShort(
            "TruncatedLaurent: cannot certify absence of an x^-1 term");
    if (!coeff(-1).is_zero())
        throw NonIntegrableTerm("TruncatedLaurent: x^-1 term has no Laurent primitive");
    TruncatedLaurent r;
    r.trunc_ = is_exact() ? kInf : trunc_ + 1;
    r.low_ = r.trunc_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int e = low_ + static_cast<int>(i);
        if (e == -1)
            continue;
        if (r.c_.empty())
            r.low_ = e + 1;
        r.c_.resize(static_cast<size_t>(e + 1 - r.low_) + 1);
        r.c_.back() = c_[i].scaled(Scalar(Rational(1, e + 1)));
    }
    r.normalize();
    return r + TruncatedLaurent(constant, r.trunc_);
}

TruncatedLaurent TruncatedLaurent::substitute(
    const std::map<UnknownId, Scalar>& values, bool strict) const {
    TruncatedLaurent r = *this;
    for (auto& f : r.c_)
        f = f.substitute(values, strict);
    r.normalize();
    return r;
}

TruncatedLaurent TruncatedLaurent::truncated_to(int trunc) const {
    TruncatedLaurent r = *this;
    r.trunc_ = sat_min(trunc_, trunc);
    if (r.low_ + static_cast<long long>(r.c_.size()) > r.trunc_) {
        long long keep = r.trunc_ - r.low_;
        r.c_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
    }
    r.normalize();
    return r;
}

std::string TruncatedLaurent::to_string() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + c_[i].to_string() + ")*x^" + std::to_string(low_ + static_cast<int>(i));
    }
    if (s.empty())
        s = "0";
    if (!is_exact())
        s += " + O(x^" + std::to_string(trunc_) + ")";
    return s;
}

} // namespace codo
