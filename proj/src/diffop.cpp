#include "codo/diffop.hpp"

#include "codo/errors.hpp"

namespace codo {

DiffOperator DiffOperator::identity(int size, RingTag tag) {
    DiffOperator op(size, tag);
    op.set_term(0, MatrixS::identity(size, tag));
    return op;
}

DiffOperator DiffOperator::from_term(int degree, MatrixS m) {
    DiffOperator op(m.size(), m.tag());
    op.set_term(degree, std::move(m));
    return op;
}

MatrixS DiffOperator::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? MatrixS(size_, tag_) : it->second;
}

void DiffOperator::set_term(int degree, MatrixS m) {
    if (m.size() != size_)
        throw SizeMismatch("DiffOperator: coefficient size mismatch");
    if (degree < 0)
        throw SizeMismatch("DiffOperator: negative degree");
    if (m.is_zero())
        terms_.erase(degree);
    else
        terms_[degree] = std::move(m);
}

bool DiffOperator::has_unknowns() const {
    for (const auto& [k, m] : terms_)
        if (m.has_unknowns())
            return true;
    return false;
}

void DiffOperator::check_compatible(const DiffOperator& x, const DiffOperator& y) {
    if (x.size_ != y.size_)
        throw SizeMismatch("DiffOperator: operator size mismatch");
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r(size_, tag_);
    for (const auto& [k, m] : terms_)
        r.terms_.emplace(k, -m);
    return r;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    check_compatible(*this, o);
    DiffOperator r = *this;
    for (const auto& [k, m] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.set_term(k, m);
        else
            r.set_term(k, it->second + m);
    }
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    return *this + (-o);
}

static long long binom(int m, int j) {
    long long r = 1;
    for (int i = 0; i < j; ++i)
        r = r * (m - i) / (i + 1);
    return r;
}

DiffOperator DiffOperator::operator*(const DiffOperator& o) const {
    check_compatible(*this, o);
    DiffOperator r(size_, tag_);
    for (const auto& [m, a] : terms_) {
        for (const auto& [n, b0] : o.terms_) {
            MatrixS b = b0;
            for (int j = 0; j <= m; ++j) {
                // d^m b = sum_j binom(m, j) b^{(j)} d^{m-j}
                MatrixS contrib = (a * b).scaled(Scalar(Rational(binom(m, j), 1)));
                int deg = m + n - j;
                r.set_term(deg, r.coeff(deg) + contrib);
                if (j < m)
                    b = b.derivative();
            }
        }
    }
    return r;
}

DiffOperator DiffOperator::scaled(const AffineForm& f) const {
    DiffOperator r(size_, tag_);
    for (const auto& [k, m] : terms_)
        r.set_term(k, m.scaled(f));
    return r;
}

DiffOperator DiffOperator::pow(int k) const {
    if (k < 0)
        throw SizeMismatch("DiffOperator: negative power");
    DiffOperator acc = identity(size_, tag_);
    for (int i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

DiffOperator DiffOperator::substitute(const std::map<UnknownId, Scalar>& values,
                                      bool strict) const {
    DiffOperator r(size_, tag_);
    for (const auto& [k, m] : terms_)
        r.set_term(k, m.substitute(values, strict));
    return r;
}

std::string DiffOperator::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty())
            s += " + ";
        s += it->second.to_string();
        if (it->first > 0)
            s += "*d^" + std::to_string(it->first);
    }
    return s;
}

DiffOperator commutator(const DiffOperator& x, const DiffOperator& y) {
    return x * y - y * x;
}

std::string OpCoordinate::to_string() const {
    return "(entry " + std::to_string(row) + "," + std::to_string(col) +
           ", d-degree " + std::to_string(degree) + ", x^" + std::to_string(exp) + ")";
}

std::optional<OpCoordinate> first_nonzero(const DiffOperator& op) {
    for (const auto& [deg, m] : op.terms())
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) {
                const CoeffElem& c = m.at(i, j);
                if (c.is_zero())
                    continue;
                if (c.tag() == RingTag::Polynomial) {
                    for (const auto& [e, f] : c.poly().coeffs())
                        if (!f.is_zero())
                            return OpCoordinate{deg, i, j, e};
                } else {
                    const auto& s = c.laurent();
                    for (int e = s.low(); e < s.stored_end(); ++e)
                        if (!s.coeff(e).is_zero())
                            return OpCoordinate{deg, i, j, e};
                }
            }
    return std::nullopt;
}

MatrixS StructuredL::E() const {
    RingTag t = tag();
    return MatrixS::diag(CoeffElem::constant(t, AffineForm(Scalar(1))),
                         CoeffElem::constant(t, AffineForm(Scalar(-1))));
}

MatrixS StructuredL::R() const {
    return MatrixS::diag(r1, -r1);
}

MatrixS StructuredL::Q() const {
    MatrixS q(2, tag());
    q.set(0, 0, q1);
    q.set(0, 1, q2);
    q.set(1, 0, q2);
    q.set(1, 1, -q1);
    return q;
}

DiffOperator expand_structured(const StructuredL& l) {
    DiffOperator op(2, l.tag());
    op.set_term(2, l.E());
    op.set_term(1, l.R());
    op.set_term(0, l.Q());
    return op;
}

} // namespace codo
