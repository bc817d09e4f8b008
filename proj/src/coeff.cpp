#include "codo/coeff.hpp"

#include "codo/errors.hpp"

namespace codo {

CoeffElem CoeffElem::constant(RingTag tag, AffineForm f) {
    if (tag == RingTag::Polynomial)
        return CoeffElem(XPolynomial(std::move(f)));
    return CoeffElem(TruncatedLaurent(std::move(f)));
}

const XPolynomial& CoeffElem::poly() const {
    if (tag() != RingTag::Polynomial)
        throw MixedRing("CoeffElem: expected polynomial element");
    return std::get<XPolynomial>(v_);
}

const TruncatedLaurent& CoeffElem::laurent() const {
    if (tag() != RingTag::Laurent)
        throw MixedRing("CoeffElem: expected Laurent element");
    return std::get<TruncatedLaurent>(v_);
}

void CoeffElem::check_same(const CoeffElem& x, const CoeffElem& y) {
    if (x.tag() != y.tag())
        throw MixedRing("CoeffElem: mixing polynomial and Laurent elements");
}

bool CoeffElem::is_zero() const {
    return std::visit([](const auto& e) { return e.is_zero(); }, v_);
}

bool CoeffElem::has_unknowns() const {
    return std::visit([](const auto& e) { return e.has_unknowns(); }, v_);
}

std::optional<Scalar> CoeffElem::as_constant() const {
    AffineForm f;
    if (tag() == RingTag::Polynomial) {
        if (!poly().is_constant())
            return std::nullopt;
        f = poly().coeff(0);
    } else {
        const auto& s = laurent();
        if (!s.is_exact())
            return std::nullopt;
        if (!s.is_zero()) {
            if (s.low() != 0 ||
                s != TruncatedLaurent::monomial(0, s.coeff(0), s.trunc()))
                return std::nullopt;
            f = s.coeff(0);
        }
    }
    if (f.has_unknowns())
        return std::nullopt;
    return f.constant();
}

CoeffElem CoeffElem::operator-() const {
    return std::visit([](const auto& e) { return CoeffElem(-e); }, v_);
}

CoeffElem CoeffElem::operator+(const CoeffElem& o) const {
    check_same(*this, o);
    if (tag() == RingTag::Polynomial)
        return CoeffElem(poly() + o.poly());
    return CoeffElem(laurent() + o.laurent());
}

CoeffElem CoeffElem::operator-(const CoeffElem& o) const {
    check_same(*this, o);
    if (tag() == RingTag::Polynomial)
        return CoeffElem(poly() - o.poly());
    return CoeffElem(laurent() - o.laurent());
}

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
    check_same(*this, o);
    if (tag() == RingTag::Polynomial)
        return CoeffElem(poly() * o.poly());
    return CoeffElem(laurent() * o.laurent());
}

CoeffElem CoeffElem::scaled(const AffineForm& f) const {
    return std::visit([&](const auto& e) { return CoeffElem(e.scaled(f)); }, v_);
}

CoeffElem CoeffElem::derivative() const {
    return std::visit([](const auto& e) { return CoeffElem(e.derivative()); }, v_);
}

CoeffElem CoeffElem::antiderivative(const AffineForm& constant) const {
    return std::visit(
        [&](const auto& e) { return CoeffElem(e.antiderivative(constant)); }, v_);
}

CoeffElem CoeffElem::substitute(const std::map<UnknownId, Scalar>& values,
                                bool strict) const {
    return std::visit(
        [&](const auto& e) { return CoeffElem(e.substitute(values, strict)); }, v_);
}

AffineForm CoeffElem::coeff(int exp) const {
    return std::visit([&](const auto& e) { return e.coeff(exp); }, v_);
}

std::string CoeffElem::to_string() const {
    return std::visit([](const auto& e) { return e.to_string(); }, v_);
}

} // namespace codo
