#include "codo/affine.hpp"

#include "codo/errors.hpp"

namespace codo {

AffineForm AffineForm::unknown(UnknownId id, Scalar coeff) {
    AffineForm f;
    if (!coeff.is_zero())
        f.terms_.emplace(id, std::move(coeff));
    return f;
}

Scalar AffineForm::coeff_of(const UnknownId& id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? Scalar() : it->second;
}

void AffineForm::prune(const UnknownId& id) {
    auto it = terms_.find(id);
    if (it != terms_.end() && it->second.is_zero())
        terms_.erase(it);
}

AffineForm AffineForm::operator-() const {
    AffineForm r;
    r.cst_ = -cst_;
    for (const auto& [id, c] : terms_)
        r.terms_.emplace(id, -c);
    return r;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
    AffineForm r = *this;
    r.cst_ += o.cst_;
    for (const auto& [id, c] : o.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(id, c);
        if (!fresh)
            it->second += c;
        r.prune(id);
    }
    return r;
}

AffineForm AffineForm::operator-(const AffineForm& o) const {
    return *this + (-o);
}

AffineForm AffineForm::scaled(const Scalar& s) const {
    if (s.is_zero())
        return AffineForm();
    AffineForm r;
    r.cst_ = cst_ * s;
    for (const auto& [id, c] : terms_) {
        Scalar cs = c * s;
        if (!cs.is_zero())
            r.terms_.emplace(id, std::move(cs));
    }
    return r;
}

AffineForm AffineForm::operator*(const AffineForm& o) const {
    if (has_unknowns() && o.has_unknowns())
        throw NonlinearInUnknowns(
            "AffineForm: product of two forms with unknown constants (" +
            terms_.begin()->first.to_string() + ", " +
            o.terms_.begin()->first.to_string() + ")");
    if (o.is_constant())
        return scaled(o.cst_);
    return o.scaled(cst_);
}

AffineForm AffineForm::substitute(const std::map<UnknownId, Scalar>& values,
                                  bool strict) const {
    AffineForm r;
    r.cst_ = cst_;
    for (const auto& [id, c] : terms_) {
        auto it = values.find(id);
        if (it == values.end()) {
            if (strict)
                throw UnboundUnknown("AffineForm: unbound unknown " + id.to_string());
            r.terms_.emplace(id, c);
        } else {
            r.cst_ += c * it->second;
        }
    }
    return r;
}

std::string AffineForm::to_string() const {
    if (is_constant())
        return cst_.to_string();
    std::string s = cst_.is_zero() ? "" : cst_.to_string();
    for (const auto& [id, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string() + ")*" + id.to_string();
    }
    return s;
}

} // namespace codo
