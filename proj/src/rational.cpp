#include "codo/rational.hpp"

#include <cctype>

namespace codo {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw DivisionByZero("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    // mpq arithmetic keeps values canonical; raw construction may not.
    r.v_.canonicalize();
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero())
        throw DivisionByZero("Rational: division by zero");
    return from_mpq(v_ / o.v_);
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DivisionByZero("Rational: inverse of zero");
    return from_mpq(1 / v_);
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0)
        return std::nullopt;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(d.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return from_mpq(mpq_class(rn) / mpq_class(rd));
}

static bool valid_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational Rational::from_string(const std::string& s) {
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw InvalidRational("Rational: cannot parse \"" + s + "\"");
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (sgn(q.get_den()) == 0)
        throw InvalidRational("Rational: zero denominator in \"" + s + "\"");
    q.canonicalize();
    return from_mpq(std::move(q));
}

std::string Rational::to_string() const {
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_display() const {
    if (den() == 1)
        return num().get_str();
    return to_string();
}

} // namespace codo
