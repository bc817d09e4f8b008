#include "codo/spectral.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "codo/errors.hpp"
#include "codo/linsolve.hpp"

namespace codo {

void ScalarPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ScalarPoly ScalarPoly::monomial(int exp, Scalar c) {
    ScalarPoly p;
    p.set(exp, std::move(c));
    return p;
}

Scalar ScalarPoly::coeff(int exp) const {
    if (exp < 0 || exp > degree()) return Scalar(0);
    return c_[static_cast<size_t>(exp)];
}

void ScalarPoly::set(int exp, Scalar v) {
    if (exp < 0) throw Error("polynomial exponent must be nonnegative");
    if (exp > degree()) {
        if (v.is_zero()) return;
        c_.resize(static_cast<size_t>(exp) + 1, Scalar(0));
    }
    c_[static_cast<size_t>(exp)] = std::move(v);
    normalize();
}

const Scalar& ScalarPoly::leading() const {
    if (is_zero()) throw Error("zero polynomial has no leading coefficient");
    return c_.back();
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly out = *this;
    for (Scalar& c : out.c_) c = -c;
    return out;
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const {
    ScalarPoly out = *this;
    if (o.c_.size() > out.c_.size()) out.c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    out.normalize();
    return out;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const { return *this + (-o); }

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const {
    if (is_zero() || o.is_zero()) return ScalarPoly();
    ScalarPoly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    }
    out.normalize();
    return out;
}

ScalarPoly ScalarPoly::scaled(const Scalar& s) const {
    ScalarPoly out = *this;
    for (Scalar& c : out.c_) c *= s;
    out.normalize();
    return out;
}

ScalarPoly ScalarPoly::derivative() const {
    ScalarPoly out;
    for (int e = 1; e <= degree(); ++e)
        out.set(e - 1, Scalar(Rational(e)) * c_[static_cast<size_t>(e)]);
    return out;
}

ScalarPoly ScalarPoly::monic() const { return scaled(leading().inverse()); }

std::pair<ScalarPoly, ScalarPoly> ScalarPoly::divmod(const ScalarPoly& a,
                                                     const ScalarPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    ScalarPoly q, r = a;
    const Scalar inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Scalar c = r.leading() * inv;
        q.set(k, c);
        r = r - b * monomial(k, std::move(c));
    }
    return {std::move(q), std::move(r)};
}

std::optional<ScalarPoly> ScalarPoly::sqrt() const {
    if (is_zero()) return ScalarPoly();
    if (degree() % 2 != 0) return std::nullopt;
    int h = degree() / 2;
    std::optional<Scalar> lead = leading().sqrt();
    if (!lead) return std::nullopt;
    ScalarPoly s = monomial(h, *lead);
    const Scalar twice = Scalar(2) * *lead;
    for (int k = h - 1; k >= 0; --k) {
        ScalarPoly r = *this - s * s;
        s.set(k, r.coeff(h + k) / twice);
    }
    if (s * s != *this) return std::nullopt;
    return s;
}

namespace {

void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term.size() > 1 && term.front() == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

std::string wrap_coeff(const std::string& s) {
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == '+' || (s[i] == '-' && i > 0)) return "(" + s + ")";
    return s;
}

std::string var_power(const std::string& var, int e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::string monomial_string(const Scalar& c, const std::string& vars) {
    std::string cs = c.to_string();
    if (vars.empty()) return wrap_coeff(cs);
    if (cs == "1") return vars;
    if (cs == "-1") return "-" + vars;
    return wrap_coeff(cs) + "*" + vars;
}

}  // namespace

std::string ScalarPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        Scalar c = coeff(e);
        if (c.is_zero()) continue;
        append_term(out, monomial_string(c, e == 0 ? "" : var_power(var, e)));
    }
    return out;
}

ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b) {
    while (!b.is_zero()) {
        ScalarPoly r = ScalarPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Scalar resultant(const ScalarPoly& a, const ScalarPoly& b) {
    if (a.is_zero() || b.is_zero()) return Scalar(0);
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return Scalar(1);
    if (m == 0) {
        Scalar out(1);
        for (int k = 0; k < n; ++k) out *= a.coeff(0);
        return out;
    }
    if (n == 0) {
        Scalar out(1);
        for (int k = 0; k < m; ++k) out *= b.coeff(0);
        return out;
    }
    int size = m + n;
    std::vector<std::vector<Scalar>> s(static_cast<size_t>(size),
                                       std::vector<Scalar>(static_cast<size_t>(size), Scalar(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = a.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + k] = b.coeff(n - k);
    return determinant(std::move(s));
}

Curve Curve::from_w_parts(const std::vector<ScalarPoly>& parts) {
    Curve c;
    for (size_t w = 0; w < parts.size(); ++w)
        for (int z = 0; z <= parts[w].degree(); ++z)
            c.set(z, static_cast<int>(w), parts[w].coeff(z));
    return c;
}

Scalar Curve::coeff(int zdeg, int wdeg) const {
    auto it = coeffs.find({zdeg, wdeg});
    return it == coeffs.end() ? Scalar(0) : it->second;
}

void Curve::set(int zdeg, int wdeg, Scalar v) {
    if (v.is_zero())
        coeffs.erase({zdeg, wdeg});
    else
        coeffs[{zdeg, wdeg}] = std::move(v);
}

int Curve::wdegree() const {
    int out = -1;
    for (const auto& [key, v] : coeffs) out = std::max(out, key.second);
    return out;
}

int Curve::zdegree() const {
    int out = -1;
    for (const auto& [key, v] : coeffs) out = std::max(out, key.first);
    return out;
}

ScalarPoly Curve::w_part(int wdeg) const {
    ScalarPoly out;
    for (const auto& [key, v] : coeffs)
        if (key.second == wdeg) out.set(key.first, v);
    return out;
}

Curve Curve::normalized() const {
    if (coeffs.empty()) return *this;
    std::pair<int, int> lead{-1, -1};  // (wdeg, zdeg)
    for (const auto& [key, v] : coeffs)
        lead = std::max(lead, std::pair<int, int>{key.second, key.first});
    return scaled(coeff(lead.second, lead.first).inverse());
}

Curve Curve::scaled(const Scalar& s) const {
    Curve out;
    for (const auto& [key, v] : coeffs) out.set(key.first, key.second, v * s);
    return out;
}

std::string Curve::to_string() const {
    if (coeffs.empty()) return "0";
    std::vector<std::pair<int, int>> keys;  // (wdeg, zdeg), descending
    keys.reserve(coeffs.size());
    for (const auto& [key, v] : coeffs) keys.push_back({key.second, key.first});
    std::sort(keys.rbegin(), keys.rend());
    std::string out;
    for (const auto& [w, z] : keys) {
        std::string vars;
        if (z > 0) vars = var_power("z", z);
        if (w > 0) {
            if (!vars.empty()) vars += "*";
            vars += var_power("w", w);
        }
        append_term(out, monomial_string(coeff(z, w), vars));
    }
    return out;
}

namespace {

using Coord = std::tuple<int, int, int, int>;  // (d-degree, row, col, x-exponent)
using Sheet = std::map<Coord, Scalar>;

Sheet coefficient_sheet(const DiffOperator& op) {
    Sheet out;
    for (const auto& [deg, mat] : op.terms())
        for (int i = 0; i < mat.size(); ++i)
            for (int j = 0; j < mat.size(); ++j) {
                const XPolynomial& p = mat.at(i, j).poly();
                for (const auto& [exp, form] : p.coeffs()) {
                    if (!form.is_constant())
                        throw UnboundUnknown(
                            "relation search needs fully bound operators");
                    out[{deg, i, j, exp}] = form.constant();
                }
            }
    return out;
}

std::string coord_tag(const Coord& c) {
    return "entry (" + std::to_string(std::get<1>(c)) + "," +
           std::to_string(std::get<2>(c)) + ") of d^" +
           std::to_string(std::get<0>(c)) + " x^" + std::to_string(std::get<3>(c));
}

std::optional<LinearSolution> try_identity(const std::vector<const Sheet*>& cols,
                                           const Sheet& target) {
    std::set<Coord> coords;
    for (const Sheet* s : cols)
        for (const auto& [c, v] : *s) coords.insert(c);
    for (const auto& [c, v] : target) coords.insert(c);

    LinearSystem sys;
    sys.cols = cols.size();
    for (const Coord& c : coords) {
        std::vector<Scalar> row(cols.size(), Scalar(0));
        for (size_t t = 0; t < cols.size(); ++t) {
            auto it = cols[t]->find(c);
            if (it != cols[t]->end()) row[t] = it->second;
        }
        Scalar b(0);
        auto it = target.find(c);
        if (it != target.end()) b = -it->second;
        sys.add_row(std::move(row), std::move(b), coord_tag(c));
    }
    LinearSolution sol = solve_linear(std::move(sys));
    if (!sol.consistent) return std::nullopt;
    return sol;
}

std::vector<DiffOperator> powers(const DiffOperator& op, int top) {
    std::vector<DiffOperator> out;
    out.reserve(static_cast<size_t>(top) + 1);
    out.push_back(DiffOperator::identity(op.size(), op.tag()));
    for (int j = 1; j <= top; ++j) out.push_back(out.back() * op);
    return out;
}

}  // namespace

RelationResult find_quadratic_relation(const DiffOperator& l, const DiffOperator& m,
                                       int degz) {
    if (degz < 0) throw Error("z-degree bound must be nonnegative");
    if (l.tag() != RingTag::Polynomial || m.tag() != RingTag::Polynomial)
        throw MixedRing("relation search works over the polynomial ring");
    if (l.size() != m.size()) throw SizeMismatch("relation operands disagree in size");

    const int hp_max = (degz + 1) / 2;
    std::vector<DiffOperator> lp = powers(l, degz);
    std::vector<Sheet> lsheet, lmsheet;
    lsheet.reserve(lp.size());
    for (const DiffOperator& p : lp) lsheet.push_back(coefficient_sheet(p));
    lmsheet.reserve(static_cast<size_t>(hp_max) + 1);
    for (int j = 0; j <= hp_max; ++j) lmsheet.push_back(coefficient_sheet(lp[j] * m));
    const Sheet msheet = coefficient_sheet(m);
    const Sheet m2sheet = coefficient_sheet(m * m);

    for (int dz = 0; dz <= degz; ++dz) {
        std::vector<const Sheet*> cols;
        for (int j = 0; j <= dz; ++j) cols.push_back(&lsheet[j]);
        if (auto sol = try_identity(cols, msheet)) {
            Curve c;
            c.set(0, 1, Scalar(1));
            for (int j = 0; j <= dz; ++j) c.set(j, 0, sol->values[j]);
            return {c, sol->free_cols.empty()};
        }
    }
    for (int dz = 0; dz <= degz; ++dz) {
        const int hp = (dz + 1) / 2;
        std::vector<const Sheet*> cols;
        for (int j = 0; j <= hp; ++j) cols.push_back(&lmsheet[j]);
        for (int j = 0; j <= dz; ++j) cols.push_back(&lsheet[j]);
        if (auto sol = try_identity(cols, m2sheet)) {
            Curve c;
            c.set(0, 2, Scalar(1));
            for (int j = 0; j <= hp; ++j) c.set(j, 1, sol->values[j]);
            for (int j = 0; j <= dz; ++j)
                c.set(j, 0, sol->values[static_cast<size_t>(hp) + 1 + j]);
            return {c, sol->free_cols.empty()};
        }
    }
    throw NoRelationFound("no w-linear or w-quadratic relation with z-degree <= " +
                          std::to_string(degz));
}

DiffOperator eval_relation(const Curve& r, const DiffOperator& l,
                           const DiffOperator& m) {
    if (l.size() != m.size()) throw SizeMismatch("relation operands disagree in size");
    if (l.tag() != m.tag()) throw MixedRing("relation operands disagree in ring");
    std::vector<DiffOperator> lp = powers(l, std::max(r.zdegree(), 0));
    std::vector<DiffOperator> mp = powers(m, std::max(r.wdegree(), 0));
    DiffOperator acc(l.size(), l.tag());
    for (const auto& [key, c] : r.coeffs)
        acc += (lp[static_cast<size_t>(key.first)] * mp[static_cast<size_t>(key.second)])
                   .scaled(c);
    return acc;
}

Reducibility reducibility_quadratic(const Curve& r) {
    if (r.wdegree() != 2) throw Error("relation is not quadratic in w");
    ScalarPoly top = r.w_part(2);
    if (top.degree() != 0)
        throw Error("w^2 coefficient must be constant to split the relation");
    const Scalar inv = top.coeff(0).inverse();
    ScalarPoly p = r.w_part(1).scaled(inv);
    ScalarPoly q = r.w_part(0).scaled(inv);

    Reducibility out;
    out.discriminant = p * p - q.scaled(Scalar(4));
    std::optional<ScalarPoly> s = out.discriminant.sqrt();
    if (!s) return out;
    const Scalar half(Rational(1, 2));
    out.reducible = true;
    out.f1 = Curve::from_w_parts({(p - *s).scaled(half), ScalarPoly(Scalar(1))});
    out.f2 = Curve::from_w_parts({(p + *s).scaled(half), ScalarPoly(Scalar(1))});
    return out;
}

bool nonsingular_hyperelliptic(const ScalarPoly& f) {
    if (f.is_zero()) return false;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

}  // namespace codo
