#include "codo/io.hpp"

#include <climits>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

#include "codo/errors.hpp"

namespace codo {

namespace {

using json = nlohmann::ordered_json;

const Scalar& constant_of(const AffineForm& form) {
    if (!form.is_constant())
        throw UnboundUnknown("cannot render an operator with unknown constants");
    return form.constant();
}

void check_session(const Scalar& s, const Rational& d) {
    if (!s.b().is_zero() && s.d() != d)
        throw MixedRing("entry scalar lives in a different extension than the session");
}

void push_triple(json& arr, int exp, const Scalar& s, const Rational& d) {
    check_session(s, d);
    arr.push_back(json::array({exp, s.a().to_string(), s.b().to_string()}));
}

json encode_poly(const XPolynomial& p, const Rational& d) {
    json arr = json::array();
    for (const auto& [exp, form] : p.coeffs()) push_triple(arr, exp, constant_of(form), d);
    return arr;
}

json encode_series(const TruncatedLaurent& s, const Rational& d) {
    json arr = json::array();
    for (int e = s.low(); e < s.stored_end(); ++e) {
        Scalar c = constant_of(s.coeff(e));
        if (c.is_zero()) continue;
        push_triple(arr, e, c, d);
    }
    return arr;
}

struct LaurentBounds {
    int low = 0;
    int trunc = TruncatedLaurent::kInf;
};

LaurentBounds scan_bounds(const DiffOperator& op) {
    LaurentBounds b;
    bool first = true;
    for (const auto& [deg, mat] : op.terms()) {
        (void)deg;
        for (int i = 0; i < mat.size(); ++i)
            for (int j = 0; j < mat.size(); ++j) {
                const TruncatedLaurent& s = mat.at(i, j).laurent();
                b.trunc = std::min(b.trunc, s.trunc());
                if (!s.is_zero()) {
                    b.low = first ? s.low() : std::min(b.low, s.low());
                    first = false;
                }
            }
    }
    return b;
}

Scalar decode_scalar(const json& a, const json& b, const Rational& d) {
    Rational ra = Rational::from_string(a.get<std::string>());
    Rational rb = Rational::from_string(b.get<std::string>());
    if (rb.is_zero()) return Scalar(std::move(ra));
    return Scalar(std::move(ra), std::move(rb), d);
}

CoeffElem decode_entry(const json& entry, RingTag tag, int trunc, const Rational& d) {
    if (!entry.is_array()) throw ParseError("entry must be an array of triples");
    std::map<int, Scalar> vals;
    int prev = INT_MIN;
    for (const json& triple : entry) {
        if (!triple.is_array() || triple.size() != 3)
            throw ParseError("entry coefficient must be an (exponent, a, b) triple");
        int exp = triple.at(0).get<int>();
        if (exp <= prev) throw ParseError("entry exponents must be strictly increasing");
        prev = exp;
        Scalar s = decode_scalar(triple.at(1), triple.at(2), d);
        if (!s.is_zero()) vals.emplace(exp, std::move(s));
    }
    if (tag == RingTag::Polynomial) {
        XPolynomial p;
        for (const auto& [e, s] : vals) {
            if (e < 0) throw ParseError("polynomial exponents must be nonnegative");
            p.set(e, AffineForm(s));
        }
        return CoeffElem(std::move(p));
    }
    TruncatedLaurent out = TruncatedLaurent::zero(trunc);
    for (const auto& [e, s] : vals) {
        if (e >= trunc) throw ParseError("exponent at or beyond the truncation order");
        out += TruncatedLaurent::monomial(e, AffineForm(s), trunc);
    }
    return CoeffElem(std::move(out));
}

}  // namespace

std::string render_operator(const DiffOperator& op, const Rational& d) {
    json doc;
    doc["format-version"] = kFormatVersion;
    doc["session"] = json{{"d", d.to_string()}};
    doc["size"] = op.size();
    const bool laurent = op.tag() == RingTag::Laurent;
    LaurentBounds bounds;
    if (laurent) {
        bounds = scan_bounds(op);
        json ring;
        ring["kind"] = "laurent";
        ring["low"] = bounds.low;
        ring["trunc"] =
            bounds.trunc == TruncatedLaurent::kInf ? json(nullptr) : json(bounds.trunc);
        doc["ring"] = std::move(ring);
    } else {
        doc["ring"] = json{{"kind", "polynomial"}};
    }
    json terms = json::array();
    for (const auto& [deg, mat] : op.terms()) {
        json rows = json::array();
        for (int i = 0; i < mat.size(); ++i) {
            json row = json::array();
            for (int j = 0; j < mat.size(); ++j) {
                const CoeffElem& e = mat.at(i, j);
                if (laurent)
                    row.push_back(encode_series(e.laurent().truncated_to(bounds.trunc), d));
                else
                    row.push_back(encode_poly(e.poly(), d));
            }
            rows.push_back(std::move(row));
        }
        terms.push_back(json{{"degree", deg}, {"matrix", std::move(rows)}});
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

ParsedOperator parse_operator(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid document: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError("document root must be an object");
        const json& ver = doc.at("format-version");
        if (!ver.is_string()) throw ParseError("format-version must be a string");
        if (ver.get<std::string>() != kFormatVersion)
            throw VersionMismatch("unsupported format-version " + ver.get<std::string>());

        ParsedOperator out;
        out.d = Rational::from_string(doc.at("session").at("d").get<std::string>());
        const int size = doc.at("size").get<int>();
        if (size < 0) throw ParseError("size must be nonnegative");

        const json& ring = doc.at("ring");
        const std::string kind = ring.at("kind").get<std::string>();
        RingTag tag = RingTag::Polynomial;
        int trunc = TruncatedLaurent::kInf;
        if (kind == "laurent") {
            tag = RingTag::Laurent;
            const json& jt = ring.at("trunc");
            if (!jt.is_null()) trunc = jt.get<int>();
        } else if (kind != "polynomial") {
            throw ParseError("unknown ring kind: " + kind);
        }

        DiffOperator op(size, tag);
        int prev_degree = -1;
        for (const json& term : doc.at("terms")) {
            const int degree = term.at("degree").get<int>();
            if (degree < 0) throw ParseError("term degree must be nonnegative");
            if (degree <= prev_degree)
                throw ParseError("terms must be sorted strictly ascending by degree");
            prev_degree = degree;
            const json& rows = term.at("matrix");
            if (rows.size() != static_cast<size_t>(size))
                throw ParseError("matrix row count does not match size");
            MatrixS mat(size, tag);
            for (int i = 0; i < size; ++i) {
                const json& row = rows.at(i);
                if (row.size() != static_cast<size_t>(size))
                    throw ParseError("matrix column count does not match size");
                for (int j = 0; j < size; ++j)
                    mat.set(i, j, decode_entry(row.at(j), tag, trunc, out.d));
            }
            op.set_term(degree, std::move(mat));
        }
        out.op = std::move(op);
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

}  // namespace codo
