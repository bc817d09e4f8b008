#pragma once

#include <map>

#include "codo/matrix.hpp"

namespace codo {

/**
 * Matrix ordinary differential operator sum_k M_k d^k with matrix
 * coefficients over the coefficient ring; zero coefficient matrices are not
 * stored.  Products follow the Leibniz rule
 * d^m f = sum_j binom(m, j) f^{(j)} d^{m-j}.
 */
class DiffOperator {
public:
    DiffOperator() : size_(0), tag_(RingTag::Polynomial) {}
    DiffOperator(int size, RingTag tag) : size_(size), tag_(tag) {}

    static DiffOperator identity(int size, RingTag tag);
    static DiffOperator from_term(int degree, MatrixS m);

    int size() const { return size_; }
    RingTag tag() const { return tag_; }
    // Degree of the highest stored term; -1 for the zero operator.
    int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    const std::map<int, MatrixS>& terms() const { return terms_; }
    MatrixS coeff(int degree) const;
    void set_term(int degree, MatrixS m);

    bool is_zero() const { return terms_.empty(); }
    bool has_unknowns() const;

    DiffOperator operator-() const;
    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator operator*(const DiffOperator& o) const;
    DiffOperator& operator+=(const DiffOperator& o) { return *this = *this + o; }
    DiffOperator& operator-=(const DiffOperator& o) { return *this = *this - o; }
    DiffOperator scaled(const AffineForm& f) const;
    DiffOperator scaled(const Scalar& s) const { return scaled(AffineForm(s)); }

    DiffOperator pow(int k) const;
    DiffOperator substitute(const std::map<UnknownId, Scalar>& values,
                            bool strict) const;

    bool operator==(const DiffOperator& o) const {
        return size_ == o.size_ && terms_ == o.terms_;
    }
    bool operator!=(const DiffOperator& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int size_;
    RingTag tag_;
    std::map<int, MatrixS> terms_;

    static void check_compatible(const DiffOperator& x, const DiffOperator& y);
};

DiffOperator commutator(const DiffOperator& x, const DiffOperator& y);

/** Coordinate of one scalar coefficient inside an operator. */
struct OpCoordinate {
    int degree;  // d-degree
    int row, col;
    int exp;  // x-exponent

    std::string to_string() const;
};

// First nonzero coefficient of the operator in canonical order (ascending
// d-degree, then row-major entry, then ascending x-exponent), if any.
std::optional<OpCoordinate> first_nonzero(const DiffOperator& op);

/**
 * The order-two operator L = E d^2 + R d + Q of the fixed shape
 * E = diag(1, -1), R = diag(r1, -r1), Q = [[q1, q2], [q2, -q1]].
 */
struct StructuredL {
    CoeffElem r1, q1, q2;

    RingTag tag() const { return r1.tag(); }
    MatrixS E() const;
    MatrixS R() const;
    MatrixS Q() const;
};

DiffOperator expand_structured(const StructuredL& l);

} // namespace codo
