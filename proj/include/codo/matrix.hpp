#pragma once

#include <vector>

#include "codo/coeff.hpp"

namespace codo {

/** Dense s x s matrix over the coefficient ring. */
class MatrixS {
public:
    MatrixS() : n_(0) {}
    MatrixS(int n, RingTag tag);

    static MatrixS identity(int n, RingTag tag);
    static MatrixS diag(CoeffElem a, CoeffElem b);

    int size() const { return n_; }
    RingTag tag() const { return tag_; }
    const CoeffElem& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, CoeffElem v);

    bool is_zero() const;
    bool has_unknowns() const;

    MatrixS operator-() const;
    MatrixS operator+(const MatrixS& o) const;
    MatrixS operator-(const MatrixS& o) const;
    MatrixS operator*(const MatrixS& o) const;
    MatrixS& operator+=(const MatrixS& o) { return *this = *this + o; }
    MatrixS& operator-=(const MatrixS& o) { return *this = *this - o; }
    MatrixS scaled(const AffineForm& f) const;
    MatrixS scaled(const Scalar& s) const { return scaled(AffineForm(s)); }

    MatrixS derivative() const;
    MatrixS substitute(const std::map<UnknownId, Scalar>& values, bool strict) const;

    bool operator==(const MatrixS& o) const {
        return n_ == o.n_ && e_ == o.e_;
    }
    bool operator!=(const MatrixS& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int n_;
    RingTag tag_ = RingTag::Polynomial;
    std::vector<CoeffElem> e_;

    size_t idx(int i, int j) const;
    static void check_size(const MatrixS& x, const MatrixS& y);
};

// Inverse of an upper-triangular matrix whose diagonal entries are exact
// invertible constants; throws NonInvertibleE otherwise.
MatrixS invert_unit_upper_triangular(const MatrixS& u);

} // namespace codo
