#include "codo/linsolve.hpp"

#include "codo/errors.hpp"

namespace codo {

void LinearSystem::add_row(std::vector<Scalar> row, Scalar b, std::string tag) {
    if (rows.empty() && cols == 0)
        cols = row.size();
    if (row.size() != cols)
        throw SizeMismatch("LinearSystem: row width mismatch");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
    tags.push_back(std::move(tag));
}

LinearSolution solve_linear(LinearSystem sys) {
    const size_t n = sys.rows.size();
    const size_t m = sys.cols;
    std::vector<size_t> pivot_row_of_col(m, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t r = rank; r < n; ++r)
            if (!sys.rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX)
            continue;
        std::swap(sys.rows[rank], sys.rows[piv]);
        std::swap(sys.rhs[rank], sys.rhs[piv]);
        std::swap(sys.tags[rank], sys.tags[piv]);
        Scalar inv = sys.rows[rank][col].inverse();
        for (size_t c = col; c < m; ++c)
            sys.rows[rank][c] = sys.rows[rank][c] * inv;
        sys.rhs[rank] = sys.rhs[rank] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || sys.rows[r][col].is_zero())
                continue;
            Scalar f = sys.rows[r][col];
            for (size_t c = col; c < m; ++c)
                sys.rows[r][c] = sys.rows[r][c] - f * sys.rows[rank][c];
            sys.rhs[r] = sys.rhs[r] - f * sys.rhs[rank];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    LinearSolution sol;
    sol.values.assign(m, Scalar());
    for (size_t r = rank; r < n; ++r)
        if (!sys.rhs[r].is_zero()) {
            sol.consistent = false;
            sol.conflict_tag = sys.tags[r];
            return sol;
        }
    for (size_t col = 0; col < m; ++col) {
        if (pivot_row_of_col[col] == SIZE_MAX)
            sol.free_cols.push_back(col);
        else
            sol.values[col] = sys.rhs[pivot_row_of_col[col]];
    }
    return sol;
}

Scalar determinant(std::vector<std::vector<Scalar>> a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw SizeMismatch("determinant: matrix not square");
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX)
            return Scalar();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        Scalar inv = a[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero())
                continue;
            Scalar f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c)
                a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

} // namespace codo
