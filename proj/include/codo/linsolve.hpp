#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "codo/scalar.hpp"

namespace codo {

/**
 * Linear system over the session field: rows[i] . x = rhs[i], with a
 * human-readable provenance tag per row for diagnostics.
 */
struct LinearSystem {
    size_t cols = 0;
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    std::vector<std::string> tags;

    void add_row(std::vector<Scalar> row, Scalar b, std::string tag);
};

struct LinearSolution {
    bool consistent = true;
    std::vector<Scalar> values;      // one per column; free columns get zero
    std::vector<size_t> free_cols;
    std::string conflict_tag;        // tag of the row that became 0 = nonzero
};

LinearSolution solve_linear(LinearSystem sys);

// Determinant by fraction-free elimination; exact over the session field.
Scalar determinant(std::vector<std::vector<Scalar>> m);

} // namespace codo
