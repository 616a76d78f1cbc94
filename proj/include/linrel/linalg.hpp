/*
   Copyright 2026 the linrel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LINREL_LINALG_HPP
#define LINREL_LINALG_HPP

#include <optional>
#include <vector>

#include "linrel/fields.hpp"

namespace linrel {

using Row = std::vector<FieldElement>;
using Matrix = std::vector<Row>;

/// Solution of A x = b as particular + nullspace. The nullspace basis comes
/// from the reduced row echelon form: one monic vector per free column, with
/// its highest nonzero entry at that column, listed by ascending column.
struct AffineSolution {
    std::optional<Row> particular;  // absent iff the system is inconsistent
    std::vector<Row> nullspace_basis;
};

inline AffineSolution solve_linear(Matrix a, Row b, const Field& field) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) fail(errc::invalid_argument, "right-hand side size mismatch");

    std::vector<std::optional<std::size_t>> pivot_row_of_col(cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        const FieldElement inv = a[rank][col].inverse();
        for (auto& x : a[rank]) x = inv * x;
        b[rank] = inv * b[rank];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            const FieldElement factor = a[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] = a[r][cc] - factor * a[rank][cc];
            b[r] = b[r] - factor * b[rank];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }

    AffineSolution out;
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return out;  // inconsistent: 0 = nonzero

    const FieldElement zero = FieldElement::zero(field);
    const FieldElement one = FieldElement::one(field);

    Row particular(cols, zero);
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_row_of_col[col]) particular[col] = b[*pivot_row_of_col[col]];
    out.particular = std::move(particular);

    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col]) continue;  // bound variable
        Row v(cols, zero);
        v[col] = one;
        for (std::size_t pc = 0; pc < col; ++pc)
            if (pivot_row_of_col[pc]) v[pc] = -a[*pivot_row_of_col[pc]][col];
        out.nullspace_basis.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Row> nullspace(Matrix a, const Field& field) {
    const std::size_t rows = a.size();
    Row zero_rhs(rows, FieldElement::zero(field));
    return solve_linear(std::move(a), std::move(zero_rhs), field).nullspace_basis;
}

}  // namespace linrel

#endif  // LINREL_LINALG_HPP
