#ifndef QCOL_INTSOLVE_HPP
#define QCOL_INTSOLVE_HPP

#include <optional>
#include <vector>

#include "qcol/laurent.hpp"

namespace qcol {

// Finds an integer vector u with A u = b, or nullopt when no integer solution
// exists. Decided exactly via column Hermite reduction with unimodular
// transforms.
std::optional<std::vector<Int>> solve_integer_linear(
    const std::vector<std::vector<Int>>& a, const std::vector<Int>& b);

}  // namespace qcol

#endif
