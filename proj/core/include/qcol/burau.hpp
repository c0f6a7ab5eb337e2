#ifndef QCOL_BURAU_HPP
#define QCOL_BURAU_HPP

#include "qcol/braid.hpp"
#include "qcol/matrix.hpp"

namespace qcol {

// Unreduced Burau image of a single generator: identity except the 2x2 block
// at strands |i|, |i|+1, which is [[0,1],[t,1-t]] for i > 0 and its exact
// inverse [[1-t^-1, t^-1],[1,0]] for i < 0. Throws IndexOutOfRange.
Matrix burau_generator(int i, int n);

// Product of generator matrices with the leftmost letter as the leftmost
// factor. With this convention phi(w) * top = bottom for the strand
// propagation rule used by the coloring verifier.
Matrix burau_unreduced(const BraidWord& w);

// Reduced (n-1)-dimensional Burau image of one generator.
Matrix burau_reduced_generator(int i, int n);

// Reduced Burau matrix of the word, same factor order as burau_unreduced.
Matrix burau_reduced(const BraidWord& w);

// det(reduced(w) - id) divided exactly by 1 + t + ... + t^{n-1}, then
// normalized to min exponent 0 with positive leading coefficient. Returns 0
// when the determinant vanishes. Throws InternalError if the division fails.
Laurent reduced_alexander(const BraidWord& w);

}  // namespace qcol

#endif
