#ifndef QCOL_BRAID_HPP
#define QCOL_BRAID_HPP

#include <optional>
#include <string>
#include <vector>

namespace qcol {

// A word in the braid group B_n. Letter k > 0 means sigma_k, k < 0 means
// sigma_{|k|}^{-1}; every |k| is in 1..strands-1 and strands >= 2. An empty
// letter list is the identity braid.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Accepts brace notation "{1,1,-2}" (as in knot-table braid columns) or word
// notation "s1^2 s2^-1 s1" (exponents may be braced: "s2^{-1}"). When strands
// is absent it is inferred as 1 + max |letter|. Throws SyntaxError,
// EmptyInput (empty text with no strand count), or IndexOutOfRange.
BraidWord parse_braid(const std::string& text, std::optional<int> strands = std::nullopt);

std::string to_brace(const BraidWord& w);
std::string to_word(const BraidWord& w);

// Exponent sum of the word (sum of letter signs).
int writhe(const BraidWord& w);

// Permutation of {0..n-1} induced by the word: entry i is the top-strand
// index that ends at bottom position i.
std::vector<int> closure_permutation(const BraidWord& w);

// Number of components of the closure = cycle count of the permutation.
int closure_components(const BraidWord& w);

}  // namespace qcol

#endif
