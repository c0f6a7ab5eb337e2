#include "qcol/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qcol/errors.hpp"

namespace qcol {

namespace {

void ensure_letters_fit(const std::vector<int>& letters, int strands) {
  if (strands < 2) throw IndexOutOfRange("strand count must be at least 2");
  for (int k : letters) {
    if (k == 0) throw SyntaxError("generator index 0 is not a braid letter");
    if (std::abs(k) >= strands)
      throw IndexOutOfRange("letter " + std::to_string(k) + " needs at least " +
                            std::to_string(std::abs(k) + 1) + " strands, got " +
                            std::to_string(strands));
  }
}

int infer_strands(const std::vector<int>& letters) {
  int mx = 0;
  for (int k : letters) mx = std::max(mx, std::abs(k));
  return mx + 1;
}

std::vector<int> parse_brace(const std::string& text) {
  std::vector<int> letters;
  std::size_t i = text.find('{');
  std::size_t j = text.rfind('}');
  if (i == std::string::npos || j == std::string::npos || j < i)
    throw SyntaxError("expected braces: " + text);
  std::string body = text.substr(i + 1, j - i - 1);
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw SyntaxError("empty entry in braid list");
    tok = tok.substr(a, b - a + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      letters.push_back(v);
    } catch (const std::exception&) {
      throw SyntaxError("bad braid letter \"" + tok + "\"");
    }
  }
  return letters;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> letters;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  while (skip_ws(), i < text.size()) {
    if (text[i] != 's' && text[i] != 'S')
      throw SyntaxError("expected generator like s1 at position " + std::to_string(i));
    ++i;
    std::size_t used = 0;
    int idx;
    try {
      idx = std::stoi(text.substr(i), &used);
    } catch (const std::exception&) {
      throw SyntaxError("expected generator index after 's'");
    }
    if (idx <= 0) throw SyntaxError("generator index must be positive");
    i += used;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool braced = i < text.size() && text[i] == '{';
      if (braced) ++i;
      try {
        exp = std::stol(text.substr(i), &used);
      } catch (const std::exception&) {
        throw SyntaxError("expected exponent after '^'");
      }
      i += used;
      if (braced) {
        if (i >= text.size() || text[i] != '}') throw SyntaxError("expected '}'");
        ++i;
      }
      if (exp == 0) throw SyntaxError("zero exponent in braid word");
    }
    int letter = exp > 0 ? idx : -idx;
    for (long r = 0; r < std::abs(exp); ++r) letters.push_back(letter);
  }
  return letters;
}

}  // namespace

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
  std::string trimmed = text;
  std::size_t a = trimmed.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) trimmed.clear();
  if (a != std::string::npos) trimmed = trimmed.substr(a);
  bool empty_body = trimmed.empty() || trimmed == "{}";
  std::vector<int> letters;
  if (!empty_body) {
    letters = trimmed.front() == '{' ? parse_brace(trimmed) : parse_word(trimmed);
  }
  if (letters.empty() && !strands)
    throw EmptyInput("empty braid word needs an explicit strand count");
  int n = strands ? *strands : infer_strands(letters);
  ensure_letters_fit(letters, n);
  return BraidWord{n, std::move(letters)};
}

std::string to_brace(const BraidWord& w) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ",";
    out << w.letters[i];
  }
  out << "}";
  return out.str();
}

std::string to_word(const BraidWord& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size();) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (i) out << " ";
    long exp = (long)(j - i) * (w.letters[i] > 0 ? 1 : -1);
    out << "s" << std::abs(w.letters[i]);
    if (exp != 1) out << "^" << exp;
    i = j;
  }
  return out.str();
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (int k : w.letters) s += k > 0 ? 1 : -1;
  return s;
}

std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> p(w.strands);
  std::iota(p.begin(), p.end(), 0);
  for (int k : w.letters) {
    int i = std::abs(k) - 1;
    std::swap(p[i], p[i + 1]);
  }
  return p;
}

int closure_components(const BraidWord& w) {
  std::vector<int> p = closure_permutation(w);
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t j = s; !seen[j]; j = (std::size_t)p[j]) seen[j] = true;
  }
  return cycles;
}

}  // namespace qcol
