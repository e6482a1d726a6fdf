#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibraid/representation.hpp"

namespace fibraid {

/// sigma_index^exponent. Positive exponents are clockwise exchanges.
struct Crossing {
  int index = 1;
  int exponent = 1;
  bool operator==(const Crossing&) const = default;
};

/// A braid word; crossings are listed in time order (the first acts first).
struct BraidWord {
  int n_strands = 3;
  std::vector<Crossing> crossings;

  /// Number of elementary interchanges, sum of |exponent|.
  int length() const;
  bool empty() const { return crossings.empty(); }
  bool operator==(const BraidWord&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at column " + std::to_string(position + 1)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Representative of e modulo 10 in (-5, 5].
int fold_exponent(int e);

/// Parses "s1^-2 s2^4 s1" (one word; '#' starts a comment) without canonicalizing.
BraidWord parse_raw(std::string_view text, int n_strands);
/// parse_raw followed by free_reduce.
BraidWord parse(std::string_view text, int n_strands);
std::string format(const BraidWord& word);

/// Drops zero exponents, merges neighbours on the same generator and folds exponents
/// into (-5, 5]; repeats until no two adjacent crossings share an index.
BraidWord free_reduce(const BraidWord& word);
bool is_canonical(const BraidWord& word);

BraidWord inverse(const BraidWord& word);
/// first followed by second, reduced.
BraidWord concat(const BraidWord& first, const BraidWord& second);

/// Product of generator powers; the first crossing is the rightmost factor.
/// Throws std::invalid_argument when the word's strand count differs from n.
BlockUnitary evaluate(const BraidWord& word, int n);
Matrix evaluate_matrix(const BraidWord& word, const Representation& rep);

}  // namespace fibraid
