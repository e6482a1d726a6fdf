#include "fibraid/braid_word.hpp"

#include <cctype>
#include <cstdlib>

namespace fibraid {

int BraidWord::length() const {
  int total = 0;
  for (const auto& c : crossings) total += std::abs(c.exponent);
  return total;
}

int fold_exponent(int e) {
  int r = ((e % 10) + 10) % 10;
  return r > 5 ? r - 10 : r;
}

BraidWord parse_raw(std::string_view text, int n_strands) {
  if (n_strands < 2) throw std::invalid_argument("parse: a braid needs at least 2 strands");
  BraidWord word{n_strands, {}};
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n'))
      ++i;
  };
  auto read_int = [&](bool allow_sign) {
    const std::size_t start = i;
    bool negative = false;
    if (allow_sign && i < n && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected digits", i);
    long long v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", start);
      ++i;
    }
    return static_cast<int>(negative ? -v : v);
  };

  for (;;) {
    skip_ws();
    if (i < n && text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (i >= n) break;
    const std::size_t item_start = i;
    if (text[i] != 's') throw ParseError("expected 's'", i);
    ++i;
    const int index = read_int(false);
    if (index < 1 || index >= n_strands)
      throw ParseError("generator index " + std::to_string(index) + " out of range for " +
                           std::to_string(n_strands) + " strands",
                       item_start);
    int exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      exponent = read_int(true);
    }
    if (i < n && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n' ||
                   text[i] == '#'))
      throw ParseError("unexpected character", i);
    word.crossings.push_back({index, exponent});
  }
  return word;
}

BraidWord parse(std::string_view text, int n_strands) {
  return free_reduce(parse_raw(text, n_strands));
}

std::string format(const BraidWord& word) {
  std::string out;
  for (const auto& c : word.crossings) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(c.index);
    if (c.exponent != 1) out += '^' + std::to_string(c.exponent);
  }
  return out;
}

BraidWord free_reduce(const BraidWord& word) {
  BraidWord out{word.n_strands, {}};
  for (const auto& c : word.crossings) {
    const int e = fold_exponent(c.exponent);
    if (e == 0) continue;
    if (!out.crossings.empty() && out.crossings.back().index == c.index) {
      const int merged = fold_exponent(out.crossings.back().exponent + e);
      if (merged == 0)
        out.crossings.pop_back();
      else
        out.crossings.back().exponent = merged;
    } else {
      out.crossings.push_back({c.index, e});
    }
  }
  return out;
}

bool is_canonical(const BraidWord& word) {
  for (std::size_t k = 0; k < word.crossings.size(); ++k) {
    const auto& c = word.crossings[k];
    if (c.exponent == 0 || fold_exponent(c.exponent) != c.exponent) return false;
    if (k > 0 && word.crossings[k - 1].index == c.index) return false;
  }
  return true;
}

BraidWord inverse(const BraidWord& word) {
  BraidWord out{word.n_strands, {}};
  for (auto it = word.crossings.rbegin(); it != word.crossings.rend(); ++it)
    out.crossings.push_back({it->index, -it->exponent});
  return out;
}

BraidWord concat(const BraidWord& first, const BraidWord& second) {
  if (first.n_strands != second.n_strands)
    throw std::invalid_argument("concat: strand counts differ");
  BraidWord joined = first;
  joined.crossings.insert(joined.crossings.end(), second.crossings.begin(),
                          second.crossings.end());
  return free_reduce(joined);
}

Matrix evaluate_matrix(const BraidWord& word, const Representation& rep) {
  if (word.n_strands != rep.anyons())
    throw std::invalid_argument("evaluate: word has " + std::to_string(word.n_strands) +
                                " strands, representation has " +
                                std::to_string(rep.anyons()));
  Matrix u = rep.identity();
  for (const auto& c : word.crossings) u = rep.power(c.index, c.exponent) * u;
  return u;
}

BlockUnitary evaluate(const BraidWord& word, int n) {
  if (word.n_strands != n)
    throw std::invalid_argument("evaluate: word has " + std::to_string(word.n_strands) +
                                " strands, expected " + std::to_string(n));
  const auto& rep = representation(n);
  return {evaluate_matrix(word, rep), rep.basis().blocks()};
}

}  // namespace fibraid
