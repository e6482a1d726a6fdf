#pragma once

#include <string>

#include "fibraid/braid_word.hpp"

namespace fibraid {

/// Strand diagrams with time running left to right and strand 1 on top. The word is
/// canonicalized first and each exponent is drawn as |e| single crossings.
///
/// ASCII: one 5-column cell per crossing; the middle character is '/' when the strand
/// moving down passes over (positive exponent) and '\' when the one moving up does.
std::string render_ascii(const BraidWord& word);

/// SVG: each strand keeps one colour; the under strand is broken where it is crossed.
std::string render_svg(const BraidWord& word);

}  // namespace fibraid
