#include "fibraid/render.hpp"

#include <array>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <vector>

namespace fibraid {

namespace {

struct Step {
  int index;
  int sign;
};

std::vector<Step> steps_of(const BraidWord& word) {
  std::vector<Step> out;
  for (const auto& c : free_reduce(word).crossings)
    for (int k = 0; k < std::abs(c.exponent); ++k) out.push_back({c.index, c.exponent > 0 ? 1 : -1});
  return out;
}

}  // namespace

std::string render_ascii(const BraidWord& word) {
  const int n = word.n_strands;
  const auto steps = steps_of(word);
  const int rows = 2 * n - 1;
  std::vector<std::string> lines(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) lines[static_cast<std::size_t>(r)] = (r % 2 == 0) ? "--" : "  ";
  for (const auto& s : steps) {
    const int top = 2 * (s.index - 1);
    for (int r = 0; r < rows; ++r) {
      std::string cell;
      if (r == top) cell = "-. .-";
      else if (r == top + 1) cell = s.sign > 0 ? "  /  " : "  \\  ";
      else if (r == top + 2) cell = "-' '-";
      else cell = (r % 2 == 0) ? "-----" : "     ";
      lines[static_cast<std::size_t>(r)] += cell;
    }
  }
  std::ostringstream out;
  out << "# " << format(free_reduce(word)) << "\n";
  for (int r = 0; r < rows; ++r) {
    if (r % 2 == 0)
      out << (r / 2 + 1) << " " << lines[static_cast<std::size_t>(r)] << "--\n";
    else
      out << "  " << lines[static_cast<std::size_t>(r)] << "  \n";
  }
  return out.str();
}

std::string render_svg(const BraidWord& word) {
  static constexpr std::array<const char*, 8> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                      "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  const int n = word.n_strands;
  const auto steps = steps_of(word);
  const double dx = 40, dy = 30, margin = 20;
  const double width = 2 * margin + dx * (static_cast<double>(steps.size()) + 1);
  const double height = 2 * margin + dy * (n - 1);
  auto y_of = [&](int pos) { return margin + dy * (pos - 1); };
  std::vector<int> strand_at(static_cast<std::size_t>(n));
  std::iota(strand_at.begin(), strand_at.end(), 0);

  std::ostringstream body;
  char buf[256];
  auto straight = [&](int strand, int pos, double x0, double x1) {
    std::snprintf(buf, sizeof buf,
                  "<path d=\"M%.1f %.1f H%.1f\" stroke=\"%s\" stroke-width=\"3\" fill=\"none\"/>\n",
                  x0, y_of(pos), x1, kColors[static_cast<std::size_t>(strand) % kColors.size()]);
    body << buf;
  };
  auto curve = [&](int strand, int from, int to, double x0, double x1, bool over) {
    const double xm = 0.5 * (x0 + x1);
    if (over) {
      std::snprintf(buf, sizeof buf,
                    "<path d=\"M%.1f %.1f C%.1f %.1f %.1f %.1f %.1f %.1f\" stroke=\"white\" "
                    "stroke-width=\"9\" fill=\"none\"/>\n",
                    x0, y_of(from), xm, y_of(from), xm, y_of(to), x1, y_of(to));
      body << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<path d=\"M%.1f %.1f C%.1f %.1f %.1f %.1f %.1f %.1f\" stroke=\"%s\" "
                  "stroke-width=\"3\" fill=\"none\"/>\n",
                  x0, y_of(from), xm, y_of(from), xm, y_of(to), x1, y_of(to),
                  kColors[static_cast<std::size_t>(strand) % kColors.size()]);
    body << buf;
  };

  double x = margin;
  for (int p = 1; p <= n; ++p) straight(strand_at[static_cast<std::size_t>(p - 1)], p, x, x + dx / 2);
  x += dx / 2;
  for (const auto& s : steps) {
    const int i = s.index;
    for (int p = 1; p <= n; ++p)
      if (p != i && p != i + 1) straight(strand_at[static_cast<std::size_t>(p - 1)], p, x, x + dx);
    const int upper = strand_at[static_cast<std::size_t>(i - 1)];
    const int lower = strand_at[static_cast<std::size_t>(i)];
    // Positive: the strand moving down (upper -> lower position) passes over.
    const bool upper_over = s.sign > 0;
    if (upper_over) {
      curve(lower, i + 1, i, x, x + dx, false);
      curve(upper, i, i + 1, x, x + dx, true);
    } else {
      curve(upper, i, i + 1, x, x + dx, false);
      curve(lower, i + 1, i, x, x + dx, true);
    }
    std::swap(strand_at[static_cast<std::size_t>(i - 1)], strand_at[static_cast<std::size_t>(i)]);
    x += dx;
  }
  for (int p = 1; p <= n; ++p) straight(strand_at[static_cast<std::size_t>(p - 1)], p, x, x + dx / 2);

  std::ostringstream out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                width, height, width, height);
  out << buf << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<title>" << format(free_reduce(word)) << "</title>\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace fibraid
