#include "ncsm/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncsm {

namespace {

constexpr int kRowGap = 40;
constexpr int kTop = 40;
constexpr int kLeftX = 80;
constexpr int kRightX = 320;

int row_y(int index) { return kTop + (index - 1) * kRowGap; }

}  // namespace

std::string render_svg(const Instance& instance, const Matching& matching,
                       const RenderOptions& options) {
  const int rows = std::max({instance.n_men(), instance.n_women(), 1});
  const int height = kTop * 2 + (rows - 1) * kRowGap;
  const int width = kLeftX + kRightX;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto line = [&](Pair p, const char* style) {
    out << "<line x1=\"" << kLeftX << "\" y1=\"" << row_y(p.man) << "\" x2=\""
        << kRightX << "\" y2=\"" << row_y(p.woman) << "\" " << style
        << "/>\n";
  };
  if (options.show_acceptable) {
    out << "<g class=\"acceptable\">\n";
    for (Pair p : instance.acceptable_pairs()) {
      line(p, "stroke=\"#cccccc\" stroke-width=\"1\"");
    }
    out << "</g>\n";
  }
  out << "<g class=\"matching\">\n";
  for (Pair p : matching.pairs()) {
    line(p, "stroke=\"black\" stroke-width=\"2.5\"");
  }
  out << "</g>\n";
  if (!options.overlay.empty()) {
    out << "<g class=\"blocking\">\n";
    for (Pair p : options.overlay) {
      line(p, "stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
    }
    out << "</g>\n";
  }

  out << "<g class=\"agents\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (int m = 1; m <= instance.n_men(); ++m) {
    out << "<circle cx=\"" << kLeftX << "\" cy=\"" << row_y(m)
        << "\" r=\"5\" fill=\"black\"/>";
    out << "<text x=\"" << kLeftX - 12 << "\" y=\"" << row_y(m) + 5
        << "\" text-anchor=\"end\">m" << m << "</text>\n";
  }
  for (int w = 1; w <= instance.n_women(); ++w) {
    out << "<circle cx=\"" << kRightX << "\" cy=\"" << row_y(w)
        << "\" r=\"5\" fill=\"black\"/>";
    out << "<text x=\"" << kRightX + 12 << "\" y=\"" << row_y(w) + 5
        << "\">w" << w << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_ascii(const Instance& instance, const Matching& matching,
                         const RenderOptions& options) {
  // Character canvas; each agent gets every other row so edges have room.
  const int rows = std::max({instance.n_men(), instance.n_women(), 1});
  const int height = 2 * rows - 1;
  const int label = 6;
  const int gap = 30;
  const int width = 2 * label + gap + 2;
  std::vector<std::string> canvas(static_cast<std::size_t>(height),
                                  std::string(static_cast<std::size_t>(width), ' '));
  const int left = label;
  const int right = label + gap + 1;

  auto draw = [&](Pair p, char ink) {
    const int y0 = 2 * (p.man - 1);
    const int y1 = 2 * (p.woman - 1);
    for (int x = left + 1; x < right; ++x) {
      const double t = static_cast<double>(x - left) / (right - left);
      const int y = static_cast<int>(std::lround(y0 + t * (y1 - y0)));
      char& cell = canvas[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      // Matching ink wins over overlay ink.
      if (cell == ' ' || ink == '*') cell = ink;
    }
  };
  for (Pair p : options.overlay) draw(p, '.');
  for (Pair p : matching.pairs()) draw(p, '*');

  for (int m = 1; m <= instance.n_men(); ++m) {
    std::string name = "m" + std::to_string(m);
    std::string& row = canvas[static_cast<std::size_t>(2 * (m - 1))];
    row.replace(static_cast<std::size_t>(std::max(0, left - 1 - static_cast<int>(name.size()))),
                name.size(), name);
    row[static_cast<std::size_t>(left)] = 'o';
  }
  for (int w = 1; w <= instance.n_women(); ++w) {
    std::string name = "w" + std::to_string(w);
    std::string& row = canvas[static_cast<std::size_t>(2 * (w - 1))];
    row[static_cast<std::size_t>(right)] = 'o';
    row.replace(static_cast<std::size_t>(right + 2),
                std::min(name.size(), row.size() - right - 2), name);
  }

  std::ostringstream out;
  for (std::string& row : canvas) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << "\n";
  }
  if (!options.overlay.empty()) out << "* matching   . noncrossing blocking pair\n";
  return out.str();
}

}  // namespace ncsm
