#include "lpcat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "lpcat/errors.hpp"

namespace lpcat {

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Rows are built at fixed width; drop the trailing padding before emitting.
void append_trimmed(std::string& out, const std::string& row) {
  const std::size_t end = row.find_last_not_of(' ');
  if (end != std::string::npos) out.append(row, 0, end + 1);
  out += '\n';
}

std::string ascii_arcs(const LinkPattern& pi) {
  const int m = pi.points();
  // Cutting before point 0 lays the points out in natural label order.
  const ArcDiagram diagram = linearize(pi, m - 1);
  int max_depth = 0;
  for (const Arc& arc : diagram.arcs) max_depth = std::max(max_depth, arc.depth);

  const int label_width = static_cast<int>(std::to_string(m - 1).size());
  const int col_width = label_width + 1;
  const std::size_t cols = static_cast<std::size_t>(col_width * (m - 1) + label_width);
  std::vector<std::string> rows(static_cast<std::size_t>(max_depth + 1),
                                std::string(cols, ' '));
  for (const Arc& arc : diagram.arcs) {
    const std::size_t a = static_cast<std::size_t>(arc.open * col_width);
    const std::size_t b = static_cast<std::size_t>(arc.close * col_width);
    std::string& bar = rows[static_cast<std::size_t>(arc.depth)];
    bar[a] = '.';
    bar[b] = '.';
    for (std::size_t x = a + 1; x < b; ++x) bar[x] = '-';
    for (int r = arc.depth + 1; r <= max_depth; ++r) {
      rows[static_cast<std::size_t>(r)][a] = '|';
      rows[static_cast<std::size_t>(r)][b] = '|';
    }
  }

  std::string labels(cols, ' ');
  for (int p = 0; p < m; ++p) {
    const std::string text = std::to_string(diagram.order[static_cast<std::size_t>(p)]);
    labels.replace(static_cast<std::size_t>(p * col_width), text.size(), text);
  }

  std::string out;
  for (const std::string& row : rows) append_trimmed(out, row);
  append_trimmed(out, labels);
  return out;
}

std::string ascii_mountain(const DyckPath& d) {
  const auto& steps = d.steps();
  int height = 0, max_height = 0;
  for (Step s : steps) {
    height += s == Step::up ? 1 : -1;
    max_height = std::max(max_height, height);
  }
  std::vector<std::string> rows(static_cast<std::size_t>(max_height),
                                std::string(steps.size(), ' '));
  height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::up) {
      rows[static_cast<std::size_t>(max_height - height - 1)][i] = '/';
      ++height;
    } else {
      --height;
      rows[static_cast<std::size_t>(max_height - height - 1)][i] = '\\';
    }
  }
  std::string out;
  for (const std::string& row : rows) append_trimmed(out, row);
  return out;
}

std::string ascii_dots(const Perm123& perm) {
  const int n = perm.size();
  std::vector<std::string> rows(static_cast<std::size_t>(n),
                                std::string(static_cast<std::size_t>(n), '.'));
  for (int pos = 1; pos <= n; ++pos)
    rows[static_cast<std::size_t>(n - perm.value(pos))][static_cast<std::size_t>(pos - 1)] = '*';
  std::string out;
  for (const std::string& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string svg_chord(const LinkPattern& pi, int radius) {
  const int m = pi.points();
  const double r = radius;
  const double label_r = r * 1.12;
  const double c = r * 1.25;
  const double side = 2 * c;

  auto px = [&](int point, double rr) {
    const double angle = 2.0 * std::numbers::pi * point / m;
    return std::pair<double, double>{c + rr * std::cos(angle), c - rr * std::sin(angle)};
  };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    fixed2(side) + " " + fixed2(side) + "\">\n";
  out += "  <circle cx=\"" + fixed2(c) + "\" cy=\"" + fixed2(c) + "\" r=\"" + fixed2(r) +
         "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (const auto& [a, b] : pi.pairs()) {
    const auto [x1, y1] = px(a, r);
    const auto [x2, y2] = px(b, r);
    out += "  <line x1=\"" + fixed2(x1) + "\" y1=\"" + fixed2(y1) + "\" x2=\"" + fixed2(x2) +
           "\" y2=\"" + fixed2(y2) + "\" stroke=\"#000\"/>\n";
  }
  for (int p = 0; p < m; ++p) {
    const auto [x, y] = px(p, r);
    out += "  <circle cx=\"" + fixed2(x) + "\" cy=\"" + fixed2(y) + "\" r=\"2.00\"/>\n";
    const auto [lx, ly] = px(p, label_r);
    out += "  <text x=\"" + fixed2(lx) + "\" y=\"" + fixed2(ly) +
           "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(p) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string svg_arc(const LinkPattern& pi, int spacing) {
  const int m = pi.points();
  const double margin = 20;
  const double max_radius = spacing * (m - 1) / 2.0;
  const double base = margin + max_radius;
  const double width = 2 * margin + spacing * (m - 1);
  const double height = base + 24;

  auto x_of = [&](int point) { return margin + static_cast<double>(spacing) * point; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    fixed2(width) + " " + fixed2(height) + "\">\n";
  out += "  <line x1=\"" + fixed2(margin) + "\" y1=\"" + fixed2(base) + "\" x2=\"" +
         fixed2(width - margin) + "\" y2=\"" + fixed2(base) + "\" stroke=\"#999\"/>\n";
  for (const auto& [a, b] : pi.pairs()) {
    const double x1 = x_of(a), x2 = x_of(b);
    const double rr = (x2 - x1) / 2;
    out += "  <path d=\"M " + fixed2(x1) + " " + fixed2(base) + " A " + fixed2(rr) + " " +
           fixed2(rr) + " 0 0 1 " + fixed2(x2) + " " + fixed2(base) +
           "\" fill=\"none\" stroke=\"#000\"/>\n";
  }
  for (int p = 0; p < m; ++p) {
    out += "  <circle cx=\"" + fixed2(x_of(p)) + "\" cy=\"" + fixed2(base) + "\" r=\"2.00\"/>\n";
    out += "  <text x=\"" + fixed2(x_of(p)) + "\" y=\"" + fixed2(base + 14) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(p) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render(const TreeNode& node, const RenderSpec& spec) {
  if (spec.format == "ascii-arc") {
    switch (node.family()) {
      case Family::lp: return ascii_arcs(node.pattern());
      case Family::dyck: return ascii_mountain(node.path());
      case Family::perm: return ascii_dots(node.perm());
    }
    throw Error(Errc::domain, "unknown family");
  }
  if (spec.format == "svg-chord" || spec.format == "svg-arc") {
    if (node.family() != Family::lp)
      throw Error(Errc::domain, spec.format + " renders link patterns only");
    return spec.format == "svg-chord" ? svg_chord(node.pattern(), spec.radius)
                                      : svg_arc(node.pattern(), spec.spacing);
  }
  throw Error(Errc::unknown_format, "unrecognized render format " + spec.format);
}

}  // namespace lpcat
