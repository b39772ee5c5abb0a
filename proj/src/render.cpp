#include "pogroup/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "pogroup/error.hpp"

namespace pogroup {

namespace {

constexpr double kPanel = 240.0;
constexpr double kGap = 48.0;
constexpr double kPad = 24.0;
constexpr double kTitle = 28.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00")
    s = "0.00";
  return s;
}

IntVec parse_point(const std::string& text, std::size_t n) {
  IntVec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size())
        throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "--box: malformed coordinate \"" + part + "\"");
    }
  }
  if (out.size() == 1)
    out.assign(n, out[0]);
  if (out.size() != n)
    throw Error(ErrorKind::RankMismatch, "--box: expected " + std::to_string(n) + " coordinates");
  return out;
}

// Horizontal and vertical extent of a box inside the view, in data units.
// Integer points occupy unit cells centred on them.
bool clip(const Interval& iv, EndpointMode mode, std::int64_t vlo, std::int64_t vhi, double& a,
          double& b) {
  double lo = vlo - 0.5, hi = vhi + 0.5;
  if (mode == EndpointMode::Integer) {
    if (iv.lo.finite())
      lo = std::max(lo, iv.lo.value.get_d() - 0.5);
    if (iv.hi.finite())
      hi = std::min(hi, iv.hi.value.get_d() - 0.5);
  } else {
    if (iv.lo.finite())
      lo = std::max(lo, iv.lo.value.get_d());
    if (iv.hi.finite())
      hi = std::min(hi, iv.hi.value.get_d());
  }
  a = lo;
  b = hi;
  return lo < hi;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

} // namespace

ViewBox parse_view_box(const std::string& text, std::size_t n) {
  auto sep = text.find("..");
  if (sep == std::string::npos)
    throw Error(ErrorKind::InvalidInput, "--box: expected LO..HI");
  ViewBox v{parse_point(text.substr(0, sep), n), parse_point(text.substr(sep + 2), n)};
  for (std::size_t i = 0; i < n; ++i)
    if (v.lo[i] > v.hi[i])
      throw Error(ErrorKind::InvalidInput, "--box: LO exceeds HI in coordinate " + std::to_string(i));
  return v;
}

ViewBox default_view(const DownsetExpr& d) {
  ViewBox v{IntVec(d.rank(), 0), IntVec(d.rank(), 0)};
  for (const auto& p : d.pieces)
    for (std::size_t i = 0; i < d.rank(); ++i)
      if (!p.face.contains(i)) {
        v.lo[i] = std::min<std::int64_t>(v.lo[i], floor(p.apex[i]).get_num().get_si());
        v.hi[i] = std::max<std::int64_t>(v.hi[i], ceil(p.apex[i]).get_num().get_si());
      }
  for (std::size_t i = 0; i < d.rank(); ++i) {
    v.lo[i] -= 2;
    v.hi[i] += 2;
  }
  return v;
}

std::vector<Panel> component_panels(const DownsetExpr& d, const std::vector<Component>& components) {
  std::vector<Panel> panels;
  Region whole = to_region(d);
  for (const auto& c : components)
    panels.push_back({"face " + face_label(c.face),
                      {{whole, "#eeeeee"},
                       {to_region(c.downset), "#9ecae1"},
                       {local_support(d, c.face), "#3182bd"}},
                      1});
  return panels;
}

std::string render_svg(const std::vector<Panel>& panels, const ViewBox& view) {
  if (view.lo.size() != 2)
    throw Error(ErrorKind::RankMismatch, "svg rendering needs rank 2");
  const std::size_t count = std::max<std::size_t>(panels.size(), 1);
  const double width = 2 * kPad + count * kPanel + (count - 1) * kGap;
  const double height = 2 * kPad + kTitle + kPanel;
  const double xspan = view.hi[0] - view.lo[0] + 1.0, yspan = view.hi[1] - view.lo[1] + 1.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height)
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const Panel& panel = panels[k];
    const double x0 = kPad + k * (kPanel + kGap), y0 = kPad + kTitle;
    auto px = [&](double x) { return x0 + (x - (view.lo[0] - 0.5)) / xspan * kPanel; };
    auto py = [&](double y) { return y0 + kPanel - (y - (view.lo[1] - 0.5)) / yspan * kPanel; };
    out << "<g class=\"panel\" id=\"panel-" << k << "\">\n"
        << "<text x=\"" << num(x0 + kPanel / 2) << "\" y=\"" << num(kPad + kTitle / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << escape(panel.title) << "</text>\n"
        << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(kPanel)
        << "\" height=\"" << num(kPanel) << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    for (const auto& layer : panel.layers)
      for (const auto& b : layer.region.boxes()) {
        double xa, xb, ya, yb;
        if (!clip(b[0], layer.region.mode(), view.lo[0], view.hi[0], xa, xb) ||
            !clip(b[1], layer.region.mode(), view.lo[1], view.hi[1], ya, yb))
          continue;
        out << "<rect x=\"" << num(px(xa)) << "\" y=\"" << num(py(yb)) << "\" width=\""
            << num(px(xb) - px(xa)) << "\" height=\"" << num(py(ya) - py(yb)) << "\" fill=\""
            << layer.fill << "\"/>\n";
      }
    if (view.lo[0] <= 0 && 0 <= view.hi[0])
      out << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(px(0))
          << "\" y2=\"" << num(y0 + kPanel) << "\" stroke=\"black\"/>\n";
    if (view.lo[1] <= 0 && 0 <= view.hi[1])
      out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(x0 + kPanel)
          << "\" y2=\"" << num(py(0)) << "\" stroke=\"black\"/>\n";
    out << "</g>\n";
    if (k + 1 < panels.size())
      out << "<text x=\"" << num(x0 + kPanel + kGap / 2) << "\" y=\"" << num(y0 + kPanel / 2)
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"28\">&#x222A;</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const std::vector<Panel>& panels, const ViewBox& view) {
  const std::size_t n = view.lo.size();
  if (n != 1 && n != 2)
    throw Error(ErrorKind::RankMismatch, "ascii rendering needs rank 1 or 2");
  std::ostringstream out;
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const Panel& panel = panels[k];
    if (k > 0)
      out << "\n";
    out << panel.title << "\n";
    const Region* top =
        panel.primary < panel.layers.size() ? &panel.layers[panel.primary].region : nullptr;
    std::int64_t ylo = n == 2 ? view.lo[1] : 0, yhi = n == 2 ? view.hi[1] : 0;
    for (std::int64_t y = yhi; y >= ylo; --y) {
      for (std::int64_t x = view.lo[0]; x <= view.hi[0]; ++x) {
        RatVec q{Rational(static_cast<long>(x))};
        if (n == 2)
          q.push_back(Rational(static_cast<long>(y)));
        if (top && top->member(q))
          out << '#';
        else if (x == 0 && (n == 1 || y == 0))
          out << '+';
        else if (x == 0)
          out << '|';
        else if (n == 2 && y == 0)
          out << '-';
        else
          out << '.';
      }
      out << "\n";
    }
  }
  return out.str();
}

} // namespace pogroup
