#include "svg.hpp"

#include <cstdio>

namespace cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, int size_px) : title_(std::move(title)), size_(size_px) {}

double SvgPlot::px(double delta) const { return margin_ + delta * (size_ - 2 * margin_); }
double SvgPlot::py(double r) const { return size_ - margin_ - r * (size_ - 2 * margin_); }

void SvgPlot::begin_layer(const std::string& id) { body_ += "<g id=\"" + escape(id) + "\">\n"; }
void SvgPlot::end_layer() { body_ += "</g>\n"; }

void SvgPlot::point(double delta, double r, double radius, const std::string& color) {
  body_ += "<circle cx=\"" + num(px(delta)) + "\" cy=\"" + num(py(r)) + "\" r=\"" + num(radius) + "\" fill=\"" +
           color + "\"/>\n";
}

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& points, const std::string& color, double width,
                       const std::string& label) {
  if (points.empty()) return;
  std::string pts;
  for (const auto& [d, r] : points) {
    if (!pts.empty()) pts += ' ';
    pts += num(px(d)) + "," + num(py(r));
  }
  body_ += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num(width) +
           "\"/>\n";
  if (!label.empty()) legend_.push_back("<tspan fill=\"" + color + "\">" + escape(label) + "</tspan>");
}

void SvgPlot::rect(double delta0, double r0, double delta1, double r1, const std::string& fill, double opacity) {
  body_ += "<rect x=\"" + num(px(delta0)) + "\" y=\"" + num(py(r1)) + "\" width=\"" + num(px(delta1) - px(delta0)) +
           "\" height=\"" + num(py(r0) - py(r1)) + "\" fill=\"" + fill + "\" fill-opacity=\"" + num(opacity) +
           "\"/>\n";
}

std::string SvgPlot::str() const {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<!-- generator: codedomain " CODEDOMAIN_VERSION " -->\n";
  std::string side = std::to_string(size_);
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + side + "\" height=\"" + side + "\" viewBox=\"0 0 " +
       side + " " + side + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(px(0)) + "\" y=\"20\">" + escape(title_) + "</text>\n";
  s += "<g id=\"axes\" stroke=\"black\" fill=\"none\">\n";
  s += "<rect x=\"" + num(px(0)) + "\" y=\"" + num(py(1)) + "\" width=\"" + num(px(1) - px(0)) + "\" height=\"" +
       num(py(0) - py(1)) + "\"/>\n";
  for (double t : {0.25, 0.5, 0.75}) {
    s += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(px(t)) + "\" y2=\"" + num(py(0) + 5) +
         "\"/>\n";
    s += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(py(t)) + "\" x2=\"" + num(px(0) - 5) + "\" y2=\"" + num(py(t)) +
         "\"/>\n";
  }
  s += "</g>\n";
  s += "<g id=\"labels\">\n";
  for (double t : {0.0, 0.5, 1.0}) {
    s += "<text x=\"" + num(px(t) - 6) + "\" y=\"" + num(py(0) + 18) + "\">" + num(t).substr(0, 3) + "</text>\n";
    s += "<text x=\"" + num(px(0) - 30) + "\" y=\"" + num(py(t) + 4) + "\">" + num(t).substr(0, 3) + "</text>\n";
  }
  s += "<text x=\"" + num(px(0.5)) + "\" y=\"" + num(size_ - 8.0) + "\">delta</text>\n";
  s += "<text x=\"8\" y=\"" + num(py(0.5)) + "\">R</text>\n";
  if (!legend_.empty()) {
    s += "<text x=\"" + num(px(0.55)) + "\" y=\"" + num(py(1) + 16) + "\">";
    for (std::size_t i = 0; i < legend_.size(); ++i) s += (i ? " " : "") + legend_[i];
    s += "</text>\n";
  }
  s += "</g>\n";
  s += body_;
  s += "</svg>\n";
  return s;
}

}  // namespace cli
