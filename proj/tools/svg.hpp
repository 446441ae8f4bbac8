#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cli {

/// Static SVG figure of the unit square with delta on the horizontal axis and
/// R on the vertical one. Content goes into named layer groups.
class SvgPlot {
 public:
  explicit SvgPlot(std::string title, int size_px = 640);

  void begin_layer(const std::string& id);
  void end_layer();

  void point(double delta, double r, double radius, const std::string& color);
  void polyline(const std::vector<std::pair<double, double>>& points, const std::string& color, double width,
                const std::string& label = "");
  void rect(double delta0, double r0, double delta1, double r1, const std::string& fill, double opacity);

  std::string str() const;

 private:
  double px(double delta) const;
  double py(double r) const;

  std::string title_;
  int size_;
  int margin_ = 48;
  std::string body_;
  std::vector<std::string> legend_;
};

}  // namespace cli
