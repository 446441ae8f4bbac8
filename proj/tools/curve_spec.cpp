#include "curve_spec.hpp"

#include <sstream>
#include <vector>

#include "codedomain/errors.hpp"
#include "output.hpp"

namespace cli {

namespace {

using codedomain::BoundCurve;
using codedomain::Rational;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

Rational rational_arg(const std::string& text, const std::string& spec) {
  try {
    return codedomain::parse_rational(text);
  } catch (const codedomain::ContractViolation&) {
    throw ConfigError("curve '" + spec + "': '" + text + "' is not a rational");
  }
}

unsigned alphabet_arg(const std::string& text, const std::string& spec) {
  unsigned long q = 0;
  try {
    std::size_t used = 0;
    q = std::stoul(text, &used);
    if (used != text.size()) q = 0;
  } catch (const std::exception&) {
    q = 0;
  }
  if (q < 2 || q > 256) throw ConfigError("curve '" + spec + "': alphabet must be an integer in [2, 256]");
  return static_cast<unsigned>(q);
}

}  // namespace

BoundCurve parse_curve(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("curve '" + spec + "': expected kind:argument");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  try {
    if (kind == "synthetic") {
      if (arg == "diag") {
        return BoundCurve::polyline({codedomain::make_point(Rational(1), Rational(0)),
                                     codedomain::make_point(Rational(0), Rational(1))});
      }
      if (arg.rfind("const:", 0) == 0) {
        Rational r = rational_arg(arg.substr(6), spec);
        return BoundCurve::polyline({codedomain::make_point(r, Rational(0)), codedomain::make_point(r, Rational(1))});
      }
      throw ConfigError("curve '" + spec + "': unknown synthetic curve");
    }
    if (kind == "vg") return BoundCurve::vg(alphabet_arg(arg, spec));
    if (kind == "gv") return BoundCurve::gv_lower(alphabet_arg(arg, spec));
    if (kind == "hamming") return BoundCurve::hamming(alphabet_arg(arg, spec));
    if (kind == "plotkin") return BoundCurve::plotkin_zero(alphabet_arg(arg, spec));
    if (kind == "singleton") return BoundCurve::singleton(alphabet_arg(arg, spec));
    if (kind == "polyline") {
      codedomain::Polyline vertices;
      for (const auto& v : split(arg, ';')) {
        auto xy = split(v, ',');
        if (xy.size() != 2) throw ConfigError("curve '" + spec + "': vertices are 'delta,R' pairs");
        vertices.push_back(codedomain::make_point(rational_arg(xy[1], spec), rational_arg(xy[0], spec)));
      }
      return BoundCurve::polyline(std::move(vertices));
    }
  } catch (const codedomain::ContractViolation& e) {
    throw ConfigError("curve '" + spec + "': " + e.what());
  }
  throw ConfigError("curve '" + spec + "': unknown kind '" + kind + "'");
}

}  // namespace cli
