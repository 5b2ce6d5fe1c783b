#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hive/render.hpp"

namespace hive {
namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 256> kCyclicMap{{
#include "cyclic_colormap.inc"
}};

}  // namespace

std::string Color::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

Color axis_color(double angle) {
  constexpr double kTurn = 2.0 * std::numbers::pi;
  double t = std::fmod(angle, kTurn);
  if (t < 0.0) t += kTurn;
  auto index = static_cast<std::size_t>(std::floor(t / kTurn * 256.0 + 1e-9)) % 256;
  const auto& c = kCyclicMap[index];
  return {c[0], c[1], c[2]};
}

}  // namespace hive
