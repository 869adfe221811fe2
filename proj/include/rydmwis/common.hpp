#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rydmwis {

// Error taxonomy used across the toolkit. Everything derives from
// std::runtime_error so callers can be as coarse or fine as they like.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parameter_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct placement_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct routing_error : placement_error {
  using placement_error::placement_error;
};
struct solver_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct system_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct decode_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

/// 3D point. 2D layouts simply keep z = 0.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
};

inline double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }
inline double dist2(const Vec3& a, const Vec3& b) { return (a - b).norm2(); }

/// Formats a double with enough digits to round-trip (and at least the
/// 12 significant digits the file formats promise).
inline std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace rydmwis
