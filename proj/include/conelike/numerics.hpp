#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace conelike {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr complex kI{0.0, 1.0};

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
  Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

// Angle between two directions, stable near 0 and pi (atan2 form, not acos).
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

enum class Errc {
  OutOfDomain,        // (s,t) outside the open parameter quarter-disk
  OutOfRange,         // boundary parameter outside its edge interval
  Degenerate,         // operation undefined on the flat-cone locus
  NearDegenerate,     // construction exists but an edge is below the length floor
  Inconsistent,       // dual classification routes disagree
  NotAnIntersection,  // point does not lie on both circles
  WrongRegion,        // operation defined only for another region class
  NotOnF,             // exact flat-cone construction requested off the locus
  ClosureFailure,     // assembled boundary or surface fails to close up
  NoSharedEdge,       // adjacent pieces do not share the expected edge
  SolverDiverged,     // iteration failed to converge
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace conelike
