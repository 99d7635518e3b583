#pragma once

#include <array>
#include <cstddef>

namespace crenrich {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Values of the three barycentric coordinates at a point.
struct Barycentric {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;

  /// 1-based access, matching vertex numbering.
  double operator()(int i) const;
  double min() const;
};

/// Nondegenerate triangle with vertices v1, v2, v3 (either orientation).
///
/// Numbering follows the usual cyclic convention: edge j is opposite
/// vertex j, midpoint m_j lies on edge j, and vertex indices wrap so that
/// v4 = v1, v5 = v2.
class Triangle2D {
 public:
  /// Throws GeometryError when |signed area| <= 1e-14 * (longest edge)^2.
  Triangle2D(Point2D v1, Point2D v2, Point2D v3);

  /// Vertex i with cyclic wrap: any integer is reduced mod 3 onto 1..3.
  Point2D vertex(int i) const;
  double signed_area() const { return signed_area_; }
  double area() const;
  double diameter() const;

  /// Midpoint of edge j (opposite vertex j), j in 1..3.
  Point2D midpoint(int j) const;
  Point2D centroid() const;

  Barycentric barycentric(Point2D p) const;
  Point2D from_barycentric(const Barycentric& b) const;

 private:
  std::array<Point2D, 3> v_;
  double signed_area_;
};

struct SpecialPoints {
  Point2D m1, m2, m3;
  Point2D mstar;
};

Barycentric barycentric_at(const Triangle2D& tri, Point2D p);
SpecialPoints special_points(const Triangle2D& tri);

/// Reduce any integer vertex index onto 1..3 (so 4 -> 1, 5 -> 2, 0 -> 3).
constexpr int wrap_index(int i) { return ((i - 1) % 3 + 3) % 3 + 1; }

}  // namespace crenrich
