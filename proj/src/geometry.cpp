#include "crenrich/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crenrich/errors.hpp"

namespace crenrich {

namespace {

double norm2(Point2D a) { return a.x * a.x + a.y * a.y; }

}  // namespace

double Barycentric::operator()(int i) const {
  switch (wrap_index(i)) {
    case 1:
      return l1;
    case 2:
      return l2;
    default:
      return l3;
  }
}

double Barycentric::min() const { return std::min({l1, l2, l3}); }

Triangle2D::Triangle2D(Point2D v1, Point2D v2, Point2D v3) : v_{v1, v2, v3} {
  for (const auto& v : v_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw GeometryError("triangle vertex has non-finite coordinates");
    }
  }
  const Point2D e3 = v2 - v1;
  const Point2D e2 = v3 - v1;
  signed_area_ = 0.5 * (e3.x * e2.y - e3.y * e2.x);
  const double longest = std::max({norm2(v2 - v1), norm2(v3 - v2), norm2(v1 - v3)});
  if (std::abs(signed_area_) <= 1e-14 * longest) {
    std::ostringstream msg;
    msg << "degenerate triangle (" << v1.x << "," << v1.y << ") (" << v2.x << ","
        << v2.y << ") (" << v3.x << "," << v3.y << "), signed area " << signed_area_;
    throw GeometryError(msg.str());
  }
}

Point2D Triangle2D::vertex(int i) const { return v_[wrap_index(i) - 1]; }

double Triangle2D::area() const { return std::abs(signed_area_); }

double Triangle2D::diameter() const {
  return std::sqrt(std::max({norm2(v_[1] - v_[0]), norm2(v_[2] - v_[1]), norm2(v_[0] - v_[2])}));
}

Point2D Triangle2D::midpoint(int j) const {
  return 0.5 * (vertex(j + 1) + vertex(j + 2));
}

Point2D Triangle2D::centroid() const { return (1.0 / 3.0) * (v_[0] + v_[1] + v_[2]); }

Barycentric Triangle2D::barycentric(Point2D p) const {
  // Sub-triangle areas opposite each vertex, over the full signed area.
  auto cross = [](Point2D a, Point2D b, Point2D c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  };
  const double inv = 1.0 / signed_area_;
  Barycentric b;
  b.l1 = cross(p, v_[1], v_[2]) * inv;
  b.l2 = cross(v_[0], p, v_[2]) * inv;
  b.l3 = 1.0 - b.l1 - b.l2;
  return b;
}

Point2D Triangle2D::from_barycentric(const Barycentric& b) const {
  return {b.l1 * v_[0].x + b.l2 * v_[1].x + b.l3 * v_[2].x,
          b.l1 * v_[0].y + b.l2 * v_[1].y + b.l3 * v_[2].y};
}

Barycentric barycentric_at(const Triangle2D& tri, Point2D p) { return tri.barycentric(p); }

SpecialPoints special_points(const Triangle2D& tri) {
  return {tri.midpoint(1), tri.midpoint(2), tri.midpoint(3), tri.centroid()};
}

}  // namespace crenrich
