#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crenrich/geometry.hpp"

namespace crenrich {

/// Immutable triangulation: vertex coordinates plus 0-based index triples.
///
/// Construction validates every index, rejects degenerate triangles and
/// duplicated triangles (same unordered vertex set), and builds a bucket
/// grid used by `locate`.
class TriMesh {
 public:
  using Connectivity = std::array<std::size_t, 3>;

  TriMesh(std::vector<Point2D> vertices, std::vector<Connectivity> triangles);

  std::size_t size() const { return triangles_.size(); }
  const std::vector<Point2D>& vertices() const { return vertices_; }
  const std::vector<Connectivity>& connectivity() const { return triangles_; }
  const Triangle2D& triangle(std::size_t t) const { return geometry_.at(t); }
  const std::vector<Triangle2D>& triangles() const { return geometry_; }

  double total_area() const;
  /// Largest triangle diameter (the mesh size h).
  double max_diameter() const;

  /// Lowest-index triangle whose barycentric coordinates at p are all
  /// >= -1e-12, or nullopt.
  std::optional<std::size_t> locate(Point2D p) const;

 private:
  void build_buckets();
  std::size_t bucket_of(double x, double y) const;

  std::vector<Point2D> vertices_;
  std::vector<Connectivity> triangles_;
  std::vector<Triangle2D> geometry_;

  Point2D lo_{}, hi_{};
  std::size_t nx_ = 1, ny_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

inline constexpr double kLocateTolerance = 1e-12;

/// Parse Triangle-format .node and .ele texts. The index base (0 or 1) is
/// taken from the first vertex index in the .node file. Attributes and
/// boundary markers are read and discarded.
TriMesh load_triangle_mesh(std::string_view node_text, std::string_view ele_text);

/// File variant; parse errors carry the file name and line number.
TriMesh load_triangle_mesh_files(const std::filesystem::path& node_path,
                                 const std::filesystem::path& ele_path);

/// Which diagonal cuts each grid cell. Anti runs bottom-right to top-left.
enum class GridDiagonal { Anti, Main };

/// Unit square split into n x n cells, each cut along the same diagonal,
/// giving 2 n^2 triangles ordered cell by cell, row-major from the bottom.
TriMesh uniform_grid_mesh(int n, GridDiagonal diagonal = GridDiagonal::Anti);

std::optional<std::size_t> locate(const TriMesh& mesh, Point2D p);

/// Serialize in Triangle format (1-based indices, no attributes or markers).
std::string to_node_text(const TriMesh& mesh);
std::string to_ele_text(const TriMesh& mesh);

}  // namespace crenrich
