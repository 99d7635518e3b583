#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "crenrich/errors.hpp"
#include "crenrich/mesh.hpp"
#include "test_support.hpp"

using namespace crenrich;

namespace {

// Unit square cut into two triangles, in 1-based and 0-based variants with
// comments, attributes and boundary markers sprinkled in.
constexpr const char* kNode1 =
    "# square\n"
    "4 2 1 1\n"
    "1 0.0 0.0  7.5 1\n"
    "2 1.0 0.0  7.5 1\n"
    "3 1.0 1.0  7.5 1   # trailing comment\n"
    "4 0.0 1.0  7.5 1\n";
constexpr const char* kEle1 =
    "2 3 0\n"
    "1 1 2 3\n"
    "\n"
    "2 1 3 4\n";
constexpr const char* kNode0 =
    "4 2 0 0\n"
    "0 0.0 0.0\n"
    "1 1.0 0.0\n"
    "2 1.0 1.0\n"
    "3 0.0 1.0\n";
constexpr const char* kEle0 =
    "2 3 1\n"
    "0 0 1 2 -1.5\n"
    "1 0 2 3 -1.5\n";

std::size_t brute_force_locate(const TriMesh& mesh, Point2D p) {
  for (std::size_t t = 0; t < mesh.size(); ++t) {
    if (mesh.triangle(t).barycentric(p).min() >= -kLocateTolerance) return t;
  }
  return mesh.size();
}

std::size_t parse_error_line(const std::string& node, const std::string& ele) {
  try {
    (void)load_triangle_mesh(node, ele);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected a parse error";
  return 0;
}

}  // namespace

TEST(LoadTriangleMesh, SmallestMesh) {
  const TriMesh m = load_triangle_mesh("3 2 0 0\n1 0 0\n2 1 0\n3 0 1\n", "1 3 0\n1 1 2 3\n");
  EXPECT_EQ(m.size(), 1u);
  EXPECT_DOUBLE_EQ(m.total_area(), 0.5);
}

TEST(LoadTriangleMesh, ZeroAndOneBasedGiveIdenticalMesh) {
  const TriMesh a = load_triangle_mesh(kNode1, kEle1);
  const TriMesh b = load_triangle_mesh(kNode0, kEle0);
  ASSERT_EQ(a.vertices().size(), b.vertices().size());
  for (std::size_t i = 0; i < a.vertices().size(); ++i) EXPECT_EQ(a.vertices()[i], b.vertices()[i]);
  EXPECT_EQ(a.connectivity(), b.connectivity());
}

TEST(LoadTriangleMesh, OutOfRangeIndexReportsLine) {
  const std::string ele = "1 3 0\n1 1 2 99\n";
  EXPECT_EQ(parse_error_line(kNode1, ele), 2u);
}

TEST(LoadTriangleMesh, MalformedInputs) {
  // Header problems.
  EXPECT_EQ(parse_error_line("4 3 0 0\n", kEle1), 1u);
  EXPECT_EQ(parse_error_line("four 2 0 0\n", kEle1), 1u);
  EXPECT_EQ(parse_error_line("4 2 0 2\n", kEle1), 1u);
  // Count mismatch: header promises 5 vertices.
  EXPECT_EQ(parse_error_line("5 2 0 0\n1 0 0\n2 1 0\n3 1 1\n4 0 1\n", kEle1), 5u);
  // Extra row beyond the declared count.
  EXPECT_EQ(parse_error_line(kNode0, "1 3 0\n0 0 1 2\n1 0 2 3\n"), 3u);
  // Wrong number of fields in a vertex row.
  EXPECT_EQ(parse_error_line("3 2 0 0\n1 0 0\n2 1 0 9\n3 0 1\n", "1 3 0\n1 1 2 3\n"), 3u);
  // Non-consecutive vertex numbering.
  EXPECT_EQ(parse_error_line("3 2 0 0\n1 0 0\n3 1 0\n4 0 1\n", "1 3 0\n1 1 2 3\n"), 3u);
  // Quadratic elements are not supported.
  EXPECT_EQ(parse_error_line(kNode1, "1 6 0\n1 1 2 3 4 1 2\n"), 1u);
  // Duplicate triangle, listed with a different vertex order.
  EXPECT_EQ(parse_error_line(kNode1, "2 3 0\n1 1 2 3\n2 3 1 2\n"), 3u);
  // Degenerate triangle.
  EXPECT_EQ(parse_error_line("3 2 0 0\n1 0 0\n2 1 1\n3 2 2\n", "1 3 0\n1 1 2 3\n"), 2u);
  // Empty .ele.
  EXPECT_THROW((void)load_triangle_mesh(kNode1, ""), ParseError);
}

TEST(LoadTriangleMesh, FilesRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "crenrich_mesh_test";
  std::filesystem::create_directories(dir);
  const TriMesh grid = uniform_grid_mesh(3);
  std::ofstream(dir / "g.node") << to_node_text(grid);
  std::ofstream(dir / "g.ele") << to_ele_text(grid);
  const TriMesh back = load_triangle_mesh_files(dir / "g.node", dir / "g.ele");
  EXPECT_EQ(back.connectivity(), grid.connectivity());
  for (std::size_t i = 0; i < grid.vertices().size(); ++i) EXPECT_EQ(back.vertices()[i], grid.vertices()[i]);
  EXPECT_THROW((void)load_triangle_mesh_files(dir / "missing.node", dir / "g.ele"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST(TriMesh, ConstructorValidates) {
  const std::vector<Point2D> v{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  EXPECT_THROW(TriMesh(v, {{0, 1, 7}}), ArgumentError);
  EXPECT_THROW(TriMesh(v, {{0, 1, 2}, {2, 0, 1}}), ArgumentError);
  EXPECT_THROW(TriMesh(v, {}), ArgumentError);
  EXPECT_THROW(TriMesh({{0, 0}, {1, 1}, {2, 2}}, {{0, 1, 2}}), GeometryError);
}

TEST(UniformGrid, Sizes) {
  EXPECT_EQ(uniform_grid_mesh(1).size(), 2u);
  EXPECT_EQ(uniform_grid_mesh(19).size(), 722u);
  EXPECT_EQ(uniform_grid_mesh(99).size(), 19602u);
  EXPECT_THROW((void)uniform_grid_mesh(0), ArgumentError);
  EXPECT_THROW((void)uniform_grid_mesh(-3), ArgumentError);
}

TEST(UniformGrid, TilesTheUnitSquare) {
  for (int n : {1, 2, 7, 19}) {
    for (GridDiagonal d : {GridDiagonal::Anti, GridDiagonal::Main}) {
      const TriMesh m = uniform_grid_mesh(n, d);
      EXPECT_EQ(m.size(), static_cast<std::size_t>(2 * n * n));
      EXPECT_NEAR(m.total_area(), 1.0, 1e-12);
      EXPECT_NEAR(m.max_diameter(), std::sqrt(2.0) / n, 1e-14);
    }
  }
}

TEST(UniformGrid, DiagonalOrientation) {
  // Anti: the cell diagonal joins (1,0) and (0,1), so (0.9,0.9) is in the
  // second triangle. Main: the diagonal joins (0,0) and (1,1).
  const TriMesh anti = uniform_grid_mesh(1, GridDiagonal::Anti);
  EXPECT_EQ(locate(anti, {0.9, 0.9}), 1u);
  EXPECT_EQ(locate(anti, {0.9, 0.05}), 0u);
  const TriMesh main = uniform_grid_mesh(1, GridDiagonal::Main);
  EXPECT_EQ(locate(main, {0.9, 0.05}), 0u);
  EXPECT_EQ(locate(main, {0.05, 0.9}), 1u);
}

TEST(Locate, Examples) {
  const TriMesh m = uniform_grid_mesh(1);
  EXPECT_EQ(locate(m, {0.1, 0.1}), 0u);  // lower-left triangle
  EXPECT_FALSE(locate(m, {2.0, 2.0}).has_value());
  EXPECT_FALSE(locate(m, {-1e-6, 0.5}).has_value());
  // On the shared diagonal both triangles qualify; the lower index wins.
  EXPECT_EQ(locate(m, {0.5, 0.5}), 0u);
}

TEST(Locate, AgreesWithBruteForce) {
  const TriMesh m = uniform_grid_mesh(13);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const Point2D p{u(rng), u(rng)};
    const auto got = locate(m, p);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, brute_force_locate(m, p));
  }
  // Grid nodes and edge points: tie-break must still match the scan.
  for (int i = 0; i <= 13; ++i) {
    for (int j = 0; j <= 13; ++j) {
      const Point2D p{i / 13.0, j / 13.0};
      EXPECT_EQ(locate(m, p).value_or(m.size()), brute_force_locate(m, p));
      const Point2D q{(i + 0.5) / 13.0, j / 13.0};
      EXPECT_EQ(locate(m, q).value_or(m.size()), brute_force_locate(m, q));
    }
  }
}

TEST(Locate, UnstructuredMesh) {
  // Fan of triangles around an off-centre interior vertex.
  const std::vector<Point2D> v{{0, 0}, {2, 0}, {3, 1.5}, {1, 3}, {-1, 1.5}, {0.8, 1.1}};
  const TriMesh m(v, {{0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5}});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-1.5, 3.5), uy(-0.5, 3.5);
  for (int k = 0; k < 1000; ++k) {
    const Point2D p{ux(rng), uy(rng)};
    EXPECT_EQ(locate(m, p).value_or(m.size()), brute_force_locate(m, p));
  }
}
