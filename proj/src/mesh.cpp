#include "crenrich/mesh.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "crenrich/errors.hpp"

namespace crenrich {

TriMesh::TriMesh(std::vector<Point2D> vertices, std::vector<Connectivity> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  if (triangles_.empty()) {
    throw ArgumentError("mesh has no triangles");
  }
  std::set<Connectivity> seen;
  geometry_.reserve(triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& c = triangles_[t];
    for (auto idx : c) {
      if (idx >= vertices_.size()) {
        throw ArgumentError("triangle " + std::to_string(t) + " references vertex " +
                            std::to_string(idx) + " of " + std::to_string(vertices_.size()));
      }
    }
    Connectivity key = c;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) {
      throw ArgumentError("triangle " + std::to_string(t) + " duplicates an earlier triangle");
    }
    geometry_.emplace_back(vertices_[c[0]], vertices_[c[1]], vertices_[c[2]]);
  }
  build_buckets();
}

double TriMesh::total_area() const {
  double sum = 0.0;
  for (const auto& tri : geometry_) sum += tri.area();
  return sum;
}

double TriMesh::max_diameter() const {
  double h = 0.0;
  for (const auto& tri : geometry_) h = std::max(h, tri.diameter());
  return h;
}

void TriMesh::build_buckets() {
  lo_ = hi_ = geometry_.front().vertex(1);
  for (const auto& tri : geometry_) {
    for (int i = 1; i <= 3; ++i) {
      const Point2D v = tri.vertex(i);
      lo_ = {std::min(lo_.x, v.x), std::min(lo_.y, v.y)};
      hi_ = {std::max(hi_.x, v.x), std::max(hi_.y, v.y)};
    }
  }
  const double pad = 1e-9 * std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1.0});
  lo_ = {lo_.x - pad, lo_.y - pad};
  hi_ = {hi_.x + pad, hi_.y + pad};

  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(size()))));
  nx_ = ny_ = std::max<std::size_t>(1, side);
  buckets_.assign(nx_ * ny_, {});

  for (std::size_t t = 0; t < geometry_.size(); ++t) {
    const auto& tri = geometry_[t];
    double x0 = hi_.x, y0 = hi_.y, x1 = lo_.x, y1 = lo_.y;
    for (int i = 1; i <= 3; ++i) {
      const Point2D v = tri.vertex(i);
      x0 = std::min(x0, v.x);
      y0 = std::min(y0, v.y);
      x1 = std::max(x1, v.x);
      y1 = std::max(y1, v.y);
    }
    const std::size_t b0 = bucket_of(x0 - pad, y0 - pad);
    const std::size_t b1 = bucket_of(x1 + pad, y1 + pad);
    for (std::size_t iy = b0 / nx_; iy <= b1 / nx_; ++iy) {
      for (std::size_t ix = b0 % nx_; ix <= b1 % nx_; ++ix) {
        buckets_[iy * nx_ + ix].push_back(t);
      }
    }
  }
}

std::size_t TriMesh::bucket_of(double x, double y) const {
  auto cell = [](double v, double lo, double hi, std::size_t n) {
    const double s = (v - lo) / (hi - lo) * static_cast<double>(n);
    if (!(s > 0.0)) return std::size_t{0};
    return std::min(n - 1, static_cast<std::size_t>(s));
  };
  return cell(y, lo_.y, hi_.y, ny_) * nx_ + cell(x, lo_.x, hi_.x, nx_);
}

std::optional<std::size_t> TriMesh::locate(Point2D p) const {
  if (!(p.x >= lo_.x && p.x <= hi_.x && p.y >= lo_.y && p.y <= hi_.y)) {
    return std::nullopt;
  }
  // Bucket lists are filled in ascending triangle order.
  for (std::size_t t : buckets_[bucket_of(p.x, p.y)]) {
    if (geometry_[t].barycentric(p).min() >= -kLocateTolerance) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> locate(const TriMesh& mesh, Point2D p) { return mesh.locate(p); }

// ---------------------------------------------------------------------------
// Triangle format

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line parsed{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > pos) parsed.tokens.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

class Reader {
 public:
  Reader(std::string file, std::string_view text) : file_(std::move(file)), lines_(tokenize(text)) {}

  const Line& next(const char* what) {
    if (pos_ >= lines_.size()) {
      const std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(file_, last, std::string("unexpected end of file, expected ") + what);
    }
    return lines_[pos_++];
  }

  void expect_end() const {
    if (pos_ < lines_.size()) {
      throw ParseError(file_, lines_[pos_].number, "more entries than the header declares");
    }
  }

  [[noreturn]] void fail(const Line& line, const std::string& what) const {
    throw ParseError(file_, line.number, what);
  }

  long long integer(const Line& line, std::size_t i) const {
    long long v = 0;
    const auto tok = line.tokens.at(i);
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      fail(line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return v;
  }

  double real(const Line& line, std::size_t i) const {
    double v = 0.0;
    const auto tok = line.tokens.at(i);
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || !std::isfinite(v)) {
      fail(line, "expected a finite number, got '" + std::string(tok) + "'");
    }
    return v;
  }

  void arity(const Line& line, std::size_t n, const char* what) const {
    if (line.tokens.size() != n) {
      fail(line, std::string(what) + ": expected " + std::to_string(n) + " fields, got " +
                     std::to_string(line.tokens.size()));
    }
  }

 private:
  std::string file_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

TriMesh parse(std::string_view node_text, std::string_view ele_text, const std::string& node_name,
              const std::string& ele_name) {
  Reader node(node_name, node_text);
  const Line& header = node.next("node header");
  if (header.tokens.size() < 2 || header.tokens.size() > 4) {
    node.fail(header, "node header must be '<#vertices> <dim> [<#attrs> [<#markers>]]'");
  }
  const long long nv = node.integer(header, 0);
  const long long dim = node.integer(header, 1);
  const long long nattr = header.tokens.size() > 2 ? node.integer(header, 2) : 0;
  const long long nmark = header.tokens.size() > 3 ? node.integer(header, 3) : 0;
  if (nv < 3) node.fail(header, "need at least 3 vertices");
  if (dim != 2) node.fail(header, "dimension must be 2");
  if (nattr < 0 || nmark < 0 || nmark > 1) node.fail(header, "invalid attribute/marker counts");

  std::vector<Point2D> vertices;
  vertices.reserve(static_cast<std::size_t>(nv));
  long long base = 0;
  for (long long i = 0; i < nv; ++i) {
    const Line& row = node.next("vertex row");
    node.arity(row, static_cast<std::size_t>(3 + nattr + nmark), "vertex row");
    const long long idx = node.integer(row, 0);
    if (i == 0) {
      if (idx != 0 && idx != 1) node.fail(row, "first vertex index must be 0 or 1");
      base = idx;
    } else if (idx != base + i) {
      node.fail(row, "vertex indices must be consecutive, expected " + std::to_string(base + i));
    }
    vertices.push_back({node.real(row, 1), node.real(row, 2)});
  }
  node.expect_end();

  Reader ele(ele_name, ele_text);
  const Line& eh = ele.next("element header");
  if (eh.tokens.size() < 2 || eh.tokens.size() > 3) {
    ele.fail(eh, "element header must be '<#triangles> <nodes-per-triangle> [<#attrs>]'");
  }
  const long long nt = ele.integer(eh, 0);
  const long long per = ele.integer(eh, 1);
  const long long eattr = eh.tokens.size() > 2 ? ele.integer(eh, 2) : 0;
  if (nt < 1) ele.fail(eh, "need at least one triangle");
  if (per != 3) ele.fail(eh, "only 3-node triangles are supported");
  if (eattr < 0) ele.fail(eh, "invalid attribute count");

  std::vector<TriMesh::Connectivity> triangles;
  triangles.reserve(static_cast<std::size_t>(nt));
  std::set<TriMesh::Connectivity> seen;
  for (long long t = 0; t < nt; ++t) {
    const Line& row = ele.next("triangle row");
    ele.arity(row, static_cast<std::size_t>(4 + eattr), "triangle row");
    if (ele.integer(row, 0) != base + t) {
      ele.fail(row, "triangle indices must be consecutive, expected " + std::to_string(base + t));
    }
    TriMesh::Connectivity c{};
    for (std::size_t k = 0; k < 3; ++k) {
      const long long v = ele.integer(row, k + 1) - base;
      if (v < 0 || v >= nv) {
        ele.fail(row, "vertex index " + std::to_string(v + base) + " out of range [" +
                          std::to_string(base) + ", " + std::to_string(base + nv - 1) + "]");
      }
      c[k] = static_cast<std::size_t>(v);
    }
    auto key = c;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) ele.fail(row, "duplicate triangle");
    try {
      (void)Triangle2D{vertices[c[0]], vertices[c[1]], vertices[c[2]]};
    } catch (const GeometryError& e) {
      ele.fail(row, e.what());
    }
    triangles.push_back(c);
  }
  ele.expect_end();
  return TriMesh(std::move(vertices), std::move(triangles));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TriMesh load_triangle_mesh(std::string_view node_text, std::string_view ele_text) {
  return parse(node_text, ele_text, "<node>", "<ele>");
}

TriMesh load_triangle_mesh_files(const std::filesystem::path& node_path,
                                 const std::filesystem::path& ele_path) {
  return parse(slurp(node_path), slurp(ele_path), node_path.string(), ele_path.string());
}

TriMesh uniform_grid_mesh(int n, GridDiagonal diagonal) {
  if (n < 1) throw ArgumentError("uniform grid needs n >= 1, got " + std::to_string(n));
  const auto m = static_cast<std::size_t>(n);
  std::vector<Point2D> vertices;
  vertices.reserve((m + 1) * (m + 1));
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t i = 0; i <= m; ++i) {
      vertices.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
    }
  }
  std::vector<TriMesh::Connectivity> triangles;
  triangles.reserve(2 * m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t a = j * (m + 1) + i;  // bottom-left
      const std::size_t b = a + 1;            // bottom-right
      const std::size_t c = a + m + 1;        // top-left
      const std::size_t d = c + 1;            // top-right
      if (diagonal == GridDiagonal::Anti) {
        triangles.push_back({a, b, c});
        triangles.push_back({b, d, c});
      } else {
        triangles.push_back({a, b, d});
        triangles.push_back({a, d, c});
      }
    }
  }
  return TriMesh(std::move(vertices), std::move(triangles));
}

std::string to_node_text(const TriMesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  out << mesh.vertices().size() << " 2 0 0\n";
  for (std::size_t i = 0; i < mesh.vertices().size(); ++i) {
    out << i + 1 << ' ' << mesh.vertices()[i].x << ' ' << mesh.vertices()[i].y << '\n';
  }
  return out.str();
}

std::string to_ele_text(const TriMesh& mesh) {
  std::ostringstream out;
  out << mesh.size() << " 3 0\n";
  for (std::size_t t = 0; t < mesh.size(); ++t) {
    const auto& c = mesh.connectivity()[t];
    out << t + 1 << ' ' << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << '\n';
  }
  return out.str();
}

}  // namespace crenrich
