#include "eigenbound/icosphere.hpp"

#include <cmath>
#include <map>

namespace eigenbound {

namespace {

IcosphereMesh base_icosahedron() {
  const double t = 0.5 * (1.0 + std::sqrt(5.0));
  const double verts[12][3] = {
      {-1, t, 0}, {1, t, 0},   {-1, -t, 0}, {1, -t, 0},
      {0, -1, t}, {0, 1, t},   {0, -1, -t}, {0, 1, -t},
      {t, 0, -1}, {t, 0, 1},   {-t, 0, -1}, {-t, 0, 1}};
  const int faces[20][3] = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  IcosphereMesh mesh;
  mesh.vertices.resize(12, 3);
  for (int i = 0; i < 12; ++i) {
    Eigen::Vector3d v(verts[i][0], verts[i][1], verts[i][2]);
    mesh.vertices.row(i) = v.normalized();
  }
  mesh.faces.reserve(20);
  for (auto& f : faces) mesh.faces.push_back({f[0], f[1], f[2]});
  return mesh;
}

}  // namespace

IcosphereMesh build_icosphere(int level) {
  IcosphereMesh mesh = base_icosahedron();
  for (int step = 0; step < level; ++step) {
    std::map<std::pair<int, int>, int> midpoint;
    std::vector<Eigen::Vector3d> verts;
    verts.reserve(static_cast<std::size_t>(mesh.vertices.rows()) * 4);
    for (int i = 0; i < mesh.vertices.rows(); ++i)
      verts.push_back(mesh.vertices.row(i));
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Eigen::Vector3d m = (verts[a] + verts[b]).normalized();
      const int idx = static_cast<int>(verts.size());
      verts.push_back(m);
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> faces;
    faces.reserve(mesh.faces.size() * 4);
    for (const auto& f : mesh.faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      faces.push_back({f[0], ab, ca});
      faces.push_back({f[1], bc, ab});
      faces.push_back({f[2], ca, bc});
      faces.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(faces);
    mesh.vertices.resize(static_cast<int>(verts.size()), 3);
    for (std::size_t i = 0; i < verts.size(); ++i)
      mesh.vertices.row(static_cast<int>(i)) = verts[i];
  }
  return mesh;
}

double spherical_triangle_area(const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b,
                               const Eigen::Vector3d& c) {
  // Van Oosterom-Strackee solid angle
  const double num = std::abs(a.dot(b.cross(c)));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace eigenbound
