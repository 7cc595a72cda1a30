#include "eigenbound/trimesh.hpp"

#include <cmath>

#include "eigenbound/icosphere.hpp"

namespace eigenbound {

namespace {

// Stable Heron (Kahan): requires a >= b >= c.
double triangle_area(double a, double b, double c) {
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  const double s = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(s, 0.0));
}

// Induced-metric length of the graph curve over the great circle from ua to
// ub: integrand sqrt(t'(s)^2 + psi(t)^2 |u'(s)|^2), 3-point Gauss-Legendre.
double warped_edge_length(const RadialGraph& graph, const Vec& ua,
                          const Vec& ub) {
  const WarpSpec& warp = graph.ambient().warp();
  const double half_chord = 0.5 * (ua - ub).norm();
  const double gamma = 2.0 * std::asin(std::min(half_chord, 1.0));
  if (gamma == 0.0) return 0.0;
  const double sg = std::sin(gamma);
  static constexpr double kX[3] = {-0.7745966692414834, 0.0,
                                   0.7745966692414834};
  static constexpr double kW[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  double len = 0.0;
  for (int q = 0; q < 3; ++q) {
    const double s = 0.5 * (kX[q] + 1.0);
    const Vec u =
        (std::sin((1.0 - s) * gamma) * ua + std::sin(s * gamma) * ub) / sg;
    const Vec du =
        gamma *
        (-std::cos((1.0 - s) * gamma) * ua + std::cos(s * gamma) * ub) / sg;
    const double t = graph.radius(u);
    const double dt = graph.radius_gradient(u).dot(du);
    const double psi = warp.psi(t);
    len += 0.5 * kW[q] * std::sqrt(dt * dt + psi * psi * gamma * gamma);
  }
  return len;
}

}  // namespace

TriMesh build_intrinsic_mesh(const RadialGraph& graph, int level, Exec exec) {
  const AmbientModel& ambient = graph.ambient();
  if (ambient.dim() != 3)
    throw unsupported_error(
        "build_intrinsic_mesh: 2-dimensional hypersurfaces only (dim 3)");
  if (level < 2 || level > 7)
    throw validation_error("build_intrinsic_mesh: level in [2, 7]");

  // k=1 rank-1 ambients measure distances with the constant k=-1 encoding.
  const bool warped = ambient.kind() == AmbientModel::Kind::WARPED;
  const AmbientModel dist_model =
      ambient.kind() == AmbientModel::Kind::RANK1
          ? AmbientModel::constant(ambient.dim(), -1.0)
          : ambient;

  const IcosphereMesh ico = build_icosphere(level);
  TriMesh mesh;
  mesh.level = level;
  mesh.directions = ico.vertices;
  mesh.faces = ico.faces;
  const int nv = mesh.vertex_count();
  const int nf = mesh.face_count();
  mesh.t.resize(nv);
  parallel_for(
      nv,
      [&](std::size_t i) {
        mesh.t[static_cast<int>(i)] =
            graph.radius(mesh.directions.row(static_cast<int>(i)));
      },
      exec);
  mesh.edge_len.resize(nf, 3);
  parallel_for(
      nf,
      [&](std::size_t fi) {
        const auto& f = mesh.faces[fi];
        for (int k = 0; k < 3; ++k) {
          const int va = f[(k + 1) % 3], vb = f[(k + 2) % 3];
          const Vec ua = mesh.directions.row(va), ub = mesh.directions.row(vb);
          double len;
          if (warped) {
            len = warped_edge_length(graph, ua, ub);
          } else {
            const PolarPoint pa{mesh.t[va], ua}, pb{mesh.t[vb], ub};
            len = dist_model.geodesic_distance(pa, pb);
          }
          mesh.edge_len(static_cast<int>(fi), k) = len;
        }
      },
      exec);
  for (int fi = 0; fi < nf; ++fi) {
    const double a = mesh.edge_len(fi, 0), b = mesh.edge_len(fi, 1),
                 c = mesh.edge_len(fi, 2);
    const double scale = a + b + c;
    if (!(a + b - c > 1e-12 * scale && b + c - a > 1e-12 * scale &&
          c + a - b > 1e-12 * scale))
      throw validation_error(
          "build_intrinsic_mesh: degenerate triangle; raise the level or "
          "reduce the perturbation");
  }
  return mesh;
}

double mesh_area(const TriMesh& mesh) {
  std::vector<double> areas(mesh.faces.size());
  for (int fi = 0; fi < mesh.face_count(); ++fi)
    areas[fi] = triangle_area(mesh.edge_len(fi, 0), mesh.edge_len(fi, 1),
                              mesh.edge_len(fi, 2));
  return pairwise_sum(areas);
}

}  // namespace eigenbound
