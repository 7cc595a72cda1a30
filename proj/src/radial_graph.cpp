#include "eigenbound/radial_graph.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "eigenbound/format.hpp"
#include "eigenbound/rng.hpp"
#include "eigenbound/zonal.hpp"

namespace eigenbound {

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed probe grids for bound estimation and symmetry checks, independent
// of whatever grid a scenario later evaluates on.
DirectionGrid probe_grid(int ambient_dim) {
  if (ambient_dim == 3) return icosphere_grid(4);
  if (ambient_dim == 4) return hopf_grid(16, 32);
  return sobol_sphere_grid(ambient_dim, 12);
}

// Hypersurface-layer radius cap: pi/(4 delta) under 0 <= K <= delta^2,
// the warp's domain otherwise (infinite for the remaining cases).
double graph_radius_cap(const AmbientModel& a) {
  double cap = std::numeric_limits<double>::infinity();
  const auto& cls = a.curvature_class();
  if (cls.tag == CurvatureClass::Tag::NONNEG_PINCHED)
    cap = 0.25 * kPi / cls.delta;
  if (a.kind() == AmbientModel::Kind::WARPED)
    cap = std::min(cap, a.warp().r_max);
  return cap;
}

// g^T G^{-1} g for the geodesic-sphere metric G at radius t; g is the
// Euclidean tangential gradient (a covector in the round frame).
double inv_metric_quad(const AmbientModel& a, double t, const Vec& u,
                       const Vec& g) {
  switch (a.kind()) {
    case AmbientModel::Kind::CONSTANT: {
      const double s = sin_delta(a.curvature_class(), t);
      return g.squaredNorm() / (s * s);
    }
    case AmbientModel::Kind::WARPED: {
      const double p = a.warp().psi(t);
      return g.squaredNorm() / (p * p);
    }
    case AmbientModel::Kind::RANK1: {
      const double sh = std::sinh(t), ch = std::cosh(t);
      double vert = 0.0;
      for (const Vec& ju : a.vertical_projectors(u)) {
        const double c = g.dot(ju);
        vert += c * c;
      }
      const double horiz = g.squaredNorm() - vert;
      return horiz / (sh * sh) + vert / (sh * sh * ch * ch);
    }
  }
  return 0.0;
}

}  // namespace

RadialGraph::RadialGraph(const AmbientModel& ambient, double r0,
                         std::vector<ZonalTerm> terms,
                         bool antipodally_symmetric)
    : ambient_(ambient),
      r0_(r0),
      terms_(std::move(terms)),
      symmetric_(antipodally_symmetric) {
  if (!(r0 > 0.0)) throw validation_error("RadialGraph: r0 must be positive");
  for (const auto& term : terms_) {
    if (term.degree < 1) throw validation_error("RadialGraph: degree >= 1");
    if (term.pole.size() != ambient_.dim())
      throw validation_error("RadialGraph: pole dimension mismatch");
    if (symmetric_ && term.degree % 2 != 0)
      throw validation_error(
          "RadialGraph: antipodal symmetry requires even degrees");
  }
  if (terms_.empty()) {
    r_min_ = r_max_ = r0_;
  } else {
    const DirectionGrid probe = probe_grid(ambient_.dim());
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < probe.size(); ++i) {
      const double t = radius(probe.nodes.row(i));
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    r_min_ = lo;
    r_max_ = hi;
  }
  if (!(r_min_ > 0.0))
    throw validation_error("RadialGraph: radial function not positive");
  if (r_max_ >= graph_radius_cap(ambient_))
    throw validation_error("RadialGraph: exceeds the ambient radius cap");
}

double RadialGraph::radius(const Vec& u) const {
  double p = 0.0;
  for (const auto& term : terms_) {
    const Zonal z{term.degree, ambient_.dim()};
    p += term.coeff * z.value(u.dot(term.pole));
  }
  return r0_ * (1.0 + p);
}

Vec RadialGraph::radius_gradient(const Vec& u) const {
  Vec g = Vec::Zero(ambient_.dim());
  for (const auto& term : terms_) {
    const Zonal z{term.degree, ambient_.dim()};
    const double s = u.dot(term.pole);
    g += term.coeff * z.slope(s) * (term.pole - s * u);
  }
  return r0_ * g;
}

RadialGraph RadialGraph::scaled(double c) const {
  if (!(ambient_.kind() == AmbientModel::Kind::CONSTANT &&
        ambient_.curvature() == 0.0))
    throw unsupported_error("RadialGraph::scaled: Euclidean ambients only");
  return RadialGraph(ambient_, c * r0_, terms_, symmetric_);
}

std::string RadialGraph::serialize() const {
  std::ostringstream os;
  os << "eigenbound-graph 1\n";
  switch (ambient_.kind()) {
    case AmbientModel::Kind::CONSTANT:
      os << "ambient constant " << ambient_.dim() << " "
         << fmt17(ambient_.curvature()) << "\n";
      break;
    case AmbientModel::Kind::WARPED: {
      const WarpSpec& w = ambient_.warp();
      const char* fam = nullptr;
      switch (w.family) {
        case WarpSpec::Family::SIN_DELTA: fam = "sin_delta"; break;
        case WarpSpec::Family::LINEAR: fam = "linear"; break;
        case WarpSpec::Family::SINH_DELTA: fam = "sinh_delta"; break;
        case WarpSpec::Family::PERTURBED_SIN: fam = "perturbed_sin"; break;
      }
      os << "ambient warped " << ambient_.dim() << " " << fam << " "
         << fmt17(w.delta) << " " << fmt17(w.eps) << " " << w.m << " "
         << fmt17(w.r_max) << " " << ambient_.curvature_class().label() << " "
         << fmt17(ambient_.curvature_class().delta) << "\n";
      break;
    }
    case AmbientModel::Kind::RANK1:
      os << "ambient rank1 " << ambient_.rank1_k() << " " << ambient_.rank1_n()
         << "\n";
      break;
  }
  os << "r0 " << fmt17(r0_) << "\n";
  os << "symmetric " << (symmetric_ ? 1 : 0) << "\n";
  os << "terms " << terms_.size() << "\n";
  for (const auto& term : terms_) {
    os << "term " << term.degree << " " << fmt17(term.coeff);
    for (int c = 0; c < term.pole.size(); ++c) os << " " << fmt17(term.pole[c]);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

RadialGraph RadialGraph::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  int version = 0;
  is >> tok >> version;
  if (tok != "eigenbound-graph" || version != 1)
    throw validation_error("RadialGraph::deserialize: bad header");
  is >> tok;
  if (tok != "ambient")
    throw validation_error("RadialGraph::deserialize: expected ambient");
  std::string kind;
  is >> kind;
  AmbientModel ambient = AmbientModel::constant(3, 0.0);
  if (kind == "constant") {
    int dim;
    std::string k;
    is >> dim >> k;
    ambient = AmbientModel::constant(dim, parse_f64(k));
  } else if (kind == "warped") {
    int dim, m;
    std::string fam, delta, eps, rmax, cls_tag, cls_delta;
    is >> dim >> fam >> delta >> eps >> m >> rmax >> cls_tag >> cls_delta;
    WarpSpec w;
    if (fam == "sin_delta")
      w = WarpSpec::sin_delta(parse_f64(delta), parse_f64(rmax));
    else if (fam == "linear")
      w = WarpSpec::linear(parse_f64(rmax));
    else if (fam == "sinh_delta")
      w = WarpSpec::sinh_delta(parse_f64(delta), parse_f64(rmax));
    else if (fam == "perturbed_sin")
      w = WarpSpec::perturbed_sin(parse_f64(delta), parse_f64(eps), m,
                                  parse_f64(rmax));
    else
      throw validation_error("RadialGraph::deserialize: bad warp family");
    CurvatureClass cls;
    if (cls_tag == "nonneg_pinched")
      cls = CurvatureClass::nonneg_pinched(parse_f64(cls_delta));
    else if (cls_tag == "nonpos")
      cls = CurvatureClass::nonpos();
    else if (cls_tag == "pinched_neg")
      cls = CurvatureClass::pinched_neg(parse_f64(cls_delta));
    else
      throw validation_error("RadialGraph::deserialize: bad curvature class");
    ambient = AmbientModel::warped(dim, w, cls);
  } else if (kind == "rank1") {
    int k, n;
    is >> k >> n;
    ambient = AmbientModel::rank1(k, n);
  } else {
    throw validation_error("RadialGraph::deserialize: bad ambient kind");
  }
  std::string r0s;
  is >> tok >> r0s;
  if (tok != "r0") throw validation_error("RadialGraph::deserialize: r0");
  int sym = 0;
  is >> tok >> sym;
  if (tok != "symmetric")
    throw validation_error("RadialGraph::deserialize: symmetric");
  std::size_t count = 0;
  is >> tok >> count;
  if (tok != "terms") throw validation_error("RadialGraph::deserialize: terms");
  std::vector<ZonalTerm> terms;
  terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string coeff;
    ZonalTerm term;
    is >> tok >> term.degree >> coeff;
    if (tok != "term") throw validation_error("RadialGraph::deserialize: term");
    term.coeff = parse_f64(coeff);
    term.pole.resize(ambient.dim());
    for (int c = 0; c < ambient.dim(); ++c) {
      std::string comp;
      is >> comp;
      term.pole[c] = parse_f64(comp);
    }
    terms.push_back(std::move(term));
  }
  is >> tok;
  if (tok != "end") throw validation_error("RadialGraph::deserialize: end");
  return RadialGraph(ambient, parse_f64(r0s), std::move(terms), sym != 0);
}

RadialGraph make_geodesic_sphere(const AmbientModel& ambient, double radius) {
  return RadialGraph(ambient, radius, {}, true);
}

RadialGraph random_star_graph(const AmbientModel& ambient, std::uint64_t seed,
                              double r0, double amplitude, int bandlimit,
                              bool symmetric) {
  if (!(amplitude >= 0.0 && amplitude < 1.0))
    throw validation_error("random_star_graph: amplitude in [0, 1) required");
  if (bandlimit < 1 || bandlimit > 8)
    throw validation_error("random_star_graph: bandlimit in [1, 8]");
  const int d = ambient.dim();
  CounterRng rng(seed);
  std::uint64_t ctr = 0;
  std::vector<ZonalTerm> terms;
  for (int l = symmetric ? 2 : 1; l <= bandlimit; l += symmetric ? 2 : 1) {
    for (int rep = 0; rep < 2; ++rep) {
      ZonalTerm term;
      term.degree = l;
      term.pole.resize(d);
      do {
        for (int c = 0; c < d; ++c) term.pole[c] = rng.gaussian(ctr++);
      } while (term.pole.norm() < 1e-6);
      term.pole.normalize();
      term.coeff = rng.uniform_pm1(ctr++);
      terms.push_back(std::move(term));
    }
  }
  double eps = amplitude;
  // Clamp so the radius cap stays satisfiable, then rescale to max |P| = eps.
  const double cap = graph_radius_cap(ambient);
  if (std::isfinite(cap)) {
    const double room = 0.98 * cap / r0 - 1.0;
    if (room <= 0.0)
      throw validation_error("random_star_graph: r0 leaves no room under cap");
    eps = std::min(eps, room);
  }
  if (!terms.empty() && eps > 0.0) {
    const DirectionGrid probe = probe_grid(d);
    double max_p = 0.0;
    for (int i = 0; i < probe.size(); ++i) {
      const Vec u = probe.nodes.row(i);
      double p = 0.0;
      for (const auto& term : terms) {
        const Zonal z{term.degree, d};
        p += term.coeff * z.value(u.dot(term.pole));
      }
      max_p = std::max(max_p, std::abs(p));
    }
    if (max_p > 0.0) {
      const double scale = eps / max_p;
      for (auto& term : terms) term.coeff *= scale;
    }
  } else {
    terms.clear();
  }
  return RadialGraph(ambient, r0, std::move(terms), symmetric);
}

SurfaceTable evaluate(const RadialGraph& graph, const DirectionGrid& grid,
                      Exec exec) {
  const AmbientModel& a = graph.ambient();
  if (grid.ambient_dim() != a.dim())
    throw validation_error("evaluate: graph/grid dimension mismatch");
  const int n = grid.size();
  SurfaceTable table;
  table.nodes = grid.nodes;
  table.weights = grid.weights;
  table.t.resize(n);
  table.grad.resize(n, a.dim());
  table.sec_theta.resize(n);
  table.phi.resize(n);
  table.dm_weight.resize(n);
  const bool constant = graph.is_constant();
  parallel_for(
      n,
      [&](std::size_t i) {
        const Vec u = table.nodes.row(static_cast<int>(i));
        const double t = graph.radius(u);
        table.t[static_cast<int>(i)] = t;
        double sec = 1.0;
        if (constant) {
          table.grad.row(static_cast<int>(i)).setZero();
        } else {
          const Vec g = graph.radius_gradient(u);
          table.grad.row(static_cast<int>(i)) = g;
          sec = std::sqrt(1.0 + inv_metric_quad(a, t, u, g));
        }
        const double phi = a.density(t);
        table.sec_theta[static_cast<int>(i)] = sec;
        table.phi[static_cast<int>(i)] = phi;
        table.dm_weight[static_cast<int>(i)] =
            sec * phi * table.weights[static_cast<int>(i)];
      },
      exec);
  for (int i = 0; i < n; ++i)
    if (!(table.t[i] > 0.0))
      throw validation_error("evaluate: radial function not positive on grid");
  return table;
}

double surface_integral(const SurfaceTable& table, const Eigen::VectorXd& f) {
  if (f.size() != table.t.size())
    throw validation_error("surface_integral: value count mismatch");
  std::vector<double> terms(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) terms[i] = f[i] * table.dm_weight[i];
  return pairwise_sum(terms);
}

double surface_integral(const SurfaceTable& table,
                        const std::function<double(int)>& f, Exec exec) {
  std::vector<double> terms(static_cast<std::size_t>(table.size()));
  parallel_for(
      table.size(),
      [&](std::size_t i) {
        terms[i] = f(static_cast<int>(i)) * table.dm_weight[static_cast<int>(i)];
      },
      exec);
  return pairwise_sum(terms);
}

double surface_volume(const SurfaceTable& table) {
  std::vector<double> terms(table.dm_weight.data(),
                            table.dm_weight.data() + table.size());
  return pairwise_sum(terms);
}

namespace {

double radial_volume(const Eigen::VectorXd& t, const Eigen::VectorXd& weights,
                     const AmbientModel& density_model, Exec exec) {
  const int n = static_cast<int>(t.size());
  std::vector<double> terms(static_cast<std::size_t>(n));
  parallel_for(
      n,
      [&](std::size_t i) {
        const int k = static_cast<int>(i);
        const double integral =
            integrate([&](double r) { return density_model.density(r); }, 0.0,
                      t[k], 1e-13);
        terms[i] = weights[k] * integral;
      },
      exec);
  return pairwise_sum(terms);
}

Eigen::VectorXd grid_radii(const RadialGraph& graph, const DirectionGrid& grid,
                           Exec exec) {
  Eigen::VectorXd t(grid.size());
  parallel_for(
      grid.size(),
      [&](std::size_t i) {
        t[static_cast<int>(i)] = graph.radius(grid.nodes.row(static_cast<int>(i)));
      },
      exec);
  return t;
}

}  // namespace

double domain_volume(const RadialGraph& graph, const DirectionGrid& grid,
                     Exec exec) {
  return radial_volume(grid_radii(graph, grid, exec), grid.weights,
                       graph.ambient(), exec);
}

double transplant_volume(const RadialGraph& graph, const DirectionGrid& grid,
                         Exec exec) {
  return radial_volume(grid_radii(graph, grid, exec), grid.weights,
                       graph.ambient().model_space(), exec);
}

double domain_volume(const RadialGraph& graph, const SurfaceTable& table,
                     Exec exec) {
  return radial_volume(table.t, table.weights, graph.ambient(), exec);
}

double transplant_volume(const RadialGraph& graph, const SurfaceTable& table,
                         Exec exec) {
  return radial_volume(table.t, table.weights, graph.ambient().model_space(),
                       exec);
}

}  // namespace eigenbound
