#include "eigenbound/ambient.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace eigenbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::string fmt_g(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// CurvatureClass

CurvatureClass CurvatureClass::nonneg_pinched(double delta) {
  if (!(delta > 0.0))
    throw validation_error("CurvatureClass: delta must be positive");
  return {Tag::NONNEG_PINCHED, delta};
}

CurvatureClass CurvatureClass::nonpos() { return {Tag::NONPOS, 1.0}; }

CurvatureClass CurvatureClass::pinched_neg(double delta) {
  if (!(delta > 0.0))
    throw validation_error("CurvatureClass: delta must be positive");
  return {Tag::PINCHED_NEG, delta};
}

double CurvatureClass::space_form_curvature() const {
  switch (tag) {
    case Tag::NONNEG_PINCHED:
      return delta * delta;
    case Tag::NONPOS:
      return 0.0;
    case Tag::PINCHED_NEG:
      return -delta * delta;
  }
  return 0.0;
}

std::string CurvatureClass::label() const {
  switch (tag) {
    case Tag::NONNEG_PINCHED:
      return "nonneg_pinched";
    case Tag::NONPOS:
      return "nonpos";
    case Tag::PINCHED_NEG:
      return "pinched_neg";
  }
  return "?";
}

double sin_delta(const CurvatureClass& c, double r) {
  if (r < 0.0) throw domain_error("sin_delta: r < 0");
  switch (c.tag) {
    case CurvatureClass::Tag::NONNEG_PINCHED:
      if (r >= kPi / c.delta)
        throw domain_error("sin_delta: r beyond pi/delta");
      return std::sin(c.delta * r) / c.delta;
    case CurvatureClass::Tag::NONPOS:
      return r;
    case CurvatureClass::Tag::PINCHED_NEG:
      return std::sinh(c.delta * r) / c.delta;
  }
  return 0.0;
}

double cos_delta(const CurvatureClass& c, double r) {
  if (r < 0.0) throw domain_error("cos_delta: r < 0");
  switch (c.tag) {
    case CurvatureClass::Tag::NONNEG_PINCHED:
      if (r >= kPi / c.delta)
        throw domain_error("cos_delta: r beyond pi/delta");
      return std::cos(c.delta * r);
    case CurvatureClass::Tag::NONPOS:
      return 1.0;
    case CurvatureClass::Tag::PINCHED_NEG:
      return std::cosh(c.delta * r);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// WarpSpec

WarpSpec WarpSpec::sin_delta(double delta, double r_max) {
  if (!(delta > 0.0 && r_max > 0.0 && r_max < kPi / delta))
    throw validation_error("WarpSpec: sin_delta needs 0 < r_max < pi/delta");
  return {Family::SIN_DELTA, delta, 0.0, 2, r_max};
}

WarpSpec WarpSpec::linear(double r_max) {
  if (!(r_max > 0.0)) throw validation_error("WarpSpec: r_max must be > 0");
  return {Family::LINEAR, 1.0, 0.0, 2, r_max};
}

WarpSpec WarpSpec::sinh_delta(double delta, double r_max) {
  if (!(delta > 0.0 && r_max > 0.0))
    throw validation_error("WarpSpec: sinh_delta needs delta, r_max > 0");
  return {Family::SINH_DELTA, delta, 0.0, 2, r_max};
}

WarpSpec WarpSpec::perturbed_sin(double delta, double eps, int m,
                                 double r_max) {
  if (!(delta > 0.0 && r_max > 0.0 && r_max < kPi / delta) || m < 2)
    throw validation_error("WarpSpec: perturbed_sin needs m >= 2, r_max < pi/delta");
  WarpSpec w{Family::PERTURBED_SIN, delta, eps, m, r_max};
  // psi(0) = 0, psi'(0) = 1, psi > 0 on (0, r_max]
  const double h = 1e-6;
  if (std::abs(w.psi(h) / h - 1.0) > 1e-10 + 1e-6)
    throw validation_error("WarpSpec: psi fails first-order normalization");
  for (int i = 1; i <= 64; ++i) {
    const double r = r_max * i / 64.0;
    if (!(w.psi(r) > 0.0))
      throw validation_error("WarpSpec: psi not positive on (0, r_max]");
  }
  return w;
}

double WarpSpec::psi(double r) const {
  switch (family) {
    case Family::SIN_DELTA:
      return std::sin(delta * r) / delta;
    case Family::LINEAR:
      return r;
    case Family::SINH_DELTA:
      return std::sinh(delta * r) / delta;
    case Family::PERTURBED_SIN:
      return std::sin(delta * r) / delta * (1.0 + eps * std::pow(r, m));
  }
  return 0.0;
}

double WarpSpec::dpsi(double r) const {
  switch (family) {
    case Family::SIN_DELTA:
      return std::cos(delta * r);
    case Family::LINEAR:
      return 1.0;
    case Family::SINH_DELTA:
      return std::cosh(delta * r);
    case Family::PERTURBED_SIN: {
      const double h = 1.0 + eps * std::pow(r, m);
      const double hp = eps * m * std::pow(r, m - 1);
      return std::cos(delta * r) * h + std::sin(delta * r) / delta * hp;
    }
  }
  return 0.0;
}

double WarpSpec::ddpsi(double r) const {
  switch (family) {
    case Family::SIN_DELTA:
      return -delta * std::sin(delta * r);
    case Family::LINEAR:
      return 0.0;
    case Family::SINH_DELTA:
      return delta * std::sinh(delta * r);
    case Family::PERTURBED_SIN: {
      const double h = 1.0 + eps * std::pow(r, m);
      const double hp = eps * m * std::pow(r, m - 1);
      const double hpp = eps * m * (m - 1) * std::pow(r, m - 2);
      return -delta * std::sin(delta * r) * h + 2.0 * std::cos(delta * r) * hp +
             std::sin(delta * r) / delta * hpp;
    }
  }
  return 0.0;
}

std::string WarpSpec::label() const {
  switch (family) {
    case Family::SIN_DELTA:
      return "sin-delta" + fmt_g(delta);
    case Family::LINEAR:
      return "linear";
    case Family::SINH_DELTA:
      return "sinh-delta" + fmt_g(delta);
    case Family::PERTURBED_SIN:
      return "perturbed-sin-delta" + fmt_g(delta) + "-eps" + fmt_g(eps) +
             "-m" + fmt_g(m);
  }
  return "?";
}

namespace {

// 1 - psi'(r)^2 without the cancellation that the naive form suffers from
// near r = 0 (where psi' is 1 to machine precision).
double one_minus_dpsi_sq(const WarpSpec& w, double r) {
  switch (w.family) {
    case WarpSpec::Family::SIN_DELTA: {
      const double s = std::sin(w.delta * r);
      return s * s;
    }
    case WarpSpec::Family::LINEAR:
      return 0.0;
    case WarpSpec::Family::SINH_DELTA: {
      const double s = std::sinh(w.delta * r);
      return -s * s;
    }
    case WarpSpec::Family::PERTURBED_SIN: {
      const double s = std::sin(w.delta * r), c = std::cos(w.delta * r);
      const double g = c * w.eps * std::pow(r, w.m) +
                       s / w.delta * w.eps * w.m * std::pow(r, w.m - 1);
      return s * s - 2.0 * c * g - g * g;
    }
  }
  return 0.0;
}

}  // namespace

CurvatureCertificate curvature_certificate(const WarpSpec& warp,
                                           const CurvatureClass& cls,
                                           int samples) {
  if (samples < 100)
    throw validation_error("curvature_certificate: samples >= 100 required");
  const double slack = 1e-9;
  double lo_band = -kInf, hi_band = kInf;
  switch (cls.tag) {
    case CurvatureClass::Tag::NONNEG_PINCHED:
      lo_band = -slack;
      hi_band = cls.delta * cls.delta + slack;
      break;
    case CurvatureClass::Tag::NONPOS:
      hi_band = slack;
      break;
    case CurvatureClass::Tag::PINCHED_NEG:
      hi_band = -cls.delta * cls.delta + slack;
      break;
  }
  CurvatureCertificate cert;
  cert.pass = true;
  cert.radial_min = cert.tangential_min = kInf;
  cert.radial_max = cert.tangential_max = -kInf;
  for (int i = 1; i <= samples; ++i) {
    const double r = warp.r_max * i / samples;
    const double psi = warp.psi(r);
    const double k_rad = -warp.ddpsi(r) / psi;
    const double k_tan = one_minus_dpsi_sq(warp, r) / (psi * psi);
    cert.radial_min = std::min(cert.radial_min, k_rad);
    cert.radial_max = std::max(cert.radial_max, k_rad);
    cert.tangential_min = std::min(cert.tangential_min, k_tan);
    cert.tangential_max = std::max(cert.tangential_max, k_tan);
    const bool ok = k_rad >= lo_band && k_rad <= hi_band && k_tan >= lo_band &&
                    k_tan <= hi_band;
    if (!ok && cert.pass) {
      cert.pass = false;
      cert.violating_r = r;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// AmbientModel

AmbientModel AmbientModel::constant(int dim, double curvature) {
  if (dim < 3) throw validation_error("AmbientModel: dim >= 3 required");
  AmbientModel a;
  a.kind_ = Kind::CONSTANT;
  a.dim_ = dim;
  a.curvature_ = curvature;
  if (curvature > 0.0)
    a.cls_ = CurvatureClass::nonneg_pinched(std::sqrt(curvature));
  else if (curvature < 0.0)
    a.cls_ = CurvatureClass::pinched_neg(std::sqrt(-curvature));
  else
    a.cls_ = CurvatureClass::nonpos();
  return a;
}

AmbientModel AmbientModel::warped(int dim, const WarpSpec& warp,
                                  const CurvatureClass& cls) {
  if (dim < 3) throw validation_error("AmbientModel: dim >= 3 required");
  AmbientModel a;
  a.kind_ = Kind::WARPED;
  a.dim_ = dim;
  a.warp_ = warp;
  a.cls_ = cls;
  return a;
}

AmbientModel AmbientModel::rank1(int k, int n) {
  if (k == 8)
    throw unsupported_error("AmbientModel: octonionic rank-1 (k=8) not supported");
  if (k != 1 && k != 2 && k != 4)
    throw validation_error("AmbientModel: rank-1 k must be 1, 2 or 4");
  if (n < 2 || k * n < 3)
    throw validation_error("AmbientModel: rank-1 needs n >= 2 and kn >= 3");
  AmbientModel a;
  a.kind_ = Kind::RANK1;
  a.dim_ = k * n;
  a.rank1_k_ = k;
  a.rank1_n_ = n;
  a.curvature_ = -1.0;
  a.cls_ = CurvatureClass::pinched_neg(1.0);
  return a;
}

const WarpSpec& AmbientModel::warp() const {
  if (kind_ != Kind::WARPED)
    throw unsupported_error("AmbientModel: warp() on non-warped ambient");
  return warp_;
}

double AmbientModel::max_radius() const {
  switch (kind_) {
    case Kind::CONSTANT:
      return (curvature_ > 0.0) ? 0.5 * kPi / cls_.delta : kInf;
    case Kind::WARPED:
      return warp_.r_max;
    case Kind::RANK1:
      return kInf;
  }
  return kInf;
}

void AmbientModel::check_radius(double r) const {
  if (!(r > 0.0) || r > max_radius())
    throw domain_error("AmbientModel: radius outside validity range");
}

double AmbientModel::density(double r) const {
  check_radius(r);
  switch (kind_) {
    case Kind::CONSTANT:
      return std::pow(sin_delta(cls_, r), dim_ - 1);
    case Kind::WARPED:
      return std::pow(warp_.psi(r), dim_ - 1);
    case Kind::RANK1:
      return std::pow(std::sinh(r), dim_ - 1) *
             std::pow(std::cosh(r), rank1_k_ - 1);
  }
  return 0.0;
}

double AmbientModel::density_derivative(double r) const {
  check_radius(r);
  switch (kind_) {
    case Kind::CONSTANT: {
      const double s = sin_delta(cls_, r), c = cos_delta(cls_, r);
      return (dim_ - 1) * std::pow(s, dim_ - 2) * c;
    }
    case Kind::WARPED:
      return (dim_ - 1) * std::pow(warp_.psi(r), dim_ - 2) * warp_.dpsi(r);
    case Kind::RANK1: {
      const double sh = std::sinh(r), ch = std::cosh(r);
      return (dim_ - 1) * std::pow(sh, dim_ - 2) * std::pow(ch, rank1_k_) +
             (rank1_k_ - 1) * std::pow(sh, dim_) * std::pow(ch, rank1_k_ - 2);
    }
  }
  return 0.0;
}

double AmbientModel::sphere_eigenvalue(double r) const {
  check_radius(r);
  switch (kind_) {
    case Kind::CONSTANT: {
      const double s = sin_delta(cls_, r);
      return (dim_ - 1) / (s * s);
    }
    case Kind::RANK1: {
      const double sh = std::sinh(r), ch = std::cosh(r);
      return (dim_ - 1) / (sh * sh) - (rank1_k_ - 1) / (ch * ch);
    }
    case Kind::WARPED:
      throw unsupported_error(
          "sphere_eigenvalue: no closed form for warped ambients");
  }
  return 0.0;
}

double AmbientModel::sphere_area(double r) const {
  return unit_sphere_area(dim_) * density(r);
}

double AmbientModel::ball_volume(double r) const {
  check_radius(r);
  return unit_sphere_area(dim_) *
         integrate([this](double s) { return density(s); }, 0.0, r);
}

double AmbientModel::radius_from_volume(double volume) const {
  if (!(volume > 0.0))
    throw domain_error("radius_from_volume: volume must be positive");
  double hi;
  if (kind_ == Kind::CONSTANT && curvature_ > 0.0) {
    hi = 0.25 * kPi / cls_.delta;  // hypersurface-layer hypothesis
    if (volume >= ball_volume(hi))
      throw domain_error(
          "radius_from_volume: volume exceeds the admissible ball volume");
  } else {
    hi = 1.0;
    const double cap = max_radius();
    while (ball_volume(std::min(hi, cap)) < volume) {
      if (hi >= cap)
        throw domain_error("radius_from_volume: volume exceeds validity range");
      hi = std::min(2.0 * hi, cap);
    }
    hi = std::min(hi, cap);
  }
  return solve_monotone([this](double r) { return ball_volume(r); },
                        [this](double r) { return sphere_area(r); }, volume,
                        1e-12, hi);
}

double AmbientModel::sphere_metric_norm_sq(double t, const Vec& u,
                                           const Vec& w) const {
  check_radius(t);
  if (w.size() != dim_ || u.size() != dim_)
    throw validation_error("sphere_metric_norm_sq: dimension mismatch");
  if (std::abs(u.dot(w)) > 1e-10 * (w.norm() + 1e-300))
    throw validation_error("sphere_metric_norm_sq: w not tangent to sphere");
  switch (kind_) {
    case Kind::CONSTANT: {
      const double s = sin_delta(cls_, t);
      return s * s * w.squaredNorm();
    }
    case Kind::WARPED: {
      const double p = warp_.psi(t);
      return p * p * w.squaredNorm();
    }
    case Kind::RANK1: {
      const double sh = std::sinh(t), ch = std::cosh(t);
      double vert_sq = 0.0;
      for (const Vec& ju : vertical_projectors(u)) {
        const double c = w.dot(ju);
        vert_sq += c * c;
      }
      const double horiz_sq = w.squaredNorm() - vert_sq;
      return sh * sh * horiz_sq + sh * sh * ch * ch * vert_sq;
    }
  }
  return 0.0;
}

namespace {

// Complex structure on R^{2n}: pairs (2i, 2i+1).
Vec apply_complex_J(const Vec& x) {
  Vec y(x.size());
  for (int i = 0; i + 1 < x.size(); i += 2) {
    y[i] = -x[i + 1];
    y[i + 1] = x[i];
  }
  return y;
}

// Quaternionic structures on R^{4n}: blocks (a, b, c, d) as a+bi+cj+dk,
// left-multiplied by i, j, k respectively.
Vec apply_quat(const Vec& x, int which) {
  Vec y(x.size());
  for (int i = 0; i + 3 < x.size(); i += 4) {
    const double a = x[i], b = x[i + 1], c = x[i + 2], d = x[i + 3];
    switch (which) {
      case 0:  // i
        y[i] = -b; y[i + 1] = a; y[i + 2] = -d; y[i + 3] = c;
        break;
      case 1:  // j
        y[i] = -c; y[i + 1] = d; y[i + 2] = a; y[i + 3] = -b;
        break;
      default:  // k
        y[i] = -d; y[i + 1] = -c; y[i + 2] = b; y[i + 3] = a;
        break;
    }
  }
  return y;
}

}  // namespace

std::vector<Vec> AmbientModel::vertical_projectors(const Vec& u) const {
  if (kind_ != Kind::RANK1)
    throw unsupported_error("vertical_projectors: rank-1 ambients only");
  if (u.size() != dim_)
    throw validation_error("vertical_projectors: dimension mismatch");
  std::vector<Vec> out;
  if (rank1_k_ == 2) {
    out.push_back(apply_complex_J(u));
  } else if (rank1_k_ == 4) {
    for (int a = 0; a < 3; ++a) out.push_back(apply_quat(u, a));
  }
  return out;
}

AmbientModel AmbientModel::model_space() const {
  switch (kind_) {
    case Kind::CONSTANT:
    case Kind::RANK1:
      return *this;
    case Kind::WARPED:
      return AmbientModel::constant(dim_, cls_.space_form_curvature());
  }
  return *this;
}

std::string AmbientModel::label() const {
  switch (kind_) {
    case Kind::CONSTANT:
      return "constant_d" + std::to_string(dim_) + "_k" + fmt_g(curvature_);
    case Kind::WARPED:
      return "warped_d" + std::to_string(dim_) + "_" + warp_.label() + "_" +
             cls_.label();
    case Kind::RANK1:
      return "rank1_k" + std::to_string(rank1_k_) + "_n" +
             std::to_string(rank1_n_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Constant-curvature model geometry

void AmbientModel::require_constant(const char* op) const {
  if (kind_ != Kind::CONSTANT)
    throw unsupported_error(std::string(op) +
                            ": constant-curvature ambients only");
}

Vec AmbientModel::pole() const {
  require_constant("pole");
  if (curvature_ == 0.0) return Vec::Zero(dim_);
  Vec p = Vec::Zero(dim_ + 1);
  p[0] = 1.0 / cls_.delta;
  return p;
}

Vec AmbientModel::embed(const PolarPoint& p) const {
  require_constant("embed");
  if (p.u.size() != dim_) throw validation_error("embed: direction dimension");
  if (p.r < 0.0 || p.r > max_radius()) throw domain_error("embed: radius");
  const double d = cls_.delta;
  if (curvature_ == 0.0) return p.r * p.u;
  Vec x(dim_ + 1);
  if (curvature_ > 0.0) {
    x[0] = std::cos(d * p.r) / d;
    x.tail(dim_) = std::sin(d * p.r) / d * p.u;
  } else {
    x[0] = std::cosh(d * p.r) / d;
    x.tail(dim_) = std::sinh(d * p.r) / d * p.u;
  }
  return x;
}

PolarPoint AmbientModel::polar(const Vec& x) const {
  require_constant("polar");
  PolarPoint p;
  if (curvature_ == 0.0) {
    p.r = x.norm();
    p.u = (p.r > 0.0) ? Vec(x / p.r) : Vec(Vec::Unit(dim_, 0));
    return p;
  }
  const double d = cls_.delta;
  const double tail_norm = x.tail(dim_).norm();
  if (curvature_ > 0.0)
    p.r = std::acos(std::clamp(d * x[0], -1.0, 1.0)) / d;
  else
    p.r = std::acosh(std::max(d * x[0], 1.0)) / d;
  p.u = (tail_norm > 0.0) ? Vec(x.tail(dim_) / tail_norm)
                          : Vec(Vec::Unit(dim_, 0));
  return p;
}

namespace {

double lorentz_dot(const Vec& a, const Vec& b) {
  return -a[0] * b[0] + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

}  // namespace

Vec AmbientModel::exp_map(const Vec& base, const Vec& v) const {
  require_constant("exp_map");
  if (curvature_ == 0.0) return base + v;
  const double d = cls_.delta;
  if (curvature_ > 0.0) {
    const double nv = v.norm();
    if (nv < 1e-300) return base;
    if (nv >= kPi / d) throw domain_error("exp_map: step beyond cut locus");
    Vec out = std::cos(d * nv) * base + (std::sin(d * nv) / d) * (v / nv);
    return out * (1.0 / (d * out.norm()));  // re-project onto the sphere
  }
  const double nv2 = lorentz_dot(v, v);
  const double nv = std::sqrt(std::max(nv2, 0.0));
  if (nv < 1e-300) return base;
  Vec out = std::cosh(d * nv) * base + (std::sinh(d * nv) / d) * (v / nv);
  // re-project onto the hyperboloid <x,x>_L = -1/d^2
  const double q = lorentz_dot(out, out);
  return out / std::sqrt(std::max(-q, 1e-300) * d * d);
}

Vec AmbientModel::log_map(const Vec& base, const Vec& q) const {
  require_constant("log_map");
  if (curvature_ == 0.0) return q - base;
  const double d = cls_.delta;
  if (curvature_ > 0.0) {
    const double c = std::clamp(d * d * base.dot(q), -1.0, 1.0);
    const double dist = std::acos(c) / d;
    Vec w = q - c * base;
    const double nw = w.norm();
    if (nw < 1e-14 * (1.0 / d)) {
      if (dist > 0.5 / d)
        throw domain_error("log_map: target at or near the cut locus");
      return Vec::Zero(base.size());
    }
    return (dist / nw) * w;
  }
  const double c = std::max(-d * d * lorentz_dot(base, q), 1.0);
  const double dist = std::acosh(c) / d;
  // tangential part: q = cosh(d dist) base + sinh(d dist)/d T
  Vec w = q - c * base;
  const double nw = std::sqrt(std::max(lorentz_dot(w, w), 0.0));
  if (nw < 1e-300) return Vec::Zero(base.size());
  return (dist / nw) * w;
}

double AmbientModel::tangent_norm(const Vec& v) const {
  require_constant("tangent_norm");
  if (curvature_ < 0.0) return std::sqrt(std::max(lorentz_dot(v, v), 0.0));
  return v.norm();
}

double AmbientModel::distance(const Vec& a, const Vec& b) const {
  require_constant("distance");
  if (curvature_ == 0.0) return (a - b).norm();
  const double d = cls_.delta;
  if (curvature_ > 0.0)
    return std::acos(std::clamp(d * d * a.dot(b), -1.0, 1.0)) / d;
  return std::acosh(std::max(-d * d * lorentz_dot(a, b), 1.0)) / d;
}

double AmbientModel::geodesic_distance(const PolarPoint& a,
                                       const PolarPoint& b) const {
  require_constant("geodesic_distance");
  if (a.r < 0.0 || b.r < 0.0 || a.r > max_radius() || b.r > max_radius())
    throw domain_error("geodesic_distance: point outside validity range");
  // chord^2/4 = sin^2(gamma/2); stable for nearby directions
  const double chord_sq_4 = 0.25 * (a.u - b.u).squaredNorm();
  const double d = cls_.delta;
  if (curvature_ == 0.0) {
    const double dr = a.r - b.r;
    return std::sqrt(dr * dr + 4.0 * a.r * b.r * chord_sq_4);
  }
  if (curvature_ > 0.0) {
    const double sh = std::sin(0.5 * d * (a.r - b.r));
    const double arg =
        sh * sh + std::sin(d * a.r) * std::sin(d * b.r) * chord_sq_4;
    return 2.0 / d * std::asin(std::min(std::sqrt(std::max(arg, 0.0)), 1.0));
  }
  const double sh = std::sinh(0.5 * d * (a.r - b.r));
  const double arg =
      sh * sh + std::sinh(d * a.r) * std::sinh(d * b.r) * chord_sq_4;
  return 2.0 / d * std::asinh(std::sqrt(std::max(arg, 0.0)));
}

}  // namespace eigenbound
