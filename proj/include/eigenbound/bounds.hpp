#pragma once

#include <optional>
#include <string>

#include "eigenbound/center_of_mass.hpp"
#include "eigenbound/radial_graph.hpp"

namespace eigenbound {

enum class Verdict { HOLDS, HOLDS_WITHIN_TOLERANCE, VIOLATED, NOT_EVALUATED };

std::string verdict_label(Verdict v);

// One inequality check. margin = rhs - lhs; VIOLATED iff margin is below
// -error_budget, HOLDS iff at least +error_budget, in between otherwise.
struct BoundReport {
  std::string check;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double margin = std::numeric_limits<double>::quiet_NaN();
  double relative_margin = std::numeric_limits<double>::quiet_NaN();
  double budget_quadrature = 0.0;
  double budget_fem = 0.0;
  double error_budget = 0.0;
  Verdict verdict = Verdict::NOT_EVALUATED;
  double equality_gap = std::numeric_limits<double>::quiet_NaN();
  bool equality_gap_structural = false;  // stated k>1 form: nonzero by design

  // metadata
  double comparison_radius = std::numeric_limits<double>::quiet_NaN();
  double vol_m = std::numeric_limits<double>::quiet_NaN();
  double vol_sphere = std::numeric_limits<double>::quiet_NaN();
  double correction = std::numeric_limits<double>::quiet_NaN();
  double lambda1 = std::numeric_limits<double>::quiet_NaN();
  double lambda1_sphere = std::numeric_limits<double>::quiet_NaN();
};

// FEM eigenvalue input for the theorem evaluators.
struct SpectralInput {
  double lambda1 = 0.0;
  double fem_budget = 0.0;  // absolute eigenvalue error estimate
};

// int_M dfdr_sq(t) (1 - sec_theta^{-2}) dm: the energy |grad^M F(r)|^2 of a
// radial function with F'(r)^2 = dfdr_sq(r).
double radial_gradient_energy(const SurfaceTable& table,
                              const std::function<double(double)>& dfdr_sq,
                              Exec exec = default_exec());

// Energy of sin_delta(r) on M: int cos_delta^2(t) (1 - sec^{-2}) dm.
double gradient_correction(const SurfaceTable& table,
                           const CurvatureClass& cls,
                           Exec exec = default_exec());

// Evaluates the paper-level inequalities for one graph; a coarser companion
// grid supplies the a-posteriori quadrature budget.
class BoundChecker {
 public:
  BoundChecker(const RadialGraph& graph, const DirectionGrid& grid,
               Exec exec = default_exec());

  const SurfaceTable& table() const { return table_; }
  bool equality_class() const { return graph_.is_constant(); }

  // int_M sin_delta^2 d(p, q) dm >= Vol(S_delta(R)) sin_delta^2 R with the
  // rank-1 sinh variant; p defaults to the graph pole.
  BoundReport lemma1(const std::optional<Vec>& p = std::nullopt) const;

  // Rank-1 only: int_M tanh^2 d(p, q) dm >= Vol(S(R)) tanh^2 R.
  BoundReport lemma2(const std::optional<Vec>& p = std::nullopt) const;

  // Pointwise coordinate-gradient bound; reports the worst node.
  BoundReport lemma_l2() const;

  BoundReport theorem1(const SpectralInput& spectral) const;
  BoundReport theorem2(const SpectralInput& spectral) const;
  BoundReport theorem3(const std::optional<SpectralInput>& spectral,
                       bool sharp_form) const;
  BoundReport remark_hn(const SpectralInput& spectral) const;

 private:
  struct Sides {
    double lhs = 0.0, rhs = 0.0;
    double radius = std::numeric_limits<double>::quiet_NaN();
    double vol_m = std::numeric_limits<double>::quiet_NaN();
    double vol_sphere = std::numeric_limits<double>::quiet_NaN();
    double correction = std::numeric_limits<double>::quiet_NaN();
    double lambda1 = std::numeric_limits<double>::quiet_NaN();
    double lambda1_sphere = std::numeric_limits<double>::quiet_NaN();
  };
  BoundReport assemble_report(const std::string& check, const Sides& fine,
                              const Sides& coarse, double budget_fem) const;
  Eigen::VectorXd distances(const SurfaceTable& table,
                            const std::optional<Vec>& p) const;
  void require_warped_certificate(const char* check) const;

  const RadialGraph& graph_;
  SurfaceTable table_;
  SurfaceTable table_coarse_;
  Exec exec_;
};

}  // namespace eigenbound
