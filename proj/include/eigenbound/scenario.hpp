#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenbound/ambient.hpp"
#include "eigenbound/grids.hpp"

namespace eigenbound {

enum class CheckKind {
  LEMMA1,
  LEMMA2,
  LEMMA_L2,
  THM1,
  THM2,
  THM3_STATED,
  THM3_SHARP,
  REMARK_HN,
  COM,
  RAYLEIGH,
  COORD_EIG,
};

std::string check_label(CheckKind c);
CheckKind check_from_label(const std::string& s);

struct GraphSpec {
  enum class Type { SPHERE, GENERATOR, FIXTURE };
  Type type = Type::SPHERE;
  double radius = 1.0;  // SPHERE
  std::uint64_t seed = 0;
  double r0 = 1.0;
  double amplitude = 0.2;
  int bandlimit = 4;
  bool symmetric = false;
  std::string fixture_path;  // FIXTURE: serialized graph file
};

struct GridSpec {
  bool defaulted = true;
  DirectionGrid::Rule rule = DirectionGrid::Rule::ICOSPHERE_VERTEX;
  int a = 0;  // icosphere level / hopf n_s / sobol log2_n
  int b = 0;  // hopf n_angle
};

struct ScenarioConfig {
  std::string id;
  AmbientModel ambient = AmbientModel::constant(3, 0.0);
  GraphSpec graph;
  GridSpec grid;
  std::vector<int> mesh_levels = {3, 4, 5};
  std::vector<CheckKind> checks;
  double center_tol = 1e-10;
};

// Strict parse: unknown keys, duplicate ids and check/ambient mismatches are
// errors with the offending name in the message.
std::vector<ScenarioConfig> parse_config(const std::string& json_text);
std::vector<ScenarioConfig> load_config(const std::string& path);

void validate_scenario(const ScenarioConfig& sc);

// True when any requested check needs a FEM eigenvalue.
bool needs_spectrum(const ScenarioConfig& sc);

DirectionGrid make_grid(const ScenarioConfig& sc);

}  // namespace eigenbound
