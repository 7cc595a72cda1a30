#include "eigenbound/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace eigenbound {

using nlohmann::json;

std::string check_label(CheckKind c) {
  switch (c) {
    case CheckKind::LEMMA1: return "LEMMA1";
    case CheckKind::LEMMA2: return "LEMMA2";
    case CheckKind::LEMMA_L2: return "LEMMA_L2";
    case CheckKind::THM1: return "THM1";
    case CheckKind::THM2: return "THM2";
    case CheckKind::THM3_STATED: return "THM3_STATED";
    case CheckKind::THM3_SHARP: return "THM3_SHARP";
    case CheckKind::REMARK_HN: return "REMARK_HN";
    case CheckKind::COM: return "COM";
    case CheckKind::RAYLEIGH: return "RAYLEIGH";
    case CheckKind::COORD_EIG: return "COORD_EIG";
  }
  return "?";
}

CheckKind check_from_label(const std::string& s) {
  static const std::vector<CheckKind> all = {
      CheckKind::LEMMA1,   CheckKind::LEMMA2,      CheckKind::LEMMA_L2,
      CheckKind::THM1,     CheckKind::THM2,        CheckKind::THM3_STATED,
      CheckKind::THM3_SHARP, CheckKind::REMARK_HN, CheckKind::COM,
      CheckKind::RAYLEIGH, CheckKind::COORD_EIG};
  for (CheckKind c : all)
    if (check_label(c) == s) return c;
  throw validation_error("unknown check '" + s + "'");
}

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw validation_error("config: unknown key '" + it.key() + "' in " +
                             where);
}

AmbientModel parse_ambient(const json& j, const std::string& where) {
  if (!j.is_object())
    throw validation_error("config: ambient must be an object in " + where);
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") {
    require_keys(j, {"type", "dim", "curvature"}, where + ".ambient");
    return AmbientModel::constant(j.at("dim").get<int>(),
                                  j.at("curvature").get<double>());
  }
  if (type == "rank1") {
    require_keys(j, {"type", "k", "n"}, where + ".ambient");
    return AmbientModel::rank1(j.at("k").get<int>(), j.at("n").get<int>());
  }
  if (type == "warped") {
    require_keys(j,
                 {"type", "dim", "family", "delta", "eps", "m", "r_max",
                  "class", "class_delta"},
                 where + ".ambient");
    const std::string family = j.at("family").get<std::string>();
    const double r_max = j.at("r_max").get<double>();
    WarpSpec warp;
    if (family == "sin_delta")
      warp = WarpSpec::sin_delta(j.at("delta").get<double>(), r_max);
    else if (family == "linear")
      warp = WarpSpec::linear(r_max);
    else if (family == "sinh_delta")
      warp = WarpSpec::sinh_delta(j.at("delta").get<double>(), r_max);
    else if (family == "perturbed_sin")
      warp = WarpSpec::perturbed_sin(j.at("delta").get<double>(),
                                     j.at("eps").get<double>(),
                                     j.at("m").get<int>(), r_max);
    else
      throw validation_error("config: unknown warp family '" + family +
                             "' in " + where);
    const std::string cls_tag = j.at("class").get<std::string>();
    const double cls_delta = j.contains("class_delta")
                                 ? j.at("class_delta").get<double>()
                                 : j.value("delta", 1.0);
    CurvatureClass cls;
    if (cls_tag == "nonneg_pinched")
      cls = CurvatureClass::nonneg_pinched(cls_delta);
    else if (cls_tag == "nonpos")
      cls = CurvatureClass::nonpos();
    else if (cls_tag == "pinched_neg")
      cls = CurvatureClass::pinched_neg(cls_delta);
    else
      throw validation_error("config: unknown curvature class '" + cls_tag +
                             "' in " + where);
    return AmbientModel::warped(j.at("dim").get<int>(), warp, cls);
  }
  throw validation_error("config: unknown ambient type '" + type + "' in " +
                         where);
}

GraphSpec parse_graph(const json& j, const std::string& where) {
  GraphSpec g;
  const std::string type = j.at("type").get<std::string>();
  if (type == "sphere") {
    require_keys(j, {"type", "radius"}, where + ".graph");
    g.type = GraphSpec::Type::SPHERE;
    g.radius = j.at("radius").get<double>();
  } else if (type == "generator") {
    require_keys(j,
                 {"type", "seed", "r0", "amplitude", "bandlimit", "symmetric"},
                 where + ".graph");
    g.type = GraphSpec::Type::GENERATOR;
    g.seed = j.at("seed").get<std::uint64_t>();
    g.r0 = j.at("r0").get<double>();
    g.amplitude = j.at("amplitude").get<double>();
    g.bandlimit = j.at("bandlimit").get<int>();
    g.symmetric = j.at("symmetric").get<bool>();
  } else if (type == "fixture") {
    require_keys(j, {"type", "path"}, where + ".graph");
    g.type = GraphSpec::Type::FIXTURE;
    g.fixture_path = j.at("path").get<std::string>();
  } else {
    throw validation_error("config: unknown graph type '" + type + "' in " +
                           where);
  }
  return g;
}

GridSpec parse_grid(const json& j, const std::string& where) {
  GridSpec g;
  g.defaulted = false;
  const std::string rule = j.at("rule").get<std::string>();
  if (rule == "icosphere") {
    require_keys(j, {"rule", "level"}, where + ".grid");
    g.rule = DirectionGrid::Rule::ICOSPHERE_VERTEX;
    g.a = j.at("level").get<int>();
  } else if (rule == "hopf") {
    require_keys(j, {"rule", "n_s", "n_angle"}, where + ".grid");
    g.rule = DirectionGrid::Rule::HOPF_PRODUCT;
    g.a = j.at("n_s").get<int>();
    g.b = j.at("n_angle").get<int>();
  } else if (rule == "sobol") {
    require_keys(j, {"rule", "log2_n"}, where + ".grid");
    g.rule = DirectionGrid::Rule::QMC_SOBOL;
    g.a = j.at("log2_n").get<int>();
  } else {
    throw validation_error("config: unknown grid rule '" + rule + "' in " +
                           where);
  }
  return g;
}

}  // namespace

bool needs_spectrum(const ScenarioConfig& sc) {
  for (CheckKind c : sc.checks) {
    switch (c) {
      case CheckKind::THM1:
      case CheckKind::THM2:
      case CheckKind::REMARK_HN:
      case CheckKind::RAYLEIGH:
        return true;
      case CheckKind::THM3_STATED:
      case CheckKind::THM3_SHARP:
        if (sc.ambient.rank1_k() == 1) return true;
        break;
      default:
        break;
    }
  }
  return false;
}

void validate_scenario(const ScenarioConfig& sc) {
  const AmbientModel& a = sc.ambient;
  const auto kind = a.kind();
  const auto tag = a.curvature_class().tag;
  auto fail = [&](CheckKind c, const std::string& why) {
    throw validation_error("config: scenario '" + sc.id + "': check " +
                           check_label(c) + " incompatible with ambient " +
                           a.label() + " (" + why + ")");
  };
  for (CheckKind c : sc.checks) {
    switch (c) {
      case CheckKind::LEMMA1:
        break;
      case CheckKind::LEMMA2:
        if (kind != AmbientModel::Kind::RANK1)
          fail(c, "rank-1 ambients only");
        break;
      case CheckKind::LEMMA_L2:
        if (kind == AmbientModel::Kind::RANK1)
          fail(c, "constant or warped ambients only");
        break;
      case CheckKind::THM1:
        if (kind == AmbientModel::Kind::RANK1 ||
            tag == CurvatureClass::Tag::PINCHED_NEG)
          fail(c, "needs 0 <= K <= delta^2 or K <= 0");
        break;
      case CheckKind::THM2:
        if (kind == AmbientModel::Kind::RANK1 ||
            tag != CurvatureClass::Tag::PINCHED_NEG)
          fail(c, "needs K <= -delta^2");
        break;
      case CheckKind::THM3_STATED:
      case CheckKind::THM3_SHARP:
        if (kind != AmbientModel::Kind::RANK1) fail(c, "rank-1 ambients only");
        break;
      case CheckKind::REMARK_HN:
        if (!((kind == AmbientModel::Kind::CONSTANT && a.curvature() == -1.0 &&
               a.dim() == 3) ||
              (kind == AmbientModel::Kind::RANK1 && a.rank1_k() == 1 &&
               a.dim() == 3)))
          fail(c, "real hyperbolic 3-space only");
        break;
      case CheckKind::COM:
        if (kind != AmbientModel::Kind::CONSTANT)
          fail(c, "constant-curvature ambients only");
        break;
      case CheckKind::RAYLEIGH:
        if (a.dim() != 3) fail(c, "needs a 2-dimensional hypersurface");
        break;
      case CheckKind::COORD_EIG:
        if (kind != AmbientModel::Kind::CONSTANT || a.dim() != 3)
          fail(c, "constant-curvature 3-dimensional ambients only");
        if (sc.graph.type != GraphSpec::Type::SPHERE)
          fail(c, "geodesic-sphere graphs only");
        break;
    }
  }
  if (needs_spectrum(sc)) {
    if (a.dim() != 3)
      throw validation_error("config: scenario '" + sc.id +
                             "': FEM checks need ambient dimension 3");
    if (sc.mesh_levels.size() < 3)
      throw validation_error("config: scenario '" + sc.id +
                             "': FEM checks need >= 3 mesh levels");
    for (std::size_t i = 1; i < sc.mesh_levels.size(); ++i)
      if (sc.mesh_levels[i] != sc.mesh_levels[i - 1] + 1)
        throw validation_error("config: scenario '" + sc.id +
                               "': mesh levels must be consecutive");
  }
}

std::vector<ScenarioConfig> parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("config: parse error: ") + e.what());
  }
  require_keys(root, {"scenarios"}, "root");
  if (!root.contains("scenarios") || !root["scenarios"].is_array())
    throw validation_error("config: missing 'scenarios' array");
  std::vector<ScenarioConfig> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < root["scenarios"].size(); ++i) {
    const json& j = root["scenarios"][i];
    const std::string where = "scenario #" + std::to_string(i);
    require_keys(j,
                 {"id", "ambient", "graph", "grid", "mesh_levels", "checks",
                  "center_tol"},
                 where);
    ScenarioConfig sc;
    sc.id = j.at("id").get<std::string>();
    if (!ids.insert(sc.id).second)
      throw validation_error("config: duplicate scenario id '" + sc.id + "'");
    sc.ambient = parse_ambient(j.at("ambient"), where);
    sc.graph = parse_graph(j.at("graph"), where);
    if (j.contains("grid")) sc.grid = parse_grid(j.at("grid"), where);
    if (j.contains("mesh_levels"))
      sc.mesh_levels = j.at("mesh_levels").get<std::vector<int>>();
    if (j.contains("center_tol"))
      sc.center_tol = j.at("center_tol").get<double>();
    if (!j.contains("checks") || !j.at("checks").is_array() ||
        j.at("checks").empty())
      throw validation_error("config: scenario '" + sc.id +
                             "' needs a non-empty checks list");
    for (const auto& c : j.at("checks"))
      sc.checks.push_back(check_from_label(c.get<std::string>()));
    validate_scenario(sc);
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<ScenarioConfig> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw validation_error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

DirectionGrid make_grid(const ScenarioConfig& sc) {
  const int d = sc.ambient.dim();
  if (sc.grid.defaulted) {
    if (d == 3) return icosphere_grid(5);
    if (d == 4) return hopf_grid(24, 48);
    return sobol_sphere_grid(d, 16);
  }
  switch (sc.grid.rule) {
    case DirectionGrid::Rule::ICOSPHERE_VERTEX:
      if (d != 3)
        throw validation_error("config: icosphere grids need dimension 3");
      return icosphere_grid(sc.grid.a);
    case DirectionGrid::Rule::HOPF_PRODUCT:
      if (d != 4)
        throw validation_error("config: hopf grids need dimension 4");
      return hopf_grid(sc.grid.a, sc.grid.b);
    case DirectionGrid::Rule::QMC_SOBOL:
      if (d < 5)
        throw validation_error("config: sobol grids are for dimension >= 5");
      return sobol_sphere_grid(d, sc.grid.a);
  }
  throw validation_error("config: bad grid spec");
}

}  // namespace eigenbound
