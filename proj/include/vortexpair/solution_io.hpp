/// \file solution_io.hpp
/// JSON persistence and CSV/SVG export of computed pairs.
///
/// The JSON layout is versioned (schema_version) and deterministic: keys are
/// alphabetical and floating-point values use the shortest round-tripping
/// representation, so loading a file and saving it again reproduces the bytes
/// exactly (provenance is carried through unchanged on rewrite).

#ifndef VORTEXPAIR_SOLUTION_IO_HPP
#define VORTEXPAIR_SOLUTION_IO_HPP

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "vortexpair/boundary.hpp"
#include "vortexpair/types.hpp"
#include "vortexpair/version.hpp"

namespace vortexpair {

inline constexpr int schema_version = 1;

inline std::string to_string(Model m) {
  return m == Model::euler ? "euler" : "gsqg";
}
inline std::string to_string(PairKind p) {
  return p == PairKind::corotating ? "corotating" : "counter";
}
inline std::string to_string(Velocity::Kind k) {
  return k == Velocity::Kind::angular ? "angular" : "translation";
}

inline Model model_from_string(const std::string& s) {
  if (s == "euler") return Model::euler;
  if (s == "gsqg") return Model::gsqg;
  throw IoError("unknown model '" + s + "'");
}
inline PairKind pair_from_string(const std::string& s) {
  if (s == "corotating") return PairKind::corotating;
  if (s == "counter") return PairKind::counter_rotating;
  throw IoError("unknown pair kind '" + s + "'");
}
inline Velocity::Kind velocity_kind_from_string(const std::string& s) {
  if (s == "angular") return Velocity::Kind::angular;
  if (s == "translation") return Velocity::Kind::translation;
  throw IoError("unknown velocity kind '" + s + "'");
}

/// Provenance block for a freshly computed solution.  The timestamp is the
/// only field that varies between runs on identical inputs.
inline nlohmann::json default_provenance() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return nlohmann::json{
      {"determinism",
       "identical inputs reproduce all numeric fields; only the timestamp "
       "varies between runs"},
      {"generator", std::string("vortexpair ") + version_string},
      {"timestamp", buf}};
}

inline nlohmann::json solution_to_json(const PairSolution& sol,
                                       const nlohmann::json& provenance) {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["spec"] = {{"model", to_string(sol.spec.model)},
               {"alpha", sol.spec.alpha},
               {"pair", to_string(sol.spec.pair)},
               {"d", sol.spec.d},
               {"eps", sol.spec.eps},
               {"modes", sol.spec.modes},
               {"grid", sol.spec.grid}};
  j["velocity"] = {{"kind", to_string(sol.velocity.kind)},
                   {"value", sol.velocity.value}};
  j["coefficients"] = sol.coefficients.a;
  j["residual_inf"] = sol.residual_inf;
  j["newton_iterations"] = sol.newton_iterations;
  j["validation"] = {{"tangency_inf", sol.validation.tangency_inf},
                     {"min_curvature", sol.validation.min_curvature},
                     {"symmetry_defect", sol.validation.symmetry_defect},
                     {"holder_seminorm", sol.validation.holder_seminorm},
                     {"pass", sol.validation.pass},
                     {"notes", sol.validation.notes}};
  j["provenance"] = provenance;
  return j;
}

struct LoadedSolution {
  PairSolution solution;
  nlohmann::json provenance;
};

inline LoadedSolution solution_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version").get<int>() != schema_version)
      throw IoError("unsupported schema_version");
    LoadedSolution out;
    const auto& s = j.at("spec");
    out.solution.spec.model = model_from_string(s.at("model").get<std::string>());
    out.solution.spec.alpha = s.at("alpha").get<double>();
    out.solution.spec.pair = pair_from_string(s.at("pair").get<std::string>());
    out.solution.spec.d = s.at("d").get<double>();
    out.solution.spec.eps = s.at("eps").get<double>();
    out.solution.spec.modes = s.at("modes").get<int>();
    out.solution.spec.grid = s.at("grid").get<int>();
    const auto& v = j.at("velocity");
    out.solution.velocity.kind =
        velocity_kind_from_string(v.at("kind").get<std::string>());
    out.solution.velocity.value = v.at("value").get<double>();
    out.solution.coefficients.a =
        j.at("coefficients").get<std::vector<double>>();
    out.solution.residual_inf = j.at("residual_inf").get<double>();
    out.solution.newton_iterations = j.at("newton_iterations").get<int>();
    const auto& r = j.at("validation");
    out.solution.validation.tangency_inf = r.at("tangency_inf").get<double>();
    out.solution.validation.min_curvature =
        r.at("min_curvature").get<double>();
    out.solution.validation.symmetry_defect =
        r.at("symmetry_defect").get<double>();
    out.solution.validation.holder_seminorm =
        r.at("holder_seminorm").get<double>();
    out.solution.validation.pass = r.at("pass").get<bool>();
    out.solution.validation.notes =
        r.at("notes").get<std::vector<std::string>>();
    out.provenance = j.at("provenance");
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("malformed solution file: ") + ex.what());
  }
}

inline void write_solution_file(const std::string& path,
                                const PairSolution& sol,
                                const nlohmann::json& provenance) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << solution_to_json(sol, provenance).dump(2) << '\n';
  if (!os) throw IoError("write to '" + path + "' failed");
}

inline void write_solution_file(const std::string& path,
                                const PairSolution& sol) {
  write_solution_file(path, sol, default_provenance());
}

inline LoadedSolution read_solution_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open '" + path + "' for reading");
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("cannot parse '") + path + "': " + ex.what());
  }
  return solution_from_json(j);
}

namespace detail {
inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
} // namespace detail

/// Physical boundary samples as curve_id,theta,x,y rows.
inline std::string solution_to_csv(const PairSolution& sol) {
  const PhysicalCurves pc =
      scale_to_physical(sol.spec, sol.coefficients, sol.spec.grid);
  std::ostringstream os;
  os << "curve_id,theta,x,y\n";
  for (int cid = 1; cid <= 2; ++cid) {
    const std::vector<complex>& z = (cid == 1) ? pc.z1 : pc.z2;
    for (std::size_t j = 0; j < z.size(); ++j)
      os << cid << ',' << detail::fmt_double(pc.theta[j]) << ','
         << detail::fmt_double(z[j].real()) << ','
         << detail::fmt_double(z[j].imag()) << '\n';
  }
  return os.str();
}

/// Minimal SVG: one closed path per boundary plus the line through the two
/// patch centroids.  SVG's y axis points down, so y coordinates are negated.
inline std::string solution_to_svg(const PairSolution& sol) {
  const PhysicalCurves pc =
      scale_to_physical(sol.spec, sol.coefficients, sol.spec.grid);

  double xmin = 0.0, xmax = 2.0 * sol.spec.d, ymin = 0.0, ymax = 0.0;
  for (const auto& zs : {pc.z1, pc.z2})
    for (const complex& z : zs) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, -z.imag());
      ymax = std::max(ymax, -z.imag());
    }
  const double pad = 0.05 * (xmax - xmin) + 0.1;
  xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;

  auto fmt = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8g", x);
    return std::string(buf);
  };
  auto path_for = [&](const std::vector<complex>& z) {
    std::ostringstream p;
    for (std::size_t j = 0; j < z.size(); ++j)
      p << (j == 0 ? "M " : " L ") << fmt(z[j].real()) << ' '
        << fmt(-z[j].imag());
    p << " Z";
    return p.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
     << "viewBox=\"" << fmt(xmin) << ' ' << fmt(ymin) << ' '
     << fmt(xmax - xmin) << ' ' << fmt(ymax - ymin) << "\">\n"
     << "  <line x1=\"0\" y1=\"0\" x2=\"" << fmt(2.0 * sol.spec.d)
     << "\" y2=\"0\" stroke=\"#999999\" stroke-dasharray=\"0.05,0.05\" "
     << "stroke-width=\"0.01\"/>\n"
     << "  <path d=\"" << path_for(pc.z1)
     << "\" fill=\"none\" stroke=\"#1f6fb4\" stroke-width=\"0.02\"/>\n"
     << "  <path d=\"" << path_for(pc.z2)
     << "\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"0.02\"/>\n"
     << "</svg>\n";
  return os.str();
}

} // namespace vortexpair

#endif
