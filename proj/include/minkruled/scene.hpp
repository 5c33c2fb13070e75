#pragma once

// Scene configuration (JSON) and the report / mesh / verify drivers behind
// the minkruled command-line tool. Every number printed here comes from the
// library operations; this file only orchestrates and formats.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "curve.hpp"
#include "error.hpp"
#include "frenet.hpp"
#include "involute.hpp"
#include "mesh.hpp"
#include "random_curves.hpp"
#include "ruled_surface.hpp"
#include "synthesis.hpp"

namespace minkruled {

/// kappa(s) or tau(s): polynomial coefficients in ascending powers, or a
/// table of (s, value) samples with linear interpolation (clamped).
struct Profile {
  std::vector<double> poly;
  std::vector<std::pair<double, double>> table;

  double operator()(double s) const {
    if (!table.empty()) {
      if (s <= table.front().first) return table.front().second;
      if (s >= table.back().first) return table.back().second;
      auto hi = std::upper_bound(table.begin(), table.end(), s,
                                 [](double q, const auto& p) { return q < p.first; });
      auto lo = hi - 1;
      const double u = (s - lo->first) / (hi->first - lo->first);
      return lo->second + u * (hi->second - lo->second);
    }
    double acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
};

struct CurveSpec {
  enum class Type { ReferenceHelix, Prescribed };
  Type type = Type::ReferenceHelix;
  Profile kappa;
  Profile tau;
  FrenetApparatus initial_frame = canonical_frame();
  LorentzVector initial_point;
  std::optional<Interval> domain;
  DerivativeMode mode = DerivativeMode::Analytic;
};

struct NamedDirection {
  std::string label;
  RulingDirection dir;
};

struct OutputSpec {
  MeshFormat format = MeshFormat::OBJ;
  std::string path;
};

struct SceneConfig {
  CurveSpec curve;
  double c = 1.0;
  std::vector<NamedDirection> directions;
  Interval s_range{0.0, 1.0};
  Interval v_range{-2.0, 2.0};
  int ns = 32;
  int nv = 9;
  int report_samples = 8;
  double cusp_gap = 0.01;
  std::vector<OutputSpec> outputs;
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

using nlohmann::json;

[[noreturn]] inline void config_error(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::InvalidConfig, "field '" + field + "': " + msg);
}

inline double get_number(const json& j, const std::string& field) {
  if (!j.is_number()) config_error(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) config_error(field, "must be finite");
  return x;
}

inline Interval get_interval(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) config_error(field, "expected [lo, hi]");
  Interval r{get_number(j[0], field + "[0]"), get_number(j[1], field + "[1]")};
  if (!(r.lo < r.hi)) config_error(field, "expected lo < hi");
  return r;
}

inline LorentzVector get_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) config_error(field, "expected [x0, x1, x2]");
  return {get_number(j[0], field + "[0]"), get_number(j[1], field + "[1]"),
          get_number(j[2], field + "[2]")};
}

inline Profile get_profile(const json& j, const std::string& field) {
  Profile p;
  if (j.is_number()) {
    p.poly = {get_number(j, field)};
  } else if (j.is_object() && j.contains("poly")) {
    const json& c = j["poly"];
    if (!c.is_array() || c.empty()) config_error(field + ".poly", "expected non-empty array");
    for (std::size_t i = 0; i < c.size(); ++i)
      p.poly.push_back(get_number(c[i], fmt::format("{}.poly[{}]", field, i)));
  } else if (j.is_object() && j.contains("table")) {
    const json& t = j["table"];
    if (!t.is_array() || t.size() < 2) config_error(field + ".table", "expected >= 2 rows");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string f = fmt::format("{}.table[{}]", field, i);
      if (!t[i].is_array() || t[i].size() != 2) config_error(f, "expected [s, value]");
      p.table.emplace_back(get_number(t[i][0], f), get_number(t[i][1], f));
      if (i > 0 && !(p.table[i].first > p.table[i - 1].first))
        config_error(f, "s values must increase");
    }
  } else {
    config_error(field, "expected a number, {\"poly\": [...]} or {\"table\": [[s, v], ...]}");
  }
  return p;
}

inline NamedDirection get_direction(const json& j, std::size_t index) {
  const std::string field = fmt::format("directions[{}]", index);
  try {
    if (j.is_string()) {
      const auto name = j.get<std::string>();
      if (name == "t*" || name == "t_star") return {"t_star", t_star_direction()};
      if (name == "n*" || name == "n_star") return {"n_star", n_star_direction()};
      if (name == "b*" || name == "b_star") return {"b_star", b_star_direction()};
      config_error(field, "unknown direction name '" + name + "'");
    }
    const LorentzVector x = get_vector(j, field);
    return {fmt::format("d{}", index), make_direction(x.x0, x.x1, x.x2)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidConfig) throw;
    config_error(field, e.what());
  }
}

inline CurveSpec get_curve(const json& j) {
  CurveSpec spec;
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    config_error("curve.type", "expected \"paper-helix\" or \"prescribed\"");
  const auto type = j["type"].get<std::string>();
  if (type == "paper-helix" || type == "reference-helix") {
    spec.type = CurveSpec::Type::ReferenceHelix;
  } else if (type == "prescribed") {
    spec.type = CurveSpec::Type::Prescribed;
    if (!j.contains("kappa")) config_error("curve.kappa", "required for prescribed curves");
    if (!j.contains("tau")) config_error("curve.tau", "required for prescribed curves");
    spec.kappa = get_profile(j["kappa"], "curve.kappa");
    spec.tau = get_profile(j["tau"], "curve.tau");
    if (j.contains("initial_point"))
      spec.initial_point = get_vector(j["initial_point"], "curve.initial_point");
    if (j.contains("initial_frame")) {
      const json& f = j["initial_frame"];
      if (!f.is_object() || !f.contains("t") || !f.contains("n") || !f.contains("b"))
        config_error("curve.initial_frame", "expected {\"t\": [...], \"n\": [...], \"b\": [...]}");
      spec.initial_frame.t = get_vector(f["t"], "curve.initial_frame.t");
      spec.initial_frame.n = get_vector(f["n"], "curve.initial_frame.n");
      spec.initial_frame.b = get_vector(f["b"], "curve.initial_frame.b");
    }
  } else {
    config_error("curve.type", "unknown curve type '" + type + "'");
  }
  if (j.contains("domain")) spec.domain = get_interval(j["domain"], "curve.domain");
  if (j.contains("derivatives")) {
    const std::string m = j["derivatives"].is_string() ? j["derivatives"].get<std::string>() : "";
    if (m == "analytic")
      spec.mode = DerivativeMode::Analytic;
    else if (m == "finite-difference")
      spec.mode = DerivativeMode::FiniteDifference;
    else
      config_error("curve.derivatives", "expected \"analytic\" or \"finite-difference\"");
  }
  return spec;
}

inline std::string line_of(const std::string& text, std::size_t byte) {
  const auto end = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
  return fmt::format("line {}", line);
}

}  // namespace detail

inline SceneConfig parse_scene_config(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, detail::line_of(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) detail::config_error("<root>", "expected an object");

  SceneConfig cfg;
  try {
    if (!j.contains("curve")) detail::config_error("curve", "required");
    cfg.curve = detail::get_curve(j["curve"]);
    if (j.contains("c")) cfg.c = detail::get_number(j["c"], "c");
    if (!j.contains("directions") || !j["directions"].is_array() || j["directions"].empty())
      detail::config_error("directions", "expected a non-empty array");
    for (std::size_t i = 0; i < j["directions"].size(); ++i)
      cfg.directions.push_back(detail::get_direction(j["directions"][i], i));
    if (!j.contains("s_range")) detail::config_error("s_range", "required");
    cfg.s_range = detail::get_interval(j["s_range"], "s_range");
    if (j.contains("v_range")) cfg.v_range = detail::get_interval(j["v_range"], "v_range");
    if (j.contains("grid")) {
      const json& g = j["grid"];
      if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer())
        detail::config_error("grid", "expected [ns, nv] integers");
      cfg.ns = g[0].get<int>();
      cfg.nv = g[1].get<int>();
      if (cfg.ns < 2 || cfg.nv < 2) detail::config_error("grid", "ns and nv must be >= 2");
    }
    if (j.contains("report_samples")) {
      if (!j["report_samples"].is_number_integer() || j["report_samples"].get<int>() < 2)
        detail::config_error("report_samples", "expected an integer >= 2");
      cfg.report_samples = j["report_samples"].get<int>();
    }
    if (j.contains("cusp_gap")) {
      cfg.cusp_gap = detail::get_number(j["cusp_gap"], "cusp_gap");
      if (cfg.cusp_gap < tol::cusp) detail::config_error("cusp_gap", "must be >= 1e-3");
    }
    if (j.contains("outputs")) {
      const json& o = j["outputs"];
      if (!o.is_array()) detail::config_error("outputs", "expected an array");
      for (std::size_t i = 0; i < o.size(); ++i) {
        const std::string f = fmt::format("outputs[{}]", i);
        if (!o[i].is_object() || !o[i].contains("format") || !o[i].contains("path") ||
            !o[i]["format"].is_string() || !o[i]["path"].is_string())
          detail::config_error(f, "expected {\"format\": \"obj\"|\"csv\", \"path\": \"...\"}");
        OutputSpec out;
        const auto fmt_name = o[i]["format"].get<std::string>();
        if (fmt_name == "obj")
          out.format = MeshFormat::OBJ;
        else if (fmt_name == "csv")
          out.format = MeshFormat::CSV;
        else
          detail::config_error(f + ".format", "expected \"obj\" or \"csv\"");
        out.path = o[i]["path"].get<std::string>();
        cfg.outputs.push_back(out);
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, e.what());
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Scene construction
// ---------------------------------------------------------------------------

inline ParamCurve build_curve(const CurveSpec& spec, const Interval& s_range) {
  if (spec.type == CurveSpec::Type::ReferenceHelix) {
    const Interval domain = spec.domain.value_or(Interval{-10.0, 10.0});
    return reference_helix(spec.mode, domain);
  }
  const Interval domain = spec.domain.value_or(Interval{s_range.lo - 0.05, s_range.hi + 0.05});
  ParamCurve curve = curve_from_curvature(spec.kappa, spec.tau, spec.initial_frame,
                                          spec.initial_point, domain);
  return curve.with_mode(spec.mode);
}

/// The parts of s_range at least `gap` away from the cusp s = c.
inline std::vector<Interval> cusp_free_pieces(const Interval& s_range, double c, double gap) {
  std::vector<Interval> out;
  if (c <= s_range.lo - gap || c >= s_range.hi + gap) return {s_range};
  if (c - gap > s_range.lo) out.push_back({s_range.lo, c - gap});
  if (c + gap < s_range.hi) out.push_back({c + gap, s_range.hi});
  return out;
}

inline std::vector<double> linspace(const Interval& r, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lerp(r, n == 1 ? 0.0 : static_cast<double>(i) / (n - 1)));
  return out;
}

struct Scene {
  SceneConfig config;
  ParamCurve curve;
  std::vector<InvoluteCurve> pieces;
  bool split = false;
};

inline Scene build_scene(const SceneConfig& cfg) {
  ParamCurve curve = [&] {
    try {
      return build_curve(cfg.curve, cfg.s_range);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidConfig, std::string("curve: ") + e.what());
    }
  }();
  const double margin = darboux_margin(curve) + fd::reach * tol::h_low;
  if (cfg.s_range.lo - margin < curve.domain().lo || cfg.s_range.hi + margin > curve.domain().hi)
    detail::config_error("s_range", fmt::format("must lie inside the curve domain [{}, {}] with margin {}",
                                                curve.domain().lo, curve.domain().hi, margin));
  const auto parts = cusp_free_pieces(cfg.s_range, cfg.c, cfg.cusp_gap);
  if (parts.empty()) detail::config_error("s_range", "lies entirely inside the cusp gap around c");
  Scene scene{cfg, curve, {}, parts.size() > 1 || parts.front().lo != cfg.s_range.lo ||
                                  parts.front().hi != cfg.s_range.hi};
  for (const auto& p : parts) scene.pieces.emplace_back(curve, cfg.c, p);
  return scene;
}

/// Report sample points spread over the cusp-free pieces in proportion to length.
inline std::vector<std::pair<std::size_t, double>> report_samples(const Scene& scene) {
  double total = 0.0;
  for (const auto& p : scene.pieces) total += p.domain().length();
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t k = 0; k < scene.pieces.size(); ++k) {
    const Interval d = scene.pieces[k].domain();
    const int n = std::max(2, static_cast<int>(std::lround(scene.config.report_samples * d.length() / total)));
    for (double s : linspace(d, n)) out.emplace_back(k, s);
  }
  return out;
}

struct RunResult {
  std::string text;         // stdout
  std::string diagnostics;  // stderr
  int exit_code = 0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_degenerate = 3;

namespace detail {

inline std::string vec(const LorentzVector& u) {
  return fmt::format("({}, {}, {})", num(u.x0), num(u.x1), num(u.x2));
}

inline std::string curve_label(const CurveSpec& spec) {
  const std::string mode =
      spec.mode == DerivativeMode::Analytic ? "closed-form derivatives" : "finite-difference derivatives";
  return fmt::format("{} ({})",
                     spec.type == CurveSpec::Type::ReferenceHelix ? "paper-helix" : "prescribed", mode);
}

// Smallest |residual| of a = sigma * b over sigma in {+1, -1}.
inline std::pair<int, double> best_sign(const LorentzVector& a, const LorentzVector& b) {
  const double plus = max_abs(a - b);
  const double minus = max_abs(a + b);
  return plus <= minus ? std::pair{+1, plus} : std::pair{-1, minus};
}

inline std::string sign_line(const std::string& rel, const LorentzVector& a_cross,
                             const LorentzVector& a_literal, const LorentzVector& target) {
  const auto [s1, r1] = best_sign(a_cross, target);
  const auto [s2, r2] = best_sign(a_literal, target);
  return fmt::format("  {:<14} cross: sigma = {:+d} (residual {:.3e})   literal: sigma = {:+d} (residual {:.3e})\n",
                     rel, s1, r1, s2, r2);
}

}  // namespace detail

inline RunResult run_report(const SceneConfig& cfg) {
  RunResult out;
  const Scene scene = build_scene(cfg);
  const auto samples = report_samples(scene);
  std::vector<double> s_values;
  for (const auto& [k, s] : samples) s_values.push_back(s);
  int warnings = 0;
  auto warn = [&](const std::string& msg) {
    ++warnings;
    out.diagnostics += "warning: " + msg + "\n";
  };

  std::string& t = out.text;
  t += "# minkruled report\n";
  t += fmt::format("curve          {}\n", detail::curve_label(cfg.curve));
  t += fmt::format("c              {}\n", detail::num(cfg.c));
  t += fmt::format("s_range        [{}, {}]\n", detail::num(cfg.s_range.lo), detail::num(cfg.s_range.hi));
  t += "pieces        ";
  for (const auto& p : scene.pieces)
    t += fmt::format(" [{}, {}]", detail::num(p.domain().lo), detail::num(p.domain().hi));
  t += "\n";
  if (scene.split)
    t += fmt::format("note           s_range split around the involute cusp at s = c (gap {})\n",
                     detail::num(cfg.cusp_gap));
  t += "note           involute offset uses signed (c - s); the |c - s| variant is its mirror for s > c\n";

  t += "\n## base curve\n";
  t += fmt::format("{:>16} {:>16} {:>16} {:>16} {:>16}  {}\n", "s", "kappa", "tau", "theta",
                   "theta_dot", "darboux");
  std::optional<DarbouxCase> d_case;
  bool mixed_case = false;
  for (double s : s_values) {
    try {
      const DarbouxData dd = darboux_data(scene.curve, s);
      t += fmt::format("{:>16} {:>16} {:>16} {:>16} {:>16}  {}\n", detail::num(s),
                       detail::num(dd.frame.kappa), detail::num(dd.frame.tau), detail::num(dd.theta),
                       detail::num(dd.theta_dot), to_string(dd.d_case));
      if (d_case && *d_case != dd.d_case) mixed_case = true;
      d_case = dd.d_case;
    } catch (const Error& e) {
      t += fmt::format("{:>16}  error: {}\n", detail::num(s), e.what());
      warn(fmt::format("base curve at s = {}: {}", detail::num(s), e.what()));
    }
  }
  t += fmt::format("darboux case   {}\n",
                   !d_case ? "unknown" : (mixed_case ? "mixed" : to_string(*d_case)));
  try {
    const HelixCheck h = is_general_helix(scene.curve, s_values);
    t += fmt::format("general helix  {} (max |tau/kappa - median| = {:.3e}, median = {})\n",
                     h.is_helix ? "yes" : "no", h.deviation, detail::num(h.median_ratio));
  } catch (const Error& e) {
    warn(std::string("helix check: ") + e.what());
  }

  // Frame product relations under both coordinate conventions.
  try {
    const double s0 = s_values.front();
    const FrenetApparatus f = frenet_apparatus(scene.curve, s0);
    t += fmt::format("\n## frame products at s = {}\n", detail::num(s0));
    t += detail::sign_line("t x n = s(-b)", cross(f.t, f.n), cross_literal(f.t, f.n), -f.b);
    t += detail::sign_line("n x b = s(t)", cross(f.n, f.b), cross_literal(f.n, f.b), f.t);
    t += detail::sign_line("b x t = s(-n)", cross(f.b, f.t), cross_literal(f.b, f.t), -f.n);
    const InvoluteFrame g = involute_frame_pointwise(scene.curve, s0);
    t += detail::sign_line("t*x n* = s(-b*)", cross(g.t_star, g.n_star),
                           cross_literal(g.t_star, g.n_star), -g.b_star);
    t += detail::sign_line("n*x b* = s(-t*)", cross(g.n_star, g.b_star),
                           cross_literal(g.n_star, g.b_star), -g.t_star);
    t += detail::sign_line("b*x t* = s(n*)", cross(g.b_star, g.t_star),
                           cross_literal(g.b_star, g.t_star), g.n_star);
  } catch (const Error& e) {
    warn(std::string("frame products: ") + e.what());
  }

  for (const auto& nd : cfg.directions) {
    const RulingDirection& x = nd.dir;
    t += fmt::format("\n## direction {} = ({}, {}, {})  [{} ruling, {}]\n", nd.label, detail::num(x.x1),
                     detail::num(x.x2), detail::num(x.x3), to_string(x.causal), to_string(x.kind()));
    t += fmt::format("{:>16} {:>16} {:>16} {:>12} {:>16} {:>16}\n", "s", "drall_closed",
                     "drall_numeric", "degeneracy", "striction", "striction_num");
    for (const auto& [k, s] : samples) {
      const TrajectoryRuledSurface surf{scene.pieces[k], x};
      try {
        const DrallResult a = drall_closed(surf, s);
        const DrallResult b = drall_numeric(surf, s);
        std::string strict = "n/a", strict_num = "n/a";
        if (a.degeneracy == Degeneracy::Regular) {
          const StrictionPoint p = striction_point(surf, s);
          strict = detail::num(p.offset);
          strict_num = detail::num(p.offset_numeric);
        }
        t += fmt::format("{:>16} {:>16} {:>16} {:>12} {:>16} {:>16}\n", detail::num(s),
                         detail::num(a.value), detail::num(b.value), to_string(a.degeneracy), strict,
                         strict_num);
        if (a.degeneracy == Degeneracy::Singular)
          warn(fmt::format("{}: singular ruling derivative at s = {}", nd.label, detail::num(s)));
        if (a.degeneracy != b.degeneracy)
          warn(fmt::format("{}: closed/numeric degeneracy differ at s = {}", nd.label, detail::num(s)));
        else if (a.degeneracy == Degeneracy::Regular &&
                 std::abs(a.value - b.value) > 1e-4 * std::max(1.0, std::abs(b.value)))
          warn(fmt::format("{}: closed/numeric drall disagree at s = {}", nd.label, detail::num(s)));
      } catch (const Error& e) {
        t += fmt::format("{:>16}  error: {}\n", detail::num(s), e.what());
        warn(fmt::format("{} at s = {}: {}", nd.label, detail::num(s), e.what()));
      }
    }
    // Developability over every report sample, across all pieces.
    DevelopabilityVerdict total;
    total.developable = true;
    bool ok = true;
    for (std::size_t k = 0; k < scene.pieces.size(); ++k) {
      std::vector<double> mine;
      for (const auto& [kk, s] : samples)
        if (kk == k) mine.push_back(s);
      try {
        const auto v = classify_developability({scene.pieces[k], x}, mine);
        total.developable = total.developable && v.developable;
        total.max_abs_drall = std::max(total.max_abs_drall, v.max_abs_drall);
        total.max_abs_theta_dot = std::max(total.max_abs_theta_dot, v.max_abs_theta_dot);
        total.regular += v.regular;
        total.cylindrical += v.cylindrical;
        total.singular += v.singular;
        total.max_normal_angle = std::max(total.max_normal_angle, v.max_normal_angle);
        total.normal_failures += v.normal_failures;
        if (total.reason.empty() || v.reason == "none") total.reason = v.reason;
      } catch (const Error& e) {
        ok = false;
        warn(fmt::format("{} developability: {}", nd.label, e.what()));
      }
    }
    if (!ok) {
      t += "verdict        unknown\n";
      continue;
    }
    const int n_samples = total.regular + total.cylindrical + total.singular;
    const char* verdict = !total.developable                ? "NotDevelopable"
                          : total.cylindrical == n_samples ? "Developable(Cylindrical)"
                                                           : "Developable";
    t += fmt::format("verdict        {}\n", verdict);
    t += fmt::format("basis          {}\n", total.reason);
    t += fmt::format("evidence       max|drall| = {:.3e}, max|theta_dot| = {:.3e}, regular/cylindrical/singular = {}/{}/{}, max normal angle at developable samples = {:.3e}\n",
                     total.max_abs_drall, total.max_abs_theta_dot, total.regular, total.cylindrical,
                     total.singular, total.max_normal_angle);
    if (total.normal_failures > 0)
      warn(fmt::format("{}: {} developable samples fail the normal-parallelism check", nd.label,
                       total.normal_failures));
    try {
      bool striction = true;
      for (std::size_t k = 0; k < scene.pieces.size(); ++k) {
        std::vector<double> mine;
        for (const auto& [kk, s] : samples)
          if (kk == k) mine.push_back(s);
        striction = striction && base_is_striction({scene.pieces[k], x}, mine);
      }
      t += fmt::format("involute is striction curve  {}\n", striction ? "yes" : "no");
    } catch (const Error& e) {
      t += "involute is striction curve  undefined\n";
    }
  }
  out.exit_code = warnings > 0 ? exit_degenerate : exit_ok;
  return out;
}

inline std::string output_path(const std::string& pattern, const std::string& label,
                               std::size_t n_directions) {
  const auto pos = pattern.find("{dir}");
  if (pos != std::string::npos) {
    std::string p = pattern;
    p.replace(pos, 5, label);
    return p;
  }
  if (n_directions == 1) return pattern;
  const auto slash = pattern.find_last_of('/');
  const auto dot = pattern.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return pattern + "_" + label;
  return pattern.substr(0, dot) + "_" + label + pattern.substr(dot);
}

inline SurfaceMesh scene_mesh(const Scene& scene, const RulingDirection& dir) {
  // Grid rows are shared between pieces in proportion to their length.
  double total = 0.0;
  for (const auto& p : scene.pieces) total += p.domain().length();
  std::vector<SurfaceMesh> patches;
  for (const auto& p : scene.pieces) {
    const int ns = scene.pieces.size() == 1
                       ? scene.config.ns
                       : std::max(2, static_cast<int>(std::lround(scene.config.ns * p.domain().length() / total)));
    patches.push_back(sample_grid({p, dir}, p.domain(), scene.config.v_range, ns, scene.config.nv));
  }
  return merge(patches);
}

inline RunResult run_mesh(const SceneConfig& cfg) {
  RunResult out;
  const Scene scene = build_scene(cfg);
  if (cfg.outputs.empty()) detail::config_error("outputs", "mesh needs at least one output");
  if (scene.split)
    out.diagnostics += fmt::format("note: s_range split around the involute cusp at s = {}\n",
                                   detail::num(cfg.c));
  for (const auto& nd : cfg.directions) {
    const SurfaceMesh mesh = scene_mesh(scene, nd.dir);
    for (const auto& o : cfg.outputs) {
      const std::string path = output_path(o.path, nd.label, cfg.directions.size());
      export_mesh(mesh, o.format, path);
      out.text += fmt::format("wrote {} ({} vertices, {} faces)\n", path, mesh.vertices.size(),
                              mesh.faces.size());
    }
  }
  return out;
}

struct VerifyStats {
  int trials = 0;
  int failures = 0;
  double max_rel_error = 0.0;
};

namespace detail {

inline void verify_one(VerifyStats& st, const TrajectoryRuledSurface& surf, double s) {
  const DrallResult a = drall_closed(surf, s);
  const DrallResult b = drall_numeric(surf, s);
  ++st.trials;
  if (a.degeneracy != b.degeneracy) {
    ++st.failures;
    return;
  }
  if (a.degeneracy != Degeneracy::Regular) return;
  const double rel = std::abs(a.value - b.value) / std::max(1.0, std::abs(b.value));
  st.max_rel_error = std::max(st.max_rel_error, rel);
  if (rel > 1e-4) ++st.failures;
}

}  // namespace detail

/// Closed-form vs determinant drall on random rulings of the configured
/// scene, then on random curves of each Darboux case.
inline RunResult run_verify(const SceneConfig& cfg, int trials, std::uint64_t seed) {
  RunResult out;
  const Scene scene = build_scene(cfg);
  std::mt19937_64 rng(seed);
  VerifyStats scene_stats, case1, case2;
  for (int i = 0; i < trials; ++i) {
    const auto& piece = scene.pieces[static_cast<std::size_t>(i) % scene.pieces.size()];
    const OracleTrial tr = random_trial(rng, piece);
    detail::verify_one(scene_stats, {piece, tr.dir}, tr.s);
  }
  for (auto [stats, dc] : {std::pair{&case1, DarbouxCase::Spacelike}, std::pair{&case2, DarbouxCase::Timelike}}) {
    for (int i = 0; i < trials; ++i) {
      const RandomCurve rc = random_curve(rng, dc);
      const InvoluteCurve inv(rc.curve, rc.c, rc.involute_domain);
      const OracleTrial tr = random_trial(rng, inv);
      detail::verify_one(*stats, {inv, tr.dir}, tr.s);
    }
  }
  out.text += fmt::format("# minkruled verify (seed {}, trials {})\n", seed, trials);
  auto line = [&](const char* name, const VerifyStats& st) {
    out.text += fmt::format("{:<24} trials {:>5}  failures {:>3}  max rel error {:.3e}  {}\n", name,
                            st.trials, st.failures, st.max_rel_error, st.failures ? "FAIL" : "PASS");
  };
  line("configured scene", scene_stats);
  line("random spacelike D", case1);
  line("random timelike D", case2);
  out.exit_code = scene_stats.failures + case1.failures + case2.failures ? exit_failure : exit_ok;
  return out;
}

}  // namespace minkruled
