#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "error.hpp"
#include "lorentz.hpp"
#include "ruled_surface.hpp"

namespace minkruled {

struct MeshVertex {
  double s = 0.0;
  double v = 0.0;
  LorentzVector p;
  double drall = 0.0;
};

/// Vertices are stored row-major: row i is one value of s, column j one
/// value of v. Faces are 0-based quads.
struct SurfaceMesh {
  std::vector<MeshVertex> vertices;
  std::vector<std::array<std::size_t, 4>> faces;
};

inline double lerp(const Interval& r, double u) { return r.lo + (r.hi - r.lo) * u; }

inline SurfaceMesh sample_grid(const TrajectoryRuledSurface& surf, Interval s_range,
                               Interval v_range, int ns, int nv) {
  if (ns < 2 || nv < 2) throw Error(ErrorCode::InvalidConfig, "grid needs ns, nv >= 2");
  SurfaceMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(ns) * static_cast<std::size_t>(nv));
  for (int i = 0; i < ns; ++i) {
    const double s = lerp(s_range, static_cast<double>(i) / (ns - 1));
    double drall = 0.0;
    LorentzVector base, X;
    try {
      surf.inv.require_in_domain(s);
      base = involute_point(surf.inv, s);
      X = ruling(surf, s);
      drall = drall_closed(surf, s).value;
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("grid row {} (s = {}): {}", i, s, e.what()));
    }
    if (!std::isfinite(drall)) drall = 0.0;
    for (int j = 0; j < nv; ++j) {
      const double v = lerp(v_range, static_cast<double>(j) / (nv - 1));
      mesh.vertices.push_back({s, v, base + v * X, drall});
    }
  }
  const auto stride = static_cast<std::size_t>(nv);
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(ns); ++i)
    for (std::size_t j = 0; j + 1 < stride; ++j) {
      const std::size_t a = i * stride + j;
      mesh.faces.push_back({a, a + stride, a + stride + 1, a + 1});
    }
  return mesh;
}

/// Concatenates patches, e.g. the two sides of the involute cusp.
inline SurfaceMesh merge(const std::vector<SurfaceMesh>& patches) {
  SurfaceMesh out;
  for (const auto& m : patches) {
    const std::size_t offset = out.vertices.size();
    out.vertices.insert(out.vertices.end(), m.vertices.begin(), m.vertices.end());
    for (auto f : m.faces) {
      for (auto& k : f) k += offset;
      out.faces.push_back(f);
    }
  }
  return out;
}

enum class MeshFormat { OBJ, CSV };

namespace detail {

// 9 significant digits; negative zero printed as 0 so output does not
// depend on the sign of rounding noise.
inline std::string num(double x) {
  if (x == 0.0) x = 0.0;
  return fmt::format("{:.9g}", x);
}

}  // namespace detail

inline std::string format_mesh(const SurfaceMesh& mesh, MeshFormat format) {
  std::string out;
  if (format == MeshFormat::OBJ) {
    for (const auto& v : mesh.vertices)
      out += fmt::format("v {} {} {}\n", detail::num(v.p.x0), detail::num(v.p.x1),
                         detail::num(v.p.x2));
    for (const auto& f : mesh.faces)
      out += fmt::format("f {} {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1);
  } else {
    out += "s,v,x,y,z,drall\n";
    for (const auto& v : mesh.vertices)
      out += fmt::format("{},{},{},{},{},{}\n", detail::num(v.s), detail::num(v.v),
                         detail::num(v.p.x0), detail::num(v.p.x1), detail::num(v.p.x2),
                         detail::num(v.drall));
  }
  return out;
}

inline void export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::IOFailure, "empty output path");
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::IOFailure, "cannot open " + path);
  os << format_mesh(mesh, format);
  os.flush();
  if (!os) throw Error(ErrorCode::IOFailure, "write failed for " + path);
}

}  // namespace minkruled
