#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "minkruled/mesh.hpp"

using namespace minkruled;

namespace {

InvoluteCurve helix_involute() { return InvoluteCurve(reference_helix(), 1.0, {0.0, 0.99}); }

struct ParsedObj {
  std::vector<LorentzVector> vertices;
  std::vector<std::array<std::size_t, 4>> faces;
};

// Minimal OBJ reader for the subset the exporter writes.
ParsedObj parse_obj(const std::string& text) {
  ParsedObj out;
  std::istringstream is(text);
  std::string tag;
  while (is >> tag) {
    if (tag == "v") {
      LorentzVector p;
      is >> p.x0 >> p.x1 >> p.x2;
      out.vertices.push_back(p);
    } else if (tag == "f") {
      std::array<std::size_t, 4> f{};
      for (auto& k : f) is >> k;
      out.faces.push_back(f);
    } else {
      ADD_FAILURE() << "unexpected tag " << tag;
      break;
    }
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST(SampleGrid, TwoByTwoMatchesSurfacePoint) {
  const TrajectoryRuledSurface surf{helix_involute(), b_star_direction()};
  const auto mesh = sample_grid(surf, {0.0, 0.9}, {-2.0, 2.0}, 2, 2);
  ASSERT_EQ(mesh.vertices.size(), 4u);
  ASSERT_EQ(mesh.faces.size(), 1u);
  for (const auto& v : mesh.vertices) EXPECT_EQ(v.p, surface_point(surf, v.s, v.v));
  EXPECT_EQ(mesh.vertices[1].s, 0.0);
  EXPECT_EQ(mesh.vertices[1].v, 2.0);
  EXPECT_EQ(mesh.vertices[2].s, 0.9);
}

TEST(SampleGrid, CountsAndDrallAttribute) {
  const TrajectoryRuledSurface surf{helix_involute(), b_star_direction()};
  const auto mesh = sample_grid(surf, {0.0, 0.9}, {-2.0, 2.0}, 7, 5);
  EXPECT_EQ(mesh.vertices.size(), 35u);
  EXPECT_EQ(mesh.faces.size(), 24u);
  for (const auto& v : mesh.vertices) EXPECT_EQ(v.drall, 0.0);  // cylindrical rows
}

TEST(SampleGrid, ErrorsNameTheRow) {
  const TrajectoryRuledSurface surf{helix_involute(), t_star_direction()};
  try {
    sample_grid(surf, {0.5, 1.5}, {-1, 1}, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfDomain);
    EXPECT_NE(std::string(e.what()).find("grid row 1"), std::string::npos);
  }
  EXPECT_THROW(sample_grid(surf, {0, 0.5}, {-1, 1}, 1, 2), Error);
}

TEST(Export, ObjLayout) {
  const TrajectoryRuledSurface surf{helix_involute(), t_star_direction()};
  const auto mesh = sample_grid(surf, {0.0, 0.9}, {-2.0, 2.0}, 2, 2);
  const std::string obj = format_mesh(mesh, MeshFormat::OBJ);
  const auto parsed = parse_obj(obj);
  EXPECT_EQ(parsed.vertices.size(), 4u);
  ASSERT_EQ(parsed.faces.size(), 1u);
  EXPECT_EQ(parsed.faces[0], (std::array<std::size_t, 4>{1, 3, 4, 2}));
  EXPECT_EQ(obj.substr(0, 2), "v ");
}

TEST(Export, ObjRoundTrip) {
  const TrajectoryRuledSurface surf{helix_involute(), make_direction(1, 0.3, 0.5)};
  const auto mesh = sample_grid(surf, {0.0, 0.9}, {-2.0, 2.0}, 12, 6);
  const auto parsed = parse_obj(format_mesh(mesh, MeshFormat::OBJ));
  ASSERT_EQ(parsed.vertices.size(), mesh.vertices.size());
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const auto& p = mesh.vertices[i].p;
    // Half a unit in the ninth significant digit.
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(parsed.vertices[i][k], p[k], 5e-9 * std::abs(p[k]) + 1e-300);
  }
}

TEST(Export, CsvHeaderAndRows) {
  const TrajectoryRuledSurface surf{helix_involute(), n_star_direction()};
  const auto mesh = sample_grid(surf, {0.0, 0.9}, {-2.0, 2.0}, 3, 2);
  const std::string csv = format_mesh(mesh, MeshFormat::CSV);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,v,x,y,z,drall");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(Export, FilesAreDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "minkruled_mesh_test";
  std::filesystem::create_directories(dir);
  const TrajectoryRuledSurface surf{helix_involute(), n_star_direction()};
  const auto a = dir / "a.obj", b = dir / "b.obj";
  export_mesh(sample_grid(surf, {0.0, 0.9}, {-2, 2}, 20, 5), MeshFormat::OBJ, a.string());
  export_mesh(sample_grid(surf, {0.0, 0.9}, {-2, 2}, 20, 5), MeshFormat::OBJ, b.string());
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove_all(dir);
}

TEST(Export, IoFailures) {
  const SurfaceMesh empty;
  try {
    export_mesh(empty, MeshFormat::OBJ, "");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IOFailure);
  }
  EXPECT_THROW(export_mesh(empty, MeshFormat::CSV, "/nonexistent-dir/x.csv"), Error);
}

TEST(Export, NegativeZeroPrintsAsZero) {
  EXPECT_EQ(detail::num(-0.0), "0");
  EXPECT_EQ(detail::num(2.0 / 3.0), "0.666666667");
}
