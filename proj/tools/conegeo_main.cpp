// Command-line front end.  Subcommands:
//   dist CONE X Y                 Thompson then Hilbert distance, one per line
//   geodesic CONE X Y --samples N N+1 equally spaced path points
//   unique CONE X Y [--hilbert]   verdict line, then witness/check lines
//   embed CONE X                  log facet coordinates, one per line
//   gromov CONE P W1 W2           Gromov product series along boundary chords
//   isometry CONE --map FILE      max distance deviation, linearity verdict
// Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
// 1 usage error, 2 invalid input, 3 numeric failure.

#include "CLI11.hpp"

#include "conegeo/cone.hpp"
#include "conegeo/embedding.hpp"
#include "conegeo/geodesic.hpp"
#include "conegeo/io.hpp"
#include "conegeo/isometry.hpp"
#include "conegeo/metrics.hpp"
#include "conegeo/uniqueness.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace conegeo;

int g_precision = 12;

std::string value_line(double v) { return format_real(v, g_precision); }

std::string joined_coords(const Vector& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_real(v[i], g_precision);
  }
  return out;
}

// Compact rendering for spectrum sets: significant digits, no padding zeros.
std::string compact(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", g_precision, v);
  return buffer;
}

const char* status_name(UniqueStatus s) {
  switch (s) {
    case UniqueStatus::unique: return "unique";
    case UniqueStatus::non_unique: return "non_unique";
    case UniqueStatus::incomparable: return "incomparable";
  }
  return "?";
}

const char* method_name(UniqueMethod m) {
  switch (m) {
    case UniqueMethod::collinear: return "collinear";
    case UniqueMethod::unbalanced: return "unbalanced";
    case UniqueMethod::spectral: return "spectral";
    case UniqueMethod::face_span: return "face_span";
    case UniqueMethod::two_dim: return "two_dim";
    case UniqueMethod::oracle: return "oracle";
  }
  return "?";
}

void run_dist(const std::string& cone_path, const std::string& x_path,
              const std::string& y_path) {
  ConeSpec cone = read_cone_file(cone_path);
  Point x = read_point_file(x_path, cone);
  Point y = read_point_file(y_path, cone);
  std::cout << value_line(thompson_distance(cone, x, y)) << "\n";
  std::cout << value_line(hilbert_distance(cone, x, y)) << "\n";
}

void run_geodesic(const std::string& cone_path, const std::string& x_path,
                  const std::string& y_path, int samples) {
  ConeSpec cone = read_cone_file(cone_path);
  Point x = read_point_file(x_path, cone);
  Point y = read_point_file(y_path, cone);
  GeodesicPath path = geodesic(cone, x, y);
  for (int i = 0; i <= samples; ++i) {
    double s = path.total_length * i / samples;
    std::cout << joined_coords(path.eval(s)) << "\n";
  }
}

void run_unique(const std::string& cone_path, const std::string& x_path,
                const std::string& y_path, bool hilbert) {
  ConeSpec cone = read_cone_file(cone_path);
  Point x = read_point_file(x_path, cone);
  Point y = read_point_file(y_path, cone);
  UniquenessVerdict verdict =
      hilbert ? hilbert_unique(cone, x, y) : is_unique(cone, x, y);

  std::cout << status_name(verdict.status) << " " << method_name(verdict.method);
  if (verdict.spectrum) {
    std::cout << " {";
    for (size_t i = 0; i < verdict.spectrum->size(); ++i)
      std::cout << (i ? "," : "") << compact((*verdict.spectrum)[i]);
    std::cout << "}";
  }
  std::cout << "\n";

  if (verdict.witness) {
    const Point& w = *verdict.witness;
    std::cout << "witness: " << joined_coords(w) << "\n";
    double defect;
    if (hilbert) {
      defect = hilbert_distance(cone, x, w) + hilbert_distance(cone, w, y) -
               hilbert_distance(cone, x, y);
    } else {
      defect = midpoint_defect(cone, x, y, w);
    }
    std::cout << "check: d(x,w)+d(w,y)-d(x,y) = " << value_line(defect) << "\n";
  }
}

void run_embed(const std::string& cone_path, const std::string& x_path) {
  ConeSpec cone = read_cone_file(cone_path);
  Point x = read_point_file(x_path, cone);
  Vector coords = log_embed(cone, x);
  for (int i = 0; i < coords.size(); ++i) std::cout << value_line(coords[i]) << "\n";
}

void run_gromov(const std::string& cone_path, const std::string& p_path,
                const std::string& w1_path, const std::string& w2_path, double eta,
                int k_max) {
  ConeSpec cone = read_cone_file(cone_path);
  Point p = read_point_file(p_path, cone);
  Point w1 = read_point_file(w1_path, cone);
  Point w2 = read_point_file(w2_path, cone);
  GromovSeries series = gromov_series(cone, p, w1, w2, eta, k_max);
  for (double v : series.values) std::cout << value_line(v) << "\n";
}

void run_isometry(const std::string& cone_path, const std::string& map_path,
                  int samples, std::uint64_t seed) {
  ConeSpec cone = read_cone_file(cone_path);
  ConeMap map = read_map_file(map_path, cone);
  std::cout << value_line(check_isometry(map, samples, seed)) << "\n";
  ProjectiveLinearity fit = is_projectively_linear(map, samples, seed);
  const char* verdict = fit.verdict == LinearityVerdict::projective_linear
                            ? "projective_linear"
                            : fit.verdict == LinearityVerdict::not_projective_linear
                                  ? "not_projective_linear"
                                  : "inconclusive";
  std::cout << verdict << "\n";
  std::cout << value_line(fit.residual) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson and Hilbert metric geometry on finite-dimensional cones"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", g_precision, "digits after the decimal point")
      ->check(CLI::Range(6, 17))
      ->capture_default_str();

  std::string cone_path, x_path, y_path, p_path, map_path;
  int path_samples = 10;
  bool hilbert = false;
  double eta = 2.0;
  int k_max = 20;
  int samples = 10000;
  std::uint64_t seed = 0;

  CLI::App* dist = app.add_subcommand("dist", "Thompson and Hilbert distances");
  dist->add_option("cone", cone_path, "cone file")->required();
  dist->add_option("x", x_path, "first point file")->required();
  dist->add_option("y", y_path, "second point file")->required();

  CLI::App* geo = app.add_subcommand("geodesic", "points along a unit-speed geodesic");
  geo->add_option("cone", cone_path, "cone file")->required();
  geo->add_option("x", x_path, "first point file")->required();
  geo->add_option("y", y_path, "second point file")->required();
  geo->add_option("--samples", path_samples, "number of arclength steps (prints N+1 points)")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  CLI::App* uni = app.add_subcommand("unique", "geodesic uniqueness verdict");
  uni->add_option("cone", cone_path, "cone file")->required();
  uni->add_option("x", x_path, "first point file")->required();
  uni->add_option("y", y_path, "second point file")->required();
  uni->add_flag("--hilbert", hilbert, "test the projective (Hilbert) metric instead");

  CLI::App* emb = app.add_subcommand("embed", "log facet coordinates");
  emb->add_option("cone", cone_path, "cone file")->required();
  emb->add_option("x", x_path, "point file")->required();

  CLI::App* gro = app.add_subcommand("gromov", "Gromov product series along boundary chords");
  gro->add_option("cone", cone_path, "cone file")->required();
  gro->add_option("p", p_path, "interior base point file")->required();
  gro->add_option("w1", x_path, "first boundary direction file")->required();
  gro->add_option("w2", y_path, "second boundary direction file")->required();
  gro->add_option("--eta", eta, "product weight")->check(CLI::PositiveNumber)->capture_default_str();
  gro->add_option("--kmax", k_max, "largest distance index")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();

  CLI::App* iso = app.add_subcommand("isometry", "distance deviation and linearity of a map");
  iso->add_option("cone", cone_path, "cone file")->required();
  iso->add_option("--map", map_path, "map file")->required();
  iso->add_option("--samples", samples, "sample pair count")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  iso->add_option("--seed", seed, "sampling seed")->capture_default_str();

  dist->callback([&] { run_dist(cone_path, x_path, y_path); });
  geo->callback([&] { run_geodesic(cone_path, x_path, y_path, path_samples); });
  uni->callback([&] { run_unique(cone_path, x_path, y_path, hilbert); });
  emb->callback([&] { run_embed(cone_path, x_path); });
  gro->callback([&] { run_gromov(cone_path, p_path, x_path, y_path, eta, k_max); });
  iso->callback([&] { run_isometry(cone_path, map_path, samples, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const conegeo::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const conegeo::numeric_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
