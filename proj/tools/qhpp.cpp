// qhpp command-line tool.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qhpp/errors.hpp"
#include "qhpp/report.hpp"

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kNotQh = 3, kCommonFactor = 4, kDegree = 5, kWindow = 6 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

double tolerance(double fallback) {
  const char* env = std::getenv("QHPP_TOL");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 1e-12 && v <= 1e-3)) {
    std::cerr << "qhpp: ignoring QHPP_TOL=" << env << " (need a number in [1e-12, 1e-3])\n";
    return fallback;
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of planar quasi-homogeneous polynomial systems"};
  app.require_subcommand(1);

  std::string file, out;
  bool no_oracle = false;
  double radius = 0.05;
  auto* analyze = app.add_subcommand("analyze", "Full analysis report as JSON");
  analyze->add_option("file", file, "System file")->required();
  analyze->add_option("--out,-o", out, "Output path (default stdout)");
  analyze->add_flag("--no-oracle", no_oracle, "Skip the numerical cross-check");
  analyze->add_option("--radius", radius, "Probe radius for the cross-check");

  int degree = 5;
  auto* catalog = app.add_subcommand("catalog", "Quasi-homogeneous catalog as JSON");
  catalog->add_option("--degree", degree, "Polynomial degree (only 5 is supported)");
  catalog->add_option("--out,-o", out, "Output path (default stdout)");

  bool greater = false, less = false, equal = false;
  auto* census = app.add_subcommand("census", "X_111 label census as JSON");
  census->add_flag("--greater", greater, "Regime a14 > 1");
  census->add_flag("--less", less, "Regime a14 < 1");
  census->add_flag("--equal", equal, "Regime a14 = 1");
  census->add_option("--out,-o", out, "Output path (default stdout)");

  std::string window = "-1:1,-1:1", format = "csv";
  int n_lines = 100;
  double tmax = 20.0;
  auto* plot = app.add_subcommand("plot", "Streamline export");
  plot->add_option("file", file, "System file")->required();
  plot->add_option("--window", window, "xmin:xmax,ymin:ymax");
  plot->add_option("--streamlines", n_lines, "Number of seeds")->check(CLI::Range(0, 10000));
  plot->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  plot->add_option("--tmax", tmax, "Integration time in each direction");
  plot->add_option("--out,-o", out, "Output path (default stdout)");

  auto* oracle = app.add_subcommand("oracle-check", "Compare blow-up types with sector probes");
  oracle->add_option("file", file, "System file")->required();
  oracle->add_option("--radius", radius, "Probe radius");
  oracle->add_option("--out,-o", out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*catalog) {
      write_out(out, qhpp::catalog_json(degree).dump(2) + "\n");
      return kOk;
    }
    if (*census) {
      bool any = greater || less || equal;
      write_out(out, qhpp::census_json(!any || greater, !any || less, !any || equal).dump(2) + "\n");
      return kOk;
    }
    std::string text = read_file(file);
    qhpp::PolySystem s = qhpp::parse_system(text);
    if (*plot) {
      qhpp::Window w = qhpp::parse_window(window);
      auto lines = qhpp::streamlines(s, w, n_lines, tolerance(1e-8), tmax);
      write_out(out, format == "svg" ? qhpp::to_svg(lines, w) : qhpp::to_csv(lines));
      return kOk;
    }
    qhpp::AnalyzeOptions opt;
    opt.tol = tolerance(1e-10);
    opt.radius = radius;
    opt.oracle = !no_oracle;
    qhpp::AnalysisReport rep = qhpp::analyze(s, opt);
    if (*oracle) {
      qhpp::Json j;
      j["input"] = rep.json["input"];
      j["oracle"] = rep.json.contains("oracle") ? rep.json["oracle"] : qhpp::Json{{"ran", false}};
      j["warnings"] = rep.json["warnings"];
      write_out(out, j.dump(2) + "\n");
    } else {
      write_out(out, rep.dump());
    }
    if (rep.status == kNotQh) std::cerr << "qhpp: system is not quasi-homogeneous\n";
    if (rep.status == kCommonFactor) std::cerr << "qhpp: P and Q share a common factor\n";
    return rep.status;
  } catch (const qhpp::ParseError& e) {
    std::cerr << "qhpp: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const qhpp::ZeroSystemError& e) {
    std::cerr << "qhpp: " << e.what() << "\n";
    return kParse;
  } catch (const qhpp::NotQuasiHomogeneousError& e) {
    std::cerr << "qhpp: " << e.what() << "\n";
    return kNotQh;
  } catch (const qhpp::CommonFactorError& e) {
    std::cerr << "qhpp: common factor " << e.factor() << ": " << e.what() << "\n";
    return kCommonFactor;
  } catch (const qhpp::BadWindowError& e) {
    std::cerr << "qhpp: bad window: " << e.what() << "\n";
    return kWindow;
  } catch (const qhpp::PreconditionError& e) {
    if (*catalog) {
      std::cerr << "qhpp: unsupported degree " << degree << "\n";
      return kDegree;
    }
    std::cerr << "qhpp: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "qhpp: " << e.what() << "\n";
    return kInternal;
  }
}
