// copocone — copositive 3x3 cone toolkit.
//
// Subcommands: check, param boundary|full, invert, sample slice|boundary|layers,
// roundtrip. Matrices travel as JSON objects
// {"a11":f,"a22":f,"a33":f,"a12":f,"a13":f,"a23":f}; point clouds as CSV.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copocone/invert.hpp"
#include "copocone/json_io.hpp"
#include "copocone/oracle.hpp"
#include "copocone/parametrize.hpp"
#include "copocone/sampler.hpp"

namespace {

using copocone::SymMat3;
using copocone::Vec3;
using nlohmann::json;

double recon_tolerance() {
  if (const char* env = std::getenv("COPOCONE_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw copocone::Error(copocone::ErrorCode::OutOfRange,
                            "COPOCONE_TOL is not a number");
    }
  }
  return copocone::kReconTol;
}

Vec3 parse_triple(const std::string& text, const char* what) {
  Vec3 v{};
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v[0], &v[1], &v[2],
                  &extra) != 3) {
    throw CLI::ValidationError(std::string(what) +
                               " expects three comma-separated numbers");
  }
  return v;
}

std::pair<double, double> parse_interval(const std::string& text,
                                         const char* what) {
  double lo = 0, hi = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &lo, &hi, &extra) != 2) {
    throw CLI::ValidationError(std::string(what) + " expects lo,hi");
  }
  return {lo, hi};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": bad number '" + item +
                                 "'");
    }
  }
  if (out.empty()) {
    throw CLI::ValidationError(std::string(what) + " expects numbers");
  }
  return out;
}

SymMat3 read_matrix(const std::string& file) {
  json j;
  if (file.empty()) {
    std::cin >> j;
  } else {
    std::ifstream in(file);
    if (!in) {
      throw copocone::Error(copocone::ErrorCode::OutOfRange,
                            "cannot open " + file);
    }
    in >> j;
  }
  return copocone::matrix_from_json(j);
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw copocone::Error(copocone::ErrorCode::OutOfRange,
                              "cannot open " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_points(std::ostream& os,
                  const std::vector<copocone::SlicePoint>& pts) {
  os << "a12,a13,a23\n";
  char line[128];
  for (const auto& p : pts) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", p.a12, p.a13,
                  p.a23);
    os << line;
  }
}

// Generic-stratum sample for the round-trip report: s in [0.1,2]^3,
// lambda in [0,5], t interior with min component >= 1e-3.
copocone::FullParams random_generic_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> us(0.1, 2.0), ul(0.0, 5.0);
  std::exponential_distribution<double> ue(1.0);
  copocone::FullParams params;
  params.s = {us(rng), us(rng), us(rng)};
  params.lambda = ul(rng);
  for (;;) {
    const double e1 = ue(rng), e2 = ue(rng), e3 = ue(rng);
    const double sum = e1 + e2 + e3;
    const copocone::SimplexPoint t(e1 / sum, e2 / sum, e3 / sum);
    if (t.min_component() >= 1e-3) {
      params.t = t;
      return params;
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"copositive 3x3 cone toolkit: certification, parametrization, "
               "inversion and point-cloud sampling"};
  app.require_subcommand(1);

  std::string file;
  std::string s_text = "1,1,1", t_text, lambdas_text = "0";
  std::string box_text = "-1,2", out_path, kind_text = "curved";
  double lambda = 0;
  std::int64_t n = 100000;
  std::uint64_t seed = 0;
  int resolution = 60;

  auto* check =
      app.add_subcommand("check", "decide copositivity, print a certificate");
  check->add_option("--file", file, "matrix JSON file (default: stdin)");

  auto* param = app.add_subcommand("param", "evaluate the forward maps");
  param->require_subcommand(1);
  auto* pb = param->add_subcommand("boundary", "curved-boundary map at t");
  pb->add_option("--t", t_text, "simplex point t1,t2,t3")->required();
  auto* pf = param->add_subcommand("full", "full cone map at (s, lambda, t)");
  pf->add_option("--s", s_text, "scales s1,s2,s3");
  pf->add_option("--lambda", lambda, "ray parameter (>= 0)");
  pf->add_option("--t", t_text, "simplex point t1,t2,t3")->required();

  auto* inv = app.add_subcommand(
      "invert", "recover (s, lambda, t) from a copositive matrix");
  inv->add_option("--file", file, "matrix JSON file (default: stdin)");

  auto* sample = app.add_subcommand("sample", "emit point clouds as CSV");
  sample->require_subcommand(1);
  auto* ss = sample->add_subcommand("slice",
                                    "rejection-sample the unit-diagonal slice");
  ss->add_option("--n", n, "number of draws");
  ss->add_option("--seed", seed, "RNG seed");
  ss->add_option("--box", box_text, "sampling box lo,hi");
  ss->add_option("--out", out_path, "output file (default: stdout)");
  auto* sb = sample->add_subcommand("boundary", "boundary surface meshes");
  sb->add_option("--kind", kind_text, "curved|flat12|flat13|flat23");
  sb->add_option("--resolution", resolution, "grid resolution");
  sb->add_option("--box", box_text, "clip box lo,hi for the flat faces");
  sb->add_option("--out", out_path, "output file (default: stdout)");
  auto* sl = sample->add_subcommand("layers",
                                    "layer surfaces for a list of lambdas");
  sl->add_option("--s", s_text, "scales s1,s2,s3");
  sl->add_option("--lambdas", lambdas_text, "comma-separated lambda list");
  sl->add_option("--resolution", resolution, "grid resolution");
  sl->add_option("--out", out_path, "output file (default: stdout)");
  auto* sd = sample->add_subcommand(
      "diananda", "random copositive matrices (PSD plus nonnegative)");
  sd->add_option("--n", n, "number of matrices");
  sd->add_option("--seed", seed, "RNG seed");
  sd->add_option("--out", out_path, "output file (default: stdout)");

  auto* rt =
      app.add_subcommand("roundtrip", "run the generic round-trip property");
  rt->add_option("--n", n, "number of random parameter draws");
  rt->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  auto dispatch = [&]() -> int {
    if (check->parsed()) {
      const SymMat3 a = read_matrix(file);
      std::cout << copocone::to_json(copocone::is_copositive(a)).dump()
                << "\n";
      return 0;
    }

    if (param->parsed()) {
      const Vec3 t = parse_triple(t_text, "--t");
      const copocone::SimplexPoint tp(t[0], t[1], t[2]);
      if (pb->parsed()) {
        const copocone::SlicePoint slice = copocone::big_psi(tp);
        json j{{"slice",
                {{"a12", slice.a12}, {"a13", slice.a13}, {"a23", slice.a23}}},
               {"matrix", copocone::to_json(slice.as_matrix())}};
        std::cout << j.dump() << "\n";
      } else if (pf->parsed()) {
        const Vec3 s = parse_triple(s_text, "--s");
        if (lambda < 0) {
          throw copocone::Error(copocone::ErrorCode::NegativeLambda,
                                "--lambda must be >= 0");
        }
        const SymMat3 a = copocone::phi_full({s, lambda, tp});
        std::cout << copocone::to_json(a).dump() << "\n";
      }
      return 0;
    }

    if (inv->parsed()) {
      const SymMat3 a = read_matrix(file);
      const copocone::InversionResult result = copocone::invert(a);
      std::cout << copocone::to_json(result).dump() << "\n";
      return result.residual <= recon_tolerance() ? 0 : 1;
    }

    if (sample->parsed()) {
      CsvWriter writer(out_path);
      if (ss->parsed()) {
        const auto [lo, hi] = parse_interval(box_text, "--box");
        write_points(writer.stream(), copocone::sample_slice(lo, hi, n, seed));
      } else if (sb->parsed()) {
        copocone::MeshKind kind;
        if (kind_text == "curved") kind = copocone::MeshKind::Curved;
        else if (kind_text == "flat12") kind = copocone::MeshKind::Flat12;
        else if (kind_text == "flat13") kind = copocone::MeshKind::Flat13;
        else if (kind_text == "flat23") kind = copocone::MeshKind::Flat23;
        else
          throw CLI::ValidationError(
              "--kind must be curved|flat12|flat13|flat23");
        const auto [lo, hi] = parse_interval(box_text, "--box");
        write_points(writer.stream(),
                     copocone::boundary_mesh(kind, resolution, lo, hi));
      } else if (sl->parsed()) {
        const Vec3 s = parse_triple(s_text, "--s");
        const std::vector<double> lambdas =
            parse_list(lambdas_text, "--lambdas");
        auto& os = writer.stream();
        os << "a12,a13,a23,label\n";
        char line[160];
        for (const auto& lp : copocone::layer_mesh(s, lambdas, resolution)) {
          std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n",
                        lp.point.a12, lp.point.a13, lp.point.a23, lp.label);
          os << line;
        }
      } else if (sd->parsed()) {
        std::mt19937_64 rng(seed);
        auto& os = writer.stream();
        for (std::int64_t i = 0; i < n; ++i) {
          os << copocone::to_json(copocone::diananda_sample(rng)).dump()
             << "\n";
        }
      }
      return 0;
    }

    // roundtrip
    std::mt19937_64 rng(seed);
    double max_param_err = 0, max_residual = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      const copocone::FullParams p = random_generic_params(rng);
      const copocone::InversionResult r =
          copocone::invert(copocone::phi_full(p));
      double err = std::abs(r.params.lambda - p.lambda);
      for (int k = 0; k < 3; ++k) {
        err = std::max(err, std::abs(r.params.s[k] - p.s[k]));
      }
      err = std::max(err, std::abs(r.params.t.t1 - p.t.t1));
      err = std::max(err, std::abs(r.params.t.t2 - p.t.t2));
      err = std::max(err, std::abs(r.params.t.t3 - p.t.t3));
      max_param_err = std::max(max_param_err, err);
      max_residual = std::max(max_residual, r.residual);
    }
    json j{{"n", n},
           {"seed", seed},
           {"max_param_error", max_param_err},
           {"max_residual", max_residual},
           {"tolerance", 1e-6}};
    std::cout << j.dump() << "\n";
    return max_param_err <= 1e-6 ? 0 : 1;
  };

  try {
    return dispatch();
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const copocone::Error& e) {
    json err{{"error", copocone::error_code_name(e.code())},
             {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    json err{{"error", "bad_json"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
