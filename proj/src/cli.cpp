#include "affsphere/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "affsphere/classify.hpp"
#include "affsphere/error.hpp"
#include "affsphere/io.hpp"
#include "affsphere/sphere_n.hpp"
#include "affsphere/sweep.hpp"
#include "affsphere/witness.hpp"

namespace affsphere {

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  invalid input (malformed JSON, bad point, unwritable path)\n"
    "  2  homeomorphism condition ||T^-1 a|| < 1 violated where required\n"
    "  3  verdict unknown, search exhausted, or verification failed";

struct Common {
  std::string input;
  std::string output;
  double delta = 0.01;
  int horizon = 500;
  std::uint64_t seed = kDefaultSeed;
  bool require_homeo = false;
};

/// Carries an exit code out of a command without an error message.
struct Outcome {
  int code;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HomeoConditionViolated:
    case ErrorCode::NotInvertible:
    case ErrorCode::DegenerateImage:
      return kExitHomeoViolated;
    case ErrorCode::SearchExhausted:
    case ErrorCode::WitnessNotFound:
    case ErrorCode::NoFixedPoints:
      return kExitUnknown;
    default:
      return kExitInvalidInput;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorCode::MalformedInput, "failed writing " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Vector parse_point(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidPoint, "cannot parse coordinate \"" + item + "\"");
    }
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  const double n = v.norm();
  if (values.empty() || !(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidPoint, "point must be nonzero");
  return v / n;
}

ProductPoint parse_product_point(const std::string& text) {
  ProductPoint p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) p.push_back(parse_point(item));
  return p;
}

AffineSphereSystem load_system(const Common& c) {
  return system_from_json(read_json_file(c.input), c.require_homeo);
}

std::vector<AffineSphereSystem> load_factors(const std::vector<std::string>& inputs, bool require_homeo) {
  std::vector<AffineSphereSystem> factors;
  for (const auto& path : inputs) {
    const json j = read_json_file(path);
    if (j.is_object() && j.contains("factors")) {
      for (const auto& f : product_from_json(j).factors()) factors.push_back(f);
    } else {
      factors.push_back(system_from_json(j, require_homeo));
    }
  }
  if (require_homeo) {
    for (const auto& f : factors) {
      if (!f.homeo_certified()) throw Error(ErrorCode::HomeoConditionViolated, "a factor is not certified");
    }
  }
  return factors;
}

ClassifyOptions options(const Common& c) { return ClassifyOptions{c.delta, c.horizon, c.seed}; }

void add_common(CLI::App* cmd, Common& c, bool with_search) {
  cmd->add_option("-o,--output", c.output, "Output path (default: stdout)");
  if (with_search) {
    cmd->add_option("--delta", c.delta, "Closeness bound for non-expansivity pairs")->capture_default_str();
    cmd->add_option("--horizon", c.horizon, "Orbit horizon for witness searches")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Seed for randomized searches")->capture_default_str();
  }
  cmd->add_flag("--require-homeo", c.require_homeo, "Fail with exit 2 unless ||T^-1 a|| < 1");
}

int cmd_classify(const Common& c, const std::string& theta, const std::optional<double>& alpha, std::ostream& out) {
  std::optional<AffineSphereSystem> sys;
  if (!c.input.empty()) {
    sys.emplace(load_system(c));
  } else if (!theta.empty() && alpha) {
    sys.emplace(rotation(parse_angle(theta)), Eigen::Vector2d(0.0, *alpha), c.require_homeo);
  } else {
    throw Error(ErrorCode::MalformedInput, "classify needs -i FILE or --theta and --alpha");
  }
  emit(dump(report_to_json(classify(*sys, options(c)))), c.output, out);
  return kExitOk;
}

int cmd_sweep(const std::string& theta, const std::string& alpha, const std::string& csv, const std::string& svg,
              bool skip_period2, unsigned threads, std::ostream& out) {
  SweepOptions opts;
  opts.period2 = !skip_period2;
  opts.threads = threads;
  const SweepGrid grid = run_sweep(AxisSpec::parse(theta), AxisSpec::parse(alpha), opts);
  std::ostringstream text;
  write_csv(grid, text);
  emit(text.str(), csv, out);
  if (!svg.empty()) {
    std::ostringstream pic;
    write_svg(grid, pic);
    emit(pic.str(), svg, out);
  }
  return kExitOk;
}

int cmd_orbit(const Common& c, const std::string& point, long n, const std::string& format, std::ostream& out) {
  const AffineSphereSystem sys = load_system(c);
  if (point.empty()) throw Error(ErrorCode::InvalidPoint, "orbit needs --point");
  const Vector x = parse_point(point);
  require_unit(x, sys.dim());
  if (n < 0 && !sys.homeo_certified()) {
    throw Error(ErrorCode::NotInvertible, "backward orbits need ||T^-1 a|| < 1");
  }
  const OrbitSegment seg = orbit(sys, x, static_cast<int>(std::min(0L, n)), static_cast<int>(std::max(0L, n)));
  if (format == "json") {
    json points = json::array();
    json indices = json::array();
    for (int k = seg.n_min; k <= seg.n_max; ++k) {
      indices.push_back(k);
      points.push_back(vector_to_json(seg.at(k)));
    }
    json factors = json::array();
    for (double f : seg.norm_factors) factors.push_back(f);
    emit(dump(json{{"indices", indices}, {"points", points}, {"norm_factors", factors}}), c.output, out);
    return kExitOk;
  }
  std::string text = "index";
  for (int i = 0; i < sys.dim(); ++i) text += ",x" + std::to_string(i + 1);
  text += '\n';
  for (int k = seg.n_min; k <= seg.n_max; ++k) {
    text += std::to_string(k);
    const Vector& p = seg.at(k);
    for (Eigen::Index i = 0; i < p.size(); ++i) text += "," + fmt(p(i));
    text += '\n';
  }
  emit(text, c.output, out);
  return kExitOk;
}

/// Offset-free input: build the offset (and possibly a power or conjugate of T).
int certify_construct(const std::string& mode, const Common& c, const json& j, std::ostream& out, std::ostream& err) {
  if (!j.contains("matrix")) throw Error(ErrorCode::MalformedInput, "system description lacks \"matrix\"");
  const Matrix T = matrix_from_json(j["matrix"]);
  if (mode == "nondistal") {
    const SearchResult r = conjugate_or_power_search(T, SearchMode::Power, c.seed);
    err << "constructed offset via " << to_string(r.kind) << " (power " << r.power << ", " << r.construction << ")\n";
    emit(dump(witness_to_json(r.witness)), c.output, out);
    return kExitOk;
  }
  const Frame2 W = invariant_2plane(T);
  const Vector a = (0.5 / operator_norm(invert(T))) * W.col(0);
  const AffineSphereSystem sys(T, a, c.require_homeo);
  emit(dump(witness_to_json(nonexpansive_witness(sys, W, c.delta, c.horizon, c.seed))), c.output, out);
  return kExitOk;
}

int cmd_certify(const std::string& mode, const Common& c, std::ostream& out, std::ostream& err) {
  const json j = read_json_file(c.input);
  if (j.is_object() && !j.contains("offset")) return certify_construct(mode, c, j, out, err);
  const AffineSphereSystem sys = system_from_json(j, c.require_homeo);
  if (!sys.homeo_certified()) {
    throw Error(ErrorCode::HomeoConditionViolated, "witness searches need ||T^-1 a|| < 1");
  }
  std::optional<Witness> w;
  std::string reason;
  if (mode == "nondistal") {
    DistalityVerdict v = distality_verdict(sys, options(c));
    w = std::move(v.witness);
    reason = std::string(to_string(v.kind)) + ": " + v.reason;
  } else {
    ExpansivityVerdict v = expansivity_verdict(sys, options(c));
    w = std::move(v.witness);
    reason = std::string(to_string(v.kind)) + ": " + v.reason;
  }
  if (!w) {
    err << "no witness: " << reason << "\n";
    return kExitUnknown;
  }
  emit(dump(witness_to_json(*w)), c.output, out);
  return kExitOk;
}

int cmd_product(const std::string& action, const std::vector<std::string>& inputs, const Common& c,
                const std::string& point, long n, const std::string& property, std::ostream& out, std::ostream& err) {
  if (inputs.empty()) throw Error(ErrorCode::MalformedInput, "product needs at least one -i factor");
  const ProductSphereSystem p(load_factors(inputs, c.require_homeo));
  if (action == "classify") {
    emit(dump(report_to_json(classify_product(p, options(c)))), c.output, out);
    return kExitOk;
  }
  if (action == "apply") {
    if (point.empty()) throw Error(ErrorCode::InvalidPoint, "product apply needs --point \"x1,x2;y1,y2\"");
    ProductPoint v = parse_product_point(point);
    json orbit = json::array({product_point_to_json(v)});
    for (long k = 0; k < std::abs(n); ++k) {
      v = n >= 0 ? product_apply(p, v) : product_apply_inverse(p, v);
      orbit.push_back(product_point_to_json(v));
    }
    emit(dump(json{{"steps", n}, {"orbit", orbit}}), c.output, out);
    return kExitOk;
  }
  std::vector<DistalityVerdict> dv;
  std::vector<ExpansivityVerdict> ev;
  for (const auto& f : p.factors()) {
    if (property == "nondistal") {
      dv.push_back(distality_verdict(f, options(c)));
    } else {
      ev.push_back(expansivity_verdict(f, options(c)));
    }
  }
  std::optional<Witness> w;
  std::string reason;
  if (property == "nondistal") {
    DistalityVerdict v = product_distality_verdict(p, dv);
    w = std::move(v.witness);
    reason = std::string(to_string(v.kind)) + ": " + v.reason;
  } else {
    ExpansivityVerdict v = product_expansivity_verdict(p, ev);
    w = std::move(v.witness);
    reason = std::string(to_string(v.kind)) + ": " + v.reason;
  }
  if (!w) {
    err << "no witness: " << reason << "\n";
    return kExitUnknown;
  }
  emit(dump(witness_to_json(*w)), c.output, out);
  return kExitOk;
}

int cmd_verify(const Common& c, std::ostream& out) {
  const Witness w = witness_from_json(read_json_file(c.input));
  const VerificationReport r = verify(w);
  emit(dump(report_to_json(r)), c.output, out);
  return r.pass ? kExitOk : kExitUnknown;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamics of the sphere maps x -> (a + T x) / ||a + T x||", "affsphere"};
  app.require_subcommand(1);
  app.footer(kExitCodeHelp);

  Common c;
  std::string theta;
  std::optional<double> alpha;
  std::string alpha_axis;
  std::string svg;
  std::string point;
  std::string format = "csv";
  std::string mode;
  std::string action;
  std::string property = "nondistal";
  std::vector<std::string> inputs;
  long steps = 10;
  bool skip_period2 = false;
  unsigned threads = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Report fixed points, involution, distality and expansivity");
  classify_cmd->add_option("-i,--input", c.input, "System JSON")->check(CLI::ExistingFile);
  classify_cmd->add_option("--theta", theta, "Rotation angle (e.g. pi/3) for a rotation system with a = (0, alpha)");
  classify_cmd->add_option("--alpha", alpha, "Offset length for --theta");
  add_common(classify_cmd, c, true);

  auto* sweep_cmd = app.add_subcommand("sweep", "Scan a (theta, alpha) grid of rotation systems");
  sweep_cmd->add_option("--theta", theta, "Theta axis start:stop:step (radians, pi literals allowed)")->required();
  sweep_cmd->add_option("--alpha", alpha_axis, "Alpha axis start:stop:step inside (0, 1)")->required();
  sweep_cmd->add_option("-o,--output", c.output, "CSV path (default: stdout)");
  sweep_cmd->add_option("--svg", svg, "Also write an SVG heat map of fixed_count");
  sweep_cmd->add_flag("--no-period2", skip_period2, "Skip the period-2 scan (period2_count = -1)");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  auto* orbit_cmd = app.add_subcommand("orbit", "Dump the orbit of a point");
  orbit_cmd->add_option("-i,--input", c.input, "System JSON")->required()->check(CLI::ExistingFile);
  orbit_cmd->add_option("--point", point, "Comma-separated coordinates (normalized)")->required();
  orbit_cmd->add_option("-n,--steps", steps, "Iterations; negative values use the inverse")->capture_default_str();
  orbit_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  add_common(orbit_cmd, c, false);

  auto* certify_cmd = app.add_subcommand(
      "certify", "Search for a non-distality or non-expansivity witness (offset-free input builds the offset)");
  certify_cmd->add_option("mode", mode, "nondistal or nonexpansive")
      ->required()
      ->check(CLI::IsMember({"nondistal", "nonexpansive"}));
  certify_cmd->add_option("-i,--input", c.input, "System JSON")->required()->check(CLI::ExistingFile);
  add_common(certify_cmd, c, true);

  auto* product_cmd = app.add_subcommand("product", "Assemble a product of sphere systems");
  product_cmd->add_option("action", action, "classify, apply or certify")
      ->required()
      ->check(CLI::IsMember({"classify", "apply", "certify"}));
  product_cmd->add_option("-i,--input", inputs, "Factor system JSON or product JSON (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  product_cmd->add_option("--point", point, "Product point \"x1,x2;y1,y2\" for apply");
  product_cmd->add_option("-n,--steps", steps, "Iterations for apply")->capture_default_str();
  product_cmd->add_option("--property", property, "nondistal or nonexpansive for certify")
      ->check(CLI::IsMember({"nondistal", "nonexpansive"}))
      ->capture_default_str();
  add_common(product_cmd, c, true);

  auto* verify_cmd = app.add_subcommand("verify", "Replay a witness and report every recomputed bound");
  verify_cmd->add_option("-i,--input", c.input, "Witness JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("-o,--output", c.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(c, theta, alpha, out);
    if (*sweep_cmd) return cmd_sweep(theta, alpha_axis, c.output, svg, skip_period2, threads, out);
    if (*orbit_cmd) return cmd_orbit(c, point, steps, format, out);
    if (*certify_cmd) return cmd_certify(mode, c, out, err);
    if (*product_cmd) return cmd_product(action, inputs, c, point, steps, property, out, err);
    if (*verify_cmd) return cmd_verify(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace affsphere
