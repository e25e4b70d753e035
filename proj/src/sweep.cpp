#include "affsphere/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <thread>

#include "affsphere/error.hpp"

namespace affsphere {

namespace {

[[noreturn]] void malformed(std::string_view text, const char* why) {
  throw Error(ErrorCode::MalformedInput, "cannot parse \"" + std::string(text) + "\": " + why);
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

double parse_number(const std::string& s, std::string_view whole) {
  if (s.empty()) malformed(whole, "empty number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    malformed(whole, "not a number");
  }
  if (used != s.size() || !std::isfinite(v)) malformed(whole, "trailing characters");
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string s = trim(text);
  const auto at = s.find("pi");
  if (at == std::string::npos) return parse_number(s, text);
  std::string prefix = s.substr(0, at);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  double factor = 1.0;
  if (prefix == "-") {
    factor = -1.0;
  } else if (prefix == "+") {
    factor = 1.0;
  } else if (!prefix.empty()) {
    factor = parse_number(prefix, text);
  }
  const std::string suffix = s.substr(at + 2);
  double divisor = 1.0;
  if (!suffix.empty()) {
    if (suffix[0] != '/') malformed(text, "expected /divisor after pi");
    divisor = parse_number(suffix.substr(1), text);
    if (divisor == 0.0) malformed(text, "division by zero");
  }
  return factor * std::numbers::pi / divisor;
}

AxisSpec AxisSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  AxisSpec axis;
  if (parts.size() == 1) {
    axis.start = axis.stop = parse_angle(parts[0]);
    axis.step = 1.0;
    return axis;
  }
  if (parts.size() != 3) malformed(text, "expected start:stop:step");
  axis.start = parse_angle(parts[0]);
  axis.stop = parse_angle(parts[1]);
  axis.step = parse_angle(parts[2]);
  if (!(axis.step > 0.0)) malformed(text, "step must be positive");
  if (axis.stop < axis.start) malformed(text, "stop must not precede start");
  return axis;
}

std::vector<double> AxisSpec::values() const {
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

SweepCell sweep_cell(double theta, double alpha, const SweepOptions& opts) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidAlpha, "sweep alpha must lie in (0, 1)");
  SweepCell cell;
  cell.theta = theta;
  cell.alpha = alpha;
  cell.boundary = std::abs(std::cos(theta) - std::sqrt(1.0 - alpha * alpha)) < kBoundaryBand;
  const AffineSphereSystem sys(rotation(theta), Eigen::Vector2d(0.0, alpha));
  for (const auto& r : fixed_points_numeric(sys, 1, opts.scan)) {
    ++cell.fixed_count;
    if (r.stability == Stability::Attracting && !cell.attracting_Q) cell.attracting_Q = r.point;
  }
  if (opts.period2) {
    for (const auto& r : fixed_points_numeric(sys, 2, opts.scan)) cell.period2_count += r.period == 2 ? 1 : 0;
  } else {
    cell.period2_count = -1;
  }
  return cell;
}

SweepGrid run_sweep(const std::vector<double>& thetas, const std::vector<double>& alphas, const SweepOptions& opts) {
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::InvalidAlpha, "sweep alpha " + fmt(a) + " is outside (0, 1)");
  }
  SweepGrid grid;
  grid.thetas = thetas;
  grid.alphas = alphas;
  const std::size_t total = thetas.size() * alphas.size();
  grid.cells.resize(total);

  unsigned workers = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t idx = next++; idx < total && !failed; idx = next++) {
      try {
        grid.cells[idx] = sweep_cell(thetas[idx / alphas.size()], alphas[idx % alphas.size()], opts);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

SweepGrid run_sweep(const AxisSpec& theta, const AxisSpec& alpha, const SweepOptions& opts) {
  return run_sweep(theta.values(), alpha.values(), opts);
}

void write_csv(const SweepGrid& grid, std::ostream& out) {
  out << "theta,alpha,fixed_count,period2_count,boundary\n";
  for (const auto& c : grid.cells) {
    out << fmt(c.theta) << ',' << fmt(c.alpha) << ',' << c.fixed_count << ',' << c.period2_count << ','
        << (c.boundary ? 1 : 0) << '\n';
  }
}

void write_svg(const SweepGrid& grid, std::ostream& out) {
  const double width = 640.0;
  const double height = 480.0;
  const double margin = 60.0;
  const double pw = width - 2 * margin;
  const double ph = height - 2 * margin;
  const std::size_t nt = grid.thetas.size();
  const std::size_t na = grid.alphas.size();
  const double t0 = nt ? grid.thetas.front() : 0.0;
  const double t1 = nt ? grid.thetas.back() : 1.0;
  const double a0 = na ? grid.alphas.front() : 0.0;
  const double a1 = na ? grid.alphas.back() : 1.0;
  const double tspan = t1 > t0 ? t1 - t0 : 1.0;
  const double aspan = a1 > a0 ? a1 - a0 : 1.0;
  const double cw = pw / static_cast<double>(std::max<std::size_t>(nt, 1));
  const double ch = ph / static_cast<double>(std::max<std::size_t>(na, 1));
  auto px = [&](double theta) { return margin + (theta - t0) / tspan * (pw - cw) + 0.5 * cw; };
  auto py = [&](double alpha) { return height - margin - (alpha - a0) / aspan * (ph - ch) - 0.5 * ch; };
  const char* colors[] = {"#f7fbff", "#6baed6", "#08306b"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const SweepCell& c = grid.at(i, j);
      const int k = std::clamp(c.fixed_count, 0, 2);
      out << "<rect x=\"" << fmt_short(px(c.theta) - 0.5 * cw) << "\" y=\"" << fmt_short(py(c.alpha) - 0.5 * ch)
          << "\" width=\"" << fmt_short(cw) << "\" height=\"" << fmt_short(ch) << "\" fill=\"" << colors[k] << "\"";
      if (c.period2_count == 4) out << " stroke=\"#d62728\" stroke-width=\"1\"";
      out << "/>\n";
    }
  }
  // existence boundary alpha = sin(theta) on cos(theta) >= 0
  std::string path;
  const int samples = 200;
  for (int s = 0; s <= samples; ++s) {
    const double theta = t0 + tspan * s / samples;
    if (std::cos(theta) < 0.0) break;
    const double alpha = std::sin(theta);
    if (alpha < a0 || alpha > a1) continue;
    path += (path.empty() ? "M" : " L") + fmt_short(px(theta)) + ' ' + fmt_short(py(alpha));
  }
  if (!path.empty()) out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"#e6550d\" stroke-width=\"2\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">theta (rad)</text>\n";
  out << "<text x=\"18\" y=\"" << height / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\""
      << " transform=\"rotate(-90 18 " << height / 2 << ")\">alpha</text>\n";
  out << "<text x=\"" << margin << "\" y=\"30\" font-family=\"sans-serif\" font-size=\"13\">"
      << "fixed points: light 0, mid 1, dark 2; red outline: four period-2 points</text>\n";
  out << "<text x=\"" << margin << "\" y=\"" << height - margin + 18 << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << fmt_short(t0) << "</text>\n";
  out << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 18
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_short(t1) << "</text>\n";
  out << "<text x=\"" << margin - 6 << "\" y=\"" << height - margin
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_short(a0) << "</text>\n";
  out << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_short(a1) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace affsphere
