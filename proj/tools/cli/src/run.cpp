#include "tropmirror_cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <sstream>

#include "tropmirror/amoeba/certificates.hpp"
#include "tropmirror/amoeba/sampler.hpp"
#include "tropmirror/coordring/ring.hpp"
#include "tropmirror/diagnostics.hpp"
#include "tropmirror/floer/algebra.hpp"
#include "tropmirror/io/fan_json.hpp"
#include "tropmirror/tropical/constants.hpp"
#include "tropmirror/tropical/hausdorff.hpp"
#include "tropmirror_cli/export.hpp"
#include "tropmirror_cli/svg.hpp"

namespace tropmirror::cli {
namespace fs = std::filesystem;
namespace {

constexpr std::size_t kHistogramBins = 20;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string path_in(const JobConfig& c, const std::string& name) { return (fs::path(c.out) / name).string(); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

tropical::TropicalConstants constants_for(const tropical::TropicalComplex& pi, const JobConfig& c) {
  tropical::ConstantsOptions opts;
  opts.seed = c.seed;
  return tropical::tropical_constants(pi, opts);
}

int cmd_subdivide(const JobConfig& c, const io::FanInput& in, std::ostream& out) {
  polytope_from_bundle(in.fan, in.phi);
  const auto sub = tropical::regular_subdivision(tropical::height_from_bundle(in.fan, in.phi));
  json doc = to_json(sub);
  doc["bundle_subdivision_ok"] = tropical::check_bundle_subdivision(in.fan, in.phi);
  write_file(path_in(c, "subdivision.json"), dump(doc));
  out << "cells " << sub.cells.size() << ", triangulation " << (sub.triangulation ? "yes" : "no") << ", maximal "
      << (sub.maximal ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_tropical(const JobConfig& c, const io::FanInput& in, std::ostream& out) {
  polytope_from_bundle(in.fan, in.phi);
  const auto pi = tropical::tropical_complex(tropical::height_from_bundle(in.fan, in.phi));
  json doc{{"complex", to_json(pi)}, {"eps", c.eps}};
  try {
    const auto k = constants_for(pi, c);
    doc["constants"] = to_json(k);
    doc["log_scale"] = tropical::choose_log_scale(k, c.eps);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotTriangulation) throw;
    warn(std::string("constants omitted: ") + e.what());
    doc["constants"] = nullptr;
    doc["log_scale"] = nullptr;
  }
  write_file(path_in(c, "tropical.json"), dump(doc));
  out << "faces " << pi.faces.size() << ", components " << pi.components.size() << "\n";
  return kOk;
}

json histogram(const std::vector<double>& margins) {
  json rows = json::array();
  if (margins.empty()) return rows;
  const auto [mn, mx] = std::minmax_element(margins.begin(), margins.end());
  const double lo = *mn, hi = *mx > *mn ? *mx : *mn + 1.0;
  const double w = (hi - lo) / kHistogramBins;
  std::vector<std::size_t> counts(kHistogramBins, 0);
  for (double m : margins) ++counts[std::min<std::size_t>(kHistogramBins - 1, std::size_t((m - lo) / w))];
  for (std::size_t b = 0; b < kHistogramBins; ++b) rows.push_back({lo + b * w, lo + (b + 1) * w, counts[b]});
  return rows;
}

int cmd_amoeba(const JobConfig& c, const io::FanInput& in, std::ostream& out) {
  polytope_from_bundle(in.fan, in.phi);
  double log_t = 0;
  if (c.log_t) {
    log_t = *c.log_t;
  } else {
    const auto pi = tropical::tropical_complex(tropical::height_from_bundle(in.fan, in.phi));
    log_t = tropical::choose_log_scale(constants_for(pi, c), c.eps);
  }
  const auto f = amoeba::PatchworkFamily::from_fan(in.fan, in.phi, log_t, c.s, c.eps);
  const auto& pi = f.complex();

  amoeba::SampleGrid grid;
  grid.radii = c.grid;
  grid.args = c.args;
  const double mx = 0.05 * (c.window[1] - c.window[0]), my = 0.05 * (c.window[3] - c.window[2]);
  grid.lo = {(c.window[0] - mx) * log_t, (c.window[2] - my) * log_t};
  grid.hi = {(c.window[1] + mx) * log_t, (c.window[3] + my) * log_t};
  const auto cloud = amoeba::amoeba_sample_curve(f, grid);

  std::vector<std::vector<double>> scaled;
  scaled.reserve(cloud.points.size());
  for (const auto& p : cloud.points) scaled.push_back({p.u[0] / log_t, p.u[1] / log_t});
  const tropical::Window win{{c.window[0], c.window[2]}, {c.window[1], c.window[3]}};
  const auto hd = tropical::hausdorff_distance(scaled, pi, win);

  std::vector<double> margins;
  std::size_t off_locus = 0;
  for (const auto& p : cloud.points) {
    try {
      margins.push_back(amoeba::symplectic_margin(f, p.witness));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotOnZeroLocus) throw;
      ++off_locus;
    }
  }
  const std::size_t nonpositive = std::count_if(margins.begin(), margins.end(), [](double m) { return !(m > 0); });

  const std::string t_text = format_double(std::exp(log_t)), s_text = format_double(c.s);
  std::ostringstream csv;
  csv << "u1,u2,residual,t,s\n";
  for (const auto& p : cloud.points)
    csv << format_double(p.u[0]) << ',' << format_double(p.u[1]) << ',' << format_double(p.residual) << ','
        << t_text << ',' << s_text << '\n';
  write_file(path_in(c, "cloud.csv"), csv.str());

  json cj = to_json(cloud);
  cj["log_t"] = log_t;
  cj["s"] = c.s;
  write_file(path_in(c, "cloud.json"), dump(cj));
  json hj = to_json(hd);
  hj["log_t"] = log_t;
  hj["window"] = c.window;
  write_file(path_in(c, "hausdorff.json"), dump(hj));

  std::ostringstream hist;
  hist << "bin_lo,bin_hi,count\n";
  for (const auto& row : histogram(margins))
    hist << format_double(row[0].get<double>()) << ',' << format_double(row[1].get<double>()) << ','
         << row[2].get<std::size_t>() << '\n';
  write_file(path_in(c, "margin_histogram.csv"), hist.str());

  json report{{"log_t", log_t},
              {"s", c.s},
              {"eps", c.eps},
              {"grid", {{"radii", c.grid}, {"args", c.args}}},
              {"points", cloud.points.size()},
              {"hausdorff", hd.value},
              {"margins", {{"evaluated", margins.size()}, {"nonpositive", nonpositive}, {"off_locus", off_locus}}},
              {"stats", cj["stats"]}};
  write_file(path_in(c, "amoeba_report.json"), dump(report));
  write_file(path_in(c, "amoeba.svg"), overlay_svg(pi, scaled, c.window, utc_timestamp()));

  out << "log t " << format_double(log_t) << ", points " << cloud.points.size() << ", hausdorff "
      << format_double(hd.value) << ", nonpositive margins " << nonpositive << "\n";
  return kOk;
}

int cmd_verify(const JobConfig& c, const io::FanInput& in, std::ostream& out) {
  const Polytope q = polytope_from_bundle(in.fan, in.phi);
  const auto alg = floer::assemble_algebra(q, c.J);
  const auto axioms = floer::check_axioms(alg);
  const auto ring = coordring::section_ring(q, c.J);
  const auto iso = coordring::verify_isomorphism(alg, ring);
  const auto serre = coordring::serre_check(q, c.J);
  const bool pass = axioms.ok() && iso.success() && serre.ok();

  json doc{{"verdict", pass ? "pass" : "fail"},
           {"max_twist", c.J},
           {"axioms", to_json(axioms)},
           {"isomorphism", to_json(iso)},
           {"serre", to_json(serre)}};
  write_file(path_in(c, "verify.json"), dump(doc));
  write_file(path_in(c, "algebra.json"), dump(to_json(alg)));

  std::ostringstream s;
  s << "verdict: " << (pass ? "pass" : "fail") << "\n";
  s << "J = " << c.J << ", dim Q = " << q.dim() << "\n";
  s << "products checked: " << iso.products_checked << ", dual products checked: " << iso.dual_products_checked
    << ", mismatches: " << iso.mismatches.size() << "\n";
  s << "bijection: " << (std::all_of(iso.bijection_ok.begin(), iso.bijection_ok.end(), [](bool b) { return b; }) ? "ok" : "FAILED") << "\n";
  s << "axioms: " << (axioms.ok() ? "ok" : "FAILED") << "\n";
  s << "serre/ehrhart: " << (serre.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& n : iso.notes) s << "note: " << n << "\n";
  write_file(path_in(c, "summary.txt"), s.str());
  out << s.str();
  return pass ? kOk : kMismatch;
}

int cmd_hilbert(const JobConfig& c, const io::FanInput& in, std::ostream& out) {
  const Polytope q = polytope_from_bundle(in.fan, in.phi);
  const auto h = coordring::hilbert_function(q, c.J);
  const auto i = coordring::interior_counts(q, c.J);
  std::ostringstream csv;
  csv << "j,hilbert,interior\n";
  for (std::size_t j = 0; j < h.size(); ++j) csv << j << ',' << h[j] << ',' << i[j] << '\n';
  write_file(path_in(c, "hilbert.csv"), csv.str());
  out << csv.str();
  return kOk;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::MalformedFan:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidEps:
    case ErrorCode::EmptyWindow:
      return kBadInput;
    case ErrorCode::AssociativityViolation:
      return kMismatch;
    default:
      return kDomainError;
  }
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const io::FanInput in = io::load_fan_json(config.input);
    if (config.command == Command::Amoeba && in.fan.dim() != 2) {
      err << "error: amoeba needs a fan in dimension 2, got " << in.fan.dim() << "\n";
      return kNeedsPlane;
    }
    std::error_code ec;
    fs::create_directories(config.out, ec);
    if (ec) throw Error(ErrorCode::MalformedInput, "cannot create " + config.out + ": " + ec.message());
    switch (config.command) {
      case Command::Subdivide: return cmd_subdivide(config, in, out);
      case Command::Tropical: return cmd_tropical(config, in, out);
      case Command::Amoeba: return cmd_amoeba(config, in, out);
      case Command::Verify: return cmd_verify(config, in, out);
      case Command::Hilbert: return cmd_hilbert(config, in, out);
    }
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace tropmirror::cli
