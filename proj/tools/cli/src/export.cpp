#include "tropmirror_cli/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "tropmirror/error.hpp"

namespace tropmirror::cli {
namespace {

json halfspaces(const std::vector<Halfspace>& hs) {
  json out = json::array();
  for (const auto& h : hs) out.push_back({{"normal", to_json(h.normal)}, {"bound", format_rational(h.bound)}});
  return out;
}

json complex_pair(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(format_rational(v[i]));
  return out;
}

json to_json(const LatticeVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].convert_to<long long>());
  return out;
}

json to_json(const Polytope& q) {
  json verts = json::array();
  for (const auto& v : q.vertices()) verts.push_back(to_json(v));
  return {{"dim", q.dim()}, {"hrep", halfspaces(q.hrep())}, {"vertices", verts}};
}

json to_json(const tropical::CoherentSubdivision& s) {
  json support = json::array(), heights = json::array(), cells = json::array(), faces = json::array(),
       adjacency = json::array();
  for (const auto& a : s.height.support) support.push_back(to_json(a));
  for (const auto& h : s.height.heights) heights.push_back(format_rational(h));
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    cells.push_back({{"points", s.cells[i].points},
                     {"vertices", s.cells[i].vertices},
                     {"gradient", to_json(s.affine[i].gradient)},
                     {"constant", format_rational(s.affine[i].constant)}});
  for (const auto& f : s.faces)
    faces.push_back({{"dim", f.dim}, {"points", f.points}, {"vertices", f.vertices}, {"on_boundary", f.on_boundary}});
  for (const auto& [a, b] : s.adjacency) adjacency.push_back({a, b});
  return {{"support", support},   {"heights", heights},
          {"cells", cells},       {"faces", faces},
          {"adjacency", adjacency}, {"triangulation", s.triangulation},
          {"maximal", s.maximal}, {"newton_polytope", to_json(s.newton)}};
}

json to_json(const tropical::TropicalComplex& pi) {
  json faces = json::array(), comps = json::array(), counts = json::object();
  for (const auto& f : pi.faces) {
    json verts = json::array(), rec = json::array();
    for (const auto& v : f.vertices) verts.push_back(to_json(v));
    for (const auto& r : f.recession) rec.push_back(to_json(r));
    faces.push_back({{"dim", f.dim},
                     {"dual", f.dual},
                     {"equalities", halfspaces(f.equalities)},
                     {"inequalities", halfspaces(f.inequalities)},
                     {"vertices", verts},
                     {"recession", rec},
                     {"bounded", f.bounded},
                     {"interior_point", to_json(f.interior_point)}});
  }
  for (const auto& c : pi.components)
    comps.push_back({{"alpha", c.alpha},
                     {"exponent", to_json(pi.subdivision.height.support[c.alpha])},
                     {"empty", c.empty},
                     {"neighbours", c.neighbours}});
  for (std::size_t k = 0; k < pi.dim(); ++k)
    counts[std::to_string(k)] = {{"faces", pi.count(k)}, {"bounded", pi.count_bounded(k)}};
  json out{{"dim", pi.dim()}, {"faces", faces}, {"components", comps}, {"counts", counts}};
  if (pi.moment_polytope) out["moment_polytope"] = to_json(*pi.moment_polytope);
  return out;
}

json to_json(const tropical::TropicalConstants& k) {
  return {{"N", k.N.str()}, {"rho", k.rho}, {"c_est", k.c_est}, {"cardA", k.cardA}};
}

json to_json(const tropical::HausdorffReport& r) {
  return {{"value", r.value},
          {"cloud_to_pi", r.cloud_to_pi},
          {"pi_to_cloud", r.pi_to_cloud},
          {"cloud_in_window", r.cloud_in_window},
          {"pi_samples", r.pi_samples},
          {"spacing", r.spacing}};
}

json to_json(const floer::GradedAlgebra& alg) {
  json bases = json::object(), tables = json::object();
  for (long j = 0; j <= alg.max_twist(); ++j) {
    json b = json::array();
    for (const auto& g : alg.piece(j).basis()) b.push_back(to_json(g.point));
    bases[std::to_string(j)] = b;
  }
  for (long j = 0; j <= alg.max_twist(); ++j)
    for (long k = 0; j + k <= alg.max_twist(); ++k) tables[std::to_string(j) + "," + std::to_string(k)] = alg.entries(j, k);
  return {{"max_twist", alg.max_twist()},
          {"polytope", to_json(alg.polytope())},
          {"bases", bases},
          {"tables", tables},
          {"boundary_coincidences", alg.boundary_coincidences()}};
}

json to_json(const floer::AxiomReport& r) {
  return {{"verdict", r.ok() ? "pass" : "fail"},
          {"associativity", {{"checked", r.associativity_checked}, {"violations", r.associativity_violations}}},
          {"unit", {{"checked", r.unit_checked}, {"violations", r.unit_violations}}},
          {"degree", {{"checked", r.degree_checked}, {"violations", r.degree_violations}}},
          {"commutativity", {{"checked", r.commutativity_checked}, {"violations", r.commutativity_violations}}}};
}

json to_json(const coordring::IsomorphismReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"j", m.j}, {"k", m.k}, {"p", m.p}, {"q", m.q}, {"floer", m.floer}, {"ring", m.ring}});
  return {{"verdict", r.success() ? "pass" : "fail"},
          {"bijection_ok", r.bijection_ok},
          {"products_checked", r.products_checked},
          {"dual_products_checked", r.dual_products_checked},
          {"mismatches", mism},
          {"notes", r.notes}};
}

json to_json(const coordring::SerreReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"j", row.j},
                    {"floer", row.floer},
                    {"interior", row.interior},
                    {"reciprocity", format_rational(row.reciprocity)},
                    {"ok", row.ok()}});
  return {{"verdict", r.ok() ? "pass" : "fail"}, {"rows", rows}};
}

json to_json(const amoeba::AmoebaCloud& cloud) {
  json pts = json::array();
  for (const auto& p : cloud.points) {
    json w = json::array(), z = json::array();
    bool finite = true;
    for (const auto& c : p.witness.w) w.push_back(complex_pair(c));
    for (const auto& c : p.witness.z()) {
      finite = finite && std::isfinite(c.real()) && std::isfinite(c.imag());
      z.push_back(complex_pair(c));
    }
    pts.push_back({{"u", p.u}, {"w", w}, {"z", finite ? z : json(nullptr)}, {"residual", p.residual}, {"axis", p.axis}});
  }
  const auto& s = cloud.stats;
  return {{"stats",
           {{"fibers", s.fibers},
            {"degenerate_fibers", s.degenerate_fibers},
            {"roots", s.roots},
            {"lost_paths", s.lost_paths},
            {"emitted", s.emitted}}},
          {"points", pts}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::MalformedInput, "failed writing " + path);
}

}  // namespace tropmirror::cli
