#include "hsk/report_json.hpp"

#include <cstdio>
#include <sstream>

namespace hsk {

namespace {

const char* status(bool ok) { return ok ? "pass" : "fail"; }

// Fixed 17-digit rendering keeps numeric output identical across runs.
Json num(double x) {
  if (x == 0) return 0.0;  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::stod(buf);
}

Json point(const std::complex<double>& z) { return Json::array({num(z.real()), num(z.imag())}); }

Json solution(const TorusPoint& p, const char* component) {
  Json j;
  j["w1"] = point(p.w[0]);
  j["w2"] = point(p.w[1]);
  j["w3"] = point(p.w[2]);
  j["residual"] = num(p.residual);
  j["component"] = component;
  return j;
}

std::string fmt(double x, const char* spec = "%.12f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, x == 0 ? 0.0 : x);
  return buf;
}

std::string fmt_point(const std::complex<double>& z) {
  return "(" + fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i)";
}

}  // namespace

Json to_json(const std::vector<CheckEntry>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back({{"check", c.name}, {"status", status(c.passed)}, {"detail", c.detail}});
  }
  return arr;
}

Json to_json(const IdentityReport& rep, bool with_timings) {
  Json j;
  j["status"] = status(rep.all_passed());
  Json entries = Json::array();
  Json times = Json::object();
  std::size_t passed = 0;
  for (const auto& e : rep.entries) {
    passed += e.passed ? 1 : 0;
    // millis is part of the entry schema; it is zeroed when timings are excluded
    entries.push_back({{"check", e.check},
                       {"status", status(e.passed)},
                       {"paper_ref", e.paper_ref},
                       {"millis", with_timings ? num(e.millis) : Json(0)},
                       {"detail", e.detail}});
    times[e.check] = num(e.millis);
  }
  j["checks"] = rep.entries.size();
  j["passed"] = passed;
  j["entries"] = std::move(entries);
  if (with_timings) j["timings"] = {{"total_millis", num(rep.total_millis)}, {"per_check", std::move(times)}};
  return j;
}

Json to_json(const TorusSolutionSet& set) {
  Json j;
  j["mode"] = set.mode;
  j["seeds"] = set.seeds;
  j["converged"] = set.converged;
  j["dropped_equal_weights"] = set.dropped_equal_weights;
  j["isolated_count"] = set.isolated.size();
  j["curve_count"] = set.curves.size();
  Json sols = Json::array();
  for (const auto& p : set.isolated) sols.push_back(solution(p, "isolated"));
  for (const auto& c : set.curves) {
    for (const auto& p : c.samples) sols.push_back(solution(p, "curve"));
  }
  j["solutions"] = std::move(sols);
  Json curves = Json::array();
  for (const auto& c : set.curves) {
    curves.push_back({{"points", c.point_count},
                      {"tangent", {num(c.tangent[0]), num(c.tangent[1]), num(c.tangent[2])}},
                      {"first_sample", solution(c.samples.front(), "curve")}});
  }
  j["curves"] = std::move(curves);
  j["caveats"] = set.caveats;
  return j;
}

Json to_json(const HadamardCandidate& cand) {
  Json j;
  j["label"] = cand.label;
  Json fams = Json::array();
  for (Family f : cand.families) fams.push_back(to_string(f));
  j["families"] = std::move(fams);
  j["w1"] = to_string(cand.w1);
  j["w2"] = to_string(cand.w2);
  j["w3"] = to_string(cand.w3);
  if (cand.w) j["w"] = to_string(*cand.w);
  return j;
}

Json to_json(const FamilyListing& listing) {
  Json j;
  j["a"] = listing.a;
  j["c"] = listing.c;
  if (listing.family_a_relation) j["family_a_relation"] = *listing.family_a_relation;
  Json cands = Json::array();
  for (const auto& c : listing.candidates) cands.push_back(to_json(c));
  j["candidates"] = std::move(cands);
  j["notes"] = listing.notes;
  return j;
}

Json to_json(const NonexistenceReport& rep) {
  Json j;
  j["case"] = to_string(rep.which);
  j["k1"] = to_string(rep.k1);
  j["k2"] = to_string(rep.k2);
  j["t"] = to_string(rep.t);
  j["unit_root_possible"] = rep.unit_root_possible;
  if (rep.forced_weight) j["forced_weight"] = to_string(*rep.forced_weight);
  j["m1"] = to_string(rep.m1);
  j["m1_integral"] = rep.m1_integral;
  j["hadamard_possible"] = rep.hadamard_possible;
  j["checks"] = to_json(rep.checks);
  j["conclusion"] = rep.conclusion;
  return j;
}

Json to_json(const EigenmatrixTemplate& t) {
  return {{"k1", to_string(t.k1())}, {"k2", to_string(t.k2())}, {"r", to_string(t.r())},
          {"s", to_string(t.s())},   {"b2", to_string(t.b2())}, {"n", to_string(t.n())}};
}

std::string to_text(const IdentityReport& rep) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& e : rep.entries) {
    passed += e.passed ? 1 : 0;
    out << (e.passed ? "PASS " : "FAIL ") << e.check << "  [" << e.paper_ref << "]";
    if (!e.detail.empty()) out << "  " << e.detail;
    out << '\n';
  }
  out << passed << "/" << rep.entries.size() << " identities hold\n";
  return out.str();
}

std::string to_text(const TorusSolutionSet& set) {
  std::ostringstream out;
  out << "mode " << set.mode << ", " << set.seeds << " seeds, " << set.converged << " converged, "
      << set.dropped_equal_weights << " dropped with w1 = w2\n";
  out << set.isolated.size() << " isolated solution(s)\n";
  for (const auto& p : set.isolated) {
    out << "  w = " << fmt_point(p.w[0]) << ", " << fmt_point(p.w[1]) << ", " << fmt_point(p.w[2])
        << "  residual " << fmt(p.residual, "%.2e") << '\n';
  }
  out << set.curves.size() << " curve component(s)\n";
  for (const auto& c : set.curves) {
    const auto& p = c.samples.front();
    out << "  " << c.point_count << " points, through " << fmt_point(p.w[0]) << ", " << fmt_point(p.w[1]) << ", "
        << fmt_point(p.w[2]) << '\n';
  }
  for (const auto& cv : set.caveats) out << "note: " << cv << '\n';
  return out.str();
}

std::string to_text(const std::vector<CheckEntry>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace hsk
