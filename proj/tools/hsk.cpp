// hsk: command-line front end for the Hadamard/scheme checks.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include "hsk/hadamard.hpp"
#include "hsk/identities.hpp"
#include "hsk/report_json.hpp"
#include "hsk/schemes.hpp"
#include "hsk/torus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace hsk;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::optional<long> a, c;
  std::optional<std::string> k1, k2, r, s, b2;

  void add(CLI::App* cmd) {
    cmd->add_option("--a", a, "a >= 1 (with --c)");
    cmd->add_option("--c", c, "c >= 1 (with --a)");
    cmd->add_option("--k1", k1, "raw template parameter");
    cmd->add_option("--k2", k2, "raw template parameter");
    cmd->add_option("--r", r, "raw template parameter");
    cmd->add_option("--s", s, "raw template parameter");
    cmd->add_option("--b2", b2, "raw template parameter (b squared)");
  }

  bool raw() const { return k1 || k2 || r || s || b2; }
  bool given() const { return raw() || a || c; }

  EigenmatrixTemplate resolve() const {
    if (raw()) {
      if (a || c) throw InputError("--a/--c cannot be combined with raw parameters");
      if (!(k1 && k2 && r && s && b2)) throw InputError("raw mode needs all of --k1 --k2 --r --s --b2");
      return {parse_rational(*k1), parse_rational(*k2), parse_rational(*r), parse_rational(*s), parse_rational(*b2)};
    }
    if (!a || !c) throw InputError("need --a and --c, or the raw parameters --k1 --k2 --r --s --b2");
    if (*a < 1 || *c < 1) throw InputError("--a and --c must be positive");
    return params_from_ac(*a, *c).eigenmatrix();
  }
};

struct SchemeFlags {
  std::optional<std::string> path, named, seed;

  void add(CLI::App* cmd) {
    cmd->add_option("--scheme", path, "scheme file");
    cmd->add_option("--named", named, "built-in scheme: z4, quaternion, bush")
        ->check(CLI::IsMember({"z4", "quaternion", "bush"}));
    cmd->add_option("--seed", seed, "Hadamard seed file for --named bush (default: Sylvester order 4)");
  }

  AssociationScheme resolve() const {
    if (path && named) throw InputError("give either --scheme or --named");
    if (path) return load_scheme(*path);
    if (!named) throw InputError("need --scheme <path> or --named <z4|quaternion|bush>");
    if (*named == "z4") return z4_scheme();
    if (*named == "quaternion") return quaternion_scheme();
    const Matrix<int> h = seed ? load_hadamard_seed(*seed) : sylvester_hadamard(4);
    return bush_type_from_hadamard(h).scheme;
  }
};

struct Output {
  bool text = false;
  bool no_timings = false;

  void add(CLI::App* cmd, bool timings = false) {
    auto* j = cmd->add_flag("--json", "JSON output (default)");
    cmd->add_flag("--text", text, "plain-text output")->excludes(j);
    if (timings) cmd->add_flag("--no-timings", no_timings, "omit wall-clock fields");
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

HadamardCandidate candidate_from(const std::string& w1, const std::string& w2, const std::string& w3) {
  HadamardCandidate c;
  c.w1 = parse_exact(w1);
  c.w2 = parse_exact(w2);
  c.w3 = parse_exact(w3);
  c.families = {Family::custom};
  c.label = "(" + w1 + ", " + w2 + ", " + w3 + ")";
  return c;
}

Json matrix_json(const Matrix<QuadExt>& W) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < W.rows(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < W.cols(); ++y) row.push_back(to_string(W(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// The scheme realized by each parameter point that has one here.
std::optional<AssociationScheme> natural_scheme(long a, long c) {
  if (a == 1 && c == 1) return z4_scheme();
  if (a == 1 && c == 3) return quaternion_scheme();
  if (a == 2 && c == 1) return bush_type_from_hadamard(sylvester_hadamard(4)).scheme;
  return std::nullopt;
}

// ------------------------------------------------------------------ commands

int cmd_identities(const std::vector<std::string>& only, bool skip_alt, const Output& out) {
  const auto names = identity_check_names();
  for (const auto& n : only) {
    if (std::find(names.begin(), names.end(), n) == names.end()) throw InputError("unknown check " + n);
  }
  IdentityOptions opt;
  opt.only = only;
  opt.alt_order_check = !skip_alt;
  const IdentityReport rep = verify_identity_suite(opt);
  if (out.text) std::cout << to_text(rep);
  else emit(to_json(rep, !out.no_timings));
  return rep.all_passed() ? 0 : 1;
}

int cmd_families(long a, long c, int samples, const std::string& verify, const Output& out) {
  if (a < 1 || c < 1) throw InputError("--a and --c must be positive");
  if (samples < 2) throw InputError("--samples must be at least 2");
  const FamilyListing listing = enumerate_families(a, c, samples);
  const HadamardSystem sys = build_system(params_from_ac(a, c).eigenmatrix());
  const auto scheme = verify == "exact" ? natural_scheme(a, c) : std::nullopt;
  Json j = to_json(listing);
  bool ok = true;
  std::ostringstream txt;
  txt << "(a,c) = (" << a << "," << c << "): " << listing.candidates.size() << " candidate(s)\n";
  if (listing.family_a_relation) txt << "family a: " << *listing.family_a_relation << '\n';
  for (std::size_t i = 0; i < listing.candidates.size(); ++i) {
    const auto& cand = listing.candidates[i];
    txt << "  [";
    for (std::size_t f = 0; f < cand.families.size(); ++f) txt << (f ? "," : "") << to_string(cand.families[f]);
    txt << "] " << cand.label;
    if (verify == "exact") {
      const bool zero = check_common_zero(sys, cand);
      j["candidates"][i]["common_zero"] = zero;
      ok = ok && zero;
      txt << "  common zero: " << (zero ? "yes" : "NO");
      if (scheme) {
        const bool had = check_hadamard_matrix(build_W(*scheme, cand));
        j["candidates"][i]["hadamard_matrix"] = had;
        ok = ok && had;
        txt << ", W W* = nI: " << (had ? "yes" : "NO");
      }
    }
    txt << '\n';
  }
  for (const auto& n : listing.notes) txt << "note: " << n << '\n';
  if (verify == "exact") j["status"] = ok ? "pass" : "fail";
  if (out.text) std::cout << txt.str();
  else emit(j);
  return ok ? 0 : 1;
}

int cmd_build_matrix(const SchemeFlags& sf, const std::string& w1, const std::string& w2, const std::string& w3,
                     const Output& out, bool check) {
  const AssociationScheme s = sf.resolve();
  const HadamardCandidate cand = candidate_from(w1, w2, w3);
  const Matrix<QuadExt> W = build_W(s, cand);
  const bool had = check_hadamard_matrix(W);
  if (out.text) {
    for (std::size_t x = 0; x < W.rows(); ++x) {
      for (std::size_t y = 0; y < W.cols(); ++y) std::cout << (y ? "  " : "") << to_string(W(x, y));
      std::cout << '\n';
    }
    if (check) std::cout << (had ? "PASS" : "FAIL") << " W conj(W)^T = " << W.rows() << " I\n";
  } else {
    Json j;
    j["n"] = W.rows();
    j["weights"] = {to_string(cand.w1), to_string(cand.w2), to_string(cand.w3)};
    if (!check) j["W"] = matrix_json(W);
    j["hadamard"] = had;
    if (check) j["status"] = had ? "pass" : "fail";
    emit(j);
  }
  return !check || had ? 0 : 1;
}

int cmd_search(const ParamFlags& pf, int grid, double tol, const std::string& mode, bool serial, const Output& out) {
  const EigenmatrixTemplate t = pf.resolve();
  TorusOptions opt;
  opt.grid = grid;
  opt.residual_tol = tol;
  opt.parallel = !serial;
  opt.mode = mode == "full" ? TorusMode::full : mode == "branches" ? TorusMode::branches : TorusMode::automatic;
  TorusSolutionSet set;
  try {
    set = torus_zero_search(build_system(t), opt);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (out.text) {
    std::cout << describe(t) << '\n' << to_text(set);
  } else {
    Json j;
    j["template"] = to_json(t);
    j["options"] = {{"grid", grid}, {"newton_tol", opt.newton_tol}, {"residual_tol", tol}};
    j["result"] = to_json(set);
    emit(j);
  }
  return 0;
}

int cmd_scheme_verify(const SchemeFlags& sf, const ParamFlags& pf, const Output& out) {
  const AssociationScheme s = sf.resolve();
  const AxiomReport ax = verify_scheme_axioms(s);
  std::optional<EigenmatrixReport> ev;
  std::optional<EigenmatrixTemplate> t;
  if (pf.given()) {
    t = pf.resolve();
    ev = verify_eigenmatrix(s, *t);
  }
  const bool ok = ax.passed && (!ev || ev->passed);
  if (out.text) {
    std::cout << to_text(ax.checks);
    if (ev) {
      std::cout << describe(*t) << '\n' << to_text(ev->checks);
      std::cout << "multiplicities:";
      for (const auto& m : ev->multiplicities) std::cout << ' ' << to_string(m);
      std::cout << '\n';
    }
  } else {
    Json j;
    j["status"] = ok ? "pass" : "fail";
    j["n"] = s.n();
    j["classes"] = s.d();
    j["axioms"] = to_json(ax.checks);
    if (ax.passed) j["valencies"] = ax.valencies;
    if (ev) {
      j["template"] = to_json(*t);
      j["eigenmatrix"] = to_json(ev->checks);
      Json ms = Json::array();
      for (const auto& m : ev->multiplicities) ms.push_back(to_string(m));
      j["multiplicities"] = std::move(ms);
    }
    emit(j);
  }
  return ok ? 0 : 1;
}

int cmd_scheme_gen(const std::string& kind, const std::optional<std::string>& seed,
                   const std::optional<std::string>& out_path, const Output& out) {
  std::vector<CheckEntry> checks;
  std::optional<AssociationScheme> s;
  if (kind == "z4") s = z4_scheme();
  else if (kind == "quaternion") s = quaternion_scheme();
  else {
    const Matrix<int> h = seed ? load_hadamard_seed(*seed) : sylvester_hadamard(4);
    try {
      BushTypeResult r = bush_type_from_hadamard(h);
      checks = r.checks;
      s = std::move(r.scheme);
    } catch (const SchemeError& e) {
      std::cerr << "bush construction failed: " << e.what() << '\n';
      return 1;
    }
  }
  const AxiomReport ax = verify_scheme_axioms(*s);
  checks.insert(checks.end(), ax.checks.begin(), ax.checks.end());
  const bool ok = all_passed(checks);
  if (out_path) {
    save_scheme(*s, *out_path);
    if (out.text) std::cout << to_text(checks) << "wrote " << *out_path << '\n';
    else emit({{"status", ok ? "pass" : "fail"}, {"n", s->n()}, {"file", *out_path}, {"checks", to_json(checks)}});
  } else {
    write_scheme(std::cout, *s);
  }
  return ok ? 0 : 1;
}

Json certification(const AssociationScheme& s, long a, long c, bool& ok) {
  const AxiomReport ax = verify_scheme_axioms(s);
  const EigenmatrixReport ev = verify_eigenmatrix(s, params_from_ac(a, c).eigenmatrix());
  ok = ok && ax.passed && ev.passed;
  Json ms = Json::array();
  for (const auto& m : ev.multiplicities) ms.push_back(to_string(m));
  return {{"n", s.n()}, {"a", a}, {"c", c}, {"status", ax.passed && ev.passed ? "pass" : "fail"},
          {"multiplicities", std::move(ms)}};
}

int cmd_report(const Output& out) {
  bool ok = true;
  Json j;
  const IdentityReport ids = verify_identity_suite();
  ok = ok && ids.all_passed();
  j["identities"] = to_json(ids, !out.no_timings);

  Json fams = Json::array();
  for (long a = 1; a <= 4; ++a) {
    for (long c : {1L, 3L}) {
      const FamilyListing l = enumerate_families(a, c);
      const HadamardSystem sys = build_system(params_from_ac(a, c).eigenmatrix());
      bool all = true;
      for (const auto& cand : l.candidates) all = all && check_common_zero(sys, cand);
      ok = ok && all;
      fams.push_back({{"a", a}, {"c", c}, {"candidates", l.candidates.size()}, {"status", all ? "pass" : "fail"}});
    }
  }
  j["families"] = std::move(fams);

  Json non = Json::array();
  for (long k1 = 2; k1 <= 20; k1 += 2) {
    for (SongCase w : {SongCase::ii, SongCase::iii}) {
      for (long k2 = 1; k2 <= 3; ++k2) {
      const NonexistenceReport r = nonexistence_check(w, k1, k2);
      const bool pass = all_passed(r.checks) && !r.hadamard_possible;
      ok = ok && pass;
      non.push_back({{"case", to_string(w)}, {"k1", k1}, {"k2", k2}, {"m1", to_string(r.m1)},
                       {"status", pass ? "pass" : "fail"}});
      }
    }
  }
  j["nonexistence"] = std::move(non);

  Json schemes = Json::array();
  schemes.push_back(certification(z4_scheme(), 1, 1, ok));
  schemes.push_back(certification(quaternion_scheme(), 1, 3, ok));
  schemes.push_back(certification(bush_type_from_hadamard(sylvester_hadamard(4)).scheme, 2, 1, ok));
  j["schemes"] = std::move(schemes);
  j["status"] = ok ? "pass" : "fail";

  if (out.text) {
    std::cout << to_text(ids);
    for (const auto& f : j["families"]) {
      std::cout << "families (" << f["a"] << "," << f["c"] << "): " << f["candidates"] << " candidates, "
                << f["status"].get<std::string>() << '\n';
    }
    for (const auto& r : j["nonexistence"]) {
      std::cout << "case (" << r["case"].get<std::string>() << ") k1=" << r["k1"] << " k2=" << r["k2"]
                << " m1=" << r["m1"].get<std::string>() << ": " << r["status"].get<std::string>() << '\n';
    }
    for (const auto& s : j["schemes"]) {
      std::cout << "scheme n=" << s["n"] << ": " << s["status"].get<std::string>() << '\n';
    }
    std::cout << (ok ? "all checks pass" : "some checks FAILED") << '\n';
  } else {
    emit(j);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"Complex Hadamard matrices in nonsymmetric 3-class association schemes"};
  app.require_subcommand(1);

  Output o_id, o_fam, o_bm, o_ch, o_search, o_sv, o_gen, o_rep;

  std::vector<std::string> only;
  bool skip_alt = false;
  auto* identities = app.add_subcommand("identities", "replay the symbolic identity suite");
  identities->add_option("--only", only, "run only these checks");
  identities->add_flag("--skip-alt-order", skip_alt, "skip the second-order membership replay");
  o_id.add(identities, true);

  long fa = 0, fc = 0;
  int samples = 4;
  std::string verify = "none";
  auto* families = app.add_subcommand("families", "list the weight families at (a, c)");
  families->add_option("--a", fa, "a >= 1")->required();
  families->add_option("--c", fc, "c >= 1")->required();
  families->add_option("--samples", samples, "family (a) sample points");
  families->add_option("--verify", verify, "none or exact")->check(CLI::IsMember({"none", "exact"}));
  o_fam.add(families);

  SchemeFlags sf_bm, sf_ch, sf_sv;
  std::string w1, w2, w3;
  auto* build = app.add_subcommand("build-matrix", "W = A0 + w1 A1 + w2 A2 + w3 A3 with exact weights");
  auto* check = app.add_subcommand("check-hadamard", "exact test of W conj(W)^T = n I");
  for (auto* cmd : {build, check}) {
    cmd->add_option("--w1", w1, "exact weight, e.g. (3+4*i)/5 or 1/3+2/3*i*sqrt(2)")->required();
    cmd->add_option("--w2", w2, "exact weight")->required();
    cmd->add_option("--w3", w3, "exact weight")->required();
  }
  sf_bm.add(build);
  sf_ch.add(check);
  o_bm.add(build);
  o_ch.add(check);

  ParamFlags pf_search, pf_sv;
  int grid = 64;
  double tol = 1e-8;
  std::string mode = "auto";
  bool serial = false;
  auto* search = app.add_subcommand("search", "numerical zero search on the torus |w_j| = 1");
  pf_search.add(search);
  search->add_option("--grid", grid, "seeds per angle (>= 24)");
  search->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  search->add_option("--mode", mode, "auto, branches or full")->check(CLI::IsMember({"auto", "branches", "full"}));
  search->add_flag("--serial", serial, "use the serial seed loop");
  o_search.add(search);

  auto* sverify = app.add_subcommand("scheme-verify", "check scheme axioms and, given parameters, the eigenmatrix");
  sf_sv.add(sverify);
  pf_sv.add(sverify);
  o_sv.add(sverify);

  std::string kind;
  std::optional<std::string> seed, out_path;
  auto* gen = app.add_subcommand("scheme-gen", "write a built-in scheme in the scheme file format");
  gen->add_option("kind", kind, "z4, quaternion or bush")->required()->check(CLI::IsMember({"z4", "quaternion", "bush"}));
  gen->add_option("--seed", seed, "Hadamard seed file for bush");
  gen->add_option("--out", out_path, "output file (stdout when absent)");
  o_gen.add(gen);

  auto* report = app.add_subcommand("report", "every exact check in one document");
  o_rep.add(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*identities) return cmd_identities(only, skip_alt, o_id);
    if (*families) return cmd_families(fa, fc, samples, verify, o_fam);
    if (*build) return cmd_build_matrix(sf_bm, w1, w2, w3, o_bm, false);
    if (*check) return cmd_build_matrix(sf_ch, w1, w2, w3, o_ch, true);
    if (*search) return cmd_search(pf_search, grid, tol, mode, serial, o_search);
    if (*sverify) return cmd_scheme_verify(sf_sv, pf_sv, o_sv);
    if (*gen) return cmd_scheme_gen(kind, seed, out_path, o_gen);
    if (*report) return cmd_report(o_rep);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SchemeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
