#include "vcfam/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vcfam/constructions.hpp"
#include "vcfam/covering.hpp"
#include "vcfam/errors.hpp"
#include "vcfam/explore.hpp"
#include "vcfam/family_io.hpp"
#include "vcfam/oracle.hpp"
#include "vcfam/vc.hpp"
#include "vcfam/verifier.hpp"

namespace vcfam::cli {
namespace {

struct RunConfig {
  std::optional<int> k, s, n, m, l;
  std::string n_range;
  std::string family;
  std::string out;
  std::string witness_out;
  std::string format = "text";
  std::uint64_t cap = kDefaultOracleCap;
  int workers = 1;
  bool fallback_enum = false;
};

// Thrown for missing flags; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

SetFamily need_family(const RunConfig& c) {
  if (c.family.empty()) throw UsageError("missing required flag --family");
  return load_family(c.family);
}

std::string elements_line(const SubsetMask& m) {
  if (m.empty()) return "-";
  std::string s;
  for (int e : m.elements()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e);
  }
  return s;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

struct Output {
  std::string data;
  int code = kOk;
};

void add_int(CLI::App* app, const char* name, std::optional<int>& slot, const char* help) {
  app->add_option(name, slot, help);
}

void add_format(CLI::App* app, RunConfig& c, std::vector<std::string> allowed) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  app->add_option("--out", c.out, "Write data to this file instead of stdout");
}

Output emit_family(const RunConfig& c, const SetFamily& f) {
  return {c.format == "json" ? dump(family_to_json(f)) : write_family(f)};
}

Output do_construct(const std::string& kind, const RunConfig& c) {
  SetFamily f;
  if (kind == "full") f = full_family(need(c.n, "-n"), need(c.s, "-s"));
  else if (kind == "segments") f = initial_segment_family(need(c.n, "-n"));
  else if (kind == "hypercube") f = hypercube_family(need(c.k, "-k"), need(c.m, "-m"));
  else if (kind == "fk") f = build_Fk(need(c.m, "-m"), need(c.k, "-k"));
  else if (kind == "witness") f = covering_witness_family(need(c.k, "-k"), need(c.s, "-s"), need(c.n, "-n"));
  else if (kind == "cone") f = cone(need_family(c));
  else if (kind == "product") f = product(need_family(c), need(c.l, "-l"));
  return emit_family(c, f);
}

Output do_check(const std::string& kind, const RunConfig& c) {
  const SetFamily f = need_family(c);
  if (kind == "covering") {
    const int k = need(c.k, "-k");
    const auto r = is_k_covering(f, k);
    if (c.format == "json") return {dump(to_json(r)), r.holds ? kOk : kFail};
    std::string s = std::string(verdict(r.holds)) + "\n";
    if (r.uncovered) s += "uncovered " + elements_line(*r.uncovered) + "\n";
    return {s, r.holds ? kOk : kFail};
  }
  const auto r = unique_face(f);
  if (c.format == "json") return {dump(to_json(r)), r.holds ? kOk : kFail};
  std::string s = std::string(verdict(r.holds)) + "\n";
  for (const auto& [member, face] : r.faces)
    s += "face " + elements_line(member) + " : " + elements_line(face) + "\n";
  if (r.violator) s += "violator " + elements_line(*r.violator) + "\n";
  return {s, r.holds ? kOk : kFail};
}

Output do_vcdim(const RunConfig& c) {
  const auto r = vc_dimension(need_family(c), c.workers);
  if (c.format == "json") return {dump(to_json(r))};
  return {std::to_string(r.dimension) + "\nwitness " + elements_line(r.witness) +
          "\nrefuted_size " + std::to_string(r.refuted_size) + "\n"};
}

void maybe_save_witness(const RunConfig& c, const SetFamily& f) {
  if (!c.witness_out.empty()) save_family(c.witness_out, f);
}

Output do_oracle(const RunConfig& c, std::ostream& err) {
  const auto p = Parameters::make(need(c.k, "-k"), need(c.s, "-s"), need(c.n, "-n"));
  OracleOptions opts;
  opts.cap = c.cap;
  opts.workers = c.workers;
  if (c.cap > kDefaultOracleCap)
    err << "warning: feasibility cap raised to " << c.cap << " (default " << kDefaultOracleCap
        << "); the search may take very long\n";
  const auto start = std::chrono::steady_clock::now();
  const auto r = c.fallback_enum ? oracle_D_enumerate(p, opts) : oracle_D(p, opts);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  err << "nodes explored: " << r.nodes_explored << "\nwall time: " << took.count() << " s\n";
  maybe_save_witness(c, r.witness);

  if (c.format == "json") {
    auto j = to_json(r);
    j.erase("nodes_explored");
    return {dump(j)};
  }
  std::ostringstream os;
  os << r.value << "\nmethod " << r.method << "\n" << write_family(r.witness);
  return {os.str()};
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream os;
  os << to_string(cert.kind) << ' ' << verdict(cert.holds) << ' ' << to_string(cert.inequality_lhs)
     << (cert.kind == CertificateKind::kLowerVcGeK ? " < " : " <= ") << to_string(cert.inequality_rhs)
     << '\n';
  if (cert.sufficient_holds)
    os << "sufficient " << (*cert.sufficient_holds ? "holds" : "fails") << ' '
       << to_string(*cert.sufficient_lhs) << " < " << to_string(*cert.sufficient_rhs) << '\n';
  return os.str();
}

Output do_verify(const std::string& kind, const RunConfig& c) {
  if (kind == "prop-const") {
    const auto r = verify_prop_const(need(c.m, "-m"), need(c.k, "-k"));
    const int code = r.all_pass() ? kOk : kFail;
    if (c.format == "json") return {dump(to_json(r)), code};
    std::ostringstream os;
    os << "F_" << r.k << " m=" << r.m << " n=" << r.n << '\n';
    for (std::size_t i = 0; i < r.items.size(); ++i)
      os << "item " << i + 1 << ' ' << r.items[i].name << ' ' << verdict(r.items[i].pass)
         << (r.items[i].vacuous ? " (vacuous)" : "") << ": " << r.items[i].detail << '\n';
    os << verdict(r.all_pass()) << '\n';
    return {os.str(), code};
  }
  if (kind == "certificate") {
    const int k = need(c.k, "-k"), s = need(c.s, "-s"), n = need(c.n, "-n");
    const auto lower = lower_bound_certificate(k, s, n);
    auto upper = upper_bound_certificate(k, s, n, c.workers);
    if (!c.witness_out.empty()) {
      maybe_save_witness(c, *upper.witness);
      upper.witness_file = c.witness_out;
    }
    const bool pass = lower.holds && upper.holds;
    if (c.format == "json")
      return {dump({{"lower", to_json(lower)}, {"upper", to_json(upper)}, {"pass", pass}}),
              pass ? kOk : kFail};
    return {certificate_text(lower) + certificate_text(upper) + verdict(pass) + "\n", pass ? kOk : kFail};
  }
  const auto r = verify_main_theorem(need(c.k, "-k"), need(c.s, "-s"), c.workers);
  if (r.upper.witness) maybe_save_witness(c, *r.upper.witness);
  const int code = r.holds ? kOk : kFail;
  if (c.format == "json") return {dump(to_json(r)), code};
  std::ostringstream os;
  os << "k=" << r.k << " s=" << r.s << " n=" << r.n << '\n'
     << certificate_text(r.lower) << certificate_text(r.upper) << "witness_vc " << r.witness_vc << '\n';
  if (r.holds) os << "D(" << r.k << ',' << r.s << ',' << r.n << ") = " << r.k << '\n';
  os << verdict(r.holds) << '\n';
  return {os.str(), code};
}

std::pair<int, int> parse_range(const RunConfig& c) {
  if (!c.n_range.empty()) {
    const auto dots = c.n_range.find("..");
    try {
      if (dots == std::string::npos) {
        const int v = std::stoi(c.n_range);
        return {v, v};
      }
      return {std::stoi(c.n_range.substr(0, dots)), std::stoi(c.n_range.substr(dots + 2))};
    } catch (const std::exception&) {
      throw UsageError("-n expects N or LO..HI, got '" + c.n_range + "'");
    }
  }
  throw UsageError("missing required flag -n");
}

Output do_explore(const RunConfig& c) {
  const int k = need(c.k, "-k"), s = need(c.s, "-s");
  const auto [lo, hi] = parse_range(c);
  ExploreOptions opts;
  opts.oracle.cap = c.cap;
  opts.workers = c.workers;
  const auto rows = explore(k, s, lo, hi, opts);
  const auto stab = stab_upper(rows);
  const auto mono = monotonicity_scan(rows);
  const auto surj = surjectivity_scan(rows);
  if (c.format == "csv") return {rows_to_csv(rows)};
  if (c.format == "json") {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r));
    j["stab_upper_hint"] = stab ? nlohmann::json(*stab) : nlohmann::json(nullptr);
    j["nondecreasing"] = mono.nondecreasing;
    nlohmann::json drops = nlohmann::json::array();
    for (auto [a, b] : mono.decreasing) drops.push_back({a, b});
    j["decreasing_pairs"] = drops;
    j["attained"] = surj.attained;
    j["missing_below_k"] = surj.missing_below_k;
    return {dump(j)};
  }
  std::ostringstream os;
  os << rows_to_csv(rows);
  os << "# stab_upper_hint " << (stab ? std::to_string(*stab) : "none") << '\n';
  os << "# nondecreasing " << (mono.nondecreasing ? "yes" : "no");
  for (auto [a, b] : mono.decreasing) os << " drop@" << a << "->" << b;
  os << "\n# attained";
  for (int v : surj.attained) os << ' ' << v;
  os << "\n# missing_below_k";
  for (int v : surj.missing_below_k) os << ' ' << v;
  os << '\n';
  return {os.str()};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact VC-dimension engine for k-covering families of s-subsets of [n]", "vcfam"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a family and print it")->require_subcommand(1);
  const std::pair<const char*, const char*> constructions[] = {
      {"full", "All s-subsets of [n]"},
      {"segments", "Initial segments {1..i} of [n]"},
      {"hypercube", "Hypercube family on [k+1]^m"},
      {"fk", "The family F_k on m base points"},
      {"witness", "k-covering s-uniform family on [n] with VC <= k"},
      {"cone", "Cone of --family over a new point"},
      {"product", "Product of --family with [l]"}};
  for (auto [kind, desc] : constructions) {
    auto* sub = construct->add_subcommand(kind, desc);
    add_int(sub, "-k", c.k, "Covering arity / width");
    add_int(sub, "-s", c.s, "Member size");
    add_int(sub, "-n", c.n, "Ground size");
    add_int(sub, "-m", c.m, "Base size or coordinate count");
    add_int(sub, "-l", c.l, "Product factor");
    sub->add_option("--family", c.family, "Input family file");
    add_format(sub, c, {"text", "json"});
  }

  auto* check = app.add_subcommand("check", "Check a property of a family file")->require_subcommand(1);
  const std::pair<const char*, const char*> checks[] = {
      {"covering", "Every k-subset lies in some member"}, {"ufp", "Every member has a unique face"}};
  for (auto [kind, desc] : checks) {
    auto* sub = check->add_subcommand(kind, desc);
    sub->add_option("--family", c.family, "Input family file")->required();
    add_int(sub, "-k", c.k, "Covering arity");
    add_format(sub, c, {"text", "json"});
  }

  auto* vcdim = app.add_subcommand("vcdim", "VC-dimension of a family file");
  vcdim->add_option("--family", c.family, "Input family file")->required();
  vcdim->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(vcdim, c, {"text", "json"});

  auto* oracle = app.add_subcommand("oracle", "Exact D(k,s,n) by exhaustive search");
  add_int(oracle, "-k", c.k, "Covering arity");
  add_int(oracle, "-s", c.s, "Member size");
  add_int(oracle, "-n", c.n, "Ground size");
  oracle->add_option("--cap", c.cap, "Max C(n,s) universe size")->check(CLI::PositiveNumber);
  oracle->add_flag("--fallback-enum", c.fallback_enum, "Use plain power-set enumeration");
  oracle->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_option("--witness-out", c.witness_out, "Also write the witness family here");
  add_format(oracle, c, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Certify bounds and structural claims")->require_subcommand(1);
  const std::pair<const char*, const char*> verifications[] = {
      {"prop-const", "Structural checks of F_k for given m and k"},
      {"certificate", "Lower and upper certificates for D(k,s,n) = k"},
      {"main", "Both certificates at the threshold n for (k,s)"}};
  for (auto [kind, desc] : verifications) {
    auto* sub = verify->add_subcommand(kind, desc);
    add_int(sub, "-k", c.k, "Covering arity");
    add_int(sub, "-s", c.s, "Member size");
    add_int(sub, "-n", c.n, "Ground size");
    add_int(sub, "-m", c.m, "Base size of F_k");
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--witness-out", c.witness_out, "Write the upper-bound witness family here");
    add_format(sub, c, {"text", "json"});
  }

  auto* explore_cmd = app.add_subcommand("explore", "Bracket D(k,s,n) over a range of n");
  add_int(explore_cmd, "-k", c.k, "Covering arity");
  add_int(explore_cmd, "-s", c.s, "Member size");
  explore_cmd->add_option("-n", c.n_range, "N or LO..HI");
  explore_cmd->add_option("--cap", c.cap, "Max C(n,s) for oracle rows")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(explore_cmd, c, {"text", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Output o;
    auto leaf = [](CLI::App* parent) { return parent->get_subcommands().front()->get_name(); };
    if (*construct) o = do_construct(leaf(construct), c);
    else if (*check) o = do_check(leaf(check), c);
    else if (*vcdim) o = do_vcdim(c);
    else if (*oracle) o = do_oracle(c, err);
    else if (*verify) o = do_verify(leaf(verify), c);
    else o = do_explore(c);

    if (c.out.empty()) {
      out << o.data;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw ParseError("cannot write " + c.out);
      f << o.data;
    }
    return o.code;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace vcfam::cli
