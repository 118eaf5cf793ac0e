#include "actionlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "actionlab/cochain.hpp"
#include "actionlab/error.hpp"
#include "actionlab/extensions.hpp"
#include "actionlab/fixed_point.hpp"
#include "actionlab/group_spec.hpp"
#include "actionlab/homology.hpp"
#include "actionlab/jordan.hpp"
#include "actionlab/spectral.hpp"
#include "actionlab/structure.hpp"
#include "actionlab/subgroups.hpp"
#include "actionlab/zoo.hpp"

namespace actionlab {

namespace {

using Json = nlohmann::ordered_json;

struct GroupInput {
  std::vector<std::string> family;
  std::string spec_path;
};

void add_group_options(CLI::App* sub, GroupInput& in) {
  sub->add_option("--family", in.family, "family name followed by its integer parameters")->expected(1, -1);
  sub->add_option("--spec", in.spec_path, "group-spec JSON file");
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidSpec, "cannot open " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidSpec, path + ": " + e.what());
  }
}

Group load_group(const GroupInput& in, Json& report) {
  if (in.family.empty() == in.spec_path.empty()) fail(ErrorKind::InvalidSpec, "give exactly one of --family and --spec");
  if (!in.spec_path.empty()) {
    nlohmann::json doc = read_json_file(in.spec_path);
    report["input"]["spec"] = Json::parse(doc.dump());
    return build_group(doc);
  }
  std::vector<long long> params;
  for (std::size_t i = 1; i < in.family.size(); ++i) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoll(in.family[i], &used));
      if (used != in.family[i].size()) throw std::invalid_argument(in.family[i]);
    } catch (const std::logic_error&) {
      fail(ErrorKind::InvalidSpec, "family parameter '" + in.family[i] + "' is not an integer");
    }
  }
  return make_family(in.family[0], params);
}

Json subgroup_json(const Subgroup& h, bool members = false) {
  Json j;
  j["order"] = h.order();
  j["index"] = h.index();
  j["generators"] = greedy_generators(h);
  if (members) j["members"] = h.members();
  return j;
}

Json abelian_json(const FgAbelian& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  j["torsion"] = a.torsion;
  j["text"] = a.to_string();
  return j;
}

Json alpha_json(const AlphaResult& a) {
  Json j;
  j["index"] = a.index;
  j["witness"] = subgroup_json(a.witness);
  return j;
}

Json beta2_json(const Beta2Result& b) {
  Json j;
  j["index"] = b.index;
  j["witness"] = subgroup_json(b.witness);
  j["commutator_order"] = b.commutator.order();
  j["commutator_cyclic"] = b.commutator_cyclic;
  return j;
}

Json nilpotency_json(std::optional<unsigned> c) { return c ? Json(*c) : Json(nullptr); }

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

// Each verb fills `report` and returns its exit code.

int cmd_analyze(const GroupInput& in, Json& report) {
  Group g = load_group(in, report);
  auto subs = enumerate_subgroups(g);
  auto sr = structure_report(g);
  report["order"] = g.order();
  report["abelian"] = sr.abelian;
  if (sr.abelian) report["invariant_factors"] = sr.invariant_factors;
  report["center_order"] = sr.center.order();
  report["derived_order"] = sr.derived.order();
  report["nilpotency_class"] = nilpotency_json(sr.nilpotency_class);
  report["subgroup_count"] = subs.size();
  report["alpha"] = alpha_json(alpha(g, &subs));
  report["beta2"] = beta2_json(beta2(g, &subs));
  auto t = in_T_class(g);
  report["t_class"] = {{"member", t.member}, {"p", t.p}, {"q", t.q}};
  return kOk;
}

int cmd_alpha(const GroupInput& in, Json& report) {
  Group g = load_group(in, report);
  auto a = alpha(g);
  report["alpha"] = a.index;
  report["order"] = g.order();
  report["witness"] = subgroup_json(a.witness);
  return kOk;
}

int cmd_subgroups(const GroupInput& in, std::size_t max_order, bool members, Json& report) {
  Group g = load_group(in, report);
  auto subs = enumerate_subgroups(g, max_order);
  report["order"] = g.order();
  report["count"] = subs.size();
  Json list = Json::array();
  for (const auto& h : subs) {
    Json j = subgroup_json(h, members);
    j["abelian"] = is_abelian(h);
    j["normal"] = is_normal(h);
    list.push_back(j);
  }
  report["subgroups"] = list;
  return kOk;
}

struct ExtensionOptions {
  std::vector<Elem> z_gens;
  unsigned lifts = 200;
  std::uint64_t seed = 0x0e6a5eedULL;
  bool mnas = false;
};

int cmd_extension(const GroupInput& in, const ExtensionOptions& opt, Json& report) {
  Group g = load_group(in, report);
  for (Elem e : opt.z_gens)
    if (e >= g.order()) fail(ErrorKind::ParamOutOfRange, "element " + std::to_string(e) + " out of range");
  Subgroup z = opt.z_gens.empty() ? center(g) : generate(g, opt.z_gens);
  auto ext = make_central_extension(g, z);
  auto w = omega_form(ext, opt.lifts, opt.seed);
  auto gb = generation_bound_check(ext);
  report["order"] = g.order();
  report["z_order"] = z.order();
  report["quotient_order"] = ext.quotient_group().order();
  report["omega"] = {{"image_order", w.image.order()},
                     {"image_rank", w.image_rank},
                     {"bilinear_checked", w.bilinear_checked},
                     {"lifts_checked", w.lifts_checked}};
  Json primes = Json::array();
  for (const auto& pr : gb.primes)
    primes.push_back({{"p", pr.p},
                      {"s_p", pr.s_p},
                      {"isotropic_dim", pr.isotropic_dim},
                      {"omega_rank", pr.omega_rank},
                      {"preimage_abelian", pr.preimage_abelian},
                      {"preimage_generators", pr.preimage_generators}});
  report["generation_bound"] = {{"s", gb.s}, {"r", gb.r}, {"bound", gb.bound}, {"holds", gb.holds}, {"primes", primes}};
  bool holds = gb.holds;
  if (opt.mnas) {
    auto m = mnas_suite(g);
    Json entries = Json::array();
    for (const auto& e : m.mnas)
      entries.push_back({{"order", e.a.order()},
                         {"r", e.r},
                         {"injective", e.injective},
                         {"abelian_checked", e.abelian_checked},
                         {"inequality_holds", e.inequality_holds}});
    report["mnas"] = {{"p", m.p}, {"count", m.mnas.size()}, {"holds", m.holds}, {"entries", entries}};
    holds = holds && m.holds;
  }
  report["holds"] = holds;
  return holds ? kOk : kCounterexample;
}

struct CohomologyOptions {
  u64 p = 2;
  unsigned a = 1, b = 1, d = 1, k = 0;
  bool oracle = false;
};

int cmd_cohomology(const CohomologyOptions& o, Json& report) {
  auto closed = elementary_cohomology_closed(o.k, o.d, o.p, o.a, o.b);
  const u64 pa = checked_pow(o.p, o.a), pb = checked_pow(o.p, o.b);
  report["group"] = "(Z/" + std::to_string(pa) + ")^" + std::to_string(o.d);
  report["coefficients"] = "Z/" + std::to_string(pb);
  report["degree"] = o.k;
  report["result"] = abelian_json(closed);
  report["rank"] = closed.generators();
  if (!o.oracle) return kOk;
  Group g = zoo::abelian(std::vector<u64>(o.d, pa));
  auto bar = bar_cohomology_oracle(g, o.k, pb);
  const bool agrees = bar == closed;
  report["oracle"] = {{"method", "bar"}, {"result", abelian_json(bar)}, {"agrees", agrees}};
  return agrees ? kOk : kCounterexample;
}

struct SpectralOptions {
  u64 p = 2;
  unsigned r = 1, t = 0, d = 2, imax = 6;
  bool d2_killed = false;
  std::string torsion = "cyclic", h1 = "tabulated";
  std::optional<unsigned> cyclic_a;
};

int cmd_spectral(const SpectralOptions& o, Json& report) {
  auto x = x_profile(o.p, o.r, o.t, o.torsion == "cyclic" ? TorsionModel::Cyclic : TorsionModel::Elementary,
                     o.h1 == "tabulated" ? H1Model::Tabulated : H1Model::UniversalCoefficients);
  auto led = e2_matrix(x, o.d, o.imax);
  Json coeffs = Json::array();
  for (const auto& h : x.graded) coeffs.push_back(h.to_string());
  report["coefficients"] = coeffs;
  Json rows = Json::array(), cols = Json::array(), matrix = Json::array();
  for (unsigned j = 0; j < 6; ++j) {
    rows.push_back("j=" + std::to_string(j));
    Json row = Json::array();
    for (unsigned i = 0; i <= o.imax; ++i) row.push_back(led.at(i, j));
    matrix.push_back(row);
  }
  for (unsigned i = 0; i <= o.imax; ++i) cols.push_back("i=" + std::to_string(i));
  report["row_labels"] = rows;
  report["column_labels"] = cols;
  report["log_p_sizes"] = matrix;
  if (o.d == 2 || o.d == 3) {
    auto ob = free_action_obstruction(x, o.d, o.d2_killed);
    report["obstruction"] = {{"e40", ob.e40},   {"e21", ob.e21},   {"e12", ob.e12},
                             {"e03", ob.e03},   {"d2_killed", ob.d2_killed},
                             {"bound", ob.bound}, {"verdict", ob.obstructed ? "obstructed" : "inconclusive"}};
  }
  if (o.cyclic_a) {
    auto c = cyclic_e2_profile(o.p, *o.cyclic_a, o.t);
    Json corner = Json::array();
    for (unsigned tau = 0; tau < 6; ++tau) {
      Json row = Json::array();
      for (unsigned s = 0; s < 6; ++s) row.push_back(c.entries[s][tau].to_string());
      corner.push_back(row);
    }
    report["cyclic_corner"] = {{"a", c.a},
                               {"entries", corner},
                               {"h1_tp", c.h1_tp.to_string()},
                               {"bound_holds", c.bound_holds},
                               {"index_bound", c.index_bound}};
    if (!c.bound_holds) return kCounterexample;
  }
  return kOk;
}

std::vector<FixedSurfaceDatum> read_surfaces(const std::string& path, Json& report) {
  nlohmann::json doc = read_json_file(path);
  report["input"]["data"] = Json::parse(doc.dump());
  if (!doc.is_array()) fail(ErrorKind::InvalidSpec, "surface data must be an array");
  std::vector<FixedSurfaceDatum> data;
  for (const auto& e : doc) {
    if (!e.is_object() || !e.contains("rotation") || !e.contains("selfint") || !e["selfint"].is_number_integer())
      fail(ErrorKind::InvalidSpec, "each surface needs \"rotation\" and an integer \"selfint\"");
    const auto& rot = e["rotation"];
    Rational q = rot.is_string() ? Rational::parse(rot.get<std::string>())
                 : rot.is_number_integer() ? Rational(rot.get<std::int64_t>())
                                           : (fail(ErrorKind::InvalidSpec, "rotation must be \"a/m\""), Rational());
    data.push_back({q, e["selfint"].get<std::int64_t>()});
  }
  return data;
}

struct GsignatureOptions {
  std::string data;
  std::optional<std::int64_t> sigma;
  double tol = 1e-9;
  std::optional<unsigned> sign_balance;
};

int cmd_gsignature(const GsignatureOptions& o, Json& report) {
  auto data = read_surfaces(o.data, report);
  auto s = g_signature_sum(data);
  report["surfaces"] = data.size();
  report["value"] = static_cast<double>(s.value);
  report["error_bound"] = static_cast<double>(s.error_bound);
  int code = kOk;
  if (o.sigma) {
    const bool ok = signature_consistency(*o.sigma, data, o.tol);
    report["consistent"] = ok;
    if (!ok) code = kCounterexample;
  }
  if (o.sign_balance) {
    auto r = lemma104_check(data, *o.sign_balance, o.tol);
    report["sign_balance"] = {{"lambda", static_cast<double>(r.lambda)},
                              {"mu_max", r.mu_max},
                              {"mu_min", r.mu_min},
                              {"margin_max", static_cast<double>(r.margin_max)},
                              {"margin_min", static_cast<double>(r.margin_min)},
                              {"holds", r.holds}};
    if (!r.holds) code = kCounterexample;
  }
  return code;
}

struct RootsOptions {
  unsigned n = 1;
  std::optional<std::uint64_t> k, verify;
  std::vector<std::int64_t> exps;
};

int cmd_roots(const RootsOptions& o, Json& report) {
  auto c = roots_constants(o.n);
  report["delta"] = static_cast<double>(c.delta);
  report["k0"] = c.k0;
  int code = kOk;
  if (o.k) {
    std::vector<std::int64_t> exps = o.exps.empty() ? std::vector<std::int64_t>(o.n, 1) : o.exps;
    if (exps.size() != o.n) fail(ErrorKind::InvalidSpec, "--exps needs exactly n entries");
    Json jr = {{"k", *o.k}, {"exponents", exps}};
    try {
      const auto a = find_good_exponent(*o.k, exps);
      jr["a"] = a;
      Json residues = Json::array();
      for (auto cj : exps) {
        const auto kk = static_cast<std::int64_t>(*o.k);
        residues.push_back(Rational(((static_cast<std::int64_t>(a) * cj) % kk + kk) % kk, kk).to_string());
      }
      jr["a_times_c_over_k"] = residues;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoExponentFound) throw;
      jr["a"] = nullptr;
      // below k0 this is allowed; at or above k0 it contradicts the lemma
      if (*o.k >= c.k0) code = kCounterexample;
    }
    report["search"] = jr;
  }
  if (o.verify) {
    auto v = exhaustive_roots_verify(o.n, *o.verify);
    report["verify"] = {{"kmax", v.kmax},
                        {"tuples_checked", v.tuples_checked},
                        {"holds", v.holds},
                        {"failing_k", v.failing_k ? Json(*v.failing_k) : Json(nullptr)},
                        {"failing_exponents", v.failing_exponents}};
    if (!v.holds) code = kCounterexample;
  }
  return code;
}

int cmd_corpus(std::size_t max_order, Json& report) {
  Json list = Json::array();
  for (const auto& entry : zoo::standard_corpus(max_order)) {
    Json j;
    j["name"] = entry.name;
    j["order"] = entry.group.order();
    try {
      auto subs = enumerate_subgroups(entry.group);
      j["abelian"] = entry.group.is_abelian();
      j["nilpotency_class"] = nilpotency_json(nilpotency_class(entry.group));
      j["subgroup_count"] = subs.size();
      j["alpha"] = alpha(entry.group, &subs).index;
      auto b = beta2(entry.group, &subs);
      j["beta2"] = b.index;
      j["commutator_cyclic"] = b.commutator_cyclic;
    } catch (const Error& e) {
      j["error"] = e.what();
    }
    list.push_back(j);
  }
  report["count"] = list.size();
  report["groups"] = list;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite group and cohomology toolkit", "actionlab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool text = false;
  app.add_flag("--text", text, "plain-text report instead of JSON");
  app.set_version_flag("--version", kVersion);

  GroupInput g_analyze, g_alpha, g_subs, g_ext;
  auto* analyze = app.add_subcommand("analyze", "structure, alpha, beta2 and T-class of a group");
  add_group_options(analyze, g_analyze);
  auto* alpha_cmd = app.add_subcommand("alpha", "least index of an abelian subgroup");
  add_group_options(alpha_cmd, g_alpha);

  auto* subs = app.add_subcommand("subgroups", "enumerate all subgroups");
  add_group_options(subs, g_subs);
  std::size_t max_order = 0;
  bool members = false;
  subs->add_option("--max-order", max_order, "enumeration cap on |G| (0 = default)");
  subs->add_flag("--members", members, "list the elements of each subgroup");

  auto* extension = app.add_subcommand("extension", "skew form and generation bound of a central extension");
  add_group_options(extension, g_ext);
  ExtensionOptions ext_opt;
  extension->add_option("--z", ext_opt.z_gens, "generators of the central subgroup (default: the center)")
      ->delimiter(',');
  extension->add_option("--lifts", ext_opt.lifts, "random lift checks")->capture_default_str();
  extension->add_option("--seed", ext_opt.seed, "seed for the random lifts");
  extension->add_flag("--mnas", ext_opt.mnas, "also run the MNAS suite (p-groups)");

  auto* cohomology = app.add_subcommand("cohomology", "H^k((Z/p^a)^d; Z/p^b)");
  CohomologyOptions coh;
  cohomology->add_option("--p", coh.p)->required();
  cohomology->add_option("--a", coh.a)->required();
  cohomology->add_option("--b", coh.b)->required();
  cohomology->add_option("--d", coh.d)->required();
  cohomology->add_option("--k", coh.k)->required();
  cohomology->add_flag("--oracle", coh.oracle, "also run the bar-complex computation");

  auto* spectral = app.add_subcommand("spectral", "E_2 size ledger and free-action obstruction");
  SpectralOptions sp;
  unsigned cyclic_a = 0;
  spectral->add_option("--p", sp.p)->required();
  spectral->add_option("--r", sp.r)->required();
  spectral->add_option("--t", sp.t)->required();
  spectral->add_option("--d", sp.d)->required();
  spectral->add_option("--imax", sp.imax)->capture_default_str();
  spectral->add_flag("--d2-killed", sp.d2_killed);
  spectral->add_option("--torsion", sp.torsion)->check(CLI::IsMember({"cyclic", "elementary"}))->capture_default_str();
  spectral->add_option("--h1", sp.h1)->check(CLI::IsMember({"tabulated", "uct"}))->capture_default_str();
  auto* cyc = spectral->add_option("--cyclic-a", cyclic_a, "also report the integral corner for A = Z/p^a");

  auto* gsig = app.add_subcommand("gsignature", "fixed-surface signature sum");
  GsignatureOptions gs;
  std::int64_t sigma = 0;
  unsigned n_bound = 0;
  gsig->add_option("--data", gs.data, "JSON array of {\"rotation\":\"a/m\",\"selfint\":s}")->required();
  auto* sig = gsig->add_option("--sigma", sigma, "signature to compare against");
  gsig->add_option("--tol", gs.tol)->capture_default_str();
  auto* l104 = gsig->add_option("--sign-balance", n_bound, "run the sign-balance check with this surface bound");

  auto* roots = app.add_subcommand("roots", "roots-of-unity exponent search");
  RootsOptions ro;
  std::uint64_t k = 0, verify = 0;
  roots->add_option("--n", ro.n)->required();
  auto* kopt = roots->add_option("--k", k);
  roots->add_option("--exps", ro.exps)->delimiter(',');
  auto* vopt = roots->add_option("--verify", verify, "exhaustive check up to this k (<= 120)");

  auto* corpus = app.add_subcommand("corpus", "invariants of the standard corpus");
  std::size_t corpus_max = 128;
  corpus->add_option("--max-order", corpus_max)->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json report;
  report["command"] = sub->get_name();
  report["version"] = kVersion;
  report["input"] = {{"args", args}};
  int code = kOk;
  try {
    if (sub == analyze) code = cmd_analyze(g_analyze, report);
    else if (sub == alpha_cmd) code = cmd_alpha(g_alpha, report);
    else if (sub == subs) code = cmd_subgroups(g_subs, max_order, members, report);
    else if (sub == extension) code = cmd_extension(g_ext, ext_opt, report);
    else if (sub == cohomology) code = cmd_cohomology(coh, report);
    else if (sub == spectral) {
      if (cyc->count()) sp.cyclic_a = cyclic_a;
      code = cmd_spectral(sp, report);
    } else if (sub == gsig) {
      if (sig->count()) gs.sigma = sigma;
      if (l104->count()) gs.sign_balance = n_bound;
      code = cmd_gsignature(gs, report);
    } else if (sub == roots) {
      if (kopt->count()) ro.k = k;
      if (vopt->count()) ro.verify = verify;
      code = cmd_roots(ro, report);
    } else if (sub == corpus) code = cmd_corpus(corpus_max, report);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_cap_error(e.kind()) ? kCapExceeded : kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  report["exit_code"] = code;
  if (text)
    flatten(report, "", out);
  else
    out << report.dump(2) << "\n";
  return code;
}

}  // namespace actionlab
