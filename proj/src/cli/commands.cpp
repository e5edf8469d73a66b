#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "braidforge/cli.hpp"
#include "braidforge/error.hpp"
#include "braidforge/serialize.hpp"

namespace braidforge::cli {

namespace {

using io::Json;

struct Config {
  double tolerance = 1e-6;
  Limits limits;
  std::string output = "json";
  std::string out_path;
};

struct Outcome {
  Json doc;
  bool ok = true;
  bool is_report = true;
};

Outcome report(std::string subject, const std::vector<Check>& checks, Json values) {
  Outcome o;
  o.doc = Json{{"subject", std::move(subject)}, {"checks", io::checks_to_json(checks)}, {"values", std::move(values)}};
  o.ok = all_pass(checks);
  return o;
}

Outcome document(Json doc) {
  Outcome o;
  o.doc = std::move(doc);
  o.is_report = false;
  return o;
}

Json cyclo_matrix(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(io::cyclo_to_json(x));
    out.push_back(r);
  }
  return out;
}

Json labels_of(const FusionRing& r, const std::vector<size_t>& idx) {
  Json out = Json::array();
  for (size_t i : idx) out.push_back(r.labels()[i]);
  return out;
}

Check exact(std::string name, std::string anchor, const CycloNum& a, const CycloNum& b) {
  return make_check(std::move(name), std::move(anchor), a == b, a.str() + " vs " + b.str());
}

// ---------------------------------------------------------------- qform

Outcome qform_analyze(const std::string& path, const Config& cfg) {
  PreMetricGroup m = io::qform_from_json(io::parse_file(path));
  std::vector<Check> checks{make_check("quadratic form axioms", "quadratic-form", true, to_string(m.group()))};
  const CycloNum tp = tau(m, 1), tm = tau(m, -1);
  const DegeneracyClass deg = degeneracy(m);
  if (deg.tag == Degeneracy::nondegenerate)
    checks.push_back(exact("tau+ tau- = |G|", "gauss-modulus", tp * tm, CycloNum(m.order())));
  auto iso = isotropic_subgroups(m, cfg.limits);
  int64_t maximal = 0, lagrangian = 0;
  for (const auto& s : iso) {
    maximal += s.maximal;
    lagrangian += s.lagrangian;
    PreMetricGroup sub = quotient_form(m, s.subgroup);
    for (int sign : {1, -1})
      checks.push_back(exact(std::string("tau") + (sign > 0 ? "+" : "-") + "(M) = tau(H^perp/H)|H| [H=" +
                                 io::subgroup_to_json(s.subgroup).dump() + "]",
                             "subquotient", tau(m, sign), tau(sub, sign) * CycloNum(s.subgroup.size())));
  }
  Json values{{"group", io::group_to_json(m.group())},
              {"order", m.order()},
              {"degeneracy", to_string(deg.tag)},
              {"radical", io::subgroup_to_json(deg.radical)},
              {"anisotropic", is_anisotropic(m)},
              {"isotropic_subgroups", iso.size()},
              {"maximal_isotropic_subgroups", maximal},
              {"lagrangian_subgroups", lagrangian},
              {"tau_plus", io::cyclo_to_json(tp)},
              {"tau_minus", io::cyclo_to_json(tm)}};
  return report("qform analyze " + path, checks, values);
}

Outcome qform_classify(const std::string& path, const Config&) {
  PreMetricGroup m = io::qform_from_json(io::parse_file(path));
  PreMetricGroup red = anisotropic_reduction(m);
  auto labels = classify_anisotropic(red);
  Json names = Json::array();
  for (const auto& l : labels) names.push_back(l.str());
  const bool rebuilt = isomorphic(build_form(labels), red).has_value();
  std::vector<Check> checks{make_check("catalog form rebuilds the reduction", "classification", rebuilt, names.dump())};
  return report("qform classify " + path, checks,
                Json{{"labels", names}, {"anisotropic_reduction", io::qform_to_json(red)}});
}

Outcome qform_gauss(const std::string& path, const Config&) {
  PreMetricGroup m = io::qform_from_json(io::parse_file(path));
  GaussReport g = gauss_sum(m);
  std::vector<Check> checks{exact("tau- = conj(tau+)", "gauss-conjugate", g.tau_minus, g.tau_plus.conj())};
  if (is_metric(m)) checks.push_back(make_check("tau+ tau- = |G|", "gauss-modulus", g.norm_check, std::to_string(m.order())));
  Json values{{"tau_plus", io::cyclo_to_json(g.tau_plus)}, {"tau_minus", io::cyclo_to_json(g.tau_minus)}};
  if (g.positivity) values["tau_plus_rational"] = rational_str(*g.positivity);
  return report("qform gauss " + path, checks, values);
}

Outcome qform_witt(const std::string& path, const Config&) {
  PreMetricGroup m = io::qform_from_json(io::parse_file(path));
  WittClass c = witt_class(m);
  std::vector<Check> checks;
  checks.push_back(make_check("class of the representative is the class", "witt-representative",
                              witt_class(representative(c)) == c, c.str()));
  Json labels = Json::object();
  for (int64_t p : prime_divisors(m.order())) {
    TauLabel expect = tau_image(c, p);
    auto got = tau_label(tau(sylow_component(m, p)), p);
    checks.push_back(make_check("tau+ of the p-part matches the class [p=" + std::to_string(p) + "]", "witt-gauss",
                                got && *got == expect, expect.str()));
    labels[std::to_string(p)] = expect.str();
  }
  int64_t order = 1;
  while (!witt_scale(order, c).is_zero()) ++order;
  return report("qform witt " + path, checks, Json{{"class", c.str()}, {"order", order}, {"tau_labels", labels}});
}

Outcome qform_core(const std::string& path, const Config& cfg) {
  PreMetricGroup m = io::qform_from_json(io::parse_file(path));
  Core c = core(m, cfg.limits);
  std::vector<Check> checks;
  for (const auto& s : isotropic_subgroups(m, cfg.limits)) {
    if (!s.maximal) continue;
    PreMetricGroup other = quotient_form(m, s.subgroup);
    checks.push_back(make_check("core independent of H [H=" + io::subgroup_to_json(s.subgroup).dump() + "]",
                                "core-independence", isomorphic(other, c.form, cfg.limits).has_value(),
                                to_string(other.group())));
  }
  if (is_metric(m)) checks.push_back(make_check("core is anisotropic", "core-anisotropic", is_anisotropic(c.form)));
  Json values{{"core", io::qform_to_json(c.form)}, {"used", io::subgroup_to_json(c.used)}, {"gamma_computed", c.gamma_computed}};
  if (c.gamma_computed) {
    Json gamma = Json::array();
    for (const auto& f : c.gamma) gamma.push_back(io::hom_to_json(f));
    values["gamma"] = gamma;
  }
  return report("qform core " + path, checks, values);
}

Outcome qform_wap(const std::string& path, const Config& cfg) {
  PreMetricGroup m = io::qform_from_json(io::parse_file(path));
  const bool by_def = is_weakly_anisotropic(m, cfg.limits);
  auto dec = wap_decompose(m, cfg.limits);
  const bool pairing = wap_pairing_criterion(m, cfg.limits);
  auto odd = wap_odd_criterion(m);
  std::vector<Check> checks{
      make_check("definition agrees with the decomposition", "wap-equivalence", dec.has_value() == by_def),
      make_check("definition agrees with the pairing criterion", "wap-equivalence", pairing == by_def)};
  if (odd && m.order() % 2)
    checks.push_back(make_check("definition agrees with the odd criterion", "wap-equivalence", *odd == by_def));
  Json values{{"weakly_anisotropic", by_def}, {"pairing_criterion", pairing}};
  if (odd) values["odd_criterion"] = *odd;
  if (dec) {
    Json copies = Json::object();
    for (auto [p, k] : dec->hyperbolic_copies) copies[std::to_string(p)] = k;
    values["decomposition"] = Json{{"hyperbolic_copies", copies}, {"anisotropic", io::qform_to_json(dec->anisotropic)}};
  }
  return report("qform wap " + path, checks, values);
}

// ---------------------------------------------------------------- fusion

Outcome fusion_check(const std::string& path, const Config&) {
  FusionRing r = io::ring_from_json(io::parse_file(path));
  std::vector<Check> checks{make_check("fusion ring axioms", "fusion-ring", true, std::to_string(r.rank()))};
  return report("fusion check " + path, checks,
                Json{{"rank", r.rank()}, {"commutative", r.is_commutative()}, {"labels", r.labels()}});
}

Outcome fusion_dims(const std::string& path, const Config& cfg) {
  FusionRing r = io::ring_from_json(io::parse_file(path));
  FPData fp = fp_dims(r, cfg.tolerance);
  double worst = 0;
  for (size_t i = 0; i < r.rank(); ++i)
    for (size_t j = 0; j < r.rank(); ++j) {
      double rhs = 0;
      for (auto [k, m] : r.product(i, j)) rhs += static_cast<double>(m) * fp.fpdim[k];
      worst = std::max(worst, std::abs(fp.fpdim[i] * fp.fpdim[j] - rhs));
    }
  std::vector<Check> checks{make_check("FPdim is a ring character", "fp-character", worst <= cfg.tolerance,
                                       "max defect " + std::to_string(worst))};
  Json values{{"fpdim", fp.fpdim}, {"total", fp.total}, {"weakly_integral", is_weakly_integral(r, cfg.tolerance)}};
  return report("fusion dims " + path, checks, values);
}

Outcome fusion_grading(const std::string& path, const Config& cfg) {
  FusionRing r = io::ring_from_json(io::parse_file(path));
  Grading g = universal_grading(r, cfg.limits);
  FusionSubring ad = adjoint_subring(r);
  FPData fp = fp_dims(r, cfg.tolerance);
  const double lhs = fp.total, rhs = static_cast<double>(g.group.order()) * fp_dim(fp, ad);
  std::vector<Check> checks{
      make_check("grading respects fusion", "universal-grading", g.respected_by(r)),
      make_check("grading is faithful", "universal-grading", g.faithful()),
      make_check("FPdim(C) = |U| FPdim(C_ad)", "graded-dimension", std::abs(lhs - rhs) <= cfg.tolerance * std::max(1.0, lhs),
                 std::to_string(lhs) + " vs " + std::to_string(rhs))};
  Json degrees = Json::object();
  for (size_t i = 0; i < r.rank(); ++i) degrees[r.labels()[i]] = io::element_to_json(g.deg[i]);
  return report("fusion grading " + path, checks,
                Json{{"group", io::group_to_json(g.group)}, {"degrees", degrees}, {"adjoint", labels_of(r, ad.indices)}});
}

Outcome fusion_subrings(const std::string& path, const Config& cfg) {
  FusionRing r = io::ring_from_json(io::parse_file(path));
  SubringLattice l = all_subrings(r, cfg.limits);
  std::vector<Check> checks;
  if (r.is_commutative())
    checks.push_back(make_check("subring lattice is modular", "modular-lattice", l.modular));
  else
    checks.push_back(skipped_check("subring lattice is modular", "modular-lattice", "ring is not commutative"));
  Json subs = Json::array();
  for (const auto& s : l.subrings) subs.push_back(labels_of(r, s.indices));
  return report("fusion subrings " + path, checks, Json{{"subrings", subs}});
}

// ---------------------------------------------------------------- premodular

Json invariant_values(const PreModularDatum& d, const InvariantReport& inv) {
  Json v{{"tau_plus", io::cyclo_to_json(inv.tau_plus)},
         {"tau_minus", io::cyclo_to_json(inv.tau_minus)},
         {"dim_total", io::cyclo_to_json(inv.dim_total)},
         {"nondegenerate", is_nondegenerate(d)},
         {"S", cyclo_matrix(d.S())}};
  if (inv.charge_sq) v["charge_sq"] = io::cyclo_to_json(*inv.charge_sq);
  if (inv.gfp) {
    v["x_class"] = inv.gfp->x_class;
    v["gfp_plus"] = io::cyclo_to_json(inv.gfp->t_plus);
    v["gfp_minus"] = io::cyclo_to_json(inv.gfp->t_minus);
  }
  return v;
}

Outcome premodular_report(const std::string& path, const Config& cfg) {
  PreModularDatum d = io::datum_from_json(io::parse_file(path));
  std::vector<Check> checks = full_report(d, cfg.limits, cfg.tolerance);
  return report("premodular report " + path, checks, invariant_values(d, gauss_and_charge(d, cfg.limits, cfg.tolerance)));
}

Outcome premodular_centralizer(const std::string& path, const std::vector<size_t>& indices, const Config& cfg) {
  PreModularDatum d = io::datum_from_json(io::parse_file(path));
  const FusionRing& r = d.ring();
  for (size_t i : indices)
    if (i >= r.rank()) fail(ErrorKind::SchemaError, "--subring: index " + std::to_string(i) + " out of range");
  FusionSubring k = subring_generated(r, indices);
  FusionSubring given{indices};
  std::sort(given.indices.begin(), given.indices.end());
  given.indices.erase(std::unique(given.indices.begin(), given.indices.end()), given.indices.end());
  if (!(k == given)) fail(ErrorKind::SchemaError, "--subring: indices are not closed under fusion and duals");

  CentralizerReport cr = centralizer(d, k);
  std::vector<Check> checks{make_check("rank S~_D = number of D'-components", "centralizer-rank", true,
                                       std::to_string(cr.rank_s_tilde))};
  int bad = 0;
  for (const auto& e : dichotomy_check(d, k)) bad += e.branch == 0;
  checks.push_back(make_check("centralizer dichotomy", "dichotomy", bad == 0, std::to_string(bad) + " violations"));
  FusionSubring pc = projective_centralizer(d, k);
  checks.push_back(make_check("(D_ad)' = (D')^co", "projective-centralizer", true));
  for (auto& c : mueger_report(d, k, whole_ring(r), cfg.tolerance)) checks.push_back(std::move(c));

  SymmetryReport sym = symmetric_and_isotropic(d, k, cfg.limits);
  Json comps = Json::array();
  for (const auto& c : cr.components) comps.push_back(labels_of(r, c));
  Json values{{"subring", labels_of(r, k.indices)},
              {"centralizer", labels_of(r, cr.centralizer.indices)},
              {"components", comps},
              {"rank_s_tilde", cr.rank_s_tilde},
              {"projective_centralizer", labels_of(r, pc.indices)},
              {"symmetric", sym.symmetric},
              {"isotropic", sym.isotropic}};
  if (sym.lagrangian) {
    values["lagrangian"] = *sym.lagrangian;
    Json lags = Json::array();
    for (const auto& h : sym.lagrangians) lags.push_back(io::subgroup_to_json(h));
    values["lagrangian_subgroups"] = lags;
  }
  return report("premodular centralizer " + path, checks, values);
}

Outcome premodular_gfp(const std::string& path, const Config& cfg) {
  PreModularDatum d = io::datum_from_json(io::parse_file(path));
  GfpInvariants g = gfp_invariants(d, cfg.tolerance);
  std::vector<Check> checks{exact("T- = conj(T+)", "gfp-conjugate", g.t_minus, g.t_plus.conj())};
  return report("premodular gfp " + path, checks,
                Json{{"x_class", g.x_class}, {"gfp_plus", io::cyclo_to_json(g.t_plus)},
                     {"gfp_minus", io::cyclo_to_json(g.t_minus)}});
}

// ---------------------------------------------------------------- output

std::string render_text(const Outcome& o) {
  if (!o.is_report) return o.doc.dump(2) + "\n";
  std::ostringstream s;
  if (o.doc.contains("error")) {
    s << "subject: " << o.doc["subject"].get<std::string>() << "\n";
    s << "error: " << o.doc["error"]["message"].get<std::string>() << "\n";
    return s.str();
  }
  s << "subject: " << o.doc["subject"].get<std::string>() << "\n";
  for (const auto& c : o.doc["checks"]) {
    std::string status = c["status"].get<std::string>();
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    s << status << "  " << c["name"].get<std::string>() << "  [" << c["paper_anchor"].get<std::string>() << "]";
    if (!c["witness"].get<std::string>().empty()) s << "  " << c["witness"].get<std::string>();
    s << "\n";
  }
  for (const auto& [k, v] : o.doc["values"].items()) s << k << ": " << v.dump() << "\n";
  return s.str();
}

void emit(const Outcome& o, const Config& cfg, std::ostream& out) {
  const std::string text = cfg.output == "text" ? render_text(o) : o.doc.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(cfg.out_path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorKind::SchemaError, "cannot write " + tmp.string());
    f << text;
    if (!f.flush()) fail(ErrorKind::SchemaError, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::EnumerationLimit:
      return 3;
    case ErrorKind::ClassificationBug:
    case ErrorKind::NumericalFail:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact invariants of pre-metric groups, fusion rings and pre-modular data", "braidforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", cfg.tolerance, "Floating tolerance for FP dimensions")
      ->envname("BRAIDFORGE_TOLERANCE")
      ->check(CLI::Range(0.0, 1e-2));
  app.add_option("--enum-guard", cfg.limits.enum_guard, "Largest group order for subgroup enumeration")
      ->envname("BRAIDFORGE_ENUM_GUARD")
      ->check(CLI::PositiveNumber);
  app.add_option("--aut-guard", cfg.limits.aut_guard, "Largest group order for automorphism search")
      ->envname("BRAIDFORGE_AUT_GUARD")
      ->check(CLI::PositiveNumber);
  app.add_option("--rank-guard", cfg.limits.rank_guard, "Largest ring rank for subring lattices")
      ->envname("BRAIDFORGE_RANK_GUARD")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", cfg.output, "Output format")
      ->envname("BRAIDFORGE_OUTPUT")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out_path, "Write the result to this file atomically");

  std::function<Outcome()> action;
  std::string subject;
  std::string file, file2, form_file, chi_file, zeta = "1/16", eps = "+1";
  std::vector<size_t> subring;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome(const std::string&, const Config&)> fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->add_option("file", file, "Input JSON file")->required();
    c->callback([&, fn, c] {
      subject = c->get_parent()->get_name() + " " + c->get_name() + " " + file;
      action = [&, fn] { return fn(file, cfg); };
    });
    return c;
  };

  CLI::App* qform = app.add_subcommand("qform", "Pre-metric groups")->require_subcommand(1);
  leaf(qform, "analyze", "Degeneracy, isotropic subgroups and Gauss sums", qform_analyze);
  leaf(qform, "classify", "Anisotropic reduction and its catalog label", qform_classify);
  leaf(qform, "gauss", "Gauss sums", qform_gauss);
  leaf(qform, "witt", "Witt class of a metric group", qform_witt);
  leaf(qform, "core", "Core and its automorphism group", qform_core);
  leaf(qform, "wap", "Weak anisotropy criteria", qform_wap);

  CLI::App* fusion = app.add_subcommand("fusion", "Fusion rings")->require_subcommand(1);
  leaf(fusion, "check", "Validate the ring axioms", fusion_check);
  leaf(fusion, "dims", "Frobenius-Perron dimensions", fusion_dims);
  leaf(fusion, "grading", "Universal grading", fusion_grading);
  leaf(fusion, "subrings", "Lattice of fusion subrings", fusion_subrings);

  CLI::App* pre = app.add_subcommand("premodular", "Pre-modular data")->require_subcommand(1);
  leaf(pre, "report", "Every identity on the datum", premodular_report);
  leaf(pre, "gfp", "Class x and GFP sums", premodular_gfp);
  CLI::App* cent = leaf(pre, "centralizer", "Centralizer of a subring",
                        [&](const std::string& f, const Config& c) { return premodular_centralizer(f, subring, c); });
  cent->add_option("--subring", subring, "Comma-separated basis indices")->required()->delimiter(',');

  CLI::App* cat = app.add_subcommand("catalog", "Built-in data")->require_subcommand(1);
  CLI::App* ising = cat->add_subcommand("ising", "Ising datum");
  ising->add_option("--zeta", zeta, "k/16 with k odd");
  ising->add_option("--eps", eps, "+1 or -1");
  ising->callback([&] {
    subject = "catalog ising";
    action = [&] {
      int e = 0;
      try {
        e = std::stoi(eps);
      } catch (const std::exception&) {
        fail(ErrorKind::BadParameter, "--eps must be +1 or -1");
      }
      return document(io::datum_to_json(ising_datum(RootExp::parse(zeta), e)));
    };
  });
  CLI::App* pointed = cat->add_subcommand("pointed", "Pointed datum of a pre-metric group");
  pointed->add_option("--form", form_file, "Quadratic form JSON")->required();
  pointed->add_option("--chi", chi_file, "Character JSON");
  pointed->callback([&] {
    subject = "catalog pointed " + form_file;
    action = [&] {
      PreMetricGroup m = io::qform_from_json(io::parse_file(form_file));
      std::vector<int> chi = chi_file.empty() ? std::vector<int>(static_cast<size_t>(m.order()), 1)
                                              : io::character_from_json(io::parse_file(chi_file));
      return document(io::datum_to_json(pointed_datum(m, chi)));
    };
  });
  CLI::App* product = cat->add_subcommand("product", "Deligne product of two data");
  product->add_option("first", file, "Datum JSON")->required();
  product->add_option("second", file2, "Datum JSON")->required();
  product->callback([&] {
    subject = "catalog product " + file + " " + file2;
    action = [&] {
      return document(io::datum_to_json(
          deligne_product(io::datum_from_json(io::parse_file(file)), io::datum_from_json(io::parse_file(file2)))));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Outcome outcome;
  int code = 0;
  try {
    outcome = action();
    code = outcome.ok ? 0 : 1;
  } catch (const Error& e) {
    err << "braidforge: " << e.what() << "\n";
    outcome.doc = Json{{"subject", subject}, {"error", Json{{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    code = exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "braidforge: " << e.what() << "\n";
    outcome.doc = Json{{"subject", subject}, {"error", Json{{"kind", "Internal"}, {"message", e.what()}}}};
    code = 1;
  }
  try {
    emit(outcome, cfg, out);
  } catch (const std::exception& e) {
    err << "braidforge: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace braidforge::cli
