// Command-line surface: compute zeta data for catalog stacks and run the
// verification suites, with reproducible JSON/CSV/text reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stackzeta/json_io.hpp"

using namespace stackzeta;

namespace {

struct RunConfig {
  std::string selector;
  bool all = false;
  long q = 2;
  long a = 1;
  int order = 16;
  int depth = 64;
  int max_v = 6;
  std::string suite = "all";
  std::string format = "text";
  std::string out;
  std::string table_file;
  bool strict = false;
};

GroupTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--table", "cannot open '" + path + "'");
  json j;
  in >> j;
  return group_table_from_json(j);
}

StackDescriptor resolve_stack(const RunConfig& cfg, const std::string& name) {
  if (name == "Point") return make_point(cfg.q);
  if (name == "A1" || name == "AffineLine") return make_affine_line(cfg.q);
  if (name == "Gm") return make_gm(cfg.q);
  if (name == "P1") return make_p1(cfg.q);
  if (name == "BGm") return make_bgm(cfg.q);
  if (name == "FormOfBGm" || name == "BNormTorus") return make_bnorm_torus(cfg.q);
  if (name == "BE") return make_belliptic(cfg.q, cfg.a);
  if (name == "QuotientP1Gm") return make_quotient_p1_gm(cfg.q);
  if (name == "BFinite") {
    if (cfg.table_file.empty()) return make_bfinite(cfg.q, GroupTable::symmetric3());
    return make_bfinite(cfg.q, load_table(cfg.table_file));
  }
  if (name.rfind("BGL", 0) == 0 && name.size() > 3)
    return make_bgl(std::stoi(name.substr(3)), cfg.q);
  if (name.rfind("GL", 0) == 0 && name.size() > 2)
    return make_gl(std::stoi(name.substr(2)), cfg.q);
  throw CLI::ValidationError("stack", "unknown stack selector '" + name + "'");
}

std::vector<StackDescriptor> resolve_selection(const RunConfig& cfg) {
  if (!cfg.all) return {resolve_stack(cfg, cfg.selector)};
  std::vector<StackDescriptor> sel;
  for (const char* name : {"Point", "A1", "Gm", "P1", "GL2", "BGm", "BGL2", "BGL3",
                           "FormOfBGm", "BE", "BFinite", "QuotientP1Gm"})
    sel.push_back(resolve_stack(cfg, name));
  return sel;
}

void emit(const RunConfig& cfg, const json& doc, const std::string& csv,
          const std::string& text) {
  std::ostringstream body;
  if (cfg.format == "json")
    body << doc.dump(2) << "\n";
  else if (cfg.format == "csv")
    body << csv;
  else
    body << text;
  if (cfg.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(cfg.out);
    f << body.str();
  }
}

int run_zeta(const RunConfig& cfg) {
  StackDescriptor stack = resolve_stack(cfg, cfg.selector);
  ZetaResult zr = compute_zeta(stack, cfg.order, cfg.depth);
  json doc = zeta_result_to_json(zr);

  if (auto spec = spectrum_of(stack, cfg.depth))
    doc["poles"] = pole_catalog_to_json(pole_catalog(*spec));

  int dmax = 6;
  if (cfg.order >= 2 * dmax + 4) {
    if (auto fn = reconstruct_rational(zr.counts_side, dmax))
      doc["rational"] = rationalfn_to_json(*fn);
    else
      doc["rational"] = nullptr;
  }

  std::ostringstream csv, text;
  csv << "k,counts,spectrum,gap\n";
  text << "zeta " << stack.name() << " over F_" << stack.q() << " (order " << cfg.order
       << ", depth " << cfg.depth << ")\n";
  for (int k = 0; k <= zr.order; ++k) {
    auto counts = zr.counts_side.coeff(k).is_rational();
    std::string counts_s = counts ? counts->str() : zr.counts_side.coeff(k).str();
    std::string spec_s, gap_s;
    if (zr.spectrum_side) {
      auto sc = zr.spectrum_side->coeff(k).is_rational();
      spec_s = sc ? sc->str() : zr.spectrum_side->coeff(k).str();
      gap_s = zr.gap[static_cast<size_t>(k)].str();
    }
    csv << k << "," << counts_s << "," << spec_s << "," << gap_s << "\n";
    text << "  t^" << k << ": counts " << counts_s;
    if (zr.spectrum_side) text << "  spectrum " << spec_s << "  gap " << gap_s;
    text << "\n";
  }
  if (doc.contains("rational")) {
    if (doc["rational"].is_null())
      text << "  rational: none detected (dmax <= 6)\n";
    else
      text << "  rational: " << doc["rational"].dump() << "\n";
  }
  emit(cfg, doc, csv.str(), text.str());
  return 0;
}

VerificationReport run_weights(const StackDescriptor& stack, int depth) {
  VerificationReport rep{"weights", stack.name(), CheckStatus::Pass, {}};
  auto spec = spectrum_of(stack, depth);
  if (!spec) {
    rep.status = CheckStatus::NotApplicable;
    rep.witness["note"] = "no materialized spectrum for this stack";
    return rep;
  }
  auto audit = weight_audit(*spec, stack.dimension(), Rat(0), stack.affine_stabilizers());
  rep.status = audit.pass ? CheckStatus::Pass : CheckStatus::Fail;
  rep.witness = weight_audit_to_json(audit);
  return rep;
}

VerificationReport run_funceq(const RunConfig& cfg, const StackDescriptor& stack) {
  FunceqParams p;
  p.q = stack.q();
  p.order = cfg.order;
  if (std::holds_alternative<BGmStack>(stack.v))
    return functional_equation_check(FunceqKind::GmScaling, p);
  if (const auto* b = std::get_if<BGLStack>(&stack.v); b && b->n == 2)
    return functional_equation_check(FunceqKind::GL2Scaling, p);
  if (const auto* e = std::get_if<BEllipticStack>(&stack.v)) {
    p.a = e->a;
    return functional_equation_check(FunceqKind::EllipticScaling, p);
  }
  if (std::holds_alternative<P1Stack>(stack.v)) {
    p.stack = stack;
    p.d = 1;
    return functional_equation_check(FunceqKind::ProperSmooth, p);
  }
  VerificationReport rep{"funceq", stack.name(), CheckStatus::NotApplicable, {}};
  rep.witness["note"] = "no functional equation catalogued for this stack";
  return rep;
}

bool expect_rational(const StackDescriptor& stack) {
  return std::holds_alternative<PointStack>(stack.v) ||
         std::holds_alternative<AffineLineStack>(stack.v) ||
         std::holds_alternative<GmStack>(stack.v) ||
         std::holds_alternative<P1Stack>(stack.v) ||
         std::holds_alternative<GLStack>(stack.v) ||
         std::holds_alternative<BFiniteStack>(stack.v);
}

VerificationReport run_rational(const RunConfig& cfg, const StackDescriptor& stack) {
  VerificationReport rep{"rational", stack.name(), CheckStatus::Pass, {}};
  int dmax = 6;
  int order = std::max(cfg.order, 2 * dmax + 4);
  PowerSeries z = zeta_from_counts(stack, order);
  auto fn = reconstruct_rational(z, dmax);
  bool expected = expect_rational(stack);
  rep.witness["expected_rational"] = expected;
  if (fn) {
    rep.witness["function"] = rationalfn_to_json(*fn);
    rep.status = expected ? CheckStatus::Pass : CheckStatus::Fail;
  } else {
    rep.witness["function"] = nullptr;
    rep.status = expected ? CheckStatus::Fail : CheckStatus::Pass;
  }
  return rep;
}

VerificationReport run_existence(const StackDescriptor& stack) {
  if (std::holds_alternative<BNormTorusStack>(stack.v)) {
    auto r = point_existence(ExistenceKind::FormOfBGm, stack.q());
    VerificationReport rep{"existence", stack.name(),
                           r.verdict == ExistenceVerdict::Inconclusive
                               ? CheckStatus::Inconclusive
                               : CheckStatus::Pass,
                           existence_to_json(r)};
    return rep;
  }
  if (std::holds_alternative<QuotientP1GmStack>(stack.v)) {
    auto r = point_existence(ExistenceKind::QuotientP1Gm, stack.q());
    VerificationReport rep{"existence", stack.name(),
                           r.verdict == ExistenceVerdict::Inconclusive
                               ? CheckStatus::Inconclusive
                               : CheckStatus::Pass,
                           existence_to_json(r)};
    return rep;
  }
  VerificationReport rep{"existence", stack.name(), CheckStatus::NotApplicable, {}};
  rep.witness["note"] = "no point-existence bound catalogued for this stack";
  return rep;
}

int run_verify(const RunConfig& cfg) {
  std::vector<StackDescriptor> sel = resolve_selection(cfg);
  std::vector<std::string> suites;
  if (cfg.suite == "all")
    suites = {"trace", "weights", "funceq", "rational", "existence"};
  else
    suites = {cfg.suite};

  std::vector<VerificationReport> reports;
  for (const auto& stack : sel)
    for (const auto& suite : suites) {
      if (suite == "trace")
        reports.push_back(verify_trace_formula(stack, cfg.max_v, cfg.depth));
      else if (suite == "weights")
        reports.push_back(run_weights(stack, cfg.depth));
      else if (suite == "funceq")
        reports.push_back(run_funceq(cfg, stack));
      else if (suite == "rational")
        reports.push_back(run_rational(cfg, stack));
      else if (suite == "existence")
        reports.push_back(run_existence(stack));
    }

  bool any_fail = false;
  json doc = json::array();
  std::ostringstream csv, text;
  csv << "check,stack,status\n";
  for (const auto& r : reports) {
    doc.push_back(report_to_json(r));
    csv << r.check << "," << r.stack << "," << to_string(r.status) << "\n";
    text << "[" << to_string(r.status) << "] " << r.check << " " << r.stack << "\n";
    if (r.status == CheckStatus::Fail) any_fail = true;
    if (cfg.strict && r.status == CheckStatus::Inconclusive) any_fail = true;
  }
  emit(cfg, doc, csv.str(), text.str());
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zeta functions of catalog stacks over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q, "base field size (prime power)");
    cmd->add_option("--a", cfg.a, "Frobenius trace for BE");
    cmd->add_option("--order,--N", cfg.order, "series truncation order");
    cmd->add_option("--depth", cfg.depth, "spectrum / product depth");
    cmd->add_option("--V", cfg.max_v, "largest v for trace checks");
    cmd->add_option("--format", cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
    cmd->add_option("--table", cfg.table_file, "group table JSON for BFinite");
  };

  CLI::App* zeta = app.add_subcommand("zeta", "compute zeta data for one stack");
  zeta->add_option("stack", cfg.selector, "stack selector")->required();
  add_common(zeta);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("stack", cfg.selector, "stack selector");
  verify->add_flag("--all", cfg.all, "run on the whole catalog");
  verify->add_option("--suite", cfg.suite, "trace | weights | funceq | rational | existence | all")
      ->check(CLI::IsMember({"trace", "weights", "funceq", "rational", "existence", "all"}));
  verify->add_flag("--strict", cfg.strict, "treat inconclusive verdicts as failures");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(zeta)) return run_zeta(cfg);
    if (!cfg.all && cfg.selector.empty()) {
      std::cerr << "verify: give a stack selector or --all\n";
      return 2;
    }
    return run_verify(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
