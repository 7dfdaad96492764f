#include "gabikit/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <utility>

namespace gabikit {

namespace {

using nlohmann::json;

AlgebraDefinition load_algebra(const std::string& path, ParseStrictness strictness) {
  Definition d = parse_definition(path, strictness);
  if (!std::holds_alternative<AlgebraDefinition>(d))
    throw input_error(path + ": expected an algebra definition, found a monoid");
  return std::get<AlgebraDefinition>(std::move(d));
}

FiniteMonoid load_monoid(const std::string& path) {
  Definition d = parse_definition(path);
  if (!std::holds_alternative<FiniteMonoid>(d))
    throw input_error(path + ": expected a monoid definition, found an algebra");
  return std::get<FiniteMonoid>(std::move(d));
}

GabiStructure gabi_block(const JobSpec& job, const AlgebraDefinition& def,
                         const std::string& path) {
  if (!def.gabi)
    throw input_error(path + ": the command needs a \"gabi\" block (delta, eps)");
  GabiStructure g = *def.gabi;
  if (job.side) g.side = *job.side;
  return g;
}

/// User-supplied test modules: the input file's own plus --modules FILE.
std::vector<NamedModule> collect_modules(const JobSpec& job, const AlgebraDefinition& def,
                                         const FinAlgebra& a) {
  std::vector<NamedModule> out = def.modules;
  if (job.modules_file) {
    AlgebraDefinition extra = load_algebra(*job.modules_file, ParseStrictness::Validated);
    if (!same_table(extra.algebra, a))
      throw input_error(*job.modules_file +
                        ": the modules file defines a different algebra than the input");
    out.insert(out.end(), extra.modules.begin(), extra.modules.end());
  }
  return out;
}

std::vector<AModule> unwrap(const std::vector<NamedModule>& named) {
  std::vector<AModule> out;
  out.reserve(named.size());
  for (const auto& nm : named) out.push_back(nm.module);
  return out;
}

ReportDocument from_report(const Report& r) {
  ReportDocument doc;
  doc.verdict = r.passed() ? Verdict::Pass : Verdict::Fail;
  doc.findings = r.findings();
  doc.notes = r.notes();
  doc.derived = nullptr;
  return doc;
}

json vector_to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

json gabi_to_json(const GabiStructure& g) {
  return json{{"delta", matrix_to_json(g.delta)},
              {"eps", matrix_to_json(g.eps)},
              {"side", g.side == GabiSide::Left ? "left" : "right"}};
}

void require_inputs(const JobSpec& job, std::size_t n) {
  if (job.inputs.size() != n)
    throw input_error(job.command + " takes " + std::to_string(n) + " input file" +
                      (n == 1 ? "" : "s") + ", got " + std::to_string(job.inputs.size()));
}

ReportDocument run_check_algebra(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::ShapesOnly);
  return from_report(check_algebra(def.algebra));
}

ReportDocument run_check_gabi(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const GabiStructure g = gabi_block(job, def, job.inputs[0]);
  ReportDocument doc = from_report(check_gabi(g));
  if (doc.verdict == Verdict::Pass)
    doc.derived = json{{"antipode", matrix_to_json(antipode(g))}};
  return doc;
}

ReportDocument run_derive_hopf(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  ReportDocument doc;
  if (!def.gabi) {
    doc.verdict = Verdict::NotApplicable;
    doc.notes.push_back("not applicable: the definition has no gabi block to derive from");
    doc.derived = nullptr;
    return doc;
  }
  GabiStructure g = *def.gabi;
  if (job.side) g.side = *job.side;
  const HopfOutcome outcome = derive_hopf(g, job.strategy);
  if (const auto* na = std::get_if<NotApplicable>(&outcome)) {
    doc.verdict = Verdict::NotApplicable;
    doc.notes.push_back("not applicable: " + na->reason);
    doc.derived = nullptr;
    return doc;
  }
  const auto& hopf = std::get<HopfResult>(outcome);
  doc.verdict = Verdict::Pass;
  doc.notes.push_back("strategy: " + to_string(hopf.provenance));
  doc.derived = json{{"strategy", to_string(hopf.provenance)},
                     {"comul", matrix_to_json(hopf.bialgebra.coalgebra.comul)},
                     {"counit", matrix_to_json(hopf.bialgebra.coalgebra.counit)},
                     {"antipode", matrix_to_json(hopf.antipode)}};
  return doc;
}

ReportDocument run_tricocycloid(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const GabiStructure g = gabi_block(job, def, job.inputs[0]);
  const TricocycloidData t = tricocycloid(g);
  ReportDocument doc = from_report(check_tricocycloid(t));
  doc.derived = json{{"v", matrix_to_json(t.v)},
                     {"eta", vector_to_json(t.eta)},
                     {"eps", matrix_to_json(t.eps)}};
  return doc;
}

ReportDocument run_double_check(const JobSpec& job) {
  require_inputs(job, 2);
  const AlgebraDefinition d1 = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const AlgebraDefinition d2 = load_algebra(job.inputs[1], ParseStrictness::Validated);
  const GabiStructure g1 = gabi_block(job, d1, job.inputs[0]);
  const GabiStructure g2 = gabi_block(job, d2, job.inputs[1]);
  return from_report(check_double(g1, g2));
}

/// The effective test set every module-category command samples: the
/// canonical trivial and regular modules plus any user-supplied ones.
std::vector<NamedModule> effective_set(const GabiStructure& g,
                                       const std::vector<NamedModule>& users) {
  std::vector<NamedModule> out;
  out.push_back({"trivial", trivial_module(g)});
  out.push_back({"regular", regular_module(g.algebra)});
  out.insert(out.end(), users.begin(), users.end());
  return out;
}

ReportDocument run_hom_action(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const GabiStructure g = gabi_block(job, def, job.inputs[0]);
  const std::vector<NamedModule> users = collect_modules(job, def, g.algebra);
  const std::vector<AModule> plain = unwrap(users);
  Report merged;
  for (const auto& [label, m] : effective_set(g, users))
    merged.merge(closed_maps_check(g, m, plain), label);
  return from_report(merged);
}

ReportDocument run_adjunction(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const GabiStructure g = gabi_block(job, def, job.inputs[0]);
  const std::vector<NamedModule> users = collect_modules(job, def, g.algebra);
  const std::vector<AModule> plain = unwrap(users);
  Report merged;
  for (const auto& [label, m] : effective_set(g, users))
    merged.merge(adjunction_check(g, m, plain), label);
  return from_report(merged);
}

ReportDocument run_normality(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const GabiStructure g = gabi_block(job, def, job.inputs[0]);
  const std::vector<NamedModule> users = collect_modules(job, def, g.algebra);
  return from_report(normality_check(g, unwrap(users)));
}

ReportDocument run_search_gabi(const JobSpec& job) {
  require_inputs(job, 1);
  const AlgebraDefinition def = load_algebra(job.inputs[0], ParseStrictness::Validated);
  const std::vector<GabiStructure> census = search_gabi(def.algebra, SearchAll{}, job.cap);
  ReportDocument doc;
  doc.verdict = Verdict::Pass;
  doc.notes.push_back("census size: " + std::to_string(census.size()));
  json list = json::array();
  for (const auto& g : census) list.push_back(gabi_to_json(g));
  doc.derived = json{{"census", list}};
  return doc;
}

std::string level_name(MonoidLiftLevel level) {
  return level == MonoidLiftLevel::HomLift ? "hom" : "full";
}

json delta_to_json(const MonoidGabi& s) {
  json out = json::array();
  for (const auto& [p, m] : s.delta) out.push_back(json::array({p, m}));
  return out;
}

ReportDocument run_set_check(const JobSpec& job) {
  require_inputs(job, 1);
  const FiniteMonoid m = load_monoid(job.inputs[0]);
  const auto structure = group_gabi(m);
  ReportDocument doc;
  if (!structure) {
    std::size_t missing = 0;
    for (std::size_t i = 0; i < m.size; ++i) {
      bool invertible = false;
      for (std::size_t j = 0; j < m.size; ++j)
        if (m.table[i][j] == m.identity && m.table[j][i] == m.identity) invertible = true;
      if (!invertible) {
        missing = i;
        break;
      }
    }
    doc.verdict = Verdict::NotApplicable;
    doc.notes.push_back("not applicable: the monoid is not a group (element " +
                        std::to_string(missing) + " has no two-sided inverse)");
    doc.derived = nullptr;
    return doc;
  }
  doc = from_report(check_monoid_gabi(*structure, job.level));
  doc.notes.insert(doc.notes.begin(),
                   "canonical inversion comultiplication checked at level " +
                       level_name(job.level));
  doc.derived = json{{"delta", delta_to_json(*structure)}};
  return doc;
}

ReportDocument run_set_search(const JobSpec& job) {
  require_inputs(job, 1);
  const FiniteMonoid m = load_monoid(job.inputs[0]);
  const std::vector<MonoidGabi> census = search_monoid_gabi(m, job.level, job.cap);
  ReportDocument doc;
  doc.verdict = Verdict::Pass;
  doc.notes.push_back("level: " + level_name(job.level));
  doc.notes.push_back("census size: " + std::to_string(census.size()));
  json list = json::array();
  for (const auto& s : census) list.push_back(delta_to_json(s));
  doc.derived = json{{"census", list}};
  return doc;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "NOT_APPLICABLE";
  }
}

int exit_code(Verdict v) { return v == Verdict::Pass ? 0 : 1; }

ReportDocument run_job(const JobSpec& job) {
  if (job.command == "check-algebra") return run_check_algebra(job);
  if (job.command == "check-gabi") return run_check_gabi(job);
  if (job.command == "derive-hopf") return run_derive_hopf(job);
  if (job.command == "tricocycloid") return run_tricocycloid(job);
  if (job.command == "double-check") return run_double_check(job);
  if (job.command == "hom-action") return run_hom_action(job);
  if (job.command == "adjunction") return run_adjunction(job);
  if (job.command == "normality") return run_normality(job);
  if (job.command == "search-gabi") return run_search_gabi(job);
  if (job.command == "set-check") return run_set_check(job);
  if (job.command == "set-search") return run_set_search(job);
  throw input_error("unknown command \"" + job.command + "\"");
}

std::string emit_report(const ReportDocument& doc, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json j;
    j["verdict"] = to_string(doc.verdict);
    json findings = json::array();
    for (const auto& f : doc.findings)
      findings.push_back(
          json{{"axiom", f.axiom}, {"witness", f.witness}, {"detail", f.detail}});
    j["findings"] = findings;
    j["notes"] = doc.notes;
    j["derived"] = doc.derived;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << to_string(doc.verdict) << "\n";
  for (const auto& note : doc.notes) out << "note: " << note << "\n";
  for (const auto& f : doc.findings)
    out << f.axiom << " FAIL at " << f.witness << ": " << f.detail << "\n";
  return out.str();
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification and derivation toolkit for gabi-algebras"};
  app.require_subcommand(1);

  JobSpec job;
  std::string strategy = "beta";
  std::string side;
  std::string level = "full";
  std::string format = "text";

  struct CommandRow {
    const char* name;
    const char* description;
    std::size_t files;
    bool strategy_opt, side_opt, level_opt, cap_opt, modules_opt;
  };
  constexpr CommandRow rows[] = {
      {"check-algebra", "Check associativity and unit laws of an algebra file", 1, false,
       false, false, false, false},
      {"check-gabi", "Check the gabi axioms of a definition's delta/eps block", 1, false,
       true, false, false, false},
      {"derive-hopf", "Derive a full Hopf structure from a gabi block", 1, true, true,
       false, false, false},
      {"tricocycloid", "Build v = beta . twist and check its braid-type laws", 1, false,
       true, false, false, false},
      {"double-check", "Check the mixed double-structure identities of two blocks", 2,
       false, true, false, false, false},
      {"hom-action", "Check the lifted hom action and i/j/Gamma equivariance", 1, false,
       true, false, false, true},
      {"adjunction", "Materialize the tensor-hom adjunction and check its triangles", 1,
       false, true, false, false, true},
      {"normality", "Sample unitors and associators for invertibility faults", 1, false,
       true, false, false, true},
      {"search-gabi", "Enumerate all gabi structures over a prime field", 1, false, false,
       false, true, false},
      {"set-check", "Check a monoid's canonical inversion comultiplication", 1, false,
       false, true, false, false},
      {"set-search", "Enumerate all monoid comultiplications at a lift level", 1, false,
       false, true, true, false},
  };

  for (const auto& row : rows) {
    CLI::App* cmd = app.add_subcommand(row.name, row.description);
    cmd->add_option("file", job.inputs, "Definition file(s)")
        ->required()
        ->expected(static_cast<int>(row.files));
    if (row.strategy_opt)
      cmd->add_option("--strategy", strategy, "Derivation strategy")
          ->check(CLI::IsMember({"beta", "commutative", "inv-antipode"}));
    if (row.side_opt)
      cmd->add_option("--side", side, "Interpret the gabi block as this side")
          ->check(CLI::IsMember({"left", "right"}));
    if (row.level_opt)
      cmd->add_option("--level", level, "Monoid lift level")
          ->check(CLI::IsMember({"hom", "full"}));
    if (row.cap_opt) cmd->add_option("--cap", job.cap, "Search candidate cap");
    if (row.modules_opt)
      cmd->add_option("--modules", [&job](const std::vector<std::string>& v) {
            job.modules_file = v.front();
            return true;
          },
          "Definition file with extra test modules");
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "structured"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  job.command = app.get_subcommands().front()->get_name();
  if (strategy == "commutative")
    job.strategy = HopfStrategy::Commutative;
  else if (strategy == "inv-antipode")
    job.strategy = HopfStrategy::InvertibleAntipode;
  if (side == "left") job.side = GabiSide::Left;
  if (side == "right") job.side = GabiSide::Right;
  if (level == "hom") job.level = MonoidLiftLevel::HomLift;
  job.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;

  try {
    const ReportDocument doc = run_job(job);
    out << emit_report(doc, job.format);
    return exit_code(doc.verdict);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gabikit
