#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "drgcay/cayley.hpp"
#include "drgcay/classifier.hpp"
#include "drgcay/errors.hpp"
#include "drgcay/families.hpp"
#include "drgcay/graph.hpp"
#include "drgcay/records.hpp"
#include "drgcay/survey.hpp"

namespace drgcay::cli {

namespace {

struct Options {
  std::string family, params, group, set, edges, out, csv, summary, dedup = "none";
  bool as_cayley = false;
  bool jsonl = false;
  bool lemmas = false;
  int max_order = 24;
  int min_order = 2;
  int min_valency = 1;
  int workers = 1;
  int naive_max = 12;
  std::uint64_t node_budget = CanonOptions{}.node_budget;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

void emit_json(const Options& o, const Json& j, std::ostream& out) {
  if (o.jsonl) out << j.dump() << '\n';
  if (!o.out.empty()) open_out(o.out) << j.dump(2) << '\n';
}

std::string spec_text(const CayleySpec& spec) {
  return "Cay(" + spec.group().to_string() + "; {" + spec.set_to_string() + "})";
}

Json set_json(const CayleySpec& spec) {
  Json set = Json::array();
  for (int c : spec.codes()) set.push_back(spec.group().code_to_string(c));
  return set;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const auto id = parse_family(o.family, o.params);
  if (o.as_cayley) {
    const auto spec = cayley_spec_for(id);
    const auto profiles = special_generators(spec);
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = id.label();
    j["group"] = spec.group().to_string();
    j["set"] = set_json(spec);
    Json special = Json::array();
    for (const auto& p : profiles) special.push_back(spec.group().code_to_string(p.s));
    j["special_s"] = special;
    if (!o.jsonl) {
      out << id.label() << ": " << spec_text(spec) << " special s="
          << (profiles.empty() ? std::string("none") : spec.group().code_to_string(profiles.front().s)) << '\n';
    }
    emit_json(o, j, out);
    return kOk;
  }
  const Graph g = construct(id);
  if (o.out.empty()) {
    write_edge_list(out, g);
    return kOk;
  }
  auto f = open_out(o.out);
  write_edge_list(f, g);
  out << id.label() << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges -> " << o.out << '\n';
  return kOk;
}

Graph read_edges_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw StructuralError("cannot open edge list '" + path + "'");
  return read_edge_list(f);
}

int cmd_check(const Options& o, std::ostream& out) {
  Json j;
  j["schema"] = kSchemaVersion;
  Graph g;
  std::optional<CayleySpec> spec;
  std::string name;
  if (!o.edges.empty()) {
    g = read_edges_file(o.edges);
    name = o.edges;
    j["edges"] = o.edges;
  } else {
    spec = parse_spec(o.group, o.set);
    name = spec_text(*spec);
    j["group"] = spec->group().to_string();
    j["set"] = set_json(*spec);
    const auto v = validate_spec(*spec);
    j["valid"] = {{"inverse_closed", v.inverse_closed}, {"excludes_identity", v.excludes_identity}, {"generates", v.generates}};
    g = build_cayley(*spec);
  }
  const auto verdict = intersection_array(g);
  const AbelianGroup* group = spec ? &spec->group() : nullptr;
  j.update(verdict_to_json(g, verdict, group));
  std::string line = name + ": ";
  if (const auto* arr = std::get_if<IntersectionArray>(&verdict)) {
    line += "distance-regular, array " + arr->to_string();
  } else {
    const auto& w = std::get<RegularityWitness>(verdict);
    auto v = [&](int x) { return group ? group->code_to_string(x) : std::to_string(x); };
    line += "not distance-regular: " + std::string(1, w.quantity) + std::to_string(w.distance) + "(" + v(w.x) + "," +
            v(w.y) + ")=" + std::to_string(w.value) + " but " + std::string(1, w.quantity) +
            std::to_string(w.distance) + "(" + v(w.x_other) + "," + v(w.y_other) + ")=" + std::to_string(w.value_other);
  }
  if (!o.jsonl) out << line << '\n';
  emit_json(o, j, out);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto spec = parse_spec(o.group, o.set);
  FamilyCatalog catalog(CanonOptions{o.node_budget});
  const auto r = classify(spec, catalog);
  if (!o.jsonl) {
    std::string line = spec_text(spec) + ": ";
    if (!r.hypothesis_met) {
      line += "no special generator (outside the theorem's hypothesis)";
    } else if (!r.is_drg()) {
      line += "not distance-regular";
    } else if (r.family) {
      line += "family " + r.family->label();
      if (r.all_labels.size() > 1) {
        line += " (also";
        for (const auto& id : r.all_labels)
          if (id != *r.family) line += " " + id.label();
        line += ")";
      }
    } else {
      line += "distance-regular but no listed family";
    }
    out << line << '\n';
  }
  emit_json(o, classification_to_json(r), out);
  if (r.hypothesis_met && r.is_drg() && !r.family) return kTheoremViolation;
  return kOk;
}

SurveyConfig survey_config(const Options& o) {
  SurveyConfig c;
  c.max_order = o.max_order;
  c.min_order = o.min_order;
  c.min_valency = o.min_valency;
  c.workers = o.workers;
  c.naive_crosscheck_max_order = o.naive_max;
  c.canon.node_budget = o.node_budget;
  if (o.dedup == "by-certificate") c.dedup = Dedup::ByCertificate;
  return c;
}

Json lemma_summary_json(const LemmaReport& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["failures"] = rep.failures();
  j["lemmas"] = lemma_report_to_json(rep);
  return j;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  LemmaReport rep;
  std::string scope;
  if (!o.group.empty()) {
    const auto spec = parse_spec(o.group, o.set);
    rep = lemma_suite(spec, CanonOptions{o.node_budget});
    scope = spec_text(spec);
  } else {
    auto c = survey_config(o);
    c.lemmas = true;
    c.naive_crosscheck_max_order = 0;
    rep = run_survey(c).lemmas;
    scope = "orders " + std::to_string(o.min_order) + ".." + std::to_string(o.max_order);
  }
  if (!o.jsonl) {
    std::string line = scope + ": " + std::to_string(rep.failures()) + " failures;";
    for (const auto& e : rep.entries) line += std::string(" ") + e.id + "=" + lemma_status_name(e.status());
    out << line << '\n';
    for (const auto& e : rep.entries)
      if (e.first_counterexample) out << "  (" << e.id << ") " << *e.first_counterexample << '\n';
  }
  emit_json(o, lemma_summary_json(rep), out);
  return rep.failures() == 0 ? kOk : kTheoremViolation;
}

int cmd_survey(const Options& o, std::ostream& out) {
  auto c = survey_config(o);
  c.lemmas = o.lemmas;
  const auto rep = run_survey(c);
  if (o.jsonl) write_jsonl(out, rep);
  if (!o.out.empty()) {
    auto f = open_out(o.out);
    write_jsonl(f, rep);
  }
  if (!o.csv.empty()) {
    auto f = open_out(o.csv);
    write_summary_csv(f, rep);
  }
  if (!o.summary.empty()) open_out(o.summary) << survey_summary_to_json(rep).dump(2) << '\n';
  if (!o.jsonl) {
    std::ostringstream line;
    line << "orders " << c.min_order << ".." << c.max_order << ": " << rep.instance_count() << " instances, "
         << rep.drg_count() << " distance-regular, " << rep.distinct_drg_certificates.size()
         << " distinct graphs, theorem_holds=" << (rep.theorem_holds ? "true" : "false");
    if (c.lemmas) line << ", lemma failures=" << rep.lemmas.failures();
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << rep.seconds << " s)";
    out << line.str() << '\n';
    for (const auto& v : rep.violations) out << "  violation: " << v << '\n';
  }
  if (!rep.theorem_holds) return kTheoremViolation;
  if (c.lemmas && rep.lemmas.failures() > 0) return kTheoremViolation;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs on abelian groups and distance-regularity"};
  app.name("drgcay");
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "Build a family graph as an edge list or Cayley spec");
  construct_cmd->add_option("--family", o.family, "Family name")->required()->check(CLI::IsMember(family_names()));
  construct_cmd->add_option("--params", o.params, "Comma-separated parameters");
  construct_cmd->add_flag("--as-cayley", o.as_cayley, "Print the Cayley spec instead of the edge list");
  construct_cmd->add_option("--out", o.out, "Output file");
  construct_cmd->add_flag("--jsonl", o.jsonl, "JSON to standard output (with --as-cayley)");

  auto add_spec = [&](CLI::App* cmd, bool required) {
    auto* g = cmd->add_option("--group", o.group, "Group, e.g. Z6 or Z6xZ2");
    auto* s = cmd->add_option("--set", o.set, "Connection set, e.g. \"1,5,3\" or \"(1,0),(5,0)\"");
    if (required) {
      g->required();
      s->required();
    } else {
      g->needs(s);
      s->needs(g);
    }
    return g;
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_flag("--jsonl", o.jsonl, "Machine JSON to standard output");
    cmd->add_option("--out", o.out, "Write machine JSON to a file");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--node-budget", o.node_budget, "Canonical-labeling node budget")->check(CLI::PositiveNumber);
  };
  auto add_range = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", o.max_order, "Largest group order")->check(CLI::Range(2, 4096));
    cmd->add_option("--min-order", o.min_order, "Smallest group order")->check(CLI::Range(2, 4096));
    cmd->add_option("--min-valency", o.min_valency, "Skip connection sets smaller than this")->check(CLI::NonNegativeNumber);
    cmd->add_option("--workers", o.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  };

  auto* check_cmd = app.add_subcommand("check", "Validate a spec and decide distance-regularity");
  auto* group_opt = add_spec(check_cmd, false);
  check_cmd->add_option("--edges", o.edges, "Edge-list file instead of a spec")->excludes(group_opt);
  add_out(check_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Name the family of a distance-regular Cayley graph");
  add_spec(classify_cmd, true);
  add_out(classify_cmd);
  add_budget(classify_cmd);

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Run the lemma suite on one spec or on every spec up to an order");
  add_spec(lemmas_cmd, false);
  add_range(lemmas_cmd);
  add_out(lemmas_cmd);
  add_budget(lemmas_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "Enumerate, classify and verify every admissible spec");
  add_range(survey_cmd);
  survey_cmd->add_option("--dedup", o.dedup, "none or by-certificate")->check(CLI::IsMember({"none", "by-certificate"}));
  survey_cmd->add_option("--naive-max-order", o.naive_max, "Cross-check enumeration naively up to this order");
  survey_cmd->add_option("--csv", o.csv, "Write the per-group CSV summary");
  survey_cmd->add_option("--summary", o.summary, "Write the summary JSON");
  survey_cmd->add_flag("--lemmas", o.lemmas, "Also run the lemma suite on every spec");
  survey_cmd->add_flag("--jsonl", o.jsonl, "Per-instance JSONL to standard output");
  survey_cmd->add_option("--out", o.out, "Write per-instance JSONL to a file");
  add_budget(survey_cmd);

  std::vector<std::string> storage{"drgcay"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (check_cmd->parsed()) {
      if (o.edges.empty() && o.group.empty()) throw CLI::RequiredError("--group/--set or --edges");
      return cmd_check(o, out);
    }
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (lemmas_cmd->parsed()) return cmd_lemmas(o, out);
    if (survey_cmd->parsed()) return cmd_survey(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceCap& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace drgcay::cli
