#include "succinct/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "succinct/acceptance.hpp"
#include "succinct/error.hpp"
#include "succinct/text_io.hpp"

namespace succinct {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  int exit = 0;
  std::string status = "ok";
  std::string text;                // file-format payload
  std::vector<std::string> lines;  // human-readable messages
  json fields = json::object();
};

Report payload(std::string text, std::string status = "ok") {
  Report r;
  r.text = std::move(text);
  r.status = std::move(status);
  return r;
}

Report verdict(bool ok, const std::string& yes, const std::string& no, const std::string& detail = {}) {
  Report r;
  r.exit = ok ? 0 : 1;
  r.status = ok ? yes : no;
  r.lines.push_back(detail.empty() ? r.status : r.status + ": " + detail);
  if (!detail.empty()) r.fields["detail"] = detail;
  return r;
}

Cnf3Encoding encoding(unsigned r, unsigned c) {
  if (r < 1 || c < 1) throw input_error("--r and --c must be positive");
  return Cnf3Encoding{r, c};
}

LtlFormula formula_arg(const std::string& text, const std::string& path) {
  if (!path.empty()) return parse_ltl(read_file(path));
  if (text.empty()) throw input_error("give --formula or --formula-file");
  return parse_ltl(text);
}

std::string well_formed(const std::string& text) {
  const std::string format = detect_format(text);
  // a model file is a sequence of circuit blocks
  if (format == "circuit") return read_model(text).circuits.size() == 1 ? "circuit" : "model";
  if (format == "qbf") read_qbf(text);
  else if (format == "seq") read_seq(text);
  else if (format == "polyplan") read_polyplan(text);
  else if (format == "lasso") read_lasso(text);
  else if (format == "slasso") read_slasso(text);
  else if (format == "plan") {
    // action names only resolve against an instance, so accept any name here
    ActionSet names;
    std::istringstream lines{std::string(text)};
    for (std::string line; std::getline(lines, line);) {
      std::istringstream words(line.substr(0, line.find('#')));
      std::string word;
      if (words >> word && word != "plan" && word != "end") names.push_back({word, Circuit{}});
    }
    read_plan(text, names);
  } else {
    parse_ltl(text);
    return "ltl";
  }
  return format;
}

LassoModel lasso_arg(const std::string& text) {
  return detect_format(text) == "slasso" ? expand(read_slasso(text)) : read_lasso(text);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Succinct representations of QBF models, plans and LTL lassos", "succinct"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = default_acceptance_seed;
  std::string output;
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("-o,--output", output, "write the produced file here instead of stdout");

  std::vector<std::pair<CLI::App*, std::function<Report()>>> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };

  // gen
  CLI::App* gen = app.add_subcommand("gen", "generate instances and constructions");
  gen->require_subcommand(1);
  unsigned k = 1, r = 2, c = 1, n = 2;
  std::uint64_t index = 0, length = 0;
  std::string in_path;
  bool witness = false, want_formula = false, sat_variant = false;

  auto* g = leaf(gen, "qbf-hard", "QBF family whose smallest model has size k+1");
  g->add_option("--k", k, "family parameter")->check(CLI::PositiveNumber);
  g->add_flag("--witness", witness, "emit the size k+1 model instead");
  actions.emplace_back(g, [&] {
    return payload(witness ? write_model(hard_family_witness(k)) : write_qbf(hard_family(k)));
  });

  g = leaf(gen, "sat-seq", "next-state sequence scanning every 3CNF formula and candidate model");
  g->add_option("--r", r, "variables per formula");
  g->add_option("--c", c, "clauses per formula");
  actions.emplace_back(g, [&] { return payload(write_seq(gen_sat_sequence(encoding(r, c)))); });

  g = leaf(gen, "sat-flag", "time/action sequence ending in the satisfiability bit of one formula");
  g->add_option("--r", r, "variables per formula");
  g->add_option("--c", c, "clauses per formula");
  g->add_option("--index", index, "formula number");
  actions.emplace_back(g, [&] {
    const auto enc = encoding(r, c);
    if (index >= enc.formula_count()) throw input_error("--index out of range");
    return payload(write_seq(gen_sat_timeaction_flag(decode_cnf(index, enc), r)));
  });

  g = leaf(gen, "sat-chunked", "time/action scan over all formulas, one chunk each");
  g->add_option("--r", r, "variables per formula");
  g->add_option("--c", c, "clauses per formula");
  actions.emplace_back(g, [&] { return payload(write_seq(gen_sat_timeaction_chunked(encoding(r, c)))); });

  g = leaf(gen, "sat-stateaction", "state/action scan over all formulas");
  g->add_option("--r", r, "variables per formula");
  g->add_option("--c", c, "clauses per formula");
  actions.emplace_back(g, [&] { return payload(write_seq(gen_sat_stateaction(encoding(r, c)))); });

  g = leaf(gen, "function-pair", "time/state sequence x0, f(x)1 for every x");
  g->add_option("circuit", in_path, "circuit file for f")->required();
  actions.emplace_back(g, [&] { return payload(write_seq(gen_function_pair_sequence(read_circuit(read_file(in_path))))); });

  g = leaf(gen, "function-chunk", "time/state sequence moving x to f(x) one bit at a time");
  g->add_option("circuit", in_path, "circuit file for f")->required();
  actions.emplace_back(g, [&] { return payload(write_seq(gen_function_chunk_sequence(read_circuit(read_file(in_path))))); });

  g = leaf(gen, "long-plan", "instance whose only plans are longer than k+1 actions");
  g->add_option("--k", length, "length bound");
  actions.emplace_back(g, [&] { return payload(write_polyplan(gen_long_plan_instance(length))); });

  g = leaf(gen, "unique-plan", "instance with a single plan encoding 3CNF satisfiability");
  g->add_option("--r", r, "variables per formula");
  g->add_option("--c", c, "clauses per formula");
  actions.emplace_back(g, [&] {
    encoding(r, c);
    return payload(write_polyplan(gen_unique_plan_instance(r, c)));
  });

  g = leaf(gen, "qbf-plan", "planning instance with a plan iff an exists-forall QBF is valid");
  g->add_option("qbf", in_path, "QBF file")->required();
  actions.emplace_back(g, [&] { return payload(write_polyplan(gen_qbf_instance(read_qbf(read_file(in_path))))); });

  g = leaf(gen, "ltl-counter", "LTL formula whose models count in binary");
  g->add_option("--n", n, "counter bits")->check(CLI::PositiveNumber);
  actions.emplace_back(g, [&] { return payload(to_string(count_formula(n)) + "\n"); });

  g = leaf(gen, "ltl-qbf", "LTL formula true on the counter model iff the QBF is valid");
  g->add_option("qbf", in_path, "QBF file")->required();
  g->add_flag("--sat", sat_variant, "satisfiability variant that also forces the counter");
  actions.emplace_back(g, [&] {
    const LtlReduction red = qbf_to_ltl(reindex_for_ltl(read_qbf(read_file(in_path))));
    return payload(to_string(sat_variant ? red.sat_formula : red.formula) + "\n");
  });

  g = leaf(gen, "lex-lasso", "lasso of the n-bit binary counter from zero");
  g->add_option("--n", n, "counter bits")->check(CLI::PositiveNumber);
  actions.emplace_back(g, [&] { return payload(write_lasso(lexicographic_model(n, 0))); });

  g = leaf(gen, "unique-model", "succinct lasso and formula with that lasso as unique model");
  g->add_option("seq", in_path, "TS or SS sequence file")->required();
  g->add_flag("--formula", want_formula, "emit the formula instead of the lasso");
  actions.emplace_back(g, [&] {
    const UniqueModelEmbedding e = embed_unique_model(read_seq(read_file(in_path)));
    return payload(want_formula ? to_string(e.formula) + "\n" : write_slasso(e.lasso));
  });

  // check
  CLI::App* check = app.add_subcommand("check", "verify models, plans, sequences and lassos");
  check->require_subcommand(0, 1);
  std::string wf_path, first, second, formula_text, formula_path, mode = "expand";
  check->add_option("--well-formed", wf_path, "only parse the file");
  actions.emplace_back(check, [&] {
    if (wf_path.empty()) throw input_error("check needs a subcommand or --well-formed");
    Report rep = verdict(true, "well-formed", "", well_formed(read_file(wf_path)));
    rep.fields["format"] = rep.fields["detail"];
    rep.fields.erase("detail");
    return rep;
  });

  g = leaf(check, "model", "QBF model against its formula");
  g->add_option("qbf", first, "QBF file")->required();
  g->add_option("model", second, "model file")->required();
  actions.emplace_back(g, [&] {
    const Qbf q = read_qbf(read_file(first));
    const DirectionalModel m = read_model(read_file(second));
    check_model_shape(q, m);
    Report rep = verdict(check_model(q, m), "valid", "invalid", "model size " + std::to_string(m.size()));
    rep.fields["size"] = m.size();
    return rep;
  });

  g = leaf(check, "plan", "plan or plan sequence against a planning instance");
  g->add_option("instance", first, "polyplan file")->required();
  g->add_option("plan", second, "plan or seq file")->required();
  actions.emplace_back(g, [&] {
    const PolyplanInstance inst = read_polyplan(read_file(first));
    const std::string text = read_file(second);
    SimulationStats stats;
    const Verdict v = detect_format(text) == "seq" ? simulate(inst, read_seq(text), {}, &stats)
                                                   : simulate(inst, read_plan(text, inst.actions), {}, &stats);
    Report rep = v.valid ? verdict(true, "valid", "invalid")
                         : verdict(false, "valid", "invalid",
                                   "step " + std::to_string(v.step) + ", " + to_string(v.reason) +
                                       (v.message.empty() ? "" : ": " + v.message));
    rep.fields["peak_states"] = stats.peak_states;
    if (!v.valid) rep.fields["step"] = v.step;
    return rep;
  });

  g = leaf(check, "seq", "every step of a plan sequence has a witnessing action");
  g->add_option("seq", first, "seq file")->required();
  actions.emplace_back(g, [&] {
    const ValidationReport v = validate(read_seq(read_file(first)));
    std::string detail;
    for (const auto& p : v.problems) detail += (detail.empty() ? "" : "; ") + p;
    Report rep = verdict(v.valid, "valid", "invalid", detail);
    rep.fields["problems"] = v.problems;
    return rep;
  });

  g = leaf(check, "lasso", "lasso or succinct lasso against an LTL formula");
  g->add_option("--formula", formula_text, "formula text");
  g->add_option("--formula-file", formula_path, "formula file");
  g->add_option("--mode", mode, "succinct lassos: expand or conjoin")->check(CLI::IsMember({"expand", "conjoin"}));
  g->add_option("lasso", first, "lasso or slasso file")->required();
  actions.emplace_back(g, [&] {
    const LtlFormula f = formula_arg(formula_text, formula_path);
    const std::string text = read_file(first);
    const bool ok = detect_format(text) == "slasso"
                        ? check_succinct_model(f, read_slasso(text), mode == "conjoin" ? CheckMode::Conjoin : CheckMode::Expand)
                        : ltl_eval(f, read_lasso(text));
    return verdict(ok, "satisfied", "falsified");
  });

  // convert
  CLI::App* conv = app.add_subcommand("convert", "convert a plan sequence between representation kinds");
  std::string target;
  conv->add_option("seq", first, "seq file")->required();
  conv->add_option("--to", target, "TS, SS, TA or SA")->required();
  actions.emplace_back(conv, [&] { return payload(write_seq(convert(read_seq(read_file(first)), parse_seq_kind(target)))); });

  // solve
  CLI::App* solve = app.add_subcommand("solve", "bounded model and plan search");
  solve->require_subcommand(1);
  std::optional<std::size_t> size, budget;
  std::string kind = "SS";
  auto guard = [&] {
    if (size && budget && *size > *budget)
      throw input_error("--size " + std::to_string(*size) + " exceeds --unary-budget " + std::to_string(*budget));
  };

  g = leaf(solve, "qbf", "QBF validity, or a model of total size at most --size");
  g->add_option("qbf", first, "QBF file")->required();
  g->add_option("--size", size, "size bound k (decimal)");
  g->add_option("--unary-budget", budget, "largest admissible --size");
  actions.emplace_back(g, [&] {
    guard();
    const Qbf q = read_qbf(read_file(first));
    if (!size) return verdict(qbf_brute_valid(q), "valid", "invalid");
    const auto m = bounded_model_exists(q, *size);
    if (!m) return verdict(false, "found", "absent", "no model of size <= " + std::to_string(*size));
    Report rep = payload(write_model(*m), "found");
    rep.fields["size"] = m->size();
    return rep;
  });

  g = leaf(solve, "plan", "shortest plan, or a succinct plan sequence of size at most --size");
  g->add_option("instance", first, "polyplan file")->required();
  g->add_option("--size", size, "size bound k (decimal)");
  g->add_option("--unary-budget", budget, "largest admissible --size");
  g->add_option("--kind", kind, "sequence kind for --size")->check(CLI::IsMember({"TS", "SS", "TA", "SA"}));
  actions.emplace_back(g, [&] {
    guard();
    const PolyplanInstance inst = read_polyplan(read_file(first));
    if (!size) {
      const auto p = search_plan(inst);
      if (!p) return verdict(false, "found", "absent", "no plan");
      Report rep = payload(write_plan(*p, inst.actions), "found");
      rep.fields["length"] = p->size();
      return rep;
    }
    const auto s = bounded_succinct_plan_exists(inst, *size, parse_seq_kind(kind));
    if (!s) return verdict(false, "found", "absent", "no " + kind + " sequence of size <= " + std::to_string(*size));
    return payload(write_seq(*s), "found");
  });

  g = leaf(solve, "ltl", "a lasso model of an LTL formula");
  g->add_option("--formula", formula_text, "formula text");
  g->add_option("--formula-file", formula_path, "formula file");
  actions.emplace_back(g, [&] {
    const auto m = find_model(formula_arg(formula_text, formula_path));
    if (!m) return verdict(false, "found", "absent", "unsatisfiable");
    return payload(write_lasso(*m), "found");
  });

  // eval
  CLI::App* eval = app.add_subcommand("eval", "evaluate circuits, sequences and LTL formulas");
  eval->require_subcommand(1);
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> at;
  std::size_t pos = 0;

  g = leaf(eval, "circuit", "circuit outputs, for given inputs or the whole table");
  g->add_option("circuit", first, "circuit file")->required();
  g->add_option("--input", inputs, "input bits (repeatable)");
  actions.emplace_back(g, [&] {
    const Circuit circ = read_circuit(read_file(first));
    std::vector<Bits> rows;
    for (const auto& s : inputs) rows.push_back(parse_bits(s));
    if (inputs.empty()) {
      if (circ.num_inputs() > 16) throw cap_exceeded("more than 16 inputs; give --input");
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << circ.num_inputs()); ++v)
        rows.push_back(to_bits(v, static_cast<unsigned>(circ.num_inputs())));
    }
    Report rep;
    json table = json::array();
    for (const auto& row : rows) {
      if (row.size() != circ.num_inputs()) throw input_error("input '" + to_string(row) + "' has the wrong width");
      const std::string o = to_string(circ.evaluate(row));
      rep.lines.push_back(to_string(row) + " -> " + o);
      table.push_back({{"input", to_string(row)}, {"output", o}});
    }
    rep.fields["size"] = circ.size();
    rep.fields["rows"] = table;
    return rep;
  });

  g = leaf(eval, "seq", "states of a plan sequence");
  g->add_option("seq", first, "seq file")->required();
  g->add_option("--at", at, "only element t");
  actions.emplace_back(g, [&] {
    const PlanSeqRepr s = read_seq(read_file(first));
    Report rep;
    if (at) {
      rep.lines.push_back(to_string(element_at(s, *at)));
      rep.fields["state"] = rep.lines.back();
      return rep;
    }
    const PlanTrace tr = expand(s);
    json states = json::array();
    for (std::size_t t = 0; t < tr.states.size(); ++t) {
      std::string line = std::to_string(t) + " " + to_string(tr.states[t]);
      if (t < tr.actions.size()) line += " " + s.actions[tr.actions[t]].name;
      rep.lines.push_back(line);
      states.push_back(to_string(tr.states[t]));
    }
    rep.fields["states"] = states;
    return rep;
  });

  g = leaf(eval, "ltl", "truth of an LTL formula at a lasso position");
  g->add_option("--formula", formula_text, "formula text");
  g->add_option("--formula-file", formula_path, "formula file");
  g->add_option("--pos", pos, "position, 0 = start");
  g->add_option("lasso", first, "lasso or slasso file")->required();
  actions.emplace_back(g, [&] {
    const bool value = ltl_eval(formula_arg(formula_text, formula_path), lasso_arg(read_file(first)), pos);
    Report rep;
    rep.lines.push_back(value ? "true" : "false");
    rep.fields["value"] = value;
    return rep;
  });

  // oracle
  CLI::App* oracle = app.add_subcommand("oracle", "run the acceptance criteria against independent oracles");
  std::vector<int> ids;
  bool timings = false;
  oracle->add_option("--criterion", ids, "criterion numbers (default all)")->check(CLI::Range(1, acceptance_criteria));
  oracle->add_flag("--timings", timings, "print run times (output is then not reproducible)");
  actions.emplace_back(oracle, [&] {
    if (ids.empty())
      for (int i = 1; i <= acceptance_criteria; ++i) ids.push_back(i);
    Report rep;
    json results = json::array();
    int failed = 0;
    for (int id : ids) {
      CriterionResult res = run_criterion(id, seed);
      failed += !res.passed;
      std::string line = format_result(res);
      if (!timings) line = line.substr(0, line.rfind(" ("));
      rep.lines.push_back(line);
      json j = {{"id", res.id}, {"title", res.title}, {"passed", res.passed}, {"detail", res.detail}};
      if (timings) j["seconds"] = res.seconds;
      results.push_back(j);
    }
    rep.exit = failed ? 1 : 0;
    rep.status = failed ? "fail" : "pass";
    rep.fields["criteria"] = results;
    return rep;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string command;
  auto emit_error = [&](int code, const std::string& message) {
    if (as_json)
      out << json{{"schema", cli_schema}, {"command", command}, {"status", "error"}, {"exit", code}, {"message", message}}
                 .dump(2)
          << "\n";
    else
      err << "error: " << message << "\n";
    return code;
  };

  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return emit_error(2, e.what());
  }

  std::function<Report()>* chosen = nullptr;
  for (auto& [sub, fn] : actions) {
    if (!sub->parsed()) continue;
    if (!sub->get_subcommands().empty()) continue;
    chosen = &fn;
    command = sub->get_parent() && sub->get_parent() != &app ? sub->get_parent()->get_name() + " " + sub->get_name()
                                                             : sub->get_name();
  }
  if (!chosen) return emit_error(2, "no command");

  Report rep;
  try {
    rep = (*chosen)();
  } catch (const cap_exceeded& e) {
    return emit_error(3, e.what());
  } catch (const input_error& e) {
    return emit_error(2, e.what());
  }

  if (!rep.text.empty() && !output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file || !(file << rep.text)) return emit_error(2, "cannot write '" + output + "'");
    rep.fields["written"] = output;
  }
  if (as_json) {
    json j = {{"schema", cli_schema}, {"command", command}, {"status", rep.status}, {"exit", rep.exit}};
    if (!rep.text.empty() && output.empty()) j["text"] = rep.text;
    for (auto& [key, value] : rep.fields.items()) j[key] = value;
    if (!rep.lines.empty() && !j.contains("detail") && rep.fields.empty()) j["lines"] = rep.lines;
    out << j.dump(2) << "\n";
  } else {
    if (output.empty()) out << rep.text;
    for (const auto& line : rep.lines) out << line << "\n";
  }
  return rep.exit;
}

} // namespace succinct
