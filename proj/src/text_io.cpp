#include "succinct/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "succinct/error.hpp"

namespace succinct {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tok;
  std::string rest;  // text after the first token
};

class Reader {
public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      ++number;
      start = end + 1;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      Line line;
      line.number = number;
      std::istringstream in{std::string(raw)};
      for (std::string t; in >> t;) line.tok.push_back(t);
      if (line.tok.empty()) continue;
      const auto first = raw.find(line.tok[0]);
      line.rest = std::string(raw.substr(first + line.tok[0].size()));
      lines_.push_back(std::move(line));
      if (end == text.size()) break;
    }
  }

  bool done() const { return pos_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) fail_eof();
    return lines_[pos_];
  }

  bool at(std::string_view keyword) const { return !done() && lines_[pos_].tok[0] == keyword; }

  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

  const Line& expect(std::string_view keyword) {
    const Line& l = peek();
    if (l.tok[0] != keyword) fail(l, "expected '" + std::string(keyword) + "', found '" + l.tok[0] + "'");
    ++pos_;
    return l;
  }

  void expect_done() const {
    if (!done()) fail(lines_[pos_], "unexpected '" + lines_[pos_].tok[0] + "' after the final 'end'");
  }

  [[noreturn]] static void fail(const Line& l, const std::string& what) {
    throw input_error("line " + std::to_string(l.number) + ": " + what);
  }

private:
  [[noreturn]] void fail_eof() const { throw input_error("unexpected end of input"); }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string bits_text(const Bits& b) { return b.empty() ? "-" : to_string(b); }

Bits parse_state(const Line& l, const std::string& text) {
  if (text == "-") return {};
  try {
    return parse_bits(text);
  } catch (const input_error& e) {
    Reader::fail(l, e.what());
  }
}

std::uint64_t parse_number(const Line& l, const std::string& text) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) Reader::fail(l, "expected a number, found '" + text + "'");
  return v;
}

const Line& expect_args(Reader& r, std::string_view keyword, std::size_t count) {
  const Line& l = r.expect(keyword);
  if (l.tok.size() != count + 1)
    Reader::fail(l, "'" + std::string(keyword) + "' takes " + std::to_string(count) + " argument(s)");
  return l;
}

std::vector<std::string> list_of(const Line& l) { return {l.tok.begin() + 1, l.tok.end()}; }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += " " + s;
  return out;
}

Circuit read_circuit_block(Reader& r) {
  const Line& head = expect_args(r, "circuit", 1);
  const std::string name = head.tok[1];
  auto inputs = list_of(r.expect("inputs"));
  auto outputs = list_of(r.expect("outputs"));
  std::vector<NamedGate> gates;
  while (r.at("gate")) {
    const Line& g = r.next();
    if (g.tok.size() < 4 || g.tok[2] != "=") Reader::fail(g, "expected 'gate <id> = <OP> <id>...'");
    NamedGate ng;
    ng.target = g.tok[1];
    try {
      ng.op = parse_op(g.tok[3]);
    } catch (const input_error& e) {
      Reader::fail(g, e.what());
    }
    ng.operands.assign(g.tok.begin() + 4, g.tok.end());
    gates.push_back(std::move(ng));
  }
  const Line& end = r.expect("end");
  try {
    return Circuit(name, std::move(inputs), std::move(gates), std::move(outputs));
  } catch (const input_error& e) {
    Reader::fail(end, e.what());
  }
}

std::vector<Circuit> read_circuit_blocks(Reader& r) {
  std::vector<Circuit> out;
  while (r.at("circuit")) out.push_back(read_circuit_block(r));
  return out;
}

template <class Fn>
auto read_whole(std::string_view text, Fn&& fn) {
  Reader r(text);
  auto value = fn(r);
  r.expect_done();
  return value;
}

} // namespace

std::string write_circuit(const Circuit& c) { return write_circuit(c, c.name()); }

std::string write_circuit(const Circuit& c, const std::string& name) {
  std::string out = "circuit " + name + "\n";
  out += "inputs" + join(c.input_names()) + "\n";
  out += "outputs" + join(c.output_names()) + "\n";
  for (const auto& g : c.named_gates())
    out += "gate " + g.target + " = " + std::string(op_name(g.op)) + join(g.operands) + "\n";
  return out + "end\n";
}

Circuit read_circuit(std::string_view text) {
  return read_whole(text, [](Reader& r) { return read_circuit_block(r); });
}

std::string write_qbf(const Qbf& q) {
  std::string out = "qbf\n";
  for (const auto& b : q.prefix)
    out += std::string(b.quantifier == Quantifier::Forall ? "forall" : "exists") + join(b.vars) + "\n";
  return out + "matrix " + to_string(q.matrix) + "\nend\n";
}

Qbf read_qbf(std::string_view text) {
  return read_whole(text, [](Reader& r) {
    r.expect("qbf");
    Qbf q;
    while (r.at("forall") || r.at("exists")) {
      const Line& l = r.next();
      if (l.tok.size() < 2) Reader::fail(l, "empty quantifier block");
      q.prefix.push_back({l.tok[0] == "forall" ? Quantifier::Forall : Quantifier::Exists, list_of(l)});
    }
    const Line& m = r.expect("matrix");
    try {
      q.matrix = parse_formula(m.rest);
      q.validate();
    } catch (const input_error& e) {
      Reader::fail(m, e.what());
    }
    r.expect("end");
    return q;
  });
}

std::string write_model(const DirectionalModel& m) {
  std::string out;
  for (const auto& c : m.circuits) out += write_circuit(c);
  return out;
}

DirectionalModel read_model(std::string_view text) {
  return read_whole(text, [](Reader& r) { return DirectionalModel{read_circuit_blocks(r)}; });
}

std::string write_seq(const PlanSeqRepr& s) {
  std::string out = "seq " + to_string(s.kind) + "\n";
  out += "vars" + join(s.vars) + "\n";
  out += "init " + bits_text(s.s0) + "\n";
  out += "len " + std::to_string(s.N) + "\n";
  out += "actions\n";
  for (const auto& a : s.actions) out += write_circuit(a.circuit, a.name);
  out += write_circuit(s.circuit);
  return out + "end\n";
}

PlanSeqRepr read_seq(std::string_view text) {
  return read_whole(text, [](Reader& r) {
    PlanSeqRepr s;
    const Line& head = expect_args(r, "seq", 1);
    try {
      s.kind = parse_seq_kind(head.tok[1]);
    } catch (const input_error& e) {
      Reader::fail(head, e.what());
    }
    s.vars = list_of(r.expect("vars"));
    const Line& init = expect_args(r, "init", 1);
    s.s0 = parse_state(init, init.tok[1]);
    const Line& len = expect_args(r, "len", 1);
    s.N = parse_number(len, len.tok[1]);
    const Line& acts = r.expect("actions");
    auto blocks = read_circuit_blocks(r);
    if (blocks.empty()) Reader::fail(acts, "missing representation circuit");
    s.circuit = blocks.back();
    blocks.pop_back();
    for (auto& c : blocks) s.actions.push_back({c.name(), std::move(c)});
    const Line& end = r.expect("end");
    try {
      s.validate_shape();
    } catch (const input_error& e) {
      Reader::fail(end, e.what());
    }
    return s;
  });
}

std::string write_polyplan(const PolyplanInstance& inst) {
  std::string out = "polyplan\n";
  out += "vars" + join(inst.vars) + "\n";
  out += "init " + bits_text(inst.init) + "\n";
  if (inst.goal_circuit)
    out += "goalcircuit\n" + write_circuit(*inst.goal_circuit);
  else
    out += "goal " + bits_text(inst.goal) + "\n";
  out += "actions\n";
  for (const auto& a : inst.actions) out += write_circuit(a.circuit, a.name);
  return out + "end\n";
}

PolyplanInstance read_polyplan(std::string_view text) {
  return read_whole(text, [](Reader& r) {
    PolyplanInstance inst;
    r.expect("polyplan");
    inst.vars = list_of(r.expect("vars"));
    const Line& init = expect_args(r, "init", 1);
    inst.init = parse_state(init, init.tok[1]);
    if (r.at("goalcircuit")) {
      r.next();
      inst.goal_circuit = read_circuit_block(r);
    } else {
      const Line& goal = expect_args(r, "goal", 1);
      inst.goal = parse_state(goal, goal.tok[1]);
    }
    r.expect("actions");
    for (auto& c : read_circuit_blocks(r)) inst.actions.push_back({c.name(), std::move(c)});
    const Line& end = r.expect("end");
    try {
      inst.validate();
    } catch (const input_error& e) {
      Reader::fail(end, e.what());
    }
    return inst;
  });
}

std::string write_plan(const Plan& plan, const ActionSet& actions) {
  std::string out = "plan\n";
  for (auto a : plan) {
    if (a >= actions.size()) throw input_error("plan step names action " + std::to_string(a) + " of " + std::to_string(actions.size()));
    out += actions[a].name + "\n";
  }
  return out + "end\n";
}

Plan read_plan(std::string_view text, const ActionSet& actions) {
  return read_whole(text, [&](Reader& r) {
    r.expect("plan");
    Plan plan;
    while (!r.at("end")) {
      const Line& l = r.next();
      if (l.tok.size() != 1) Reader::fail(l, "expected one action name per line");
      try {
        plan.push_back(action_index(actions, l.tok[0]));
      } catch (const input_error& e) {
        Reader::fail(l, e.what());
      }
    }
    r.expect("end");
    return plan;
  });
}

std::string write_lasso(const LassoModel& m) {
  std::string out = "lasso\nvars" + join(m.vars) + "\ninitpart\n";
  for (const auto& s : m.initial) out += bits_text(s) + "\n";
  out += "period\n";
  for (const auto& s : m.period) out += bits_text(s) + "\n";
  return out + "end\n";
}

LassoModel read_lasso(std::string_view text) {
  return read_whole(text, [](Reader& r) {
    LassoModel m;
    r.expect("lasso");
    m.vars = list_of(r.expect("vars"));
    auto states = [&](std::vector<State>& into) {
      while (!r.at("period") && !r.at("end")) {
        const Line& l = r.next();
        if (l.tok.size() != 1) Reader::fail(l, "expected one bitstring per line");
        into.push_back(parse_state(l, l.tok[0]));
      }
    };
    r.expect("initpart");
    states(m.initial);
    r.expect("period");
    states(m.period);
    const Line& end = r.expect("end");
    try {
      m.validate();
    } catch (const input_error& e) {
      Reader::fail(end, e.what());
    }
    return m;
  });
}

std::string write_slasso(const SuccinctLasso& m) {
  std::string out = "slasso " + to_string(m.kind) + "\nvars" + join(m.vars) + "\n";
  if (m.kind == LassoKind::SS) out += "init " + bits_text(m.s0) + "\n";
  out += "initlen " + std::to_string(m.n_init) + "\nperiodlen " + std::to_string(m.n_period) + "\n";
  return out + write_circuit(m.circuit) + "end\n";
}

SuccinctLasso read_slasso(std::string_view text) {
  return read_whole(text, [](Reader& r) {
    SuccinctLasso m;
    const Line& head = expect_args(r, "slasso", 1);
    if (head.tok[1] == "TS" || head.tok[1] == "ts")
      m.kind = LassoKind::TS;
    else if (head.tok[1] == "SS" || head.tok[1] == "ss")
      m.kind = LassoKind::SS;
    else
      Reader::fail(head, "unknown lasso kind '" + head.tok[1] + "' (expected TS or SS)");
    m.vars = list_of(r.expect("vars"));
    if (m.kind == LassoKind::SS) {
      const Line& init = expect_args(r, "init", 1);
      m.s0 = parse_state(init, init.tok[1]);
    }
    const Line& il = expect_args(r, "initlen", 1);
    m.n_init = parse_number(il, il.tok[1]);
    const Line& pl = expect_args(r, "periodlen", 1);
    m.n_period = parse_number(pl, pl.tok[1]);
    m.circuit = read_circuit_block(r);
    const Line& end = r.expect("end");
    try {
      m.validate_shape();
    } catch (const input_error& e) {
      Reader::fail(end, e.what());
    }
    return m;
  });
}

std::string detect_format(std::string_view text) {
  Reader r(text);
  return r.done() ? std::string() : r.peek().tok[0];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace succinct
