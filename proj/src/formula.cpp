#include "succinct/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "succinct/error.hpp"

namespace succinct {

struct Formula::Node {
  FormulaKind kind;
  bool value = false;
  std::string name;
  std::vector<Formula> children;
};

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Const, value, {}, {}}));
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Atom, false, std::move(name), {}}));
}

Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, false, {}, {std::move(f)}}));
}

Formula Formula::conj(std::vector<Formula> parts) {
  if (parts.empty()) return constant(true);
  if (parts.size() == 1) return parts.front();
  return Formula(std::make_shared<const Node>(Node{FormulaKind::And, false, {}, std::move(parts)}));
}

Formula Formula::disj(std::vector<Formula> parts) {
  if (parts.empty()) return constant(false);
  if (parts.size() == 1) return parts.front();
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Or, false, {}, std::move(parts)}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Implies, false, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Iff, false, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::differs(Formula lhs, Formula rhs) {
  return negate(iff(std::move(lhs), std::move(rhs)));
}

FormulaKind Formula::kind() const { return node_->kind; }
bool Formula::value() const { return node_->value; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Const: return a.value() == b.value();
    case FormulaKind::Atom: return a.name() == b.name();
    default: return a.children() == b.children();
  }
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == FormulaKind::Atom) {
    out.insert(f.name());
    return;
  }
  for (const auto& c : f.children()) collect_atoms(c, out);
}

} // namespace

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  std::vector<std::string> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  return v;
}

bool eval_formula(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case FormulaKind::Const: return f.value();
    case FormulaKind::Atom: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) throw input_error("missing atom '" + f.name() + "' in assignment");
      return it->second;
    }
    case FormulaKind::Not: return !eval_formula(f.children()[0], assignment);
    case FormulaKind::And:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return eval_formula(c, assignment); });
    case FormulaKind::Or:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return eval_formula(c, assignment); });
    case FormulaKind::Implies:
      return !eval_formula(f.children()[0], assignment) || eval_formula(f.children()[1], assignment);
    case FormulaKind::Iff:
      return eval_formula(f.children()[0], assignment) == eval_formula(f.children()[1], assignment);
  }
  return false;
}

// Postfix program; evaluation uses a small value stack.
CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& variables) {
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < variables.size(); ++i) index.emplace(variables[i], i);
  auto emit = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case FormulaKind::Const: program_.push_back({g.kind(), g.value() ? 1U : 0U}); return;
      case FormulaKind::Atom: {
        auto it = index.find(g.name());
        if (it == index.end()) throw input_error("formula atom '" + g.name() + "' is not a known variable");
        program_.push_back({g.kind(), it->second});
        return;
      }
      default:
        for (const auto& c : g.children()) self(self, c);
        program_.push_back({g.kind(), static_cast<std::uint32_t>(g.children().size())});
    }
  };
  emit(emit, f);
}

bool CompiledFormula::eval(const Bits& values) const {
  thread_local std::vector<bool> stack;
  stack.clear();
  for (const auto& ins : program_) {
    switch (ins.kind) {
      case FormulaKind::Const: stack.push_back(ins.arg != 0); break;
      case FormulaKind::Atom: stack.push_back(values[ins.arg]); break;
      case FormulaKind::Not: stack.back() = !stack.back(); break;
      case FormulaKind::And:
      case FormulaKind::Or: {
        bool acc = ins.kind == FormulaKind::And;
        for (std::uint32_t i = 0; i < ins.arg; ++i) {
          bool v = stack.back();
          stack.pop_back();
          acc = ins.kind == FormulaKind::And ? (acc && v) : (acc || v);
        }
        stack.push_back(acc);
        break;
      }
      case FormulaKind::Implies: {
        bool rhs = stack.back();
        stack.pop_back();
        stack.back() = !stack.back() || rhs;
        break;
      }
      case FormulaKind::Iff: {
        bool rhs = stack.back();
        stack.pop_back();
        stack.back() = stack.back() == rhs;
        break;
      }
    }
  }
  return stack.back();
}

std::optional<Assignment> brute_sat(const Formula& f, std::size_t cap) {
  auto vars = atoms(f);
  if (vars.size() > cap)
    throw cap_exceeded("brute_sat: " + std::to_string(vars.size()) + " atoms exceed cap " + std::to_string(cap));
  CompiledFormula compiled(f, vars);
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t v = 0; v < total; ++v) {
    Bits values = to_bits(v, static_cast<unsigned>(vars.size()));
    if (compiled.eval(values)) {
      Assignment a;
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = values[i];
      return a;
    }
  }
  return std::nullopt;
}

namespace {

int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    default: return 6;
  }
}

std::string render(const Formula& f, int min_prec) {
  std::string s;
  const int p = precedence(f.kind());
  switch (f.kind()) {
    case FormulaKind::Const: s = f.value() ? "true" : "false"; break;
    case FormulaKind::Atom: s = f.name(); break;
    case FormulaKind::Not: s = "!" + render(f.children()[0], 5); break;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* op = f.kind() == FormulaKind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) s += op;
        s += render(f.children()[i], p + 1);
      }
      break;
    }
    case FormulaKind::Implies:
    case FormulaKind::Iff: {
      const char* op = f.kind() == FormulaKind::Implies ? " -> " : " <-> ";
      s = render(f.children()[0], p + 1) + op + render(f.children()[1], p);
      break;
    }
  }
  return p < min_prec ? "(" + s + ")" : s;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw input_error("formula parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept("<->")) return Formula::iff(lhs, parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept("->")) return Formula::implies(lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    std::vector<Formula> parts{parse_and()};
    while (accept("|")) parts.push_back(parse_and());
    return Formula::disj(std::move(parts));
  }

  Formula parse_and() {
    std::vector<Formula> parts{parse_unary()};
    while (accept("&")) parts.push_back(parse_unary());
    return Formula::conj(std::move(parts));
  }

  Formula parse_unary() {
    if (accept("!")) return Formula::negate(parse_unary());
    if (accept("(")) {
      Formula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected atom");
    std::string word(text_.substr(start, pos_ - start));
    if (word == "true") return Formula::constant(true);
    if (word == "false") return Formula::constant(false);
    if (std::isdigit(static_cast<unsigned char>(word.front()))) fail("identifier may not start with a digit");
    return Formula::atom(std::move(word));
  }
};

} // namespace

std::string to_string(const Formula& f) { return render(f, 0); }

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

} // namespace succinct
