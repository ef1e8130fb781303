#include "succinct/ltl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "succinct/circuit_builder.hpp"
#include "succinct/error.hpp"

namespace succinct {

using Word = CircuitBuilder::Word;
using Var = CircuitBuilder::Var;

// Formula nodes ---------------------------------------------------------------

struct LtlFormula::Node {
  LtlKind kind;
  bool value = false;
  std::string name;
  std::vector<LtlFormula> children;
};

namespace {
using L = LtlFormula;
}

LtlFormula LtlFormula::constant(bool value) {
  return L(std::make_shared<const Node>(Node{LtlKind::Const, value, {}, {}}));
}

LtlFormula LtlFormula::atom(std::string name) {
  return L(std::make_shared<const Node>(Node{LtlKind::Atom, false, std::move(name), {}}));
}

LtlFormula LtlFormula::negate(LtlFormula f) {
  return L(std::make_shared<const Node>(Node{LtlKind::Not, false, {}, {std::move(f)}}));
}

LtlFormula LtlFormula::conj(std::vector<LtlFormula> parts) {
  if (parts.empty()) return constant(true);
  if (parts.size() == 1) return parts.front();
  return L(std::make_shared<const Node>(Node{LtlKind::And, false, {}, std::move(parts)}));
}

LtlFormula LtlFormula::disj(std::vector<LtlFormula> parts) {
  if (parts.empty()) return constant(false);
  if (parts.size() == 1) return parts.front();
  return L(std::make_shared<const Node>(Node{LtlKind::Or, false, {}, std::move(parts)}));
}

LtlFormula LtlFormula::implies(LtlFormula lhs, LtlFormula rhs) {
  return L(std::make_shared<const Node>(Node{LtlKind::Implies, false, {}, {std::move(lhs), std::move(rhs)}}));
}

LtlFormula LtlFormula::iff(LtlFormula lhs, LtlFormula rhs) {
  return L(std::make_shared<const Node>(Node{LtlKind::Iff, false, {}, {std::move(lhs), std::move(rhs)}}));
}

LtlFormula LtlFormula::differs(LtlFormula lhs, LtlFormula rhs) { return negate(iff(std::move(lhs), std::move(rhs))); }

LtlFormula LtlFormula::next(LtlFormula f, unsigned times) {
  for (unsigned i = 0; i < times; ++i)
    f = L(std::make_shared<const Node>(Node{LtlKind::Next, false, {}, {std::move(f)}}));
  return f;
}

LtlFormula LtlFormula::finally(LtlFormula f) {
  return L(std::make_shared<const Node>(Node{LtlKind::Finally, false, {}, {std::move(f)}}));
}

LtlFormula LtlFormula::globally(LtlFormula f) {
  return L(std::make_shared<const Node>(Node{LtlKind::Globally, false, {}, {std::move(f)}}));
}

LtlFormula LtlFormula::until(LtlFormula lhs, LtlFormula rhs) {
  return L(std::make_shared<const Node>(Node{LtlKind::Until, false, {}, {std::move(lhs), std::move(rhs)}}));
}

LtlFormula LtlFormula::from_formula(const Formula& f, const std::function<LtlFormula(const std::string&)>& atom_of) {
  std::vector<LtlFormula> kids;
  for (const auto& c : f.children()) kids.push_back(from_formula(c, atom_of));
  switch (f.kind()) {
    case FormulaKind::Const: return constant(f.value());
    case FormulaKind::Atom: return atom_of(f.name());
    case FormulaKind::Not: return negate(kids[0]);
    case FormulaKind::And: return conj(std::move(kids));
    case FormulaKind::Or: return disj(std::move(kids));
    case FormulaKind::Implies: return implies(kids[0], kids[1]);
    case FormulaKind::Iff: return iff(kids[0], kids[1]);
  }
  return constant(false);
}

LtlFormula LtlFormula::from_formula(const Formula& f) {
  return from_formula(f, [](const std::string& n) { return atom(n); });
}

LtlKind LtlFormula::kind() const { return node_->kind; }
bool LtlFormula::value() const { return node_->value; }
const std::string& LtlFormula::name() const { return node_->name; }
const std::vector<LtlFormula>& LtlFormula::children() const { return node_->children; }

bool operator==(const LtlFormula& a, const LtlFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LtlKind::Const: return a.value() == b.value();
    case LtlKind::Atom: return a.name() == b.name();
    default: return a.children() == b.children();
  }
}

namespace {

void collect_atoms(const LtlFormula& f, std::set<std::string>& out) {
  if (f.kind() == LtlKind::Atom) out.insert(f.name());
  for (const auto& c : f.children()) collect_atoms(c, out);
}

} // namespace

std::vector<std::string> atoms(const LtlFormula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  std::vector<std::string> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  return out;
}

std::size_t depth(const LtlFormula& f) {
  std::size_t d = 0;
  for (const auto& c : f.children()) d = std::max(d, depth(c) + 1);
  return d;
}

// Text ----------------------------------------------------------------------

namespace {

int precedence(LtlKind k) {
  switch (k) {
    case LtlKind::Iff: return 1;
    case LtlKind::Implies: return 2;
    case LtlKind::Or: return 3;
    case LtlKind::And: return 4;
    case LtlKind::Until: return 5;
    case LtlKind::Not:
    case LtlKind::Next:
    case LtlKind::Finally:
    case LtlKind::Globally: return 6;
    default: return 7;
  }
}

std::string render(const LtlFormula& f, int min_prec) {
  std::string s;
  const int p = precedence(f.kind());
  const auto& k = f.children();
  switch (f.kind()) {
    case LtlKind::Const: s = f.value() ? "true" : "false"; break;
    case LtlKind::Atom: s = f.name(); break;
    case LtlKind::Not: s = "!" + render(k[0], 6); break;
    case LtlKind::Next: s = "X " + render(k[0], 6); break;
    case LtlKind::Finally: s = "F " + render(k[0], 6); break;
    case LtlKind::Globally: s = "G " + render(k[0], 6); break;
    case LtlKind::Until: s = render(k[0], 5) + " U " + render(k[1], 6); break;
    case LtlKind::And:
    case LtlKind::Or: {
      const char* op = f.kind() == LtlKind::And ? " & " : " | ";
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += op;
        s += render(k[i], p + 1);
      }
      break;
    }
    case LtlKind::Implies:
    case LtlKind::Iff: {
      const char* op = f.kind() == LtlKind::Implies ? " -> " : " <-> ";
      s = render(k[0], p + 1) + op + render(k[1], p);
      break;
    }
  }
  return p < min_prec ? "(" + s + ")" : s;
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  LtlFormula parse() {
    LtlFormula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw input_error("LTL parse error at offset " + std::to_string(pos_) + ": " + what);
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

  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && is_word_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool accept_word(std::string_view w) {
    if (peek_word() != w) return false;
    pos_ += w.size();
    return true;
  }

  LtlFormula parse_iff() {
    LtlFormula lhs = parse_implies();
    if (accept("<->")) return L::iff(lhs, parse_iff());
    return lhs;
  }

  LtlFormula parse_implies() {
    LtlFormula lhs = parse_or();
    if (accept("->")) return L::implies(lhs, parse_implies());
    return lhs;
  }

  LtlFormula parse_or() {
    std::vector<LtlFormula> parts{parse_and()};
    while (accept("|")) parts.push_back(parse_and());
    return L::disj(std::move(parts));
  }

  LtlFormula parse_and() {
    std::vector<LtlFormula> parts{parse_until()};
    while (accept("&")) parts.push_back(parse_until());
    return L::conj(std::move(parts));
  }

  LtlFormula parse_until() {
    LtlFormula lhs = parse_unary();
    while (accept_word("U")) lhs = L::until(lhs, parse_unary());
    return lhs;
  }

  LtlFormula parse_unary() {
    if (accept("!")) return L::negate(parse_unary());
    if (accept("(")) {
      LtlFormula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    std::string word(peek_word());
    if (word.empty()) fail("expected atom");
    pos_ += word.size();
    if (word == "X") return L::next(parse_unary());
    if (word == "F") return L::finally(parse_unary());
    if (word == "G") return L::globally(parse_unary());
    if (word == "U") fail("'U' needs a left operand");
    if (word == "true") return L::constant(true);
    if (word == "false") return L::constant(false);
    if (std::isdigit(static_cast<unsigned char>(word.front()))) fail("identifier may not start with a digit");
    return L::atom(std::move(word));
  }
};

} // namespace

std::string to_string(const LtlFormula& f) { return render(f, 0); }

LtlFormula parse_ltl(std::string_view text) { return Parser(text).parse(); }

// Subformula closure ----------------------------------------------------------

namespace {

/// Structurally distinct subformulas, children before parents.
struct Closure {
  struct Entry {
    LtlKind kind;
    bool value;
    std::string name;
    std::vector<std::size_t> kids;
  };
  std::vector<Entry> entries;
  std::map<std::tuple<int, bool, std::string, std::vector<std::size_t>>, std::size_t> index;

  std::size_t add(const LtlFormula& f) {
    std::vector<std::size_t> kids;
    for (const auto& c : f.children()) kids.push_back(add(c));
    if (f.kind() == LtlKind::And || f.kind() == LtlKind::Or) {
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    }
    const bool value = f.kind() == LtlKind::Const && f.value();
    std::string name = f.kind() == LtlKind::Atom ? f.name() : std::string();
    auto key = std::make_tuple(static_cast<int>(f.kind()), value, name, kids);
    if (auto it = index.find(key); it != index.end()) return it->second;
    entries.push_back({f.kind(), value, std::move(name), std::move(kids)});
    index.emplace(std::move(key), entries.size() - 1);
    return entries.size() - 1;
  }
};

bool is_temporal(LtlKind k) {
  return k == LtlKind::Next || k == LtlKind::Finally || k == LtlKind::Globally || k == LtlKind::Until;
}

} // namespace

void LassoModel::validate() const {
  if (period.empty()) throw input_error("lasso period must not be empty");
  for (const auto* part : {&initial, &period})
    for (const auto& s : *part)
      if (s.size() != vars.size())
        throw input_error("lasso state has " + std::to_string(s.size()) + " bits, expected " +
                          std::to_string(vars.size()));
}

bool ltl_eval(const LtlFormula& f, const LassoModel& m, std::size_t pos) {
  m.validate();
  const std::size_t n = m.length();
  if (pos >= n) throw input_error("position " + std::to_string(pos) + " outside the lasso of length " + std::to_string(n));
  const std::size_t I = m.initial.size();
  auto succ = [&](std::size_t i) { return i + 1 < n ? i + 1 : I; };
  std::map<std::string, std::size_t> var_index;
  for (std::size_t i = 0; i < m.vars.size(); ++i) var_index.emplace(m.vars[i], i);

  Closure c;
  const std::size_t root = c.add(f);
  std::vector<std::vector<char>> val(c.entries.size(), std::vector<char>(n, 0));
  for (std::size_t e = 0; e < c.entries.size(); ++e) {
    const auto& en = c.entries[e];
    auto& v = val[e];
    auto kid = [&](std::size_t k) -> const std::vector<char>& { return val[en.kids[k]]; };
    switch (en.kind) {
      case LtlKind::Const: std::fill(v.begin(), v.end(), en.value); break;
      case LtlKind::Atom: {
        auto it = var_index.find(en.name);
        for (std::size_t i = 0; i < n; ++i) v[i] = it != var_index.end() && m.at(i)[it->second];
        break;
      }
      case LtlKind::Not:
        for (std::size_t i = 0; i < n; ++i) v[i] = !kid(0)[i];
        break;
      case LtlKind::And:
        for (std::size_t i = 0; i < n; ++i) {
          v[i] = 1;
          for (auto k : en.kids) v[i] = v[i] && val[k][i];
        }
        break;
      case LtlKind::Or:
        for (std::size_t i = 0; i < n; ++i) {
          v[i] = 0;
          for (auto k : en.kids) v[i] = v[i] || val[k][i];
        }
        break;
      case LtlKind::Implies:
        for (std::size_t i = 0; i < n; ++i) v[i] = !kid(0)[i] || kid(1)[i];
        break;
      case LtlKind::Iff:
        for (std::size_t i = 0; i < n; ++i) v[i] = kid(0)[i] == kid(1)[i];
        break;
      case LtlKind::Next:
        for (std::size_t i = 0; i < n; ++i) v[i] = kid(0)[succ(i)];
        break;
      case LtlKind::Finally:
      case LtlKind::Globally:
      case LtlKind::Until: {
        // least (F, U) or greatest (G) fixpoint on the period: two backward
        // passes settle every position, then one pass over the initial part
        const bool greatest = en.kind == LtlKind::Globally;
        auto step = [&](std::size_t i) {
          const bool nxt = v[succ(i)];
          switch (en.kind) {
            case LtlKind::Finally: return kid(0)[i] || nxt;
            case LtlKind::Globally: return kid(0)[i] && nxt;
            default: return kid(1)[i] || (kid(0)[i] && nxt);
          }
        };
        for (std::size_t i = I; i < n; ++i) v[i] = greatest;
        for (int pass = 0; pass < 2; ++pass)
          for (std::size_t i = n; i-- > I;) v[i] = step(i);
        for (std::size_t i = I; i-- > 0;) v[i] = step(i);
        break;
      }
    }
  }
  return val[root][pos];
}

LassoModel canonicalize(const LassoModel& m) {
  m.validate();
  LassoModel out = m;
  auto& p = out.period;
  const std::size_t len = p.size();
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = p[i] == p[i - d];
    if (periodic) {
      p.resize(d);
      break;
    }
  }
  while (!out.initial.empty() && out.initial.back() == p.back()) {
    std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
    out.initial.pop_back();
  }
  return out;
}

// Counters ------------------------------------------------------------------

LtlFormula count_step(const std::vector<std::string>& vars, unsigned stride) {
  if (vars.empty()) throw input_error("counter needs at least one variable");
  auto x = [&](std::size_t i) { return L::atom(vars[i]); };
  auto later = [&](LtlFormula f) { return L::next(std::move(f), stride); };
  const std::size_t n = vars.size();
  std::vector<LtlFormula> parts{L::differs(x(n - 1), later(x(n - 1)))};
  for (std::size_t i = 0; i + 1 < n; ++i)
    parts.push_back(L::iff(L::conj({x(i + 1), later(L::negate(x(i + 1)))}), L::differs(x(i), later(x(i)))));
  return L::conj(std::move(parts));
}

LtlFormula count_formula(const std::vector<std::string>& vars) { return L::globally(count_step(vars)); }

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

} // namespace

LtlFormula count_formula(unsigned n) { return count_formula(numbered("x", n)); }

LassoModel lexicographic_model(const std::vector<std::string>& vars, std::uint64_t start,
                               const ConstantExtras& extras) {
  const std::size_t n = vars.size();
  if (n == 0 || n > 20) throw input_error("lexicographic model needs 1 to 20 counter variables");
  const std::uint64_t count = std::uint64_t{1} << n;
  if (start >= count) throw input_error("start value out of range");
  LassoModel m;
  m.vars = vars;
  Bits tail;
  for (const auto& [name, value] : extras) {
    m.vars.push_back(name);
    tail.push_back(value);
  }
  for (std::uint64_t t = 0; t < count; ++t)
    m.period.push_back(concat(to_bits((start + t) % count, static_cast<unsigned>(n)), tail));
  return m;
}

LassoModel lexicographic_model(unsigned n, std::uint64_t start, const ConstantExtras& extras) {
  return lexicographic_model(numbered("x", n), start, extras);
}

// QBF reduction -------------------------------------------------------------

namespace {

Formula rename_atoms(const Formula& f, const std::map<std::string, std::string>& names) {
  std::vector<Formula> kids;
  for (const auto& c : f.children()) kids.push_back(rename_atoms(c, names));
  switch (f.kind()) {
    case FormulaKind::Const: return f;
    case FormulaKind::Atom: {
      auto it = names.find(f.name());
      return it == names.end() ? f : Formula::atom(it->second);
    }
    case FormulaKind::Not: return Formula::negate(kids[0]);
    case FormulaKind::And: return Formula::conj(std::move(kids));
    case FormulaKind::Or: return Formula::disj(std::move(kids));
    case FormulaKind::Implies: return Formula::implies(kids[0], kids[1]);
    case FormulaKind::Iff: return Formula::iff(kids[0], kids[1]);
  }
  return f;
}

std::string xname(std::size_t i) { return "x" + std::to_string(i); }

} // namespace

Qbf reindex_for_ltl(const Qbf& q) {
  q.validate();
  std::vector<std::pair<Quantifier, std::string>> flat;
  for (const auto& b : q.prefix)
    for (const auto& v : b.vars) flat.emplace_back(b.quantifier, v);
  if (flat.empty()) throw input_error("formula has no quantified variables");
  std::map<std::string, std::string> names;
  Qbf out;
  for (std::size_t k = 0; k < flat.size(); ++k) {
    const std::string name = xname(2 * (flat.size() - k) - 1);
    names[flat[k].second] = name;
    out.prefix.push_back({flat[k].first, {name}});
  }
  out.matrix = rename_atoms(q.matrix, names);
  return out;
}

LtlReduction qbf_to_ltl(const Qbf& q) {
  q.validate();
  const std::size_t m = q.prefix.size();
  if (m == 0) throw input_error("formula has no quantified variables");
  const std::size_t n = 2 * m - 1;
  for (std::size_t k = 0; k < m; ++k)
    if (q.prefix[k].vars.size() != 1 || q.prefix[k].vars[0] != xname(n - 2 * k))
      throw input_error("expected single-variable blocks x" + std::to_string(n) + ", x" + std::to_string(n - 2) +
                        ", ..., x1 (see reindex_for_ltl)");
  auto x = [](std::size_t i) { return L::atom(xname(i)); };
  const LtlFormula matrix = L::from_formula(q.matrix);

  // prefix[m-1] binds x1, prefix[0] binds xn
  auto quant = [&](std::size_t i) { return q.prefix[m - 1 - (i - 1) / 2].quantifier; };
  LtlFormula cur = quant(1) == Quantifier::Forall ? L::until(matrix, x(2))
                                                  : L::negate(L::until(L::negate(matrix), x(2)));
  for (std::size_t i = 1; i + 2 <= n; i += 2) {
    std::vector<LtlFormula> low;
    for (std::size_t j = i + 1; j >= 1; --j) low.push_back(L::negate(x(j)));
    const LtlFormula guard = L::conj(std::move(low));
    if (quant(i + 2) == Quantifier::Forall)
      cur = L::until(L::implies(guard, cur), x(i + 3));
    else
      cur = L::negate(L::until(L::implies(guard, L::negate(cur)), x(i + 3)));
  }

  LtlReduction r;
  r.formula = cur;
  for (std::size_t i = n + 1; i >= 1; --i) r.vars.push_back(xname(i));
  std::vector<LtlFormula> parts{cur, count_formula(r.vars)};
  for (const auto& v : r.vars) parts.push_back(L::negate(L::atom(v)));
  r.sat_formula = L::conj(std::move(parts));
  return r;
}

// Model search --------------------------------------------------------------

std::optional<LassoModel> find_model(const LtlFormula& f, const FindModelLimits& limits) {
  Closure c;
  const std::size_t root = c.add(f);
  const std::size_t size = c.entries.size();
  if (size > 64) throw cap_exceeded("closure of " + std::to_string(size) + " subformulas exceeds 64");
  std::vector<std::size_t> free_entries, atom_entries, temporal;
  for (std::size_t e = 0; e < size; ++e) {
    const auto k = c.entries[e].kind;
    if (k == LtlKind::Atom) atom_entries.push_back(e);
    if (k == LtlKind::Atom || is_temporal(k)) free_entries.push_back(e);
    if (is_temporal(k)) temporal.push_back(e);
  }
  if (free_entries.size() > limits.max_free)
    throw cap_exceeded(std::to_string(free_entries.size()) + " free subformulas exceed the cap of " +
                       std::to_string(limits.max_free));

  using Mask = std::uint64_t;
  auto bit = [](Mask m, std::size_t e) { return ((m >> e) & 1U) != 0; };
  const std::size_t count = std::size_t{1} << free_entries.size();
  std::vector<Mask> nodes(count);
  for (std::size_t a = 0; a < count; ++a) {
    Mask m = 0;
    for (std::size_t i = 0; i < free_entries.size(); ++i)
      if ((a >> i) & 1U) m |= Mask{1} << free_entries[i];
    for (std::size_t e = 0; e < size; ++e) {
      const auto& en = c.entries[e];
      bool v;
      switch (en.kind) {
        case LtlKind::Const: v = en.value; break;
        case LtlKind::Not: v = !bit(m, en.kids[0]); break;
        case LtlKind::And:
          v = true;
          for (auto k : en.kids) v = v && bit(m, k);
          break;
        case LtlKind::Or:
          v = false;
          for (auto k : en.kids) v = v || bit(m, k);
          break;
        case LtlKind::Implies: v = !bit(m, en.kids[0]) || bit(m, en.kids[1]); break;
        case LtlKind::Iff: v = bit(m, en.kids[0]) == bit(m, en.kids[1]); break;
        default: continue;
      }
      if (v) m |= Mask{1} << e;
    }
    nodes[a] = m;
  }

  auto edge = [&](Mask s, Mask t) {
    for (auto e : temporal) {
      const auto& en = c.entries[e];
      bool want;
      switch (en.kind) {
        case LtlKind::Next: want = bit(t, en.kids[0]); break;
        case LtlKind::Finally: want = bit(s, en.kids[0]) || bit(t, e); break;
        case LtlKind::Globally: want = bit(s, en.kids[0]) && bit(t, e); break;
        default: want = bit(s, en.kids[1]) || (bit(s, en.kids[0]) && bit(t, e)); break;
      }
      if (bit(s, e) != want) return false;
    }
    return true;
  };

  // eventualities: A U B and F B promise B; a missing G A promises !A
  auto promises = [&](Mask s, std::size_t e) {
    const auto k = c.entries[e].kind;
    if (k == LtlKind::Until || k == LtlKind::Finally) return bit(s, e);
    return k == LtlKind::Globally && !bit(s, e);
  };
  auto keeps = [&](Mask s, std::size_t e) {
    const auto& en = c.entries[e];
    switch (en.kind) {
      case LtlKind::Until: return bit(s, en.kids[1]);
      case LtlKind::Finally: return bit(s, en.kids[0]);
      default: return !bit(s, en.kids[0]);
    }
  };

  // reachable graph from the sets containing f
  std::vector<std::vector<std::size_t>> adj(count);
  std::vector<char> reached(count, 0);
  std::deque<std::size_t> queue;
  for (std::size_t a = 0; a < count; ++a)
    if (bit(nodes[a], root)) {
      reached[a] = 1;
      queue.push_back(a);
    }
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < count; ++v)
      if (edge(nodes[u], nodes[v])) {
        adj[u].push_back(v);
        if (!reached[v]) {
          reached[v] = 1;
          queue.push_back(v);
        }
      }
  }

  // SCCs of the subgraph on `alive` (iterative Tarjan)
  auto sccs = [&](const std::vector<char>& alive) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<long> idx(count, -1), low(count, 0);
    std::vector<char> on_stack(count, 0);
    std::vector<std::size_t> stack;
    long counter = 0;
    for (std::size_t s = 0; s < count; ++s) {
      if (!alive[s] || idx[s] >= 0) continue;
      std::vector<std::pair<std::size_t, std::size_t>> work{{s, 0}};
      idx[s] = low[s] = counter++;
      stack.push_back(s);
      on_stack[s] = 1;
      while (!work.empty()) {
        auto& [u, i] = work.back();
        if (i < adj[u].size()) {
          const auto v = adj[u][i++];
          if (!alive[v]) continue;
          if (idx[v] < 0) {
            idx[v] = low[v] = counter++;
            stack.push_back(v);
            on_stack[v] = 1;
            work.emplace_back(v, 0);
          } else if (on_stack[v]) {
            low[u] = std::min(low[u], idx[v]);
          }
          continue;
        }
        const auto done = u;
        work.pop_back();
        if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
        if (low[done] == idx[done]) {
          std::vector<std::size_t> comp;
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
          } while (w != done);
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
      }
    }
    return out;
  };

  auto has_edge = [&](std::size_t u, std::size_t v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  };

  // Emerson-Lei pruning: drop nodes whose eventualities the component cannot fulfil
  std::vector<char> good(count, 0);
  std::vector<std::vector<std::size_t>> pending;
  {
    auto first = sccs(reached);
    pending.assign(first.begin(), first.end());
  }
  while (!pending.empty()) {
    auto comp = std::move(pending.back());
    pending.pop_back();
    if (comp.size() == 1 && !has_edge(comp[0], comp[0])) continue;
    std::vector<char> alive(count, 0);
    bool pruned = false;
    for (auto u : comp) {
      bool ok = true;
      for (auto e : temporal) {
        if (!promises(nodes[u], e)) continue;
        bool kept = false;
        for (auto v : comp) kept = kept || keeps(nodes[v], e);
        ok = ok && kept;
      }
      alive[u] = ok;
      pruned = pruned || !ok;
    }
    if (!pruned) {
      for (auto u : comp) good[u] = 1;
      continue;
    }
    for (auto& sub : sccs(alive)) pending.push_back(std::move(sub));
  }

  // shortest path from an initial set into a good component
  std::vector<long> parent(count, -2);
  queue.clear();
  for (std::size_t a = 0; a < count; ++a)
    if (bit(nodes[a], root)) {
      parent[a] = -1;
      queue.push_back(a);
    }
  long target = -1;
  while (!queue.empty() && target < 0) {
    const auto u = queue.front();
    queue.pop_front();
    if (good[u]) {
      target = static_cast<long>(u);
      break;
    }
    for (auto v : adj[u])
      if (parent[v] == -2) {
        parent[v] = static_cast<long>(u);
        queue.push_back(v);
      }
  }
  if (target < 0) return std::nullopt;

  std::vector<std::size_t> prefix;
  for (long u = parent[target]; u >= 0; u = parent[u]) prefix.push_back(static_cast<std::size_t>(u));
  std::reverse(prefix.begin(), prefix.end());

  // closed walk from the target, extended until it fulfils its own eventualities
  std::vector<char> in_comp(count, 0);
  {
    std::vector<char> alive(count, 0);
    for (std::size_t u = 0; u < count; ++u) alive[u] = good[u];
    for (auto& comp : sccs(alive))
      if (std::binary_search(comp.begin(), comp.end(), static_cast<std::size_t>(target)))
        for (auto u : comp) in_comp[u] = 1;
  }
  // nodes after `from` up to the nearest one satisfying `stop`, at least one step
  auto path_within = [&](std::size_t from, const std::function<bool(std::size_t)>& stop) {
    std::vector<long> par(count, -2);
    std::deque<std::size_t> q;
    long found = -1;
    auto visit = [&](std::size_t u, std::size_t v) {
      if (!in_comp[v] || par[v] != -2) return;
      par[v] = static_cast<long>(u);
      q.push_back(v);
    };
    for (auto v : adj[from]) visit(from, v);
    while (!q.empty() && found < 0) {
      const auto u = q.front();
      q.pop_front();
      if (stop(u)) {
        found = static_cast<long>(u);
        break;
      }
      for (auto v : adj[u]) visit(u, v);
    }
    if (found < 0) throw std::logic_error("component is not strongly connected");
    std::vector<std::size_t> path;
    for (std::size_t u = static_cast<std::size_t>(found);;) {
      path.push_back(u);
      const auto p = static_cast<std::size_t>(par[u]);
      if (p == from) break;
      u = p;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  const auto home = static_cast<std::size_t>(target);
  std::vector<std::size_t> walk{home};
  std::size_t at = home;
  for (;;) {
    auto back = path_within(at, [&](std::size_t u) { return u == home; });
    std::vector<std::size_t> loop = walk;
    loop.insert(loop.end(), back.begin(), back.end() - 1);
    long missing = -1;
    for (auto e : temporal) {
      bool promised = false, kept = false;
      for (auto u : loop) {
        promised = promised || promises(nodes[u], e);
        kept = kept || keeps(nodes[u], e);
      }
      if (promised && !kept) {
        missing = static_cast<long>(e);
        break;
      }
    }
    if (missing < 0) {
      walk = std::move(loop);
      break;
    }
    auto ext = path_within(at, [&](std::size_t u) { return keeps(nodes[u], static_cast<std::size_t>(missing)); });
    walk.insert(walk.end(), ext.begin(), ext.end());
    at = walk.back();
  }

  LassoModel model;
  std::vector<std::pair<std::string, std::size_t>> atom_order;
  for (auto e : atom_entries) atom_order.emplace_back(c.entries[e].name, e);
  std::sort(atom_order.begin(), atom_order.end(),
            [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
  for (const auto& a : atom_order) model.vars.push_back(a.first);
  auto project = [&](std::size_t u) {
    State s;
    for (const auto& a : atom_order) s.push_back(bit(nodes[u], a.second));
    return s;
  };
  for (auto u : prefix) model.initial.push_back(project(u));
  for (auto u : walk) model.period.push_back(project(u));
  model = canonicalize(model);
  if (!ltl_eval(f, model, 0)) throw std::logic_error("find_model produced a lasso that falsifies the formula");
  return model;
}

// Succinct lassos -------------------------------------------------------------

std::string to_string(LassoKind k) { return k == LassoKind::TS ? "TS" : "SS"; }

void SuccinctLasso::validate_shape() const {
  const std::size_t n = vars.size();
  if (n_period == 0) throw input_error("lasso period must not be empty");
  if (kind == LassoKind::TS) {
    const std::uint64_t total = n_init + n_period;
    if (circuit.num_inputs() >= 63 || circuit.num_inputs() < width_for(total))
      throw input_error("time/state lasso circuit needs at least " + std::to_string(width_for(total)) +
                        " time inputs");
    if (circuit.num_outputs() != n) throw input_error("time/state lasso circuit must output the state");
  } else {
    if (s0.size() != n) throw input_error("initial state width differs from the variable count");
    if (circuit.num_inputs() != n || circuit.num_outputs() != n)
      throw input_error("next-state lasso circuit must map the state to the state");
  }
}

LassoModel expand(const SuccinctLasso& m, std::uint64_t cap) {
  m.validate_shape();
  const std::uint64_t total = m.n_init + m.n_period;
  if (total > cap) throw cap_exceeded("lasso of " + std::to_string(total) + " states exceeds cap " + std::to_string(cap));
  LassoModel out;
  out.vars = m.vars;
  std::vector<State> states;
  if (m.kind == LassoKind::TS) {
    const auto w = static_cast<unsigned>(m.circuit.num_inputs());
    for (std::uint64_t p = 0; p < total; ++p) states.push_back(m.circuit.evaluate(to_bits(p, w)));
  } else {
    std::set<State> seen;
    State s = m.s0;
    for (std::uint64_t p = 0; p < total; ++p) {
      if (!seen.insert(s).second) throw input_error("next-state lasso repeats a state at position " + std::to_string(p));
      states.push_back(s);
      s = m.circuit.evaluate(s);
    }
    if (s != states[m.n_init]) throw input_error("next-state lasso circuit does not map the last state to the period start");
  }
  out.initial.assign(states.begin(), states.begin() + static_cast<std::ptrdiff_t>(m.n_init));
  out.period.assign(states.begin() + static_cast<std::ptrdiff_t>(m.n_init), states.end());
  return out;
}

namespace {

std::string fresh(std::string name, const std::set<std::string>& taken) {
  while (taken.count(name)) name = "_" + name;
  return name;
}

LtlFormula literal(const std::string& v, bool value) {
  return value ? L::atom(v) : L::negate(L::atom(v));
}

LtlFormula equals_const(const std::vector<std::string>& vars, const Bits& value) {
  std::vector<LtlFormula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i) parts.push_back(literal(vars[i], value[i]));
  return L::conj(std::move(parts));
}

/// Gate equations of c with variable i of the circuit mapped to sub[i].
LtlFormula gate_equations(const Circuit& c, const std::vector<LtlFormula>& sub) {
  std::map<std::string, LtlFormula> by_name;
  for (std::size_t i = 0; i < sub.size(); ++i) by_name.emplace(c.variable_name(static_cast<std::uint32_t>(i)), sub[i]);
  return L::from_formula(circuit_formula(c), [&](const std::string& n) { return by_name.at(n); });
}

Circuit all_gates_circuit(const Circuit& c) {
  std::vector<std::string> outs;
  for (std::size_t g = 0; g < c.num_gates(); ++g)
    outs.push_back(c.variable_name(static_cast<std::uint32_t>(c.num_inputs() + g)));
  return Circuit(c.name(), c.input_names(), c.named_gates(), outs);
}

} // namespace

bool check_succinct_model(const LtlFormula& f, const SuccinctLasso& m, CheckMode mode) {
  const LassoModel base = expand(m);
  if (mode == CheckMode::Expand) return ltl_eval(f, base, 0);

  const Circuit& c = m.circuit;
  std::set<std::string> taken(m.vars.begin(), m.vars.end());
  for (const auto& a : atoms(f)) taken.insert(a);
  const std::size_t n = m.vars.size();
  const std::size_t ni = c.num_inputs();

  // circuit variable -> LTL term; new atoms for time inputs and internal gates
  std::vector<LtlFormula> sub(ni + c.num_gates(), L::constant(false));
  std::vector<std::string> extra;          // names of added atoms
  std::vector<std::uint32_t> extra_var;    // their circuit variables
  auto add_atom = [&](std::uint32_t var) {
    std::string name = fresh(c.variable_name(var), taken);
    taken.insert(name);
    extra.push_back(name);
    extra_var.push_back(var);
    sub[var] = L::atom(name);
    return name;
  };
  std::vector<std::string> time_names;
  for (std::uint32_t i = 0; i < ni; ++i) {
    if (m.kind == LassoKind::TS)
      time_names.push_back(add_atom(i));
    else
      sub[i] = L::atom(m.vars[i]);
  }
  std::vector<char> is_output(ni + c.num_gates(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto var = c.outputs()[k];
    is_output[var] = 1;
    sub[var] = m.kind == LassoKind::SS ? L::next(L::atom(m.vars[k])) : L::atom(m.vars[k]);
  }
  for (std::uint32_t v = static_cast<std::uint32_t>(ni); v < ni + c.num_gates(); ++v)
    if (!is_output[v]) add_atom(v);

  std::vector<LtlFormula> constraint{L::globally(gate_equations(c, sub))};
  if (m.kind == LassoKind::TS) {
    const unsigned w = static_cast<unsigned>(ni);
    const std::uint64_t last = m.n_init + m.n_period - 1;
    const LtlFormula at_last = equals_const(time_names, to_bits(last, w));
    constraint.push_back(equals_const(time_names, to_bits(0, w)));
    constraint.push_back(L::globally(L::implies(L::negate(at_last), count_step(time_names))));
    constraint.push_back(L::globally(L::implies(at_last, L::next(equals_const(time_names, to_bits(m.n_init, w))))));
  }

  LassoModel ext = base;
  ext.vars.insert(ext.vars.end(), extra.begin(), extra.end());
  const auto w = static_cast<unsigned>(ni);
  std::uint64_t p = 0;
  for (auto* part : {&ext.initial, &ext.period})
    for (auto& s : *part) {
      const Bits input = m.kind == LassoKind::TS ? to_bits(p, w) : s;
      const Bits all = c.evaluate_all(input);
      for (auto v : extra_var) s.push_back(all[v]);
      ++p;
    }
  return ltl_eval(L::conj({f, L::conj(std::move(constraint))}), ext, 0);
}

// Unique-model embeddings -----------------------------------------------------

UniqueModelEmbedding embed_unique_model(const PlanSeqRepr& s1) {
  if (s1.kind != SeqKind::SS && s1.kind != SeqKind::TS)
    throw input_error("unique-model embedding needs a next-state or time/state sequence");
  s1.validate_shape();
  const auto states = expand(s1).states;
  if (std::set<State>(states.begin(), states.end()).size() != states.size())
    throw input_error("unique-model embedding needs a sequence without repeated states");
  const std::uint64_t N = s1.N;
  const State& last_state = states.back();
  const Circuit& c = s1.circuit;
  const std::vector<std::string>& xs = s1.vars;
  const std::size_t n = xs.size();
  const std::size_t ni = c.num_inputs();
  const bool timed = s1.kind == SeqKind::TS;

  std::set<std::string> taken(xs.begin(), xs.end());
  for (const auto& v : c.input_names()) taken.insert(v);
  for (std::size_t g = 0; g < c.num_gates(); ++g) taken.insert(c.variable_name(static_cast<std::uint32_t>(ni + g)));
  const std::string marker = fresh("a", taken);
  std::set<std::string> used(xs.begin(), xs.end());
  used.insert(marker);

  // circuit variable -> atom
  std::vector<LtlFormula> sub;
  std::vector<std::string> time_names, gate_names;
  std::vector<std::uint32_t> gate_vars;
  for (std::uint32_t i = 0; i < ni; ++i) {
    if (timed) {
      time_names.push_back(fresh(c.variable_name(i), used));
      used.insert(time_names.back());
      sub.push_back(L::atom(time_names.back()));
    } else {
      sub.push_back(L::atom(xs[i]));
    }
  }
  std::vector<long> output_of(ni + c.num_gates(), -1);
  for (std::size_t k = 0; k < n; ++k) output_of[c.outputs()[k]] = static_cast<long>(k);
  for (std::uint32_t v = static_cast<std::uint32_t>(ni); v < ni + c.num_gates(); ++v) {
    if (timed && output_of[v] >= 0) {
      sub.push_back(L::atom(xs[static_cast<std::size_t>(output_of[v])]));
      continue;
    }
    gate_names.push_back(fresh(c.variable_name(v), used));
    used.insert(gate_names.back());
    gate_vars.push_back(v);
    sub.push_back(L::atom(gate_names.back()));
  }

  const LtlFormula a = L::atom(marker);
  const LtlFormula not_a = L::negate(a);
  std::vector<LtlFormula> plain_parts{L::next(a)};
  for (const auto& x : xs) plain_parts.push_back(L::iff(L::atom(x), L::next(L::atom(x))));
  for (const auto& z : gate_names) plain_parts.push_back(L::negate(L::atom(z)));
  for (const auto& t : time_names) plain_parts.push_back(L::negate(L::atom(t)));

  std::vector<LtlFormula> parts;
  UniqueModelEmbedding out;
  SuccinctLasso& lasso = out.lasso;
  lasso.vars = xs;
  lasso.vars.push_back(marker);
  lasso.vars.insert(lasso.vars.end(), time_names.begin(), time_names.end());
  lasso.vars.insert(lasso.vars.end(), gate_names.begin(), gate_names.end());
  lasso.n_init = 2 * N + 1;
  lasso.n_period = 1;

  const Circuit all = all_gates_circuit(c);
  std::vector<std::string> next_names;
  {
    std::set<std::string> names(lasso.vars.begin(), lasso.vars.end());
    for (const auto& v : lasso.vars) {
      next_names.push_back(fresh(v + "_next", names));
      names.insert(next_names.back());
    }
  }

  if (!timed) {
    const LtlFormula last = equals_const(xs, last_state);
    std::vector<LtlFormula> step{L::next(not_a)};
    std::vector<LtlFormula> stay{L::next(a)};
    for (std::size_t k = 0; k < n; ++k) {
      const auto y = sub[c.outputs()[k]];
      step.push_back(L::iff(L::next(L::atom(xs[k])), y));
      stay.push_back(L::iff(L::atom(xs[k]), L::next(L::atom(xs[k]))));
    }
    parts = {not_a,
             equals_const(xs, s1.s0),
             L::globally(L::implies(not_a, L::conj(plain_parts))),
             L::globally(L::implies(a, gate_equations(c, sub))),
             L::globally(L::implies(L::conj({a, L::negate(last)}), L::conj(step))),
             L::globally(L::implies(L::conj({a, last}), L::conj(stay)))};

    lasso.kind = LassoKind::SS;
    lasso.s0 = concat(s1.s0, State(1 + gate_names.size(), false));
    CircuitBuilder b("embedded");
    const Word in = b.inputs(lasso.vars);
    const Word x(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(n));
    const Var am = in[n];
    const Word g = b.inline_circuit(all, x);
    Word y;
    for (std::size_t k = 0; k < n; ++k) y.push_back(g[c.outputs()[k] - ni]);
    const Var at_last = b.eq_const(x, from_bits(last_state));
    const Var advance = b.and_(am, b.not_(at_last));
    Word nx = b.mux(advance, y, x);
    nx.push_back(b.or_(b.not_(am), at_last));
    const Word zeros = b.constant_word(0, gate_vars.size());
    Word gz;
    for (auto v : gate_vars) gz.push_back(g[v - ni]);
    const Word z = b.mux(advance, zeros, gz);
    nx.insert(nx.end(), z.begin(), z.end());
    b.outputs(next_names, nx);
    lasso.circuit = b.build();
  } else {
    const unsigned w = static_cast<unsigned>(ni);
    const LtlFormula last = equals_const(time_names, to_bits(N, w));
    std::vector<LtlFormula> stay{L::next(a)};
    for (const auto& t : time_names) stay.push_back(L::iff(L::atom(t), L::next(L::atom(t))));
    parts = {not_a,
             L::next(equals_const(time_names, to_bits(0, w))),
             L::globally(L::implies(not_a, L::conj(plain_parts))),
             L::globally(L::implies(a, gate_equations(c, sub))),
             L::globally(L::implies(L::conj({a, L::negate(last)}), L::conj({L::next(not_a), count_step(time_names, 2)}))),
             L::globally(L::implies(L::conj({a, last}), L::conj(stay)))};

    lasso.kind = LassoKind::TS;
    CircuitBuilder b("embedded");
    std::set<std::string> lasso_names(lasso.vars.begin(), lasso.vars.end());
    lasso_names.insert(next_names.begin(), next_names.end());
    std::vector<std::string> clock;
    for (unsigned i = 1; i <= w + 1; ++i) clock.push_back(fresh("p" + std::to_string(i), lasso_names));
    const Word tau = b.inputs(clock);
    const Word j(tau.begin(), tau.end() - 1);
    const Var odd = tau.back();
    const Word g = b.inline_circuit(all, j);
    Word out_word;
    for (std::size_t k = 0; k < n; ++k) out_word.push_back(g[c.outputs()[k] - ni]);
    out_word.push_back(odd);
    for (auto t : j) out_word.push_back(b.and_(odd, t));
    for (auto v : gate_vars) out_word.push_back(b.and_(odd, g[v - ni]));
    b.outputs(lasso.vars, out_word);
    lasso.circuit = b.build();
  }
  out.formula = L::conj(std::move(parts));
  return out;
}

StateList divide(const StateList& s, std::size_t t) {
  if (t == 0) throw input_error("divisor must be positive");
  StateList out;
  for (std::size_t i = 0; i < s.size(); i += t) out.push_back(s[i]);
  return out;
}

bool expands_check(const std::vector<std::string>& vars1, const StateList& s1, const std::vector<std::string>& vars2,
                   const StateList& s2) {
  if (s1.size() != s2.size()) return false;
  std::vector<long> where(vars1.size(), -1);
  std::vector<char> covered(vars2.size(), 0);
  for (std::size_t i = 0; i < vars1.size(); ++i) {
    auto it = std::find(vars2.begin(), vars2.end(), vars1[i]);
    if (it == vars2.end()) return false;
    where[i] = it - vars2.begin();
    covered[static_cast<std::size_t>(where[i])] = 1;
  }
  for (std::size_t p = 0; p < s1.size(); ++p) {
    if (s1[p].size() != vars1.size() || s2[p].size() != vars2.size()) return false;
    for (std::size_t i = 0; i < vars1.size(); ++i)
      if (s1[p][i] != s2[p][static_cast<std::size_t>(where[i])]) return false;
    for (std::size_t k = 0; k < vars2.size(); ++k)
      if (!covered[k] && s2[p][k]) return false;
  }
  return true;
}

} // namespace succinct
