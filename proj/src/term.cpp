#include "dct/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace dct {

int Signature::function_index(const std::string& name) const {
  for (size_t i = 0; i < functions.size(); ++i)
    if (functions[i].name == name) return static_cast<int>(i);
  return -1;
}

int Signature::predicate_index(const std::string& name) const {
  for (size_t i = 0; i < predicates.size(); ++i)
    if (predicates[i].name == name) return static_cast<int>(i);
  return -1;
}

void Signature::add_function(const std::string& name, int arity) {
  if (arity < 0) throw std::invalid_argument("negative arity for " + name);
  if (function_index(name) >= 0)
    throw std::invalid_argument("duplicate function symbol " + name);
  functions.push_back({name, arity});
}

void Signature::add_predicate(const std::string& name, int arity) {
  if (arity < 0) throw std::invalid_argument("negative arity for " + name);
  if (predicate_index(name) >= 0)
    throw std::invalid_argument("duplicate predicate symbol " + name);
  predicates.push_back({name, arity});
}

bool Signature::has_constants() const {
  for (auto& f : functions)
    if (f.arity == 0) return true;
  return false;
}

bool Signature::has_proper_functions() const {
  for (auto& f : functions)
    if (f.arity >= 1) return true;
  return false;
}

int term_depth(const Term& t) {
  if (t.is_var()) return 0;
  int m = 0;
  for (auto& a : t.args) m = std::max(m, term_depth(a));
  return 1 + m;
}

int term_min_context(const Term& t) {
  if (t.is_var()) return t.var + 1;
  int m = 0;
  for (auto& a : t.args) m = std::max(m, term_min_context(a));
  return m;
}

std::string print_term(const Term& t, const Signature& sig) {
  if (t.is_var()) return "x" + std::to_string(t.var);
  std::string s = sig.functions[t.fn].name;
  if (!t.args.empty()) {
    s += "(";
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) s += ",";
      s += print_term(t.args[i], sig);
    }
    s += ")";
  }
  return s;
}

Term substitute_term(const Term& t, const std::vector<Term>& subst) {
  if (t.is_var()) {
    if (t.var >= static_cast<int>(subst.size()))
      throw std::invalid_argument("substitution too short for variable x" +
                                  std::to_string(t.var));
    return subst[t.var];
  }
  Term r = t;
  for (auto& a : r.args) a = substitute_term(a, subst);
  return r;
}

void check_term(const Term& t, const Signature& sig, int contextSize) {
  if (t.is_var()) {
    if (t.var >= contextSize)
      throw std::invalid_argument("variable x" + std::to_string(t.var) +
                                  " outside context of size " +
                                  std::to_string(contextSize));
    return;
  }
  if (t.fn < 0 || t.fn >= static_cast<int>(sig.functions.size()))
    throw std::invalid_argument("unknown function symbol index");
  if (static_cast<int>(t.args.size()) != sig.functions[t.fn].arity)
    throw std::invalid_argument("arity mismatch for " +
                                sig.functions[t.fn].name);
  for (auto& a : t.args) check_term(a, sig, contextSize);
}

Formula Formula::negation(Formula a) {
  // !!phi collapses; keeps parsed sequent bodies readable.
  if (a.kind == Kind::Not) return a.kids[0];
  Formula f;
  f.kind = Kind::Not;
  f.kids = {std::move(a)};
  return f;
}

Formula Formula::conj_all(std::vector<Formula> fs) {
  if (fs.empty()) return top();
  Formula r = std::move(fs[0]);
  for (size_t i = 1; i < fs.size(); ++i) r = conj(std::move(r), std::move(fs[i]));
  return r;
}

Formula Formula::disj_all(std::vector<Formula> fs) {
  if (fs.empty()) return bot();
  Formula r = std::move(fs[0]);
  for (size_t i = 1; i < fs.size(); ++i) r = disj(std::move(r), std::move(fs[i]));
  return r;
}

namespace {

int precedence_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

void print_rec(const Formula& f, const Signature& sig, int parentPrec,
               std::string& out) {
  int prec = precedence_of(f.kind);
  bool paren = prec < parentPrec;
  switch (f.kind) {
    case Formula::Kind::Top: out += "true"; return;
    case Formula::Kind::Bot: out += "false"; return;
    case Formula::Kind::Atom: {
      out += sig.predicates[f.pred].name;
      if (!f.args.empty()) {
        out += "(";
        for (size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ",";
          out += print_term(f.args[i], sig);
        }
        out += ")";
      }
      return;
    }
    case Formula::Kind::Not:
      out += "!";
      print_rec(f.kids[0], sig, 3, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      if (paren) out += "(";
      print_rec(f.kids[0], sig, prec, out);
      out += f.kind == Formula::Kind::And ? " & " : " | ";
      print_rec(f.kids[1], sig, prec + 0, out);
      if (paren) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f, const Signature& sig) {
  std::string out;
  print_rec(f, sig, 0, out);
  return out;
}

int formula_min_context(const Formula& f) {
  int m = 0;
  for (auto& t : f.args) m = std::max(m, term_min_context(t));
  for (auto& k : f.kids) m = std::max(m, formula_min_context(k));
  return m;
}

void check_formula(const Formula& f, const Signature& sig, int contextSize) {
  if (f.kind == Formula::Kind::Atom) {
    if (f.pred < 0 || f.pred >= static_cast<int>(sig.predicates.size()))
      throw std::invalid_argument("unknown predicate index");
    if (static_cast<int>(f.args.size()) != sig.predicates[f.pred].arity)
      throw std::invalid_argument("arity mismatch for " +
                                  sig.predicates[f.pred].name);
    for (auto& t : f.args) check_term(t, sig, contextSize);
  }
  for (auto& k : f.kids) check_formula(k, sig, contextSize);
}

Formula substitute(const Formula& f, const std::vector<Term>& subst,
                   int targetContextSize, const Signature& sig) {
  if (formula_min_context(f) > static_cast<int>(subst.size()))
    throw std::invalid_argument("substitution shorter than formula context");
  for (auto& t : subst) check_term(t, sig, targetContextSize);
  Formula r = f;
  for (auto& t : r.args) t = substitute_term(t, subst);
  for (auto& k : r.kids) k = substitute(k, subst, targetContextSize, sig);
  return r;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      advance();
  }
  void advance() {
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      for (size_t i = 0; i < tok.size(); ++i) advance();
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      advance();
    return s.substr(start, pos - start);
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }
};

Term parse_term_rec(Lexer& lx, const Signature& sig) {
  std::string name = lx.ident();
  if (name.empty()) lx.fail("expected term");
  if (name[0] == 'x' && name.size() > 1 &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return Term::variable(std::stoi(name.substr(1)));
  int fn = sig.function_index(name);
  if (fn < 0) lx.fail("unknown function symbol '" + name + "'");
  std::vector<Term> args;
  if (lx.peek() == '(') {
    lx.eat("(");
    if (lx.peek() != ')') {
      args.push_back(parse_term_rec(lx, sig));
      while (lx.eat(",")) args.push_back(parse_term_rec(lx, sig));
    }
    if (!lx.eat(")")) lx.fail("expected ')'");
  }
  if (static_cast<int>(args.size()) != sig.functions[fn].arity)
    lx.fail("arity mismatch for '" + name + "'");
  return Term::app(fn, std::move(args));
}

Formula parse_or(Lexer& lx, const Signature& sig);

Formula parse_primary(Lexer& lx, const Signature& sig) {
  if (lx.eat("(")) {
    Formula f = parse_or(lx, sig);
    if (!lx.eat(")")) lx.fail("expected ')'");
    return f;
  }
  if (lx.eat("!")) return Formula::negation(parse_primary(lx, sig));
  std::string name = lx.ident();
  if (name.empty()) lx.fail("expected formula");
  if (name == "true") return Formula::top();
  if (name == "false") return Formula::bot();
  int pred = sig.predicate_index(name);
  if (pred < 0) lx.fail("unknown predicate symbol '" + name + "'");
  std::vector<Term> args;
  if (lx.peek() == '(') {
    lx.eat("(");
    if (lx.peek() != ')') {
      args.push_back(parse_term_rec(lx, sig));
      while (lx.eat(",")) args.push_back(parse_term_rec(lx, sig));
    }
    if (!lx.eat(")")) lx.fail("expected ')'");
  }
  if (static_cast<int>(args.size()) != sig.predicates[pred].arity)
    lx.fail("arity mismatch for '" + name + "'");
  return Formula::atom(pred, std::move(args));
}

Formula parse_and(Lexer& lx, const Signature& sig) {
  Formula f = parse_primary(lx, sig);
  while (true) {
    lx.skip_ws();
    // do not confuse '&' with nothing else; '|' handled above
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == '&') {
      lx.eat("&");
      f = Formula::conj(std::move(f), parse_primary(lx, sig));
    } else {
      return f;
    }
  }
}

Formula parse_or(Lexer& lx, const Signature& sig) {
  Formula f = parse_and(lx, sig);
  while (true) {
    lx.skip_ws();
    if (lx.pos + 1 < lx.s.size() && lx.s[lx.pos] == '-' && lx.s[lx.pos + 1] == '>') {
      lx.eat("->");
      // a -> b  ==  !a | b ; right-associative
      Formula rhs = parse_or(lx, sig);
      return Formula::disj(Formula::negation(std::move(f)), std::move(rhs));
    }
    if (lx.pos + 2 < lx.s.size() && lx.s.compare(lx.pos, 3, "<->") == 0) {
      lx.eat("<->");
      Formula rhs = parse_or(lx, sig);
      Formula l2 = f, r2 = rhs;
      return Formula::conj(
          Formula::disj(Formula::negation(std::move(f)), std::move(rhs)),
          Formula::disj(Formula::negation(std::move(r2)), std::move(l2)));
    }
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == '|') {
      lx.eat("|");
      f = Formula::disj(std::move(f), parse_and(lx, sig));
    } else {
      return f;
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
  Lexer lx(text);
  Formula f = parse_or(lx, sig);
  lx.skip_ws();
  if (lx.pos != text.size()) lx.fail("trailing input");
  return f;
}

Term parse_term(const std::string& text, const Signature& sig) {
  Lexer lx(text);
  Term t = parse_term_rec(lx, sig);
  lx.skip_ws();
  if (lx.pos != text.size()) lx.fail("trailing input");
  return t;
}

// ---------------------------------------------------------------------------
// Term enumeration.

std::vector<Term> enumerate_terms(const Signature& sig, int contextSize,
                                  int maxDepth) {
  // layer[d] = terms of depth exactly d
  std::vector<std::vector<Term>> layer;
  std::vector<Term> vars;
  for (int i = 0; i < contextSize; ++i) vars.push_back(Term::variable(i));
  layer.push_back(vars);
  for (int d = 1; d <= maxDepth; ++d) {
    std::vector<Term> cur;
    // all terms of depth <= d-1, for argument tuples
    std::vector<Term> pool;
    for (int e = 0; e < d; ++e)
      pool.insert(pool.end(), layer[e].begin(), layer[e].end());
    for (size_t fi = 0; fi < sig.functions.size(); ++fi) {
      int ar = sig.functions[fi].arity;
      if (ar == 0) {
        if (d == 1) cur.push_back(Term::app(static_cast<int>(fi)));
        continue;
      }
      if (pool.empty()) continue;
      // argument tuples with max depth exactly d-1
      std::vector<size_t> idx(ar, 0);
      while (true) {
        int maxd = 0;
        std::vector<Term> args;
        args.reserve(ar);
        for (int a = 0; a < ar; ++a) {
          args.push_back(pool[idx[a]]);
          maxd = std::max(maxd, term_depth(pool[idx[a]]));
        }
        if (maxd == d - 1)
          cur.push_back(Term::app(static_cast<int>(fi), args));
        int a = ar - 1;
        while (a >= 0 && ++idx[a] == pool.size()) idx[a--] = 0;
        if (a < 0) break;
      }
    }
    auto key = [&](const Term& t) { return print_term(t, sig); };
    std::sort(cur.begin(), cur.end(), [&](const Term& a, const Term& b) {
      return key(a) < key(b);
    });
    layer.push_back(std::move(cur));
  }
  std::vector<Term> out;
  for (auto& l : layer) {
    std::vector<Term> sorted = l;
    std::sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) {
      return print_term(a, sig) < print_term(b, sig);
    });
    out.insert(out.end(), sorted.begin(), sorted.end());
  }
  return out;
}

bool term_enumeration_complete(const Signature& sig, int contextSize,
                               int maxDepth) {
  // With a proper function symbol, terms nest without bound as soon as any
  // term exists at all.
  bool anyBase = contextSize > 0 || sig.has_constants();
  if (!anyBase) return true;  // no terms at any depth
  if (!sig.has_proper_functions()) return maxDepth >= 1;
  return false;
}

}  // namespace dct
