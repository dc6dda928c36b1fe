#ifndef DCT_TERM_HPP
#define DCT_TERM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dct {

// A first-order signature: function and predicate symbols with arities.
// Constants are 0-ary function symbols.
struct Signature {
  struct Symbol {
    std::string name;
    int arity = 0;
  };
  std::vector<Symbol> functions;
  std::vector<Symbol> predicates;

  int function_index(const std::string& name) const;
  int predicate_index(const std::string& name) const;
  void add_function(const std::string& name, int arity);
  void add_predicate(const std::string& name, int arity);
  bool has_constants() const;
  bool has_proper_functions() const;  // arity >= 1
};

// Terms over a context of size n: variables are de Bruijn-style indices
// 0..n-1, applications carry the function symbol index.
struct Term {
  int var = -1;  // >= 0 for a variable
  int fn = -1;   // >= 0 for an application
  std::vector<Term> args;

  static Term variable(int index) {
    Term t;
    t.var = index;
    return t;
  }
  static Term app(int fnIndex, std::vector<Term> as = {}) {
    Term t;
    t.fn = fnIndex;
    t.args = std::move(as);
    return t;
  }
  bool is_var() const { return var >= 0; }

  bool operator==(const Term& o) const {
    return var == o.var && fn == o.fn && args == o.args;
  }
};

// Variables have depth 0; an application has depth 1 + max depth of its
// arguments (so constants have depth 1).
int term_depth(const Term& t);

// Largest variable index + 1 (0 if ground).
int term_min_context(const Term& t);

std::string print_term(const Term& t, const Signature& sig);

// Simultaneous substitution: replaces variable i by subst[i].
Term substitute_term(const Term& t, const std::vector<Term>& subst);

void check_term(const Term& t, const Signature& sig, int contextSize);

// Quantifier-free formulas over a context.
struct Formula {
  enum class Kind { Atom, Top, Bot, Not, And, Or };
  Kind kind = Kind::Top;
  int pred = -1;            // Atom
  std::vector<Term> args;   // Atom
  std::vector<Formula> kids;

  static Formula top() { return Formula{}; }
  static Formula bot() {
    Formula f;
    f.kind = Kind::Bot;
    return f;
  }
  static Formula atom(int predIndex, std::vector<Term> as = {}) {
    Formula f;
    f.kind = Kind::Atom;
    f.pred = predIndex;
    f.args = std::move(as);
    return f;
  }
  static Formula negation(Formula a);
  static Formula conj(Formula a, Formula b) {
    Formula f;
    f.kind = Kind::And;
    f.kids = {std::move(a), std::move(b)};
    return f;
  }
  static Formula disj(Formula a, Formula b) {
    Formula f;
    f.kind = Kind::Or;
    f.kids = {std::move(a), std::move(b)};
    return f;
  }
  static Formula conj_all(std::vector<Formula> fs);  // empty -> Top
  static Formula disj_all(std::vector<Formula> fs);  // empty -> Bot

  bool operator==(const Formula& o) const {
    return kind == o.kind && pred == o.pred && args == o.args && kids == o.kids;
  }
};

std::string print_formula(const Formula& f, const Signature& sig);

int formula_min_context(const Formula& f);

void check_formula(const Formula& f, const Signature& sig, int contextSize);

// Simultaneous substitution of all variables; |subst| must cover every free
// index of f and every term in subst must fit targetContextSize.
Formula substitute(const Formula& f, const std::vector<Term>& subst,
                   int targetContextSize, const Signature& sig);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " at " + std::to_string(l) + ":" +
                           std::to_string(c)),
        line(l),
        column(c) {}
};

// Concrete syntax: atoms R(t1,...,tk), variables x0,x1,..., 0-ary symbols
// written bare, connectives ! & | -> <->, constants true/false.
// & binds tighter than |; -> and <-> are right-associative sugar eliminated
// at parse time.
Formula parse_formula(const std::string& text, const Signature& sig);
Term parse_term(const std::string& text, const Signature& sig);

// All terms over `contextSize` variables with depth <= maxDepth, ordered by
// (depth, printed form).
std::vector<Term> enumerate_terms(const Signature& sig, int contextSize,
                                  int maxDepth);

// True when enumerate_terms(sig, n, d) already lists every term over the
// context, i.e. deeper bounds add nothing.
bool term_enumeration_complete(const Signature& sig, int contextSize,
                               int maxDepth);

}  // namespace dct

#endif
