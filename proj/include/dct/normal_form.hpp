#ifndef DCT_NORMAL_FORM_HPP
#define DCT_NORMAL_FORM_HPP

#include <map>
#include <string>
#include <vector>

#include "dct/term.hpp"

namespace dct {

// Boolean expression over interned literals; the common carrier for normal
// forms of ground formulas and of Free1 elements.
struct BoolExpr {
  enum class Kind { Lit, Top, Bot, Not, And, Or };
  Kind kind = Kind::Top;
  int lit = -1;  // Kind::Lit
  std::vector<BoolExpr> kids;

  static BoolExpr literal(int id) {
    BoolExpr e;
    e.kind = Kind::Lit;
    e.lit = id;
    return e;
  }
  static BoolExpr top() { return BoolExpr{}; }
  static BoolExpr bot() {
    BoolExpr e;
    e.kind = Kind::Bot;
    return e;
  }
  static BoolExpr negation(BoolExpr a) {
    BoolExpr e;
    e.kind = Kind::Not;
    e.kids = {std::move(a)};
    return e;
  }
  static BoolExpr conj(BoolExpr a, BoolExpr b) {
    BoolExpr e;
    e.kind = Kind::And;
    e.kids = {std::move(a), std::move(b)};
    return e;
  }
  static BoolExpr disj(BoolExpr a, BoolExpr b) {
    BoolExpr e;
    e.kind = Kind::Or;
    e.kids = {std::move(a), std::move(b)};
    return e;
  }
};

enum class NormalFormKind { Dnf, Cnf };

// A clause is a sorted, duplicate-free vector of signed literals
// (+ (id+1) or -(id+1)). For DNF a clause is a conjunction of literals and
// the form is their disjunction; dually for CNF. No minimization beyond
// duplicate removal: clauses keep complementary pairs.
//
// DNF of top = one empty clause, of bottom = no clauses; dually for CNF.
struct NormalForm {
  NormalFormKind kind = NormalFormKind::Dnf;
  std::vector<std::vector<int>> clauses;
};

// When a literal table is supplied, literals within a clause and clauses
// within the form are ordered lexicographically by printed key; otherwise by
// literal id.
struct LiteralTable;
NormalForm to_normal_form(const BoolExpr& e, NormalFormKind kind,
                          const LiteralTable* lits = nullptr);

// Evaluates e / a normal form under a literal assignment; used by the
// equivalence property tests.
bool eval_bool_expr(const BoolExpr& e, const std::vector<bool>& assign);
bool eval_normal_form(const NormalForm& nf, const std::vector<bool>& assign);

// Interns leaves by a caller-supplied key so literal ids are assigned in
// lexicographic key order (deterministic output).
struct LiteralTable {
  std::map<std::string, int> ids;
  std::vector<std::string> keys;  // id -> key

  int intern(const std::string& key) {
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(keys.size());
    ids.emplace(key, id);
    keys.push_back(key);
    return id;
  }
};

// Ground-formula instantiation: literals are atoms keyed by printed form.
BoolExpr formula_to_bool_expr(const Formula& f, const Signature& sig,
                              LiteralTable& lits,
                              std::vector<Formula>* atomOfId = nullptr);

NormalForm normal_form(const Formula& f, const Signature& sig,
                       NormalFormKind kind, LiteralTable& lits,
                       std::vector<Formula>* atomOfId = nullptr);

// Rebuilds a Formula from a normal form over formula atoms.
Formula normal_form_to_formula(const NormalForm& nf,
                               const std::vector<Formula>& atomOfId);

}  // namespace dct

#endif
