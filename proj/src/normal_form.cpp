#include "dct/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace dct {

namespace {

// Negation-normal form with Top/Bot pushed out is implicit in the recursion:
// nf(e, pos, wantDnf) returns clauses of e (or of !e when pos is false).
using Clauses = std::vector<std::vector<int>>;

int lit_of(int id, bool positive) { return positive ? id + 1 : -(id + 1); }

Clauses cross(const Clauses& a, const Clauses& b) {
  Clauses out;
  for (auto& ca : a)
    for (auto& cb : b) {
      std::vector<int> c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      out.push_back(std::move(c));
    }
  return out;
}

Clauses concat(Clauses a, const Clauses& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// For DNF: unit = one empty clause (top), zero = no clauses (bottom).
// For CNF the roles swap.
Clauses build(const BoolExpr& e, bool positive, bool dnf) {
  switch (e.kind) {
    case BoolExpr::Kind::Lit:
      return {{lit_of(e.lit, positive)}};
    case BoolExpr::Kind::Top:
      return (positive == dnf) ? Clauses{{}} : Clauses{};
    case BoolExpr::Kind::Bot:
      return (positive == dnf) ? Clauses{} : Clauses{{}};
    case BoolExpr::Kind::Not:
      return build(e.kids[0], !positive, dnf);
    case BoolExpr::Kind::And: {
      bool conjunctive = positive;  // !(a&b) behaves like a disjunction
      Clauses l = build(e.kids[0], positive, dnf);
      Clauses r = build(e.kids[1], positive, dnf);
      if (conjunctive == dnf) return cross(l, r);
      return concat(std::move(l), r);
    }
    case BoolExpr::Kind::Or: {
      bool conjunctive = !positive;
      Clauses l = build(e.kids[0], positive, dnf);
      Clauses r = build(e.kids[1], positive, dnf);
      if (conjunctive == dnf) return cross(l, r);
      return concat(std::move(l), r);
    }
  }
  std::abort();
}

}  // namespace

NormalForm to_normal_form(const BoolExpr& e, NormalFormKind kind,
                          const LiteralTable* lits) {
  bool dnf = kind == NormalFormKind::Dnf;
  Clauses cs = build(e, true, dnf);
  auto litLess = [&](int a, int b) {
    if (lits) {
      const std::string& ka = lits->keys[std::abs(a) - 1];
      const std::string& kb = lits->keys[std::abs(b) - 1];
      if (ka != kb) return ka < kb;
    }
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;  // positive first
  };
  for (auto& c : cs) std::sort(c.begin(), c.end(), litLess);
  std::sort(cs.begin(), cs.end(), [&](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        litLess);
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  NormalForm nf;
  nf.kind = kind;
  nf.clauses = std::move(cs);
  return nf;
}

bool eval_bool_expr(const BoolExpr& e, const std::vector<bool>& assign) {
  switch (e.kind) {
    case BoolExpr::Kind::Lit: return assign[e.lit];
    case BoolExpr::Kind::Top: return true;
    case BoolExpr::Kind::Bot: return false;
    case BoolExpr::Kind::Not: return !eval_bool_expr(e.kids[0], assign);
    case BoolExpr::Kind::And:
      return eval_bool_expr(e.kids[0], assign) &&
             eval_bool_expr(e.kids[1], assign);
    case BoolExpr::Kind::Or:
      return eval_bool_expr(e.kids[0], assign) ||
             eval_bool_expr(e.kids[1], assign);
  }
  std::abort();
}

bool eval_normal_form(const NormalForm& nf, const std::vector<bool>& assign) {
  bool dnf = nf.kind == NormalFormKind::Dnf;
  for (auto& clause : nf.clauses) {
    bool clauseVal = !dnf;  // conjunction starts true, disjunction false
    for (int lit : clause) {
      bool v = assign[std::abs(lit) - 1];
      if (lit < 0) v = !v;
      if (dnf) {
        if (!v) {
          clauseVal = false;
          break;
        }
        clauseVal = true;
      } else {
        if (v) {
          clauseVal = true;
          break;
        }
        clauseVal = false;
      }
    }
    if (clause.empty()) clauseVal = dnf;  // empty conj = true, empty disj = false
    if (dnf && clauseVal) return true;
    if (!dnf && !clauseVal) return false;
  }
  return !dnf;
}

BoolExpr formula_to_bool_expr(const Formula& f, const Signature& sig,
                              LiteralTable& lits,
                              std::vector<Formula>* atomOfId) {
  switch (f.kind) {
    case Formula::Kind::Top: return BoolExpr::top();
    case Formula::Kind::Bot: return BoolExpr::bot();
    case Formula::Kind::Atom: {
      int before = static_cast<int>(lits.keys.size());
      int id = lits.intern(print_formula(f, sig));
      if (atomOfId && id == before) atomOfId->push_back(f);
      return BoolExpr::literal(id);
    }
    case Formula::Kind::Not:
      return BoolExpr::negation(
          formula_to_bool_expr(f.kids[0], sig, lits, atomOfId));
    case Formula::Kind::And:
      return BoolExpr::conj(formula_to_bool_expr(f.kids[0], sig, lits, atomOfId),
                            formula_to_bool_expr(f.kids[1], sig, lits, atomOfId));
    case Formula::Kind::Or:
      return BoolExpr::disj(formula_to_bool_expr(f.kids[0], sig, lits, atomOfId),
                            formula_to_bool_expr(f.kids[1], sig, lits, atomOfId));
  }
  std::abort();
}

NormalForm normal_form(const Formula& f, const Signature& sig,
                       NormalFormKind kind, LiteralTable& lits,
                       std::vector<Formula>* atomOfId) {
  BoolExpr e = formula_to_bool_expr(f, sig, lits, atomOfId);
  return to_normal_form(e, kind, &lits);
}

Formula normal_form_to_formula(const NormalForm& nf,
                               const std::vector<Formula>& atomOfId) {
  bool dnf = nf.kind == NormalFormKind::Dnf;
  std::vector<Formula> clauseFs;
  for (auto& clause : nf.clauses) {
    std::vector<Formula> litFs;
    for (int lit : clause) {
      Formula a = atomOfId[std::abs(lit) - 1];
      litFs.push_back(lit > 0 ? a : Formula::negation(a));
    }
    clauseFs.push_back(dnf ? Formula::conj_all(std::move(litFs))
                           : Formula::disj_all(std::move(litFs)));
  }
  return dnf ? Formula::disj_all(std::move(clauseFs))
             : Formula::conj_all(std::move(clauseFs));
}

}  // namespace dct
