#include "dct/prop.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace dct {

namespace {

// Literals are +v / -v with v >= 1; clauses are literal vectors.
struct Cnf {
  int numVars = 0;
  std::vector<std::vector<int>> clauses;
  std::map<std::string, int> atomVar;

  int fresh() { return ++numVars; }

  int atom(const Formula& f, const Signature& sig) {
    auto key = print_formula(f, sig);
    auto it = atomVar.find(key);
    if (it != atomVar.end()) return it->second;
    int v = fresh();
    atomVar.emplace(key, v);
    return v;
  }
};

// Tseitin: returns a literal equisatisfiably representing f.
int encode(const Formula& f, const Signature& sig, Cnf& cnf) {
  switch (f.kind) {
    case Formula::Kind::Top: {
      int v = cnf.fresh();
      cnf.clauses.push_back({v});
      return v;
    }
    case Formula::Kind::Bot: {
      int v = cnf.fresh();
      cnf.clauses.push_back({-v});
      return v;
    }
    case Formula::Kind::Atom:
      return cnf.atom(f, sig);
    case Formula::Kind::Not:
      return -encode(f.kids[0], sig, cnf);
    case Formula::Kind::And: {
      int a = encode(f.kids[0], sig, cnf);
      int b = encode(f.kids[1], sig, cnf);
      int v = cnf.fresh();
      cnf.clauses.push_back({-v, a});
      cnf.clauses.push_back({-v, b});
      cnf.clauses.push_back({v, -a, -b});
      return v;
    }
    case Formula::Kind::Or: {
      int a = encode(f.kids[0], sig, cnf);
      int b = encode(f.kids[1], sig, cnf);
      int v = cnf.fresh();
      cnf.clauses.push_back({-v, a, b});
      cnf.clauses.push_back({v, -a});
      cnf.clauses.push_back({v, -b});
      return v;
    }
  }
  std::abort();
}

enum class Val : signed char { Free = 0, True = 1, False = -1 };

bool dpll(const std::vector<std::vector<int>>& clauses, std::vector<Val>& assign) {
  // unit propagation to fixpoint
  std::vector<std::pair<int, Val>> trail;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& cl : clauses) {
      int unassigned = 0, unit = 0;
      bool sat = false;
      for (int lit : cl) {
        Val v = assign[std::abs(lit)];
        if (v == Val::Free) {
          ++unassigned;
          unit = lit;
        } else if ((lit > 0) == (v == Val::True)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        for (auto& [var, old] : trail) assign[var] = old;
        return false;  // conflict
      }
      if (unassigned == 1) {
        assign[std::abs(unit)] = unit > 0 ? Val::True : Val::False;
        trail.push_back({std::abs(unit), Val::Free});
        changed = true;
      }
    }
  }
  // pick a branch variable
  int branch = 0;
  for (size_t v = 1; v < assign.size(); ++v)
    if (assign[v] == Val::Free) {
      branch = static_cast<int>(v);
      break;
    }
  if (branch == 0) return true;  // all assigned, no conflict
  for (Val choice : {Val::True, Val::False}) {
    assign[branch] = choice;
    if (dpll(clauses, assign)) return true;
    assign[branch] = Val::Free;
  }
  for (auto& [var, old] : trail) assign[var] = old;
  return false;
}

bool satisfiable(const Cnf& cnf) {
  std::vector<Val> assign(cnf.numVars + 1, Val::Free);
  return dpll(cnf.clauses, assign);
}

}  // namespace

bool prop_satisfiable(const std::vector<Formula>& fs, const Signature& sig) {
  Cnf cnf;
  for (auto& f : fs) cnf.clauses.push_back({encode(f, sig, cnf)});
  return satisfiable(cnf);
}

bool prop_entails(const std::vector<Formula>& hypotheses, const Formula& goal,
                  const Signature& sig) {
  Cnf cnf;
  for (auto& h : hypotheses) cnf.clauses.push_back({encode(h, sig, cnf)});
  cnf.clauses.push_back({-encode(goal, sig, cnf)});
  return !satisfiable(cnf);
}

namespace {

void collect_atoms(const Formula& f, const Signature& sig,
                   std::map<std::string, int>& atoms) {
  if (f.kind == Formula::Kind::Atom) {
    auto key = print_formula(f, sig);
    if (!atoms.count(key)) {
      int id = static_cast<int>(atoms.size());
      atoms.emplace(key, id);
    }
  }
  for (auto& k : f.kids) collect_atoms(k, sig, atoms);
}

bool eval_tt(const Formula& f, const Signature& sig,
             const std::map<std::string, int>& atoms, unsigned long mask) {
  switch (f.kind) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom:
      return (mask >> atoms.at(print_formula(f, sig))) & 1u;
    case Formula::Kind::Not: return !eval_tt(f.kids[0], sig, atoms, mask);
    case Formula::Kind::And:
      return eval_tt(f.kids[0], sig, atoms, mask) &&
             eval_tt(f.kids[1], sig, atoms, mask);
    case Formula::Kind::Or:
      return eval_tt(f.kids[0], sig, atoms, mask) ||
             eval_tt(f.kids[1], sig, atoms, mask);
  }
  std::abort();
}

}  // namespace

bool prop_entails_truth_table(const std::vector<Formula>& hypotheses,
                              const Formula& goal, const Signature& sig,
                              int maxAtoms) {
  std::map<std::string, int> atoms;
  for (auto& h : hypotheses) collect_atoms(h, sig, atoms);
  collect_atoms(goal, sig, atoms);
  if (static_cast<int>(atoms.size()) > maxAtoms)
    throw std::invalid_argument("too many atoms for truth-table check");
  for (unsigned long mask = 0; mask < (1ul << atoms.size()); ++mask) {
    bool all = true;
    for (auto& h : hypotheses)
      if (!eval_tt(h, sig, atoms, mask)) {
        all = false;
        break;
      }
    if (all && !eval_tt(goal, sig, atoms, mask)) return false;
  }
  return true;
}

}  // namespace dct
