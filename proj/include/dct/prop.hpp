#ifndef DCT_PROP_HPP
#define DCT_PROP_HPP

#include <map>
#include <string>
#include <vector>

#include "dct/term.hpp"

namespace dct {

// Propositional entailment over ground formulas: distinct atoms (by printed
// form) are independent propositional variables.
//
// Decided by Tseitin transformation plus a plain DPLL (unit propagation,
// no learning).
bool prop_entails(const std::vector<Formula>& hypotheses, const Formula& goal,
                  const Signature& sig);

// Satisfiability of a conjunction of formulas, same atom convention.
bool prop_satisfiable(const std::vector<Formula>& fs, const Signature& sig);

// Exhaustive truth-table check; used as the independent oracle in tests.
// Requires <= maxAtoms distinct atoms.
bool prop_entails_truth_table(const std::vector<Formula>& hypotheses,
                              const Formula& goal, const Signature& sig,
                              int maxAtoms = 20);

}  // namespace dct

#endif
