#ifndef DCT_MODELS_HPP
#define DCT_MODELS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dct/doctrine.hpp"
#include "dct/family.hpp"

namespace dct {

// --- Classical finite models of a universal theory ----------------------------

// Carrier {0..carrier-1}; tables are flattened row-major over argument
// tuples. Empty carrier allowed when the signature has no constants.
struct SyntacticModel {
  int carrier = 0;
  std::vector<std::vector<int>> fnTables;
  std::vector<std::vector<bool>> predTables;
};

int eval_term_in_model(const SyntacticModel& m, const Signature& sig,
                       const Term& t, const std::vector<int>& assign);
bool holds_in_model(const SyntacticModel& m, const Signature& sig,
                    const Formula& f, const std::vector<int>& assign);

// The point set of a formula over context n: all satisfying n-tuples.
std::vector<std::vector<int>> eval_in_model(const SyntacticModel& m,
                                            const Signature& sig,
                                            const Formula& f, int contextSize);

std::string print_syntactic_model(const SyntacticModel& m, const Signature& sig);

// Streams all models of the axioms with carrier size <= sizeBound in a fixed
// order: by carrier size, then lexicographically by function and predicate
// tables. Restartable and deterministic.
class SyntacticModelEnumerator {
 public:
  SyntacticModelEnumerator(const Signature& sig,
                           const std::vector<Formula>& axioms, int sizeBound);
  std::optional<SyntacticModel> next();

 private:
  bool table_shapes_for(int carrier);
  bool advance_tables();
  bool satisfies_axioms(const SyntacticModel& m) const;

  const Signature& sig_;
  std::vector<std::pair<int, Formula>> axioms_;  // (context, formula)
  int bound_;
  int carrier_ = -1;
  SyntacticModel cur_;
  bool fresh_ = false;
};

std::vector<SyntacticModel> enumerate_models(const SyntacticDoctrine& d,
                                             int sizeBound);

// --- Propositional models, uniformly ------------------------------------------

// A finite-product-preserving assignment of point sets plus per-fiber
// interpretations; the uniform face of the three concrete model kinds below.
class PropModel {
 public:
  virtual ~PropModel() = default;
  virtual const Doctrine& doctrine() const = 0;
  virtual std::vector<std::vector<int>> points(const Obj& x) const = 0;
  virtual bool satisfies(const Elem& e, const std::vector<int>& point) const = 0;

  bool universally_valid(const Elem& e) const {
    for (auto& p : points(e.obj))
      if (!satisfies(e, p)) return false;
    return true;
  }
};

class SyntacticPropModel : public PropModel {
 public:
  SyntacticPropModel(const SyntacticDoctrine& d, SyntacticModel m)
      : d_(&d), m_(std::move(m)) {}
  const SyntacticModel& model() const { return m_; }
  const Doctrine& doctrine() const override { return *d_; }
  std::vector<std::vector<int>> points(const Obj& x) const override;
  bool satisfies(const Elem& e, const std::vector<int>& point) const override;

 private:
  const SyntacticDoctrine* d_;
  SyntacticModel m_;
};

// Models of a finite (semilattice-based) doctrine: every object carries a
// singleton or empty point set; the objects with a singleton form a filter
// of the semilattice, and each of their fibers is interpreted through a
// chosen atom.
class FinitePropModel : public PropModel {
 public:
  FinitePropModel(const FiniteDoctrine& d, std::vector<bool> inhabited,
                  std::vector<int> atomChoice);
  const std::vector<bool>& inhabited() const { return inhabited_; }
  const std::vector<int>& atom_choice() const { return atomChoice_; }
  const Doctrine& doctrine() const override { return *d_; }
  std::vector<std::vector<int>> points(const Obj& x) const override;
  bool satisfies(const Elem& e, const std::vector<int>& point) const override;

 private:
  const FiniteDoctrine* d_;
  std::vector<bool> inhabited_;
  std::vector<int> atomChoice_;  // -1 where uninhabited
};

// All propositional models of a finite doctrine, exhaustively.
std::vector<FinitePropModel> enumerate_finite_models(const FiniteDoctrine& d);

// A propositional model of a subsets doctrine, given per generator by a
// carrier and the fibration w: N(G) -> G; the interpretation of a subset is
// its (componentwise) w-preimage, which is the general Boolean-homomorphic
// form on this base.
class SubsetsPropModel : public PropModel {
 public:
  SubsetsPropModel(const SubsetsDoctrine& d, std::vector<int> carrierSizes,
                   std::vector<std::vector<int>> w);
  const Doctrine& doctrine() const override { return *d_; }
  const SubsetsDoctrine& subsets() const { return *d_; }
  int carrier_size(int gen) const { return sizes_[gen]; }
  const std::vector<int>& fibration(int gen) const { return w_[gen]; }
  std::vector<std::vector<int>> points(const Obj& x) const override;
  bool satisfies(const Elem& e, const std::vector<int>& point) const override;

 private:
  const SubsetsDoctrine* d_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> w_;
};

// --- Validity families ----------------------------------------------------------

// F_X: elements whose point set is all of M(X) in every model; I_X: elements
// failing that in every model. On finite backends both families are
// materialized; otherwise they answer through a membership predicate.
FamilyPair valid_universal_family(const Doctrine& d,
                                  std::vector<const PropModel*> models);

// --- Richness and the Hom(t,-) model --------------------------------------------

struct RichModelResult {
  bool rich = false;
  Obj failObject;         // set when not rich
  Elem failElement;
  std::unique_ptr<FinitePropModel> model;  // set when rich
};

// Exhaustive richness check of an ultrafilter family on a finite doctrine;
// on success builds the Hom(t,-) model and verifies that its validity family
// recovers the ultrafilter.
RichModelResult rich_model(const FiniteDoctrine& d, const Family& ultrafilter);

// --- Models at an object ---------------------------------------------------------

// {y | (s,y) satisfies alpha} for alpha in fiber(S x Y).
std::vector<std::vector<int>> model_at_s_eval(const SyntacticDoctrine& d,
                                              int sCtx,
                                              const SyntacticPropModel& model,
                                              const std::vector<int>& s,
                                              int yCtx, const Formula& alpha);

// --- Elementary quotient ---------------------------------------------------------

struct QuotientReport {
  bool ok = false;
  std::string error;  // non-equivalence / incompatible interpretation
  // per generator: equivalence classes of the source carrier
  std::vector<std::vector<std::vector<int>>> classes;
  bool deltaIsDiagonal = false;
  bool familiesPreserved = false;
  std::unique_ptr<SubsetsPropModel> quotient;
};

// Quotients a propositional model of a subsets doctrine by the interpretation
// of the fibered equality (the diagonal family), yielding an elementary model
// with the same validity family. interpOverride, when given, replaces the
// interpretation of delta on G x G for generator G (test hook for broken
// models: the relation is then verified to be an equivalence).
QuotientReport elementary_quotient(
    const SubsetsPropModel& n,
    const std::vector<std::optional<Bitset>>& interpOverride = {});

}  // namespace dct

#endif
