#ifndef DCT_DOCTRINE_HPP
#define DCT_DOCTRINE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dct/category.hpp"
#include "dct/term.hpp"
#include "dct/tri.hpp"

namespace dct {

// Type-erased base-category object. Interpretation is per backend:
//   syntactic   v = {contextSize}
//   finite      v = {semilatticeElementIndex}
//   subsets     v = list of generator indices (product factors), {} terminal
struct Obj {
  std::vector<int> v;

  bool operator==(const Obj& o) const { return v == o.v; }
  bool operator<(const Obj& o) const { return v < o.v; }
};

using Bitset = std::vector<bool>;

// A fiber element together with the object of the fiber it lives in.
// Syntactic fibers hold raw formulas (order is consulted through leq, no
// quotient by provable equivalence is materialized); finite and subsets
// fibers hold bitsets over atoms / carrier cells.
struct Elem {
  Obj obj;
  Formula formula;
  Bitset bits;

  bool operator==(const Elem& o) const {
    return obj == o.obj && formula == o.formula && bits == o.bits;
  }
};

// A base morphism src -> dst. Backends read the field they use: term tuples
// for the syntactic category, nothing for semilattices (at most one morphism),
// a cell table for subsets (table[i] = index of the image of source cell i).
struct Mor {
  Obj src, dst;
  std::vector<Term> terms;
  std::vector<int> table;

  bool operator==(const Mor& o) const {
    return src == o.src && dst == o.dst && terms == o.terms && table == o.table;
  }
};

class Doctrine {
 public:
  virtual ~Doctrine() = default;

  // base category with finite products
  virtual Obj terminal() const = 0;
  virtual Obj product(const Obj& x, const Obj& y) const = 0;
  virtual Mor identity(const Obj& x) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;
  virtual Mor proj1(const Obj& x, const Obj& y) const = 0;
  virtual Mor proj2(const Obj& x, const Obj& y) const = 0;
  virtual Mor pair(const Mor& f, const Mor& g) const = 0;

  // Bounded enumeration, ordered by (depth, printed form); duplicate-free.
  // Finite backends ignore depth.
  virtual std::vector<Mor> morphisms(const Obj& from, const Obj& to,
                                     int maxDepth) const = 0;
  // True when the above already lists every morphism from `from` to `to`.
  virtual bool morphisms_complete(const Obj& from, const Obj& to,
                                  int maxDepth) const = 0;

  // fibers
  virtual Elem top(const Obj& x) const = 0;
  virtual Elem bottom(const Obj& x) const = 0;
  virtual Elem negate(const Elem& a) const = 0;
  virtual Elem conj(const Elem& a, const Elem& b) const = 0;
  virtual Elem disj(const Elem& a, const Elem& b) const = 0;
  virtual Elem reindex(const Mor& f, const Elem& a) const = 0;

  virtual Tri leq(const Elem& a, const Elem& b) const = 0;
  // Positive-only cheap check: True answers of leq without countermodel
  // search. Exact on finite backends.
  virtual bool leq_certified(const Elem& a, const Elem& b) const {
    return leq(a, b) == Tri::True;
  }

  // Enumerability. finite_objects / fiber_elements throw on backends with
  // infinite object classes or fibers.
  virtual bool is_finite() const = 0;
  virtual std::vector<Obj> finite_objects() const;
  virtual std::vector<Elem> fiber_elements(const Obj& x) const;

  virtual std::string print_obj(const Obj& x) const = 0;
  virtual std::string print_elem(const Elem& a) const = 0;
  virtual std::string print_mor(const Mor& f) const = 0;
};

// Folds a factor list into the ambient product (left fold) and the block
// projections ambient -> factors[i].
struct ProductDiagram {
  Obj ambient;
  std::vector<Mor> blocks;
};
ProductDiagram product_diagram(const Doctrine& d, const std::vector<Obj>& factors);

// --- Syntactic doctrine -------------------------------------------------------

struct SyntacticBounds {
  int instantiationDepth = 2;
  int modelSearchBound = 3;
};

struct SyntacticModel;  // models.hpp

// Fibers over context n are quantifier-free formulas in n variables, ordered
// by provable consequence modulo the universal theory given by the axioms.
// The order is approximated: Herbrand grounding up to instantiationDepth for
// the positive side, finite countermodel search up to modelSearchBound for
// the negative side, Unknown in between.
class SyntacticDoctrine : public Doctrine {
 public:
  SyntacticDoctrine(Signature sig, std::vector<Formula> axioms,
                    SyntacticBounds bounds = {});

  const Signature& sig() const { return sig_; }
  const std::vector<Formula>& axioms() const { return axioms_; }
  const SyntacticBounds& bounds() const { return bounds_; }
  void set_bounds(const SyntacticBounds& b) { bounds_ = b; }

  Obj ctx(int n) const { return Obj{{n}}; }
  static int ctx_size(const Obj& x) { return x.v.at(0); }

  Elem elem(int n, Formula f) const;
  Mor mor(int src, std::vector<Term> components) const;

  // Tri order with optional countermodel (model + refuting assignment).
  Tri fiber_leq_explain(const Elem& a, const Elem& b,
                        SyntacticModel* counterexampleModel,
                        std::vector<int>* counterexamplePoint) const;

  // Axiom instances grounded at all term tuples over context n up to the
  // instantiation depth (cached).
  const std::vector<Formula>& grounded_axioms(int n) const;

  Obj terminal() const override { return ctx(0); }
  Obj product(const Obj& x, const Obj& y) const override {
    return ctx(ctx_size(x) + ctx_size(y));
  }
  Mor identity(const Obj& x) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor proj1(const Obj& x, const Obj& y) const override;
  Mor proj2(const Obj& x, const Obj& y) const override;
  Mor pair(const Mor& f, const Mor& g) const override;
  std::vector<Mor> morphisms(const Obj& from, const Obj& to,
                             int maxDepth) const override;
  bool morphisms_complete(const Obj& from, const Obj& to,
                          int maxDepth) const override;
  Elem top(const Obj& x) const override;
  Elem bottom(const Obj& x) const override;
  Elem negate(const Elem& a) const override;
  Elem conj(const Elem& a, const Elem& b) const override;
  Elem disj(const Elem& a, const Elem& b) const override;
  Elem reindex(const Mor& f, const Elem& a) const override;
  Tri leq(const Elem& a, const Elem& b) const override;
  bool leq_certified(const Elem& a, const Elem& b) const override;
  bool is_finite() const override { return false; }
  std::string print_obj(const Obj& x) const override;
  std::string print_elem(const Elem& a) const override;
  std::string print_mor(const Mor& f) const override;

 private:
  Signature sig_;
  std::vector<Formula> axioms_;  // context inferred, universally closed
  std::vector<int> axiomCtx_;
  SyntacticBounds bounds_;
  mutable std::mutex cacheMu_;
  mutable std::map<int, std::vector<Formula>> groundedCache_;
};

// --- Finite tabular doctrine ---------------------------------------------------

// Fibers are powerset algebras over listed atom sets; reindexing along the
// unique morphism x -> y is the preimage of an atom map At(x) -> At(y).
class FiniteDoctrine : public Doctrine {
 public:
  FiniteDoctrine(SemilatticeCategory base,
                 std::vector<std::vector<std::string>> fiberAtoms,
                 std::map<std::pair<int, int>, std::vector<int>> atomMaps);

  static FiniteDoctrine from_json_text(const std::string& text);

  const SemilatticeCategory& base() const { return base_; }
  Obj obj(int i) const { return Obj{{i}}; }
  static int obj_index(const Obj& x) { return x.v.at(0); }
  int atom_count(const Obj& x) const {
    return static_cast<int>(atoms_[obj_index(x)].size());
  }
  const std::vector<std::string>& atom_names(const Obj& x) const {
    return atoms_[obj_index(x)];
  }
  // atom map of the unique morphism x -> y
  const std::vector<int>& atom_map(int x, int y) const;
  Elem elem_from_atoms(const Obj& x,
                       const std::vector<std::string>& atomNames) const;

  Obj terminal() const override { return obj(base_.top()); }
  Obj product(const Obj& x, const Obj& y) const override {
    return obj(base_.meet(obj_index(x), obj_index(y)));
  }
  Mor identity(const Obj& x) const override { return Mor{x, x, {}, {}}; }
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor proj1(const Obj& x, const Obj& y) const override {
    return Mor{product(x, y), x, {}, {}};
  }
  Mor proj2(const Obj& x, const Obj& y) const override {
    return Mor{product(x, y), y, {}, {}};
  }
  Mor pair(const Mor& f, const Mor& g) const override;
  std::vector<Mor> morphisms(const Obj& from, const Obj& to,
                             int maxDepth) const override;
  bool morphisms_complete(const Obj&, const Obj&, int) const override {
    return true;
  }
  Elem top(const Obj& x) const override;
  Elem bottom(const Obj& x) const override;
  Elem negate(const Elem& a) const override;
  Elem conj(const Elem& a, const Elem& b) const override;
  Elem disj(const Elem& a, const Elem& b) const override;
  Elem reindex(const Mor& f, const Elem& a) const override;
  Tri leq(const Elem& a, const Elem& b) const override;
  bool is_finite() const override { return true; }
  std::vector<Obj> finite_objects() const override;
  std::vector<Elem> fiber_elements(const Obj& x) const override;
  std::string print_obj(const Obj& x) const override;
  std::string print_elem(const Elem& a) const override;
  std::string print_mor(const Mor& f) const override;

 private:
  SemilatticeCategory base_;
  std::vector<std::vector<std::string>> atoms_;
  std::map<std::pair<int, int>, std::vector<int>> maps_;
};

// --- Subsets doctrine -----------------------------------------------------------

// Powerset fibers over a finite-set base: objects are formal products of the
// generating sets, morphisms are all functions between carriers, reindexing
// is preimage. Carrier cells are tuples with one entry per factor.
class SubsetsDoctrine : public Doctrine {
 public:
  explicit SubsetsDoctrine(std::vector<std::pair<std::string, int>> generators);

  int generator_count() const { return static_cast<int>(gens_.size()); }
  Obj gen(int i) const { return Obj{{i}}; }
  const std::string& gen_name(int i) const { return gens_[i].first; }
  int gen_size(int i) const { return gens_[i].second; }

  // Carrier of an object: all tuples, lex order. An Elem's bitset is indexed
  // by the position in this list.
  std::vector<std::vector<int>> carrier(const Obj& x) const;
  int carrier_size(const Obj& x) const;
  int cell_index(const Obj& x, const std::vector<int>& tuple) const;
  std::vector<int> cell_tuple(const Obj& x, int index) const;

  Elem elem_from_cells(const Obj& x, const std::vector<std::vector<int>>& cells) const;
  Mor function(const Obj& x, const Obj& y,
               const std::vector<int>& cellTable) const;

  // Right and left adjoints to reindexing along proj1: forall/exists over the
  // Y factor of X x Y.
  Elem quantifier_forall(const Obj& x, const Obj& y, const Elem& s) const;
  Elem quantifier_exists(const Obj& x, const Obj& y, const Elem& s) const;

  Obj terminal() const override { return Obj{{}}; }
  Obj product(const Obj& x, const Obj& y) const override;
  Mor identity(const Obj& x) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor proj1(const Obj& x, const Obj& y) const override;
  Mor proj2(const Obj& x, const Obj& y) const override;
  Mor pair(const Mor& f, const Mor& g) const override;
  std::vector<Mor> morphisms(const Obj& from, const Obj& to,
                             int maxDepth) const override;
  bool morphisms_complete(const Obj&, const Obj&, int) const override {
    return true;
  }
  Elem top(const Obj& x) const override;
  Elem bottom(const Obj& x) const override;
  Elem negate(const Elem& a) const override;
  Elem conj(const Elem& a, const Elem& b) const override;
  Elem disj(const Elem& a, const Elem& b) const override;
  Elem reindex(const Mor& f, const Elem& a) const override;
  Tri leq(const Elem& a, const Elem& b) const override;
  bool is_finite() const override { return true; }
  std::vector<Obj> finite_objects() const override;  // products up to 2 factors
  std::vector<Elem> fiber_elements(const Obj& x) const override;
  std::string print_obj(const Obj& x) const override;
  std::string print_elem(const Elem& a) const override;
  std::string print_mor(const Mor& f) const override;

 private:
  std::vector<std::pair<std::string, int>> gens_;
};

// --- Adding a constant (Kleisli construction) -----------------------------------

// The doctrine P_S: same objects, Hom(X, Y) = Hom(S x X, Y), fibers
// P_S(X) = P(S x X). Composition of f: X ~> Y and g: Y ~> Z is
// g . <pr1, f>; the identity at X is pr2: S x X -> X.
class ConstantAdjoinedDoctrine : public Doctrine {
 public:
  ConstantAdjoinedDoctrine(const Doctrine& base, Obj s);

  const Doctrine& base() const { return *base_; }
  const Obj& constant_type() const { return s_; }

  // The distinguished constant id_S: t ~> S and the canonical morphism's
  // fiber component l_S at X (reindexing along pr2: S x X -> X).
  Mor distinguished_constant() const;
  Elem embed(const Obj& x, const Elem& baseElem) const;

  // An adjoined element over X is a base element over S x X.
  Obj base_fiber_object(const Obj& x) const { return base_->product(s_, x); }

  Obj terminal() const override { return base_->terminal(); }
  Obj product(const Obj& x, const Obj& y) const override {
    return base_->product(x, y);
  }
  Mor identity(const Obj& x) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  Mor proj1(const Obj& x, const Obj& y) const override;
  Mor proj2(const Obj& x, const Obj& y) const override;
  Mor pair(const Mor& f, const Mor& g) const override;
  std::vector<Mor> morphisms(const Obj& from, const Obj& to,
                             int maxDepth) const override;
  bool morphisms_complete(const Obj& from, const Obj& to,
                          int maxDepth) const override;
  Elem top(const Obj& x) const override;
  Elem bottom(const Obj& x) const override;
  Elem negate(const Elem& a) const override;
  Elem conj(const Elem& a, const Elem& b) const override;
  Elem disj(const Elem& a, const Elem& b) const override;
  Elem reindex(const Mor& f, const Elem& a) const override;
  Tri leq(const Elem& a, const Elem& b) const override;
  bool leq_certified(const Elem& a, const Elem& b) const override;
  bool is_finite() const override { return base_->is_finite(); }
  std::vector<Obj> finite_objects() const override {
    return base_->finite_objects();
  }
  std::vector<Elem> fiber_elements(const Obj& x) const override;
  std::string print_obj(const Obj& x) const override;
  std::string print_elem(const Elem& a) const override;
  std::string print_mor(const Mor& f) const override;

 private:
  const Doctrine* base_;
  Obj s_;
};

std::unique_ptr<ConstantAdjoinedDoctrine> add_constant(const Doctrine& d,
                                                       const Obj& s);

// --- Elementary structure --------------------------------------------------------

struct EqualityFamily {
  std::map<Obj, Elem> delta;  // delta_X in fiber(X x X)
};

struct ElementaryReport {
  struct Condition {
    std::string name;
    bool pass = true;
    std::string counterexample;
  };
  std::vector<Condition> conditions;
  bool all_pass() const {
    for (auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
};

// Checks reflexivity, substitutivity and the pairing condition of a fibered
// equality on the given objects; fibers must be enumerable.
ElementaryReport check_elementary(const Doctrine& d, const EqualityFamily& eq,
                                  const std::vector<Obj>& scope);

}  // namespace dct

#endif
