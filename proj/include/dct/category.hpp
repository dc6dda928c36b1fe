#ifndef DCT_CATEGORY_HPP
#define DCT_CATEGORY_HPP

#include <string>
#include <vector>

#include "dct/term.hpp"

namespace dct {

// --- The syntactic context category -----------------------------------------
//
// Objects are bare context sizes; the product of n and m is n + m (skeletal,
// strictly associative). A morphism n -> m is an m-tuple of terms over n
// variables.

struct CtxMorphism {
  int srcSize = 0;
  std::vector<Term> components;  // length = target size

  int dstSize() const { return static_cast<int>(components.size()); }
};

CtxMorphism ctx_identity(int n);

// g after f: substitutes f's components into g's.
CtxMorphism ctx_compose(const CtxMorphism& g, const CtxMorphism& f);

// Projections of n + m onto the two blocks, and tupling.
CtxMorphism ctx_proj1(int n, int m);
CtxMorphism ctx_proj2(int n, int m);
CtxMorphism ctx_pair(const CtxMorphism& f, const CtxMorphism& g);

int ctx_morphism_depth(const CtxMorphism& f);
std::string print_ctx_morphism(const CtxMorphism& f, const Signature& sig);

// All term tuples src -> dst with component depth <= maxDepth, ordered by
// (max component depth, lexicographic printed form). Deterministic and
// duplicate-free; a prefix of any deeper enumeration.
std::vector<CtxMorphism> ctx_enumerate_morphisms(const Signature& sig, int src,
                                                 int dst, int maxDepth);

// --- Finite meet-semilattice categories --------------------------------------
//
// A finite category with all finite products: Hom(x, y) is a singleton iff
// x <= y, the product is the meet, the terminal object is the top.

class SemilatticeCategory {
 public:
  // meetTable[i][j] = index of i /\ j. Laws are validated.
  SemilatticeCategory(std::vector<std::string> elements,
                      std::vector<std::vector<int>> meetTable, int top);

  static SemilatticeCategory from_json_text(const std::string& text);
  std::string to_json_text() const;

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index(const std::string& name) const;
  int top() const { return top_; }
  int meet(int a, int b) const { return meet_[a][b]; }
  bool leq(int a, int b) const { return meet_[a][b] == a; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> meet_;
  int top_;
};

}  // namespace dct

#endif
