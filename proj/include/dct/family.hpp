#ifndef DCT_FAMILY_HPP
#define DCT_FAMILY_HPP

#include <functional>
#include <map>
#include <vector>

#include "dct/doctrine.hpp"

namespace dct {

// An object-indexed family of fiber elements. Explicit families list every
// member per object (finite backends); generator families pair a generator
// list with a closure kind and are queried through generated_membership;
// semantic families (validity classes of a model set) answer through a
// membership predicate.
struct Family {
  enum class Kind { Explicit, FilterGenerators, IdealGenerators, Semantic };
  Kind kind = Kind::Explicit;
  std::map<Obj, std::vector<Elem>> elems;
  std::function<bool(const Elem&)> member;

  static Family explicit_family(std::map<Obj, std::vector<Elem>> es) {
    Family f;
    f.kind = Kind::Explicit;
    f.elems = std::move(es);
    return f;
  }
  static Family generators(Kind k, std::map<Obj, std::vector<Elem>> gs) {
    Family f;
    f.kind = k;
    f.elems = std::move(gs);
    return f;
  }
  static Family semantic(std::function<bool(const Elem&)> m) {
    Family f;
    f.kind = Kind::Semantic;
    f.member = std::move(m);
    return f;
  }

  bool contains(const Elem& e) const;
  const std::vector<Elem>& at(const Obj& x) const;
  bool has(const Obj& x) const { return elems.count(x) > 0; }
};

struct FamilyPair {
  Family filter;
  Family ideal;
};

// The term-tuple certificate of a mixed sequent: n universal instantiations
// g_i into the Y_{picks[i]} and n' existential instantiations g'_k into the
// V_{picksEx[k]}. Picks are 1-based.
struct Witness {
  std::vector<int> picks;
  std::vector<Mor> morphisms;
  std::vector<int> picksEx;
  std::vector<Mor> morphismsEx;

  int n() const { return static_cast<int>(picks.size()); }
  int n_prime() const { return static_cast<int>(picksEx.size()); }
};

}  // namespace dct

#endif
