#include "dct/category.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace dct {

CtxMorphism ctx_identity(int n) {
  CtxMorphism m;
  m.srcSize = n;
  for (int i = 0; i < n; ++i) m.components.push_back(Term::variable(i));
  return m;
}

CtxMorphism ctx_compose(const CtxMorphism& g, const CtxMorphism& f) {
  if (f.dstSize() != g.srcSize)
    throw std::invalid_argument("ctx_compose: object mismatch");
  CtxMorphism r;
  r.srcSize = f.srcSize;
  for (auto& c : g.components)
    r.components.push_back(substitute_term(c, f.components));
  return r;
}

CtxMorphism ctx_proj1(int n, int m) {
  CtxMorphism r;
  r.srcSize = n + m;
  for (int i = 0; i < n; ++i) r.components.push_back(Term::variable(i));
  return r;
}

CtxMorphism ctx_proj2(int n, int m) {
  CtxMorphism r;
  r.srcSize = n + m;
  for (int i = 0; i < m; ++i) r.components.push_back(Term::variable(n + i));
  return r;
}

CtxMorphism ctx_pair(const CtxMorphism& f, const CtxMorphism& g) {
  if (f.srcSize != g.srcSize)
    throw std::invalid_argument("ctx_pair: source mismatch");
  CtxMorphism r;
  r.srcSize = f.srcSize;
  r.components = f.components;
  r.components.insert(r.components.end(), g.components.begin(),
                      g.components.end());
  return r;
}

int ctx_morphism_depth(const CtxMorphism& f) {
  int d = 0;
  for (auto& c : f.components) d = std::max(d, term_depth(c));
  return d;
}

std::string print_ctx_morphism(const CtxMorphism& f, const Signature& sig) {
  std::string s = "(";
  for (size_t i = 0; i < f.components.size(); ++i) {
    if (i) s += ",";
    s += print_term(f.components[i], sig);
  }
  return s + ")";
}

std::vector<CtxMorphism> ctx_enumerate_morphisms(const Signature& sig, int src,
                                                 int dst, int maxDepth) {
  std::vector<Term> terms = enumerate_terms(sig, src, maxDepth);
  std::vector<CtxMorphism> out;
  if (dst == 0) {
    CtxMorphism empty;
    empty.srcSize = src;
    out.push_back(empty);
    return out;
  }
  if (terms.empty()) return out;
  std::vector<size_t> idx(dst, 0);
  while (true) {
    CtxMorphism m;
    m.srcSize = src;
    for (int i = 0; i < dst; ++i) m.components.push_back(terms[idx[i]]);
    out.push_back(std::move(m));
    int i = dst - 1;
    while (i >= 0 && ++idx[i] == terms.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const CtxMorphism& a, const CtxMorphism& b) {
                     int da = ctx_morphism_depth(a), db = ctx_morphism_depth(b);
                     if (da != db) return da < db;
                     return print_ctx_morphism(a, sig) <
                            print_ctx_morphism(b, sig);
                   });
  return out;
}

SemilatticeCategory::SemilatticeCategory(std::vector<std::string> elements,
                                         std::vector<std::vector<int>> meetTable,
                                         int top)
    : names_(std::move(elements)), meet_(std::move(meetTable)), top_(top) {
  int n = size();
  if (top_ < 0 || top_ >= n)
    throw std::invalid_argument("semilattice: bad top element");
  if (static_cast<int>(meet_.size()) != n)
    throw std::invalid_argument("semilattice: meet table size mismatch");
  for (auto& row : meet_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("semilattice: meet table row mismatch");
  for (int a = 0; a < n; ++a) {
    if (meet_[a][a] != a)
      throw std::invalid_argument("semilattice: meet not idempotent");
    if (meet_[a][top_] != a || meet_[top_][a] != a)
      throw std::invalid_argument("semilattice: top is not a unit");
    for (int b = 0; b < n; ++b) {
      if (meet_[a][b] != meet_[b][a])
        throw std::invalid_argument("semilattice: meet not commutative");
      for (int c = 0; c < n; ++c)
        if (meet_[meet_[a][b]][c] != meet_[a][meet_[b][c]])
          throw std::invalid_argument("semilattice: meet not associative");
    }
  }
}

int SemilatticeCategory::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("semilattice: unknown element '" + name + "'");
}

SemilatticeCategory SemilatticeCategory::from_json_text(
    const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::string> names = j.at("elements");
  auto idx = [&](const std::string& e) {
    auto it = std::find(names.begin(), names.end(), e);
    if (it == names.end())
      throw std::invalid_argument("semilattice json: unknown element " + e);
    return static_cast<int>(it - names.begin());
  };
  int n = static_cast<int>(names.size());
  std::vector meet(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) meet[i][i] = i;
  for (auto& [key, val] : j.at("meet").items()) {
    // key is "(a,b)"
    if (key.size() < 2 || key.front() != '(' || key.back() != ')')
      throw std::invalid_argument("semilattice json: bad meet key " + key);
    auto inner = key.substr(1, key.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("semilattice json: bad meet key " + key);
    int a = idx(inner.substr(0, comma));
    int b = idx(inner.substr(comma + 1));
    int c = idx(val.get<std::string>());
    meet[a][b] = c;
    meet[b][a] = c;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (meet[a][b] < 0)
        throw std::invalid_argument("semilattice json: missing meet of " +
                                    names[a] + "," + names[b]);
  return SemilatticeCategory(std::move(names), std::move(meet),
                             idx(j.at("top").get<std::string>()));
}

std::string SemilatticeCategory::to_json_text() const {
  nlohmann::json j;
  j["elements"] = names_;
  j["top"] = names_[top_];
  nlohmann::json meets = nlohmann::json::object();
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      meets["(" + names_[a] + "," + names_[b] + ")"] = names_[meet_[a][b]];
  j["meet"] = meets;
  return j.dump(2);
}

}  // namespace dct
