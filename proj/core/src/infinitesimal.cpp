#include "weil/infinitesimal.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

namespace {

Monomial squarefree_from_indices(int n, const std::vector<int>& seq) {
  if (seq.size() < 1) throw MismatchError("empty relation sequence");
  std::vector<int> exps(n, 0);
  int prev = 0;
  for (int idx : seq) {
    if (idx < 1 || idx > n)
      throw MismatchError("relation index " + std::to_string(idx) +
                          " out of range 1.." + std::to_string(n));
    if (idx <= prev)
      throw MismatchError("relation sequence not strictly increasing");
    exps[idx - 1] = 1;
    prev = idx;
  }
  return Monomial(std::move(exps));
}

}  // namespace

InfinitesimalObject InfinitesimalObject::make(
    int n, std::vector<int> caps, const std::vector<std::vector<int>>& relations) {
  std::vector<Monomial> rel;
  rel.reserve(relations.size());
  for (const auto& seq : relations) rel.push_back(squarefree_from_indices(n, seq));
  return with_monomial_relations(n, std::move(caps), std::move(rel));
}

InfinitesimalObject InfinitesimalObject::simplicial(
    int n, const std::vector<std::vector<int>>& relations) {
  return make(n, std::vector<int>(n, 2), relations);
}

InfinitesimalObject InfinitesimalObject::with_monomial_relations(
    int n, std::vector<int> caps, std::vector<Monomial> relations) {
  if (n < 0) throw MismatchError("negative variable count");
  if (static_cast<int>(caps.size()) != n)
    throw MismatchError("cap count does not match variable count");
  for (int c : caps)
    if (c < 2) throw MismatchError("cap must be at least 2");
  for (const auto& m : relations) {
    if (m.arity() != n) throw MismatchError("relation arity mismatch");
    if (m.is_unit()) throw MismatchError("constant relation not allowed");
  }
  InfinitesimalObject obj;
  obj.n_ = n;
  obj.caps_ = std::move(caps);
  obj.relations_ = std::move(relations);
  obj.normalize();
  return obj;
}

InfinitesimalObject InfinitesimalObject::power(int n) {
  return make(n, std::vector<int>(n, 2), {});
}

InfinitesimalObject InfinitesimalObject::pairwise(int n) {
  std::vector<std::vector<int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  return make(n, std::vector<int>(n, 2), pairs);
}

InfinitesimalObject InfinitesimalObject::higher(int order) {
  if (order < 1) throw MismatchError("order must be positive");
  return make(1, {order + 1}, {});
}

bool InfinitesimalObject::all_caps_two() const {
  return std::all_of(caps_.begin(), caps_.end(), [](int c) { return c == 2; });
}

bool InfinitesimalObject::in_ideal(const Monomial& m) const {
  for (int i = 0; i < n_; ++i)
    if (m.exp(i) >= caps_[i]) return true;
  for (const auto& r : relations_)
    if (r.divides(m)) return true;
  return false;
}

std::vector<Monomial> InfinitesimalObject::ideal_generators() const {
  std::vector<Monomial> gens;
  for (int i = 0; i < n_; ++i) gens.push_back(Monomial::var(n_, i, caps_[i]));
  gens.insert(gens.end(), relations_.begin(), relations_.end());
  return gens;
}

void InfinitesimalObject::normalize() {
  // Drop relations already implied by a cap power, then sort, dedupe, and
  // prune anything divisible by another surviving relation.
  std::vector<Monomial> kept;
  for (const auto& r : relations_) {
    bool capped = false;
    for (int i = 0; i < n_ && !capped; ++i) capped = r.exp(i) >= caps_[i];
    if (!capped) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<Monomial> minimal;
  for (const auto& r : kept) {
    bool redundant = false;
    for (const auto& s : kept) {
      if (s != r && s.divides(r)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(r);
  }
  relations_ = std::move(minimal);
}

std::string InfinitesimalObject::str() const {
  if (n_ == 0) return "1";
  const bool simpl = all_caps_two();
  std::string out;
  if (simpl && n_ == 1) return "D";
  if (simpl) {
    out = "D^" + std::to_string(n_);
  } else if (n_ == 1) {
    return "D_" + std::to_string(caps_[0] - 1);
  } else {
    out = "D[caps ";
    for (int i = 0; i < n_; ++i)
      out += (i ? "," : "") + std::to_string(caps_[i]);
    out += "]";
  }
  if (!relations_.empty()) {
    out += "{";
    for (const auto& r : relations_) {
      out += "(";
      bool first = true;
      for (int i = 0; i < n_; ++i) {
        for (int e = 0; e < r.exp(i); ++e) {
          if (!first) out += ",";
          out += std::to_string(i + 1);
          first = false;
        }
      }
      out += ")";
    }
    out += "}";
  }
  return out;
}

InfinitesimalObject oplus(const InfinitesimalObject& a, const InfinitesimalObject& b) {
  if (!a.is_simplicial() || !b.is_simplicial())
    throw MismatchError("oplus requires simplicial operands");
  const int m = a.var_count(), n = b.var_count();
  std::vector<Monomial> rel;
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = m + i;
  for (const auto& r : a.relations()) {
    std::vector<int> ident(m);
    for (int i = 0; i < m; ++i) ident[i] = i;
    rel.push_back(r.remap(m + n, ident));
  }
  for (const auto& r : b.relations()) rel.push_back(r.remap(m + n, shift));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      rel.push_back(Monomial::var(m + n, i).times(Monomial::var(m + n, m + j)));
  return InfinitesimalObject::with_monomial_relations(
      m + n, std::vector<int>(m + n, 2), std::move(rel));
}

InfinitesimalObject product_object(const InfinitesimalObject& a,
                                   const InfinitesimalObject& b) {
  const int m = a.var_count(), n = b.var_count();
  std::vector<int> caps = a.caps();
  caps.insert(caps.end(), b.caps().begin(), b.caps().end());
  std::vector<Monomial> rel;
  std::vector<int> ident(m), shift(n);
  for (int i = 0; i < m; ++i) ident[i] = i;
  for (int i = 0; i < n; ++i) shift[i] = m + i;
  for (const auto& r : a.relations()) rel.push_back(r.remap(m + n, ident));
  for (const auto& r : b.relations()) rel.push_back(r.remap(m + n, shift));
  return InfinitesimalObject::with_monomial_relations(m + n, std::move(caps),
                                                      std::move(rel));
}

InfinitesimalMap InfinitesimalMap::make(InfinitesimalObject source,
                                        InfinitesimalObject target,
                                        std::vector<Poly> components) {
  if (static_cast<int>(components.size()) != target.var_count())
    throw MismatchError("component count does not match target variable count");
  MonomialKeep keep = [&source](const Monomial& m) { return !source.in_ideal(m); };
  for (auto& c : components) {
    if (c.arity() != source.var_count())
      throw MismatchError("component arity does not match source variable count");
    c = c.filtered(keep);
    if (c.constant_term() != 0)
      throw NonzeroConstantTerm("putative mapping component has constant term " +
                                rat_str(c.constant_term()));
  }
  for (const auto& g : target.ideal_generators()) {
    Poly image(source.var_count());
    image.add_term(Monomial::unit(source.var_count()), Rat(1));
    for (int j = 0; j < target.var_count(); ++j)
      for (int e = 0; e < g.exp(j) && !image.is_zero(); ++e)
        image = (image * components[j]).filtered(keep);
    if (!image.is_zero()) throw IllDefinedMap(g.str("d"), image.str("d"));
  }
  InfinitesimalMap f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.components_ = std::move(components);
  return f;
}

InfinitesimalMap InfinitesimalMap::identity(const InfinitesimalObject& obj) {
  std::vector<Poly> comps;
  for (int i = 0; i < obj.var_count(); ++i)
    comps.push_back(Poly::variable(obj.var_count(), i));
  return make(obj, obj, std::move(comps));
}

InfinitesimalMap InfinitesimalMap::coordinates(InfinitesimalObject source,
                                               InfinitesimalObject target,
                                               const std::vector<int>& index) {
  std::vector<Poly> comps;
  comps.reserve(index.size());
  for (int ix : index) {
    if (ix == 0) {
      comps.push_back(Poly::zero(source.var_count()));
    } else {
      int v = std::abs(ix) - 1;
      if (v >= source.var_count()) throw MismatchError("coordinate index out of range");
      comps.push_back(Poly::variable(source.var_count(), v).scaled(Rat(ix > 0 ? 1 : -1)));
    }
  }
  return make(std::move(source), std::move(target), std::move(comps));
}

InfinitesimalMap InfinitesimalMap::inclusion(const InfinitesimalObject& sub,
                                             const InfinitesimalObject& whole) {
  if (sub.var_count() != whole.var_count())
    throw MismatchError("inclusion requires equal variable counts");
  std::vector<int> index(sub.var_count());
  for (int i = 0; i < sub.var_count(); ++i) index[i] = i + 1;
  return coordinates(sub, whole, index);
}

InfinitesimalMap InfinitesimalMap::block_projection(const InfinitesimalObject& source,
                                                    const InfinitesimalObject& target,
                                                    int offset) {
  std::vector<int> index(target.var_count());
  for (int j = 0; j < target.var_count(); ++j) index[j] = offset + j + 1;
  return coordinates(source, target, index);
}

InfinitesimalMap InfinitesimalMap::block_embedding(
    const std::vector<InfinitesimalObject>& operands, int which) {
  InfinitesimalObject total = operands.at(0);
  for (std::size_t i = 1; i < operands.size(); ++i) total = oplus(total, operands[i]);
  int offset = 0;
  for (int i = 0; i < which; ++i) offset += operands[i].var_count();
  const auto& op = operands.at(which);
  std::vector<Poly> comps;
  for (int j = 0; j < total.var_count(); ++j) {
    if (j >= offset && j < offset + op.var_count())
      comps.push_back(Poly::variable(op.var_count(), j - offset));
    else
      comps.push_back(Poly::zero(op.var_count()));
  }
  return make(op, total, std::move(comps));
}

std::string InfinitesimalMap::str() const {
  std::string out = source_.str() + " -> " + target_.str() + " := ";
  for (std::size_t i = 0; i < components_.size(); ++i)
    out += (i ? ", " : "") + components_[i].str("d");
  return out;
}

InfinitesimalMap compose_maps(const InfinitesimalMap& f, const InfinitesimalMap& g) {
  if (f.target() != g.source())
    throw MismatchError("compose_maps: codomain/domain mismatch");
  const auto& src = f.source();
  MonomialKeep keep = [&src](const Monomial& m) { return !src.in_ideal(m); };
  std::vector<Poly> comps;
  comps.reserve(g.components().size());
  for (const auto& c : g.components())
    comps.push_back(c.compose(f.components(), &keep));
  return InfinitesimalMap::make(f.source(), g.target(), std::move(comps));
}

InfinitesimalMap combine_maps(const std::vector<InfinitesimalMap>& maps) {
  if (maps.empty()) throw MismatchError("combine_maps: no operands");
  const auto& target = maps.front().target();
  std::vector<InfinitesimalObject> sources;
  int total_vars = 0;
  for (const auto& f : maps) {
    if (f.target() != target) throw MismatchError("combine_maps: mismatched targets");
    if (!f.source().is_simplicial())
      throw MismatchError("combine_maps: sources must be simplicial");
    sources.push_back(f.source());
    total_vars += f.source().var_count();
  }
  InfinitesimalObject total = sources[0];
  for (std::size_t i = 1; i < sources.size(); ++i) total = oplus(total, sources[i]);
  std::vector<Poly> comps(target.var_count(), Poly::zero(total_vars));
  int offset = 0;
  for (const auto& f : maps) {
    std::vector<int> shift(f.source().var_count());
    for (int i = 0; i < f.source().var_count(); ++i) shift[i] = offset + i;
    for (int j = 0; j < target.var_count(); ++j)
      comps[j] = comps[j] + f.components()[j].remap(total_vars, shift);
    offset += f.source().var_count();
  }
  return InfinitesimalMap::make(total, target, std::move(comps));
}

}  // namespace weil
