#include "weil/limits.hpp"

#include "weil/errors.hpp"

namespace weil {

namespace {

// Rows express hom(x_src) - x_dst = 0 over the stacked product coordinates.
Mat constraint_matrix(const WeilDiagram& d) {
  const auto offs = d.offsets();
  int rows = 0;
  for (const auto& a : d.arrows()) rows += d.node(a.dst)->dim();
  Mat m(rows, d.total_dim());
  int r = 0;
  for (const auto& a : d.arrows()) {
    const Mat& h = a.hom.matrix();
    for (int i = 0; i < d.node(a.dst)->dim(); ++i, ++r) {
      for (int j = 0; j < d.node(a.src)->dim(); ++j) m.at(r, offs[a.src] + j) = h.at(i, j);
      m.at(r, offs[a.dst] + i) -= 1;
    }
  }
  return m;
}

Mat stacked_leg_matrix(const WeilDiagram& d, const Cone& c) {
  const auto offs = d.offsets();
  Mat L(d.total_dim(), c.apex->dim());
  for (int v = 0; v < d.node_count(); ++v) {
    const Mat& h = c.legs[v].matrix();
    for (int i = 0; i < d.node(v)->dim(); ++i)
      for (int j = 0; j < c.apex->dim(); ++j) L.at(offs[v] + i, j) = h.at(i, j);
  }
  return L;
}

void check_cone_shape(const WeilDiagram& d, const Cone& c) {
  if (!c.apex) throw MismatchError("cone has no apex");
  if (static_cast<int>(c.legs.size()) != d.node_count())
    throw MismatchError("cone needs exactly one leg per node");
  for (int v = 0; v < d.node_count(); ++v) {
    if (!(*c.legs[v].domain() == *c.apex))
      throw MismatchError("leg " + d.node_name(v) + " does not start at the apex");
    if (!(*c.legs[v].codomain() == *d.node(v)))
      throw MismatchError("leg " + d.node_name(v) + " does not end at its node");
  }
}

}  // namespace

int WeilDiagram::add_node(const std::string& name, AlgebraPtr algebra) {
  if (node_index(name) >= 0) throw MismatchError("duplicate node " + name);
  node_names_.push_back(name);
  nodes_.push_back(std::move(algebra));
  return node_count() - 1;
}

void WeilDiagram::add_arrow(const std::string& name, const std::string& src,
                            const std::string& dst, AlgebraHom hom) {
  int s = node_index(src), t = node_index(dst);
  if (s < 0 || t < 0) throw MismatchError("arrow " + name + " references unknown node");
  if (!(*hom.domain() == *nodes_[s]) || !(*hom.codomain() == *nodes_[t]))
    throw MismatchError("arrow " + name + " has mismatched endpoints");
  arrows_.push_back({name, s, t, std::move(hom)});
}

int WeilDiagram::node_index(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i)
    if (node_names_[i] == name) return i;
  return -1;
}

int WeilDiagram::total_dim() const {
  int total = 0;
  for (const auto& n : nodes_) total += n->dim();
  return total;
}

std::vector<int> WeilDiagram::offsets() const {
  std::vector<int> offs(node_count(), 0);
  for (int i = 1; i < node_count(); ++i) offs[i] = offs[i - 1] + nodes_[i - 1]->dim();
  return offs;
}

LimitSpace compute_limit(const WeilDiagram& d) {
  if (d.node_count() == 0) throw MismatchError("diagram has no nodes");
  LimitSpace out;
  out.basis = kernel_basis(constraint_matrix(d));
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

ConeVerdict verify_cone(const WeilDiagram& d, const Cone& c) {
  check_cone_shape(d, c);
  ConeVerdict v;
  v.apex_dim = c.apex->dim();
  v.commutes = true;
  for (const auto& a : d.arrows()) {
    AlgebraHom around = hom_compose(c.legs[a.src], a.hom);
    if (!(around == c.legs[a.dst])) {
      v.commutes = false;
      v.detail = "leg/arrow mismatch across " + a.name;
      break;
    }
  }
  v.limit_dim = compute_limit(d).dim;
  if (v.commutes) {
    int leg_rank = rank(stacked_leg_matrix(d, c));
    v.bijective = (leg_rank == v.apex_dim) && (v.apex_dim == v.limit_dim);
    if (!v.bijective && v.detail.empty())
      v.detail = "induced map rank " + std::to_string(leg_rank) + ", apex dim " +
                 std::to_string(v.apex_dim) + ", limit dim " + std::to_string(v.limit_dim);
  }
  return v;
}

LimitKit::LimitKit(WeilDiagram d, Cone c)
    : diagram_(std::move(d)),
      cone_(std::move(c)),
      verdict_(verify_cone(diagram_, cone_)),
      solver_(stacked_leg_matrix(diagram_, cone_)) {
  if (!verdict_.ok())
    throw NotALimit("cone is not limiting: " + verdict_.detail);
}

std::vector<WeilElement> LimitKit::lift(
    const std::vector<std::vector<WeilElement>>& family) const {
  if (static_cast<int>(family.size()) != diagram_.node_count())
    throw MismatchError("lift: one element per node required");
  const std::size_t width = family.empty() ? 0 : family.front().size();
  for (int v = 0; v < diagram_.node_count(); ++v) {
    if (family[v].size() != width) throw MismatchError("lift: ragged family");
    for (const auto& e : family[v])
      if (!(*e.algebra() == *diagram_.node(v)))
        throw MismatchError("lift: family element in wrong algebra at node " +
                            diagram_.node_name(v));
  }
  for (const auto& a : diagram_.arrows())
    for (std::size_t t = 0; t < width; ++t)
      if (!(a.hom.apply(family[a.src][t]) == family[a.dst][t]))
        throw IncompatibleFamily(a.name);
  std::vector<WeilElement> lifted;
  lifted.reserve(width);
  const auto offs = diagram_.offsets();
  for (std::size_t t = 0; t < width; ++t) {
    Vec rhs(diagram_.total_dim(), Rat(0));
    for (int v = 0; v < diagram_.node_count(); ++v) {
      Vec coords = family[v][t].coords();
      for (int i = 0; i < diagram_.node(v)->dim(); ++i) rhs[offs[v] + i] = coords[i];
    }
    auto x = solver_.solve(rhs);
    if (!x)
      throw NotALimit("verified cone failed to lift a compatible family");
    lifted.push_back(WeilElement::from_coords(cone_.apex, *x));
  }
  return lifted;
}

std::vector<WeilElement> lift_through_limit(
    const WeilDiagram& d, const Cone& c,
    const std::vector<std::vector<WeilElement>>& family) {
  return LimitKit(d, c).lift(family);
}

}  // namespace weil
