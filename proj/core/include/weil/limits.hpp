#ifndef WEIL_LIMITS_HPP
#define WEIL_LIMITS_HPP

#include <string>
#include <vector>

#include "weil/hom.hpp"

namespace weil {

/// Finite diagram of Weil algebras: named nodes and named arrows between
/// them. Parallel arrows and arbitrary shapes are allowed; pullbacks are
/// not special-cased.
class WeilDiagram {
 public:
  struct Arrow {
    std::string name;
    int src;
    int dst;
    AlgebraHom hom;
  };

  int add_node(const std::string& name, AlgebraPtr algebra);
  void add_arrow(const std::string& name, const std::string& src,
                 const std::string& dst, AlgebraHom hom);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int node_index(const std::string& name) const;  // -1 if absent
  const std::string& node_name(int i) const { return node_names_[i]; }
  const AlgebraPtr& node(int i) const { return nodes_[i]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Sum of node dimensions, and each node's offset in the stacked product
  /// coordinate space.
  int total_dim() const;
  std::vector<int> offsets() const;

 private:
  std::vector<std::string> node_names_;
  std::vector<AlgebraPtr> nodes_;
  std::vector<Arrow> arrows_;
};

/// Joint-compatibility subspace of the product of node spaces:
/// {(x_v) : hom(x_src) = x_dst for every arrow}.
struct LimitSpace {
  int dim = 0;
  std::vector<Vec> basis;  // vectors of length total_dim
};

LimitSpace compute_limit(const WeilDiagram& d);

/// Candidate limiting cone: apex algebra plus one leg per node.
struct Cone {
  AlgebraPtr apex;
  std::vector<AlgebraHom> legs;
};

struct ConeVerdict {
  bool commutes = false;
  bool bijective = false;
  int limit_dim = 0;
  int apex_dim = 0;
  std::string detail;
  bool ok() const { return commutes && bijective; }
};

ConeVerdict verify_cone(const WeilDiagram& d, const Cone& c);

/// A verified cone bundled with a factored solver for repeated lifts.
/// Constructing one re-runs the verification and refuses non-limits.
class LimitKit {
 public:
  LimitKit(WeilDiagram d, Cone c);

  const WeilDiagram& diagram() const { return diagram_; }
  const Cone& cone() const { return cone_; }
  const ConeVerdict& verdict() const { return verdict_; }

  /// family[v] holds the width-w vector-valued element at node v. Checks
  /// every arrow constraint (raising IncompatibleFamily with the arrow name)
  /// and returns the unique width-w apex element hit by the legs.
  std::vector<WeilElement> lift(const std::vector<std::vector<WeilElement>>& family) const;

 private:
  WeilDiagram diagram_;
  Cone cone_;
  ConeVerdict verdict_;
  LinearSolver solver_;
};

/// One-shot convenience wrapper around LimitKit::lift.
std::vector<WeilElement> lift_through_limit(
    const WeilDiagram& d, const Cone& c,
    const std::vector<std::vector<WeilElement>>& family);

}  // namespace weil

#endif
