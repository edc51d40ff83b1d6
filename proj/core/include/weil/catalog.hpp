#ifndef WEIL_CATALOG_HPP
#define WEIL_CATALOG_HPP

#include <string>
#include <vector>

#include "weil/limits.hpp"

namespace weil::catalog {

/// Built-in objects of the verification suite. The encoding objects carry
/// one fresh variable per difference direction on top of the operand
/// blocks; their display labels (E, E[i], G) match the suite's reports.

/// D^3{(1,3),(2,3)}: apex encoding a pair of microsquares that agree off
/// the diagonal cross term.
const InfinitesimalObject& pair_encoding_object();
/// E = D^4{(1,3),(2,3),(1,4),(2,4),(3,4)}: apex encoding a compatible
/// triple of microsquares.
const InfinitesimalObject& triple_encoding_object();
/// Base of the axis-i cospan: D^3 with the cross term away from axis i
/// killed.
const InfinitesimalObject& axis_base_object(int axis);
/// Apex of the axis-i cospan: D^4{(j,4) for both j != i}.
const InfinitesimalObject& axis_pair_encoding_object(int axis);
/// E[i]: apex encoding four microcubes joined by axis-i differences.
const InfinitesimalObject& quad_encoding_object(int axis);
/// G: apex encoding a compatible sextuple of microcubes.
const InfinitesimalObject& sextuple_encoding_object();

/// Legs of the microsquare-pair pullback: fresh slot zero vs. diagonal.
InfinitesimalMap pair_first_leg();   // (d1,d2) -> (d1,d2,0)
InfinitesimalMap pair_second_leg();  // (d1,d2) -> (d1,d2,d1*d2)
InfinitesimalMap pair_extract();     // d -> (0,0,d)

InfinitesimalMap axis_first_leg(int axis);   // (d1,d2,d3) -> (...,0)
InfinitesimalMap axis_second_leg(int axis);  // (d1,d2,d3) -> (...,d_j*d_k)
InfinitesimalMap axis_extract(int axis);     // (d1,d2) -> axis slot + fresh slot

/// D(2) -> axis apex inclusion used as the quad cospan's shared restriction.
InfinitesimalMap quad_pair_inclusion(int axis);
/// Quad-encoding legs eta_1, eta_2 (which = 1, 2).
InfinitesimalMap quad_eta(int axis, int which);
/// Microcube corners iota_1..iota_4 as composites eta . (first/second leg).
InfinitesimalMap quad_iota(int axis, int corner);
InfinitesimalMap quad_extract(int axis);  // d -> last slot of E[axis]

/// Sextuple-encoding legs k_1, k_2, k_3 : E[i] -> G.
InfinitesimalMap sextuple_k(int axis);
/// Edge maps D^3 (+) D^3 -> E[axis]; corner is one of 12, 23, 31.
InfinitesimalMap sextuple_h(int axis, int corner);
/// Extraction of the three alternating expressions from the G apex
/// (expr = 1, 2, 3).
InfinitesimalMap sextuple_extract(int expr);

/// A diagram/cone pair with a stable name, the report anchor naming the
/// statement it verifies, and the expected limit dimension.
struct NamedCone {
  std::string name;
  std::string anchor;
  WeilDiagram diagram;
  Cone cone;
  int expected_dim = 0;
};

NamedCone cone_tangent_pair();            // two lines over the point
NamedCone cone_microsquare_pair();        // microsquare cospan
NamedCone cone_triple_encoding();         // hexagon with apex E
NamedCone cone_axis_pair(int axis);       // axis cospans
NamedCone cone_quad_encoding(int axis);   // apex E[axis]
NamedCone cone_bracket_factorization();   // three parallel arrows, apex W_D
NamedCone cone_sextuple_encoding();       // apex G

/// All ten built-in diagram checks, in suite order.
std::vector<NamedCone> standard_cones();

}  // namespace weil::catalog

#endif
