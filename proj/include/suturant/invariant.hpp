#pragma once

#include <string>
#include <vector>

#include "suturant/algebra.hpp"
#include "suturant/cyclotomic.hpp"
#include "suturant/diagram.hpp"
#include "suturant/foxcalc.hpp"

namespace suturant {

// A Spin^c structure relative to a reference multipoint: s = s(reference) + offset.
struct SpincRelative {
  Multipoint reference;
  GroupRingElement offset;  // single group element, coefficient +1
};

SpincRelative make_spinc(const ExtendedDiagram& diag, const GroupPtr& g, const Multipoint& reference,
                         const FreeWord& offset = {});

struct OrientationSign {
  enum Kind { Plus, Minus, Canonical, Ambiguous };
  Kind kind = Plus;

  static OrientationSign parse(const std::string& text);
};

// +1 or -1; Canonical consults det(alpha_i . beta_j).
int resolve_sign(const ExtendedDiagram& diag, const OrientationSign& o);

enum class Engine { Fox, Tensor };

Cyclotomic invariant_hn(const ExtendedDiagram& diag, int n, const H1Character& chi, const SpincRelative& spinc,
                        const OrientationSign& orient, Engine engine);
// Tensor engine with an arbitrary package.
Cyclotomic invariant_package(const ExtendedDiagram& diag, const HopfPackage& pkg, const H1Character& chi,
                             const SpincRelative& spinc, const OrientationSign& orient);
GroupRingElement invariant_h0(const ExtendedDiagram& diag, const SpincRelative& spinc, const OrientationSign& orient);

InvariantClass torsion_class(const ExtendedDiagram& diag);
bool class_equal(const InvariantClass& a, const InvariantClass& b);
// Meridians are beta ids or coordinate names of free generators.
InvariantClass alexander_from_torsion(const InvariantClass& cls, const std::vector<std::string>& meridians);

SpincRelative transport_reference(const ExtendedDiagram& diag, const SpincRelative& spinc, const Multipoint& y);

struct Comparison {
  enum Status { Equal, Different, Incomparable };
  Status status = Incomparable;
  bool inverted = false;
  std::string note;
};

// Identifies the two H1 groups through shared beta ids, up to inverting generators.
Comparison compare_diagrams(const ExtendedDiagram& a, const ExtendedDiagram& b);

}  // namespace suturant
