#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "suturant/algebra.hpp"
#include "suturant/cyclotomic.hpp"
#include "suturant/diagram.hpp"
#include "suturant/foxcalc.hpp"

namespace suturant {

// psi: beta id -> e, meaning <psi(beta*), b> = x^e in Z[x]/Phi_order.
// phi: alpha id -> element of A in the a_basis coordinates; the unit of A when absent.
struct CharacterAssignment {
  std::map<std::string, int64_t> psi;
  std::map<std::string, Vec> phi;
  int order = 1;
};

CharacterAssignment assignment_from(const AbelianGroup& g, const H1Character& chi);

Cyclotomic contract(const ExtendedDiagram& based, const HopfPackage& pkg, const CharacterAssignment& chars);

// Unit picked up when the basepoint of a closed curve moves to new_start.
Cyclotomic basepoint_shift(const ExtendedDiagram& based, const std::string& curve_id, int new_start,
                           const HopfPackage& pkg, const CharacterAssignment& chars);

// The diagram with one closed curve's order rotated to start at new_start.
ExtendedDiagram rotate_curve(const ExtendedDiagram& diag, const std::string& curve_id, int new_start);

}  // namespace suturant
