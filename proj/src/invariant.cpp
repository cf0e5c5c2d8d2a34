#include "suturant/invariant.hpp"

#include "suturant/errors.hpp"
#include "suturant/kuperberg.hpp"

namespace suturant {

namespace {

Multipoint checked_reference(const ExtendedDiagram& diag, const Multipoint& x) {
  try {
    return make_multipoint(diag, x.picks);
  } catch (const Error& e) {
    throw Error("InvalidReference", e.what());
  }
}

void check_offset(const GroupPtr& g, const GroupRingElement& offset) {
  if (!offset.group() || !offset.group()->same_as(*g)) throw Error("GroupMismatch", "offset lives in another group");
  if (offset.terms().size() != 1 || offset.terms().begin()->second != 1)
    throw Error("InvalidOffset", "offset must be a single group element");
}

void check_hn_character(const AbelianGroup& g, const H1Character& chi, int n) {
  check_character(g, chi);
  for (const auto& id : g.generators)
    if (generator_exponent(g, chi, id) * n % chi.order != 0)
      throw Error("CharacterMismatch", "character value on " + id + " is not an " + std::to_string(n) +
                                           "-th root of unity");
}

Cyclotomic sign_power(int order, int sign, int parity) {
  return Cyclotomic::integer(order, (parity % 2 && sign < 0) ? -1 : 1);
}

}  // namespace

SpincRelative make_spinc(const ExtendedDiagram& diag, const GroupPtr& g, const Multipoint& reference,
                         const FreeWord& offset) {
  return {checked_reference(diag, reference), abelianize(offset, g)};
}

OrientationSign OrientationSign::parse(const std::string& text) {
  if (text == "+1" || text == "1" || text == "+") return {Plus};
  if (text == "-1" || text == "-") return {Minus};
  if (text == "canonical") return {Canonical};
  throw Error("UsageError", "orientation must be +1, -1 or canonical");
}

int resolve_sign(const ExtendedDiagram& diag, const OrientationSign& o) {
  switch (o.kind) {
    case OrientationSign::Plus: return 1;
    case OrientationSign::Minus: return -1;
    case OrientationSign::Canonical: {
      auto s = canonical_sign(diag);
      if (!s) throw Error("AmbiguousOrientation", "det(alpha_i . beta_j) = 0");
      return *s;
    }
    case OrientationSign::Ambiguous: break;
  }
  throw Error("AmbiguousOrientation", "no homology orientation chosen");
}

Cyclotomic invariant_hn(const ExtendedDiagram& diag, int n, const H1Character& chi, const SpincRelative& spinc,
                        const OrientationSign& orient, Engine engine) {
  GroupPtr g = homology_ptr(diag);
  check_hn_character(*g, chi, n);
  Multipoint ref = checked_reference(diag, spinc.reference);
  check_offset(g, spinc.offset);
  int sign = resolve_sign(diag, orient);
  ExtendedDiagram based = rebase(diag, ref);
  HopfPackage pkg = build_hn(n);
  Cyclotomic z = engine == Engine::Fox ? evaluate(determinant(fox_matrix(based, g), g), chi)
                                       : contract(based, pkg, assignment_from(*g, chi));
  return sign_power(chi.order, sign, pkg.integral.mu_parity) * evaluate(spinc.offset, chi) * z;
}

Cyclotomic invariant_package(const ExtendedDiagram& diag, const HopfPackage& pkg, const H1Character& chi,
                             const SpincRelative& spinc, const OrientationSign& orient) {
  GroupPtr g = homology_ptr(diag);
  Multipoint ref = checked_reference(diag, spinc.reference);
  check_offset(g, spinc.offset);
  int sign = resolve_sign(diag, orient);
  Cyclotomic z = contract(rebase(diag, ref), pkg, assignment_from(*g, chi));
  Cyclotomic zeta = pkg.integral.glike_b_order > 1 ? evaluate(spinc.offset, chi) : Cyclotomic::integer(chi.order, 1);
  return sign_power(chi.order, sign, pkg.integral.mu_parity) * zeta * z;
}

GroupRingElement invariant_h0(const ExtendedDiagram& diag, const SpincRelative& spinc, const OrientationSign& orient) {
  GroupPtr g = homology_ptr(diag);
  Multipoint ref = checked_reference(diag, spinc.reference);
  check_offset(g, spinc.offset);
  int sign = resolve_sign(diag, orient);
  return spinc.offset * determinant(fox_matrix(rebase(diag, ref), g), g) * sign;
}

InvariantClass torsion_class(const ExtendedDiagram& diag) {
  GroupPtr g = homology_ptr(diag);
  return InvariantClass(determinant(fox_matrix(diag, g), g));
}

bool class_equal(const InvariantClass& a, const InvariantClass& b) {
  if (!a.group() || !b.group() || !a.group()->same_as(*b.group()))
    throw Error("GroupMismatch", "classes live in different groups");
  return a.representative() == b.representative();
}

InvariantClass alexander_from_torsion(const InvariantClass& cls, const std::vector<std::string>& meridians) {
  const GroupPtr& g = cls.group();
  if (!g->torsion.empty()) throw Error("NotFree", "H1 has torsion " + g->str());
  std::vector<int> coords;
  for (const auto& m : meridians) {
    int c = -1;
    if (g->has_generator(m)) {
      IntRow key = g->generator_key(m);
      int nonzero = 0;
      for (int i = 0; i < g->coords(); ++i)
        if (key[i] != 0) ++nonzero, c = (key[i] == 1 || key[i] == -1) ? i : -1;
      if (nonzero != 1) c = -1;
    } else {
      c = g->coordinate_index(m);
    }
    if (c < 0 || c >= g->rank) throw Error("InvalidMeridian", m + " is not a free generator of H1");
    coords.push_back(c);
  }
  if (coords.size() <= 1) return cls;
  GroupRingElement q = cls.representative();
  for (int c : coords) q = divide_by_t_minus_one(q, c);
  return InvariantClass(q);
}

SpincRelative transport_reference(const ExtendedDiagram& diag, const SpincRelative& spinc, const Multipoint& y) {
  GroupPtr g = spinc.offset.group();
  if (!g) g = homology_ptr(diag);
  Multipoint x = checked_reference(diag, spinc.reference);
  Multipoint yy = checked_reference(diag, y);
  return {yy, spinc.offset * abelianize(epsilon_class(diag, x, yy), g)};
}

namespace {

bool maps_relations_to_zero(const AbelianGroup& src, const AbelianGroup& dst, const GeneratorMap& map) {
  for (const auto& rel : src.relations) {
    IntRow y(dst.generators.size(), 0);
    for (size_t i = 0; i < rel.size(); ++i) {
      if (rel[i] == 0) continue;
      const auto& [to, s] = map.at(src.generators[i]);
      if (to.empty()) continue;
      y[dst.generator_index(to)] += s * rel[i];
    }
    for (auto v : dst.project(y))
      if (v != 0) return false;
  }
  return true;
}

// Crossing-free beta curves (added trivial handles) are skipped.
bool round_trip(const AbelianGroup& g, const ExtendedDiagram& d, const GeneratorMap& there, const GeneratorMap& back) {
  for (const auto& id : g.generators) {
    if (d.curve(id).order.empty()) continue;
    IntRow x(g.generators.size(), 0);
    const auto& [mid, s1] = there.at(id);
    if (!mid.empty()) {
      const auto& [to, s2] = back.at(mid);
      if (!to.empty()) x[g.generator_index(to)] += s1 * s2;
    }
    if (g.project(x) != g.generator_key(id)) return false;
  }
  return true;
}

}  // namespace

Comparison compare_diagrams(const ExtendedDiagram& a, const ExtendedDiagram& b) {
  GroupPtr ga = homology_ptr(a), gb = homology_ptr(b);
  std::vector<std::string> common;
  for (const auto& id : ga->generators)
    if (gb->has_generator(id)) common.push_back(id);
  if (common.size() > 16) throw Error("TooLarge", "too many shared generators");
  InvariantClass ca = torsion_class(a), cb = torsion_class(b);
  Comparison res;
  res.status = Comparison::Incomparable;
  res.note = "no identification of H1 through shared beta ids";
  for (size_t mask = 0; mask < (size_t(1) << common.size()); ++mask) {
    GeneratorMap fwd, bwd;
    for (const auto& id : ga->generators) fwd[id] = {"", 1};
    for (const auto& id : gb->generators) bwd[id] = {"", 1};
    for (size_t i = 0; i < common.size(); ++i) {
      int s = (mask >> i & 1) ? -1 : 1;
      fwd[common[i]] = {common[i], s};
      bwd[common[i]] = {common[i], s};
    }
    if (!maps_relations_to_zero(*ga, *gb, fwd) || !maps_relations_to_zero(*gb, *ga, bwd)) continue;
    if (!round_trip(*ga, a, fwd, bwd) || !round_trip(*gb, b, bwd, fwd)) continue;
    InvariantClass moved(transport(ca.representative(), gb, fwd));
    if (class_equal(moved, cb)) {
      res.status = Comparison::Equal;
      res.inverted = mask != 0;
      res.note.clear();
      if (res.inverted) {
        res.note = "generators inverted:";
        for (size_t i = 0; i < common.size(); ++i)
          if (mask >> i & 1) res.note += " " + common[i];
      }
      return res;
    }
    if (res.status == Comparison::Incomparable) {
      res.status = Comparison::Different;
      res.note = moved.str() + " vs " + cb.str();
    }
  }
  return res;
}

}  // namespace suturant
