#include <catch_amalgamated.hpp>

#include <array>
#include <numeric>

#include "support.hpp"
#include "suturant/errors.hpp"
#include "suturant/invariant.hpp"

using namespace suturant;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

Cyclotomic poly(int order, std::vector<int64_t> c) {
  Cyclotomic r(order);
  for (size_t i = 0; i < c.size(); ++i) r += Cyclotomic::root_power(order, static_cast<int64_t>(i)) * c[i];
  return r;
}

// det(V - t V^T) for a 2x2 Seifert matrix, in the one-variable group ring of g.
GroupRingElement seifert_alexander(const GroupPtr& g, const std::array<std::array<int64_t, 2>, 2>& v) {
  GroupRingElement one = GroupRingElement::one(g), t = GroupRingElement::monomial(g, {1});
  auto e = [&](int i, int j) { return one * v[i][j] - t * v[j][i]; };
  return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
}

}  // namespace

TEST_CASE("trefoil values", "[invariant]") {
  ExtendedDiagram d = support::load("trefoil");
  GroupPtr g = homology_ptr(d);
  SpincRelative s = make_spinc(d, g, named_multipoint(d, "x1"));
  for (Engine e : {Engine::Fox, Engine::Tensor}) {
    for (int n : {5, 7, 8}) {
      H1Character chi = solve_character(*g, {{"b2", 1}}, n);
      CHECK(invariant_hn(d, n, chi, s, {OrientationSign::Plus}, e) == poly(n, {1, -1, 1}));
      CHECK(invariant_hn(d, n, chi, s, {OrientationSign::Minus}, e) == -poly(n, {1, -1, 1}));
      CHECK(invariant_hn(d, n, chi, s, {OrientationSign::Canonical}, e) == poly(n, {1, -1, 1}));
    }
    // 1 - q + q^2 vanishes at a primitive sixth root of unity
    CHECK(invariant_hn(d, 6, solve_character(*g, {{"b2", 1}}, 6), s, {}, e).is_zero());
  }
  CHECK(torsion_class(d).str() == "1 - t + t^2");
}

TEST_CASE("reference at the third crossing", "[invariant]") {
  ExtendedDiagram d = support::load("trefoil");
  GroupPtr g = homology_ptr(d);
  H1Character chi = solve_character(*g, {{"b2", 1}}, 5);
  Cyclotomic z1 = invariant_hn(d, 5, chi, make_spinc(d, g, named_multipoint(d, "x1")), {}, Engine::Fox);
  for (const char* name : {"x2", "x3"}) {
    Cyclotomic z = invariant_hn(d, 5, chi, make_spinc(d, g, named_multipoint(d, name)), {}, Engine::Tensor);
    // same Spin^c class up to a unit: the value differs from z1 by +-x^k
    bool unit = false;
    for (int k = 0; k < 5; ++k)
      unit = unit || z == z1 * Cyclotomic::root_power(5, k) || z == -(z1 * Cyclotomic::root_power(5, k));
    CHECK(unit);
  }
}

TEST_CASE("changing the reference multipoint does not change the invariant", "[invariant]") {
  for (const auto& name : support::corpus_names()) {
    ExtendedDiagram d = support::load(name);
    auto all = enumerate_multipoints(d);
    if (all.empty()) continue;
    GroupPtr g = homology_ptr(d);
    SpincRelative s0 = make_spinc(d, g, all.front());
    for (int n : {2, 3, 4, 6}) {
      for (const auto& chi : all_characters(*g, n)) {
        Cyclotomic z0 = invariant_hn(d, n, chi, s0, {}, Engine::Fox);
        for (const auto& y : all) {
          INFO(name << " n=" << n);
          SpincRelative sy = transport_reference(d, s0, y);
          CHECK(invariant_hn(d, n, chi, sy, {}, Engine::Fox) == z0);
          CHECK(invariant_hn(d, n, chi, sy, {}, Engine::Tensor) == z0);
          // the correction factor is the character on epsilon(x, y)
          CHECK(evaluate(sy.offset, chi) == evaluate(abelianize(epsilon_class(d, all.front(), y), g), chi));
        }
      }
    }
  }
}

TEST_CASE("an offset multiplies by its character value", "[invariant]") {
  ExtendedDiagram d = support::load("figure_eight");
  GroupPtr g = homology_ptr(d);
  Multipoint x = enumerate_multipoints(d).front();
  for (int n : {3, 5}) {
    for (const auto& chi : all_characters(*g, n)) {
      Cyclotomic z = invariant_hn(d, n, chi, make_spinc(d, g, x), {}, Engine::Fox);
      for (const char* w : {"x", "x^-1", "x^2 y"}) {
        FreeWord word = parse_word(w);
        Cyclotomic zw = invariant_hn(d, n, chi, make_spinc(d, g, x, word), {}, Engine::Tensor);
        CHECK(zw == evaluate(abelianize(word, g), chi) * z);
      }
    }
  }
}

TEST_CASE("the group ring invariant specializes to every n", "[invariant]") {
  for (const auto& name : support::corpus_names()) {
    ExtendedDiagram d = support::load(name);
    auto all = enumerate_multipoints(d);
    if (all.empty()) continue;
    GroupPtr g = homology_ptr(d);
    SpincRelative s = make_spinc(d, g, all.back());
    GroupRingElement h0 = invariant_h0(d, s, {});
    for (int n = 1; n <= 6; ++n)
      for (const auto& chi : all_characters(*g, n)) CHECK(evaluate(h0, chi) == invariant_hn(d, n, chi, s, {}, Engine::Fox));
    CHECK(class_equal(InvariantClass(h0), torsion_class(d)));
  }
}

TEST_CASE("package invariant with the cyclic group algebra", "[invariant]") {
  for (int p = 1; p <= 7; ++p) {
    ExtendedDiagram d = support::load("lens_" + std::to_string(p) + "_1");
    GroupPtr g = homology_ptr(d);
    SpincRelative s = make_spinc(d, g, enumerate_multipoints(d).front());
    for (int m = 1; m <= 7; ++m) {
      Cyclotomic z = invariant_package(d, build_cyclic_group_algebra(m), trivial_character(*g, 1), s, {});
      CHECK(z == Cyclotomic::integer(1, std::gcd(p, m)));
    }
  }
  ExtendedDiagram t = support::load("trefoil");
  GroupPtr g = homology_ptr(t);
  SpincRelative s = make_spinc(t, g, named_multipoint(t, "x1"), parse_word("b2"));
  H1Character chi = solve_character(*g, {{"b2", 1}}, 5);
  CHECK(invariant_package(t, build_hn(5), chi, s, {}) == invariant_hn(t, 5, chi, s, {}, Engine::Fox));
}

TEST_CASE("lens spaces", "[invariant]") {
  for (int p = 2; p <= 7; ++p) {
    ExtendedDiagram d = support::load("lens_" + std::to_string(p) + "_1");
    GroupPtr g = homology_ptr(d);
    std::string expect = "1";
    for (int k = 1; k < p; ++k) expect += k == 1 ? " + t" : " + t^" + std::to_string(k);
    CHECK(torsion_class(d).str() == expect);
    SpincRelative s = make_spinc(d, g, enumerate_multipoints(d).front());
    for (int n = 2; n <= 2 * p; ++n) {
      for (const auto& chi : all_characters(*g, n)) {
        Cyclotomic z = invariant_hn(d, n, chi, s, {}, Engine::Fox);
        bool trivial = std::all_of(chi.exps.begin(), chi.exps.end(), [](int64_t e) { return e == 0; });
        if (trivial)
          CHECK((z == Cyclotomic::integer(n, p) || z == Cyclotomic::integer(n, -p)));
        else
          CHECK(z.is_zero());
      }
    }
  }
}

TEST_CASE("knot classes against Seifert matrices", "[invariant]") {
  ExtendedDiagram t = support::load("trefoil");
  InvariantClass ct = torsion_class(t);
  CHECK(class_equal(ct, InvariantClass(seifert_alexander(ct.group(), {{{-1, 1}, {0, -1}}}))));
  ExtendedDiagram f = support::load("figure_eight");
  InvariantClass cf = torsion_class(f);
  CHECK(cf.str() == "1 - 3 * t + t^2");
  CHECK(class_equal(cf, InvariantClass(seifert_alexander(cf.group(), {{{1, 1}, {0, -1}}}))));
  CHECK(alexander_from_torsion(ct, {"b2"}).str() == ct.str());
}

TEST_CASE("Hopf link against the Wirtinger presentation", "[invariant]") {
  ExtendedDiagram h = support::load("hopf");
  InvariantClass c = torsion_class(h);
  CHECK(c.str() == "1 - t3 - t2 + t2 t3");
  InvariantClass a = alexander_from_torsion(c, {"m1", "m2"});

  // <x, y | x y x^-1 y^-1>: d r / d x = (y - 1) * Delta up to units
  GroupPtr w = std::make_shared<const AbelianGroup>(make_group({"x", "y"}, {}));
  GroupRingElement dx = abelianize(fox_derivative(parse_word("x y x^-1 y^-1"), "x"), w);
  GroupRingElement delta = divide_by_t_minus_one(dx, 1);
  CHECK(InvariantClass(delta).str() == "1");
  CHECK(a.str() == "1");
  CHECK(alexander_from_torsion(c, {"t2", "t3"}).str() == "1");
}

TEST_CASE("Alexander extraction errors", "[invariant]") {
  InvariantClass t = torsion_class(support::load("trefoil"));
  CHECK(kind_of([&] { alexander_from_torsion(t, {"b2", "b2"}); }) == "NotDivisible");
  CHECK(kind_of([&] { alexander_from_torsion(t, {"b1"}); }) == "InvalidMeridian");
  CHECK(kind_of([&] { alexander_from_torsion(t, {"nope"}); }) == "InvalidMeridian");
  InvariantClass l = torsion_class(support::load("lens_3_1"));
  CHECK(kind_of([&] { alexander_from_torsion(l, {"b1"}); }) == "NotFree");
  CHECK(kind_of([&] { class_equal(t, l); }) == "GroupMismatch");
}

TEST_CASE("orientation and reference errors", "[invariant]") {
  ExtendedDiagram h = support::load("hopf");
  GroupPtr g = homology_ptr(h);
  SpincRelative s = make_spinc(h, g, enumerate_multipoints(h).front());
  H1Character chi = trivial_character(*g, 3);
  CHECK(kind_of([&] { invariant_hn(h, 3, chi, s, {OrientationSign::Canonical}, Engine::Fox); }) ==
        "AmbiguousOrientation");
  CHECK(kind_of([&] { invariant_hn(h, 3, chi, s, {OrientationSign::Ambiguous}, Engine::Fox); }) ==
        "AmbiguousOrientation");
  CHECK_NOTHROW(invariant_hn(h, 3, chi, s, {OrientationSign::Plus}, Engine::Fox));
  CHECK(kind_of([&] { make_spinc(h, g, Multipoint{{"h1"}, {}}); }) == "InvalidReference");
  CHECK(kind_of([&] { OrientationSign::parse("sideways"); }) == "UsageError");

  ExtendedDiagram t = support::load("trefoil");
  GroupPtr gt = homology_ptr(t);
  SpincRelative st = make_spinc(t, gt, named_multipoint(t, "x1"));
  SpincRelative foreign = st;
  foreign.offset = GroupRingElement::one(g);
  H1Character ct = solve_character(*gt, {{"b2", 1}}, 5);
  CHECK(kind_of([&] { invariant_hn(t, 5, ct, foreign, {}, Engine::Fox); }) == "GroupMismatch");
  SpincRelative doubled = st;
  doubled.offset = st.offset * 2;
  CHECK(kind_of([&] { invariant_hn(t, 5, ct, doubled, {}, Engine::Fox); }) == "InvalidOffset");
  // a character of order 10 is not admissible for n = 5
  CHECK(kind_of([&] { invariant_hn(t, 5, solve_character(*gt, {{"b2", 1}}, 10), st, {}, Engine::Fox); }) ==
        "CharacterMismatch");
}

TEST_CASE("S1 x S2 has vanishing torsion", "[invariant]") {
  ExtendedDiagram d = support::load("s1xs2");
  CHECK(torsion_class(d).str() == "0");
  CHECK(enumerate_multipoints(d).empty());
}

TEST_CASE("compare reports equal, different and incomparable", "[invariant]") {
  ExtendedDiagram t = support::load("trefoil");
  CHECK(compare_diagrams(t, t).status == Comparison::Equal);

  // reversing b1 inverts its generator
  ExtendedDiagram r = t;
  std::reverse(r.curve("b1").order.begin(), r.curve("b1").order.end());
  for (const auto& x : r.curve("b1").order) r.crossing(x).sign *= -1;
  Comparison cr = compare_diagrams(t, r);
  CHECK(cr.status == Comparison::Equal);
  CHECK(cr.inverted);

  // same relation in H1, different word: class 1
  ExtendedDiagram v = t;
  v.crossings.erase(std::remove_if(v.crossings.begin(), v.crossings.end(),
                                   [](const Crossing& x) { return x.id == "c3" || x.id == "c5"; }),
                    v.crossings.end());
  v.curve("a1").order = {"c2", "c4", "c1"};
  v.curve("b1").order = {"c1"};
  v.multipoints.clear();
  REQUIRE(validate(v).ok());
  CHECK(torsion_class(v).str() == "1");
  CHECK(compare_diagrams(t, v).status == Comparison::Different);

  CHECK(compare_diagrams(t, support::load("figure_eight")).status == Comparison::Incomparable);
  CHECK(compare_diagrams(support::load("lens_3_1"), support::load("lens_5_1")).status == Comparison::Incomparable);
}
