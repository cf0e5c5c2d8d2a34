#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"
#include "suturant/diagram.hpp"
#include "suturant/errors.hpp"

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

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool has_violation(const Report& r, const std::string& prefix) {
  for (const auto& v : r.violations)
    if (v.rfind(prefix, 0) == 0) return true;
  return false;
}

const char* kSmall = R"(diagram small
alpha a1 closed
beta b1 closed
crossing c1 a1 b1 +
crossing c2 a1 b1 -
crossing c3 a1 b1 +
order alpha a1 : c1 c2 c3
order beta b1 : c1 c2 c3
)";

// Every choice of one crossing per closed alpha, kept when the betas are closed and distinct.
std::set<std::vector<std::string>> brute_multipoints(const ExtendedDiagram& d) {
  auto ca = d.closed(Family::Alpha);
  std::set<std::vector<std::string>> out;
  std::vector<size_t> idx(ca.size(), 0);
  for (const auto* c : ca)
    if (c->order.empty()) return out;
  while (true) {
    std::vector<std::string> picks;
    std::set<std::string> betas;
    bool ok = true;
    for (size_t i = 0; i < ca.size(); ++i) {
      const auto& x = d.crossing(ca[i]->order[idx[i]]);
      if (d.closed_index(x.beta) < 0 || !betas.insert(x.beta).second) ok = false;
      picks.push_back(x.id);
    }
    if (ok) {
      std::sort(picks.begin(), picks.end());
      out.insert(picks);
    }
    size_t i = 0;
    while (i < ca.size() && ++idx[i] == ca[i]->order.size()) idx[i++] = 0;
    if (i == ca.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("corpus diagrams parse and validate", "[diagram]") {
  for (const auto& name : support::corpus_names()) {
    INFO(name);
    ExtendedDiagram d = support::load(name);
    Report r = validate(d);
    CHECK(r.ok());
    CHECK(d.closed(Family::Alpha).size() == d.closed(Family::Beta).size());
  }
}

TEST_CASE("serialize round trip", "[diagram]") {
  for (const auto& name : support::corpus_names()) {
    INFO(name);
    ExtendedDiagram d = support::load(name);
    std::string s = serialize_diagram(d);
    ExtendedDiagram e = parse_diagram(s);
    CHECK(serialize_diagram(e) == s);
    CHECK(e.curves.size() == d.curves.size());
    CHECK(e.crossings.size() == d.crossings.size());
    CHECK(e.multipoints.size() == d.multipoints.size());
  }
}

TEST_CASE("syntax errors carry line numbers", "[diagram]") {
  CHECK(kind_of([] { parse_diagram("diagram x\nalpha a1 loop\n"); }) == "SyntaxError");
  CHECK(message_of([] { parse_diagram("diagram x\nalpha a1 loop\n"); }).find("line 2") != std::string::npos);
  CHECK(kind_of([] { parse_diagram("diagram x\nalpha a1 closed\nbeta b1 closed\ncrossing c1 a1 b1 *\n"); }) ==
        "SyntaxError");
  CHECK(kind_of([] { parse_diagram("frobnicate\n"); }) == "SyntaxError");
  CHECK(kind_of([] { parse_diagram("diagram x\nalpha a1 closed\nalpha a1 arc\n"); }) == "DuplicateId");
  CHECK(message_of([] { parse_diagram("diagram x\nalpha a1 closed\nalpha a1 arc\n"); }).find("line 3") !=
        std::string::npos);
  CHECK_NOTHROW(parse_diagram(std::string("# comment only\n") + kSmall));
  CHECK(kind_of([] { load_diagram("/nonexistent/file.hd"); }) == "IOError");
}

TEST_CASE("validate reports each violation", "[diagram]") {
  ExtendedDiagram good = parse_diagram(kSmall);
  REQUIRE(validate(good).ok());

  {
    ExtendedDiagram d = good;
    d.curves.push_back({"b2", Family::Beta, Topology::Closed, {}});
    CHECK(has_violation(validate(d), "Unbalanced"));
  }
  {
    ExtendedDiagram d = good;
    d.curves.insert(d.curves.begin(), {"a0", Family::Alpha, Topology::Arc, {}});
    CHECK(has_violation(validate(d), "Ordering"));
  }
  {
    ExtendedDiagram d = good;
    d.curve("a1").order.push_back("c1");
    CHECK(has_violation(validate(d), "DoubleUse"));
  }
  {
    ExtendedDiagram d = good;
    d.curve("b1").order.pop_back();
    CHECK(has_violation(validate(d), "Unlisted"));
  }
  {
    ExtendedDiagram d = good;
    d.curve("b1").order.push_back("c9");
    CHECK(has_violation(validate(d), "UnknownCrossing"));
  }
  {
    ExtendedDiagram d = good;
    d.crossings[0].beta = "zz";
    CHECK(has_violation(validate(d), "UnknownCurve"));
  }
  {
    ExtendedDiagram d = good;
    d.curves.push_back({"b2", Family::Beta, Topology::Arc, {}});
    d.curve("b1").order.erase(d.curve("b1").order.begin());
    d.curve("b2").order.push_back("c1");
    CHECK(has_violation(validate(d), "Mismatch"));
  }
  {
    ExtendedDiagram d = good;
    d.crossings.push_back(d.crossings[0]);
    CHECK(has_violation(validate(d), "DuplicateId"));
  }
  {
    ExtendedDiagram d = good;
    d.multipoints.push_back({"bad", {"c1", "c2"}});
    CHECK(has_violation(validate(d), "InvalidMultipoint: bad"));
  }
}

TEST_CASE("multipoints agree with brute force", "[diagram]") {
  for (const auto& name : support::corpus_names()) {
    INFO(name);
    ExtendedDiagram d = support::load(name);
    std::set<std::vector<std::string>> got;
    for (const auto& m : enumerate_multipoints(d)) got.insert(m.sorted_picks());
    CHECK(got == brute_multipoints(d));
  }
  std::mt19937_64 rng(support::seed());
  for (int t = 0; t < 40; ++t) {
    ExtendedDiagram d = support::random_diagram(rng, 1 + t % 3, 3 + t % 3);
    REQUIRE(validate(d).ok());
    std::set<std::vector<std::string>> got;
    for (const auto& m : enumerate_multipoints(d)) got.insert(m.sorted_picks());
    CHECK(got == brute_multipoints(d));
  }
}

TEST_CASE("multipoint counts on the corpus", "[diagram]") {
  CHECK(enumerate_multipoints(support::load("trefoil")).size() == 3);
  CHECK(enumerate_multipoints(support::load("hopf")).size() == 4);
  CHECK(enumerate_multipoints(support::load("unknot")).size() == 1);
  for (int p = 1; p <= 7; ++p)
    CHECK(enumerate_multipoints(support::load("lens_" + std::to_string(p) + "_1")).size() == size_t(p));
}

TEST_CASE("make_multipoint rejects bad picks", "[diagram]") {
  ExtendedDiagram t = support::load("trefoil");
  CHECK(kind_of([&] { make_multipoint(t, {"c1", "c3"}); }) == "InvalidMultipoint");
  CHECK(kind_of([&] { make_multipoint(t, {"c2"}); }) == "InvalidMultipoint");
  CHECK(kind_of([&] { make_multipoint(t, {"zz"}); }) == "InvalidMultipoint");
  CHECK(kind_of([&] { named_multipoint(t, "nope"); }) == "InvalidMultipoint");
  CHECK(named_multipoint(t, "x2").picks == std::vector<std::string>{"c3"});
}

TEST_CASE("rebase puts the basepoint at the pick", "[diagram]") {
  ExtendedDiagram t = support::load("trefoil");
  // positive pick: basepoint just before it
  ExtendedDiagram r1 = rebase(t, make_multipoint(t, {"c5"}));
  CHECK(r1.curve("a1").order == std::vector<std::string>{"c5", "c1", "c2", "c3", "c4"});
  CHECK(r1.curve("b1").order == std::vector<std::string>{"c5", "c1", "c3"});
  // negative pick: just after it
  ExtendedDiagram r2 = rebase(t, make_multipoint(t, {"c3"}));
  CHECK(r2.curve("a1").order == std::vector<std::string>{"c4", "c5", "c1", "c2", "c3"});
  CHECK(r2.curve("b1").order == std::vector<std::string>{"c5", "c1", "c3"});
  CHECK(r2.curve("b2").order == t.curve("b2").order);
}

TEST_CASE("alpha words and epsilon", "[diagram]") {
  ExtendedDiagram t = support::load("trefoil");
  CHECK(word_str(alpha_word(t, "a1")) == "b1 b2 b1^-1 b2 b1");
  CHECK(alpha_word(t, "a2").empty());
  CHECK(kind_of([&] { alpha_word(t, "b1"); }) == "UnknownCurve");
  Multipoint x1 = named_multipoint(t, "x1"), x2 = named_multipoint(t, "x2"), x3 = named_multipoint(t, "x3");
  CHECK(word_str(epsilon_class(t, x1, x2)) == "b1 b2 b1^-1");
  CHECK(epsilon_class(t, x1, x1).empty());
  CHECK(word_str(epsilon_class(t, x2, x3)) == "b2");
  CHECK(word_str(epsilon_class(t, x3, x1)) == "b1");
}

TEST_CASE("multipoint signs", "[diagram]") {
  ExtendedDiagram t = support::load("trefoil");
  CHECK(multipoint_sign(t, named_multipoint(t, "x1")) == 1);
  CHECK(multipoint_sign(t, named_multipoint(t, "x2")) == -1);
}

TEST_CASE("canonical sign from the intersection matrix", "[diagram]") {
  CHECK(canonical_sign(support::load("trefoil")) == 1);
  CHECK(canonical_sign(support::load("lens_3_1")) == 1);
  CHECK_FALSE(canonical_sign(support::load("hopf")).has_value());
  CHECK_FALSE(canonical_sign(support::load("s1xs2")).has_value());
  // Leibniz oracle on random matrices
  std::mt19937_64 rng(support::seed());
  for (int t = 0; t < 30; ++t) {
    int d = 1 + t % 4;
    ExtendedDiagram g = support::random_diagram(rng, d, d + 2);
    auto m = intersection_matrix(g);
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    long long det = 0;
    do {
      long long term = 1;
      for (int i = 0; i < d; ++i) term *= m[i][p[i]];
      int inv = 0;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) inv += p[i] > p[j];
      det += inv % 2 ? -term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    auto s = canonical_sign(g);
    if (det == 0)
      CHECK_FALSE(s.has_value());
    else
      CHECK(s == (det > 0 ? 1 : -1));
  }
}

TEST_CASE("words", "[diagram]") {
  FreeWord w = parse_word("b2^-1 b1^2");
  CHECK(word_str(w) == "b2^-1 b1 b1");
  CHECK(parse_word("1").empty());
  CHECK(word_str(inverse(w)) == "b1^-1 b1^-1 b2");
  CHECK(kind_of([] { parse_word("b1^x"); }) == "SyntaxError");
  CHECK(kind_of([] { parse_word("^2"); }) == "SyntaxError");
}
