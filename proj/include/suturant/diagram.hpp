#pragma once

#include <optional>
#include <string>
#include <vector>

namespace suturant {

enum class Family { Alpha, Beta };
enum class Topology { Closed, Arc };

struct Crossing {
  std::string id;
  std::string alpha;
  std::string beta;
  int sign = 1;  // (alpha', beta') against the surface orientation
};

// Orientation is the list direction; for closed curves the list start is the basepoint.
struct Curve {
  std::string id;
  Family family = Family::Alpha;
  Topology topology = Topology::Closed;
  std::vector<std::string> order;
};

struct NamedMultipoint {
  std::string name;
  std::vector<std::string> picks;
};

struct ExtendedDiagram {
  std::string name;
  std::vector<Curve> curves;
  std::vector<Crossing> crossings;
  std::vector<NamedMultipoint> multipoints;

  const Crossing& crossing(const std::string& id) const;
  Crossing& crossing(const std::string& id);
  const Curve& curve(const std::string& id) const;
  Curve& curve(const std::string& id);
  bool has_curve(const std::string& id) const;
  bool has_crossing(const std::string& id) const;

  // Curves of one family in diagram order; closed ones first by convention.
  std::vector<const Curve*> family(Family f) const;
  std::vector<const Curve*> closed(Family f) const;
  std::vector<const Curve*> arcs(Family f) const;
  int d() const;
  // Index of a closed curve among the closed curves of its family, or -1.
  int closed_index(const std::string& id) const;
};

// picks[i] lies on the i-th closed alpha; sigma[i] is the index of its closed beta.
struct Multipoint {
  std::vector<std::string> picks;
  std::vector<int> sigma;

  std::vector<std::string> sorted_picks() const;
  bool operator==(const Multipoint& o) const { return sorted_picks() == o.sorted_picks(); }
};

struct Letter {
  std::string gen;
  int exp = 1;
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};
using FreeWord = std::vector<Letter>;

struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ExtendedDiagram parse_diagram(const std::string& text);
ExtendedDiagram load_diagram(const std::string& path);
std::string serialize_diagram(const ExtendedDiagram& diag);

Report validate(const ExtendedDiagram& diag);

// Throws InvalidMultipoint unless the picks form a multipoint of diag.
Multipoint make_multipoint(const ExtendedDiagram& diag, const std::vector<std::string>& picks);
std::vector<Multipoint> enumerate_multipoints(const ExtendedDiagram& diag);
Multipoint named_multipoint(const ExtendedDiagram& diag, const std::string& name);

ExtendedDiagram rebase(const ExtendedDiagram& diag, const Multipoint& x);

FreeWord alpha_word(const ExtendedDiagram& diag, const std::string& alpha_id);
FreeWord epsilon_class(const ExtendedDiagram& diag, const Multipoint& x, const Multipoint& y);
int multipoint_sign(const ExtendedDiagram& diag, const Multipoint& x);

std::vector<std::vector<long long>> intersection_matrix(const ExtendedDiagram& diag);
// nullopt means the intersection determinant vanishes (no canonical orientation).
std::optional<int> canonical_sign(const ExtendedDiagram& diag);

FreeWord parse_word(const std::string& text);
std::string word_str(const FreeWord& w);
FreeWord inverse(const FreeWord& w);

}  // namespace suturant
