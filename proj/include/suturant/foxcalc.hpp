#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "suturant/cyclotomic.hpp"
#include "suturant/diagram.hpp"

namespace suturant {

using IntRow = std::vector<int64_t>;

// Finitely generated abelian group presented by the beta duals.
// Normal-form coordinates: free part first, then torsion residues mod torsion[k].
struct AbelianGroup {
  int rank = 0;
  std::vector<int64_t> torsion;
  std::vector<std::string> generators;  // beta ids, diagram order
  std::vector<IntRow> relations;        // rows over generators
  std::vector<IntRow> projection;       // generators x coords
  std::vector<IntRow> lift;             // coords x generators

  int coords() const { return rank + static_cast<int>(torsion.size()); }
  int generator_index(const std::string& id) const;  // -1 if absent
  bool has_generator(const std::string& id) const { return generator_index(id) >= 0; }
  std::vector<std::string> coordinate_names() const;
  int coordinate_index(const std::string& name) const;  // -1 if absent
  int64_t modulus(int coord) const;                     // 0 for free coordinates
  IntRow normalize(IntRow key) const;
  IntRow project(const IntRow& gen_exponents) const;
  IntRow generator_key(const std::string& id) const;
  bool same_as(const AbelianGroup& o) const;
  std::string str() const;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

AbelianGroup make_group(const std::vector<std::string>& generators, const std::vector<IntRow>& relations);

class GroupRingElement {
 public:
  using Key = IntRow;

  explicit GroupRingElement(GroupPtr g = nullptr);
  static GroupRingElement zero(GroupPtr g) { return GroupRingElement(std::move(g)); }
  static GroupRingElement one(GroupPtr g);
  static GroupRingElement monomial(GroupPtr g, const Key& key, int64_t coeff = 1);

  const GroupPtr& group() const { return group_; }
  const std::map<Key, int64_t>& terms() const { return terms_; }
  void add_term(const Key& key, int64_t coeff);

  bool is_zero() const { return terms_.empty(); }
  int64_t augmentation() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator*(int64_t c) const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  bool operator==(const GroupRingElement& o) const;
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  // Multiply by the group element with the given key.
  GroupRingElement shifted(const Key& key) const;
  std::string str() const;

 private:
  GroupPtr group_;
  std::map<Key, int64_t> terms_;
};

std::string monomial_str(const AbelianGroup& g, const IntRow& key);

// Representative up to multiplication by +-H1.
class InvariantClass {
 public:
  InvariantClass() = default;
  explicit InvariantClass(const GroupRingElement& el);
  const GroupRingElement& representative() const { return rep_; }
  const GroupPtr& group() const { return rep_.group(); }
  std::string str() const { return rep_.str(); }

 private:
  GroupRingElement rep_;
};

GroupRingElement canonicalize(const GroupRingElement& el);

using SignedWord = std::pair<FreeWord, int>;

std::vector<SignedWord> fox_derivative(const FreeWord& w, const std::string& gen);

AbelianGroup homology(const ExtendedDiagram& diag);
GroupPtr homology_ptr(const ExtendedDiagram& diag);

IntRow exponent_vector(const FreeWord& w, const AbelianGroup& g);
GroupRingElement abelianize(const FreeWord& w, const GroupPtr& g);
GroupRingElement abelianize(const std::vector<SignedWord>& ws, const GroupPtr& g);

using GRMatrix = std::vector<std::vector<GroupRingElement>>;

GRMatrix fox_matrix(const ExtendedDiagram& based, const GroupPtr& g);
GroupRingElement determinant(const GRMatrix& m, const GroupPtr& g);
GroupRingElement multipoint_expansion(const ExtendedDiagram& based, const GroupPtr& g);
// Prefix word of alpha_i up to the basepoint of the pick (negative picks included).
FreeWord pick_prefix(const ExtendedDiagram& based, const std::string& alpha_id, const std::string& pick);

// Exponents (mod order) assigned to the normal-form coordinates.
struct H1Character {
  std::vector<int64_t> exps;
  int order = 1;
};

H1Character trivial_character(const AbelianGroup& g, int order);
void check_character(const AbelianGroup& g, const H1Character& chi);
// Every character of H1 with values in the order-th roots of unity.
std::vector<H1Character> all_characters(const AbelianGroup& g, int order);
// Keys are beta ids or coordinate names; the solution must be unique.
H1Character solve_character(const AbelianGroup& g, const std::map<std::string, int64_t>& values, int order);
int64_t character_exponent(const AbelianGroup& g, const H1Character& chi, const IntRow& key);
int64_t generator_exponent(const AbelianGroup& g, const H1Character& chi, const std::string& gen);

Cyclotomic evaluate(const GroupRingElement& el, const H1Character& chi);

// Old beta id -> (new beta id, sign); an empty id means the generator dies.
using GeneratorMap = std::map<std::string, std::pair<std::string, int>>;

GroupRingElement transport(const GroupRingElement& el, const GroupPtr& target, const GeneratorMap& map);

// Exact division by (t_coord - 1); throws NotDivisible.
GroupRingElement divide_by_t_minus_one(const GroupRingElement& el, int coord);

}  // namespace suturant
