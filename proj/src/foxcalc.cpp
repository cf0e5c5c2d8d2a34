#include "suturant/foxcalc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "suturant/errors.hpp"

namespace suturant {

namespace {

int64_t floor_mod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

// Smith normal form by unimodular moves. Columns are tracked in q and q_inv
// so that rows(r) * q is diagonal up to row operations.
struct Smith {
  std::vector<IntRow> a;
  std::vector<IntRow> q, q_inv;
  int rows = 0, cols = 0;

  Smith(std::vector<IntRow> rel, int ncols) : a(std::move(rel)), rows(static_cast<int>(a.size())), cols(ncols) {
    q.assign(cols, IntRow(cols, 0));
    q_inv.assign(cols, IntRow(cols, 0));
    for (int i = 0; i < cols; ++i) q[i][i] = q_inv[i][i] = 1;
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : q) std::swap(r[i], r[j]);
    std::swap(q_inv[i], q_inv[j]);
  }
  // col j -= f * col i
  void col_sub(int j, int i, int64_t f) {
    if (f == 0) return;
    for (auto& r : a) r[j] -= f * r[i];
    for (auto& r : q) r[j] -= f * r[i];
    for (int k = 0; k < cols; ++k) q_inv[i][k] += f * q_inv[j][k];
  }
  void row_sub(int j, int i, int64_t f) {
    if (f == 0) return;
    for (int k = 0; k < cols; ++k) a[j][k] -= f * a[i][k];
  }

  bool pivot_smallest(int t) {
    int bi = -1, bj = -1;
    int64_t best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        int64_t v = std::llabs(a[i][j]);
        if (v != 0 && (bi < 0 || v < best)) best = v, bi = i, bj = j;
      }
    if (bi < 0) return false;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    return true;
  }

  std::vector<int64_t> run() {
    std::vector<int64_t> diag;
    int t = 0;
    while (t < std::min(rows, cols)) {
      if (!pivot_smallest(t)) break;
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
          row_sub(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
          col_sub(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) {
          // move the smallest leftover of row/col t into the corner
          int64_t best = std::llabs(a[t][t]);
          int bi = t, bj = t;
          for (int i = t + 1; i < rows; ++i)
            if (a[i][t] != 0 && std::llabs(a[i][t]) < best) best = std::llabs(a[i][t]), bi = i, bj = t;
          for (int j = t + 1; j < cols; ++j)
            if (a[t][j] != 0 && std::llabs(a[t][j]) < best) best = std::llabs(a[t][j]), bi = t, bj = j;
          std::swap(a[t], a[bi]);
          swap_cols(t, bj);
          continue;
        }
        int bad = -1;
        for (int i = t + 1; i < rows && bad < 0; ++i)
          for (int j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        for (int k = 0; k < cols; ++k) a[t][k] += a[bad][k];
      }
      if (a[t][t] < 0)
        for (auto& v : a[t]) v = -v;
      diag.push_back(a[t][t]);
      ++t;
    }
    return diag;
  }
};

}  // namespace

AbelianGroup make_group(const std::vector<std::string>& generators, const std::vector<IntRow>& relations) {
  AbelianGroup g;
  g.generators = generators;
  g.relations = relations;
  const int n = static_cast<int>(generators.size());
  for (const auto& r : relations)
    if (static_cast<int>(r.size()) != n) throw Error("DimensionMismatch", "relation row length");
  Smith s(relations, n);
  auto diag = s.run();
  std::vector<int> free_cols, tors_cols;
  for (int j = 0; j < n; ++j) {
    int64_t d = j < static_cast<int>(diag.size()) ? diag[j] : 0;
    if (d == 0)
      free_cols.push_back(j);
    else if (d >= 2) {
      tors_cols.push_back(j);
      g.torsion.push_back(d);
    }
  }
  g.rank = static_cast<int>(free_cols.size());
  std::vector<int> cols = free_cols;
  cols.insert(cols.end(), tors_cols.begin(), tors_cols.end());
  g.projection.assign(n, IntRow(cols.size(), 0));
  for (int i = 0; i < n; ++i)
    for (size_t c = 0; c < cols.size(); ++c) g.projection[i][c] = s.q[i][cols[c]];
  for (int c : cols) g.lift.push_back(s.q_inv[c]);
  for (int i = 0; i < n; ++i) g.projection[i] = g.normalize(g.projection[i]);
  return g;
}

int AbelianGroup::generator_index(const std::string& id) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == id) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> AbelianGroup::coordinate_names() const {
  std::vector<std::string> out;
  if (coords() == 1) return {"t"};
  for (int i = 0; i < rank; ++i) out.push_back("t" + std::to_string(i + 1));
  for (size_t k = 0; k < torsion.size(); ++k) out.push_back("s" + std::to_string(k + 1));
  return out;
}

int AbelianGroup::coordinate_index(const std::string& name) const {
  auto names = coordinate_names();
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int64_t AbelianGroup::modulus(int coord) const { return coord < rank ? 0 : torsion[coord - rank]; }

IntRow AbelianGroup::normalize(IntRow key) const {
  for (size_t k = 0; k < torsion.size(); ++k) key[rank + k] = floor_mod(key[rank + k], torsion[k]);
  return key;
}

IntRow AbelianGroup::project(const IntRow& x) const {
  IntRow y(coords(), 0);
  for (size_t g = 0; g < x.size(); ++g) {
    if (x[g] == 0) continue;
    for (int c = 0; c < coords(); ++c) y[c] += x[g] * projection[g][c];
  }
  return normalize(std::move(y));
}

IntRow AbelianGroup::generator_key(const std::string& id) const {
  int i = generator_index(id);
  if (i < 0) throw Error("UnknownGenerator", id);
  return projection[i];
}

bool AbelianGroup::same_as(const AbelianGroup& o) const {
  return rank == o.rank && torsion == o.torsion && generators == o.generators && projection == o.projection;
}

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  if (rank == 1)
    parts.push_back("Z");
  else if (rank > 1)
    parts.push_back("Z^" + std::to_string(rank));
  for (auto d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

GroupRingElement::GroupRingElement(GroupPtr g) : group_(std::move(g)) {}

GroupRingElement GroupRingElement::one(GroupPtr g) {
  IntRow key(g->coords(), 0);
  return monomial(std::move(g), key, 1);
}

GroupRingElement GroupRingElement::monomial(GroupPtr g, const Key& key, int64_t coeff) {
  GroupRingElement r(std::move(g));
  r.add_term(key, coeff);
  return r;
}

void GroupRingElement::add_term(const Key& key, int64_t coeff) {
  if (coeff == 0) return;
  Key k = group_->normalize(key);
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int64_t GroupRingElement::augmentation() const {
  int64_t s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (!group_) group_ = o.group_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  r += o;
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const { return *this + (-o); }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r(group_ ? group_ : o.group_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Key k(k1.size());
      for (size_t i = 0; i < k.size(); ++i) k[i] = k1[i] + k2[i];
      r.add_term(k, c1 * c2);
    }
  return r;
}

GroupRingElement GroupRingElement::operator*(int64_t c) const {
  GroupRingElement r(group_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

GroupRingElement GroupRingElement::shifted(const Key& key) const {
  GroupRingElement r(group_);
  for (const auto& [k, c] : terms_) {
    Key n(k.size());
    for (size_t i = 0; i < n.size(); ++i) n[i] = k[i] + key[i];
    r.add_term(n, c);
  }
  return r;
}

std::string monomial_str(const AbelianGroup& g, const IntRow& key) {
  auto names = g.coordinate_names();
  auto power = [&](int c) {
    std::string s = names[c];
    if (key[c] != 1) s += "^" + std::to_string(key[c]);
    return s;
  };
  if (g.coords() == 1) return key[0] == 0 ? "" : power(0);
  std::string free, tors;
  for (int c = 0; c < g.coords(); ++c) {
    if (key[c] == 0) continue;
    std::string& dst = c < g.rank ? free : tors;
    if (!dst.empty()) dst += " ";
    dst += power(c);
  }
  if (!tors.empty()) {
    if (!free.empty()) free += " ";
    free += "[" + tors + "]";
  }
  return free;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    int64_t a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string m = monomial_str(*group_, k);
    if (m.empty())
      os << a;
    else if (a == 1)
      os << m;
    else
      os << a << " * " << m;
  }
  return os.str();
}

GroupRingElement canonicalize(const GroupRingElement& el) {
  if (el.is_zero()) return el;
  const AbelianGroup& g = *el.group();
  const int r = g.rank;
  IntRow low(g.coords(), 0);
  for (int c = 0; c < r; ++c) {
    int64_t m = el.terms().begin()->first[c];
    for (const auto& [k, v] : el.terms()) m = std::min(m, k[c]);
    low[c] = -m;
  }
  GroupRingElement base = el.shifted(low);

  using Seq = std::vector<std::pair<IntRow, int64_t>>;
  auto better = [](const Seq& a, const Seq& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
      if (a[i].second != b[i].second) return a[i].second > b[i].second;
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
      if (a[i].first != b[i].first) return a[i].first < b[i].first;
    return false;
  };
  GroupRingElement best = base;
  Seq best_seq(base.terms().begin(), base.terms().end());
  IntRow tau(g.coords(), 0);
  for (;;) {
    GroupRingElement moved = base.shifted(tau);
    for (int sign : {1, -1}) {
      GroupRingElement cand = moved * sign;
      Seq seq(cand.terms().begin(), cand.terms().end());
      if (better(seq, best_seq)) best = cand, best_seq = std::move(seq);
    }
    size_t k = 0;
    for (; k < g.torsion.size(); ++k) {
      if (++tau[r + k] < g.torsion[k]) break;
      tau[r + k] = 0;
    }
    if (k == g.torsion.size()) break;
  }
  return best;
}

InvariantClass::InvariantClass(const GroupRingElement& el) : rep_(canonicalize(el)) {}

std::vector<SignedWord> fox_derivative(const FreeWord& w, const std::string& gen) {
  std::vector<SignedWord> out;
  FreeWord prefix;
  for (const auto& l : w) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        for (int i = 0; i < l.exp; ++i) {
          FreeWord p = prefix;
          for (int j = 0; j < i; ++j) p.push_back({gen, 1});
          out.push_back({p, 1});
        }
      } else {
        for (int i = 1; i <= -l.exp; ++i) {
          FreeWord p = prefix;
          for (int j = 0; j < i; ++j) p.push_back({gen, -1});
          out.push_back({p, -1});
        }
      }
    }
    prefix.push_back(l);
  }
  return out;
}

AbelianGroup homology(const ExtendedDiagram& diag) {
  std::vector<std::string> gens;
  for (const Curve* b : diag.family(Family::Beta)) gens.push_back(b->id);
  std::vector<IntRow> rel;
  for (const Curve* a : diag.closed(Family::Alpha)) {
    IntRow row(gens.size(), 0);
    for (const auto& l : alpha_word(diag, a->id)) {
      auto it = std::find(gens.begin(), gens.end(), l.gen);
      row[it - gens.begin()] += l.exp;
    }
    rel.push_back(row);
  }
  return make_group(gens, rel);
}

GroupPtr homology_ptr(const ExtendedDiagram& diag) { return std::make_shared<const AbelianGroup>(homology(diag)); }

IntRow exponent_vector(const FreeWord& w, const AbelianGroup& g) {
  IntRow x(g.generators.size(), 0);
  for (const auto& l : w) {
    int i = g.generator_index(l.gen);
    if (i < 0) throw Error("UnknownGenerator", l.gen);
    x[i] += l.exp;
  }
  return x;
}

GroupRingElement abelianize(const FreeWord& w, const GroupPtr& g) {
  return GroupRingElement::monomial(g, g->project(exponent_vector(w, *g)), 1);
}

GroupRingElement abelianize(const std::vector<SignedWord>& ws, const GroupPtr& g) {
  GroupRingElement r(g);
  for (const auto& [w, s] : ws) r.add_term(g->project(exponent_vector(w, *g)), s);
  return r;
}

GRMatrix fox_matrix(const ExtendedDiagram& based, const GroupPtr& g) {
  auto ca = based.closed(Family::Alpha);
  auto cb = based.closed(Family::Beta);
  GRMatrix m;
  for (const Curve* a : ca) {
    FreeWord w = alpha_word(based, a->id);
    std::vector<GroupRingElement> row;
    for (const Curve* b : cb) row.push_back(abelianize(fox_derivative(w, b->id), g));
    m.push_back(std::move(row));
  }
  return m;
}

GroupRingElement determinant(const GRMatrix& m, const GroupPtr& g) {
  const size_t d = m.size();
  for (const auto& row : m)
    if (row.size() != d) throw Error("NonSquare", "determinant of a non-square matrix");
  if (d > 20) throw Error("TooLarge", "determinant dimension " + std::to_string(d));
  std::vector<GroupRingElement> minor(size_t(1) << d, GroupRingElement(g));
  minor[0] = GroupRingElement::one(g);
  for (size_t mask = 1; mask < minor.size(); ++mask) {
    int row = __builtin_popcountll(mask) - 1;
    GroupRingElement acc(g);
    int above = 0;
    for (int j = static_cast<int>(d) - 1; j >= 0; --j) {
      if (!(mask >> j & 1)) continue;
      const auto& sub = minor[mask & ~(size_t(1) << j)];
      if (!m[row][j].is_zero() && !sub.is_zero()) {
        GroupRingElement term = m[row][j] * sub;
        acc += (above % 2 == 0) ? term : -term;
      }
      ++above;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

FreeWord pick_prefix(const ExtendedDiagram& based, const std::string& alpha_id, const std::string& pick) {
  const Curve& a = based.curve(alpha_id);
  FreeWord w;
  for (const auto& x : a.order) {
    const Crossing& c = based.crossing(x);
    if (x == pick) {
      if (c.sign < 0) w.push_back({c.beta, -1});
      return w;
    }
    w.push_back({c.beta, c.sign});
  }
  throw Error("InvalidMultipoint", pick + " is not on " + alpha_id);
}

GroupRingElement multipoint_expansion(const ExtendedDiagram& based, const GroupPtr& g) {
  auto ca = based.closed(Family::Alpha);
  GroupRingElement sum(g);
  for (const auto& x : enumerate_multipoints(based)) {
    IntRow key(g->coords(), 0);
    for (size_t i = 0; i < ca.size(); ++i) {
      IntRow k = g->project(exponent_vector(pick_prefix(based, ca[i]->id, x.picks[i]), *g));
      for (size_t c = 0; c < key.size(); ++c) key[c] += k[c];
    }
    sum.add_term(key, multipoint_sign(based, x));
  }
  return sum;
}

H1Character trivial_character(const AbelianGroup& g, int order) { return {IntRow(g.coords(), 0), order}; }

void check_character(const AbelianGroup& g, const H1Character& chi) {
  if (chi.order < 1) throw Error("InvalidCharacter", "order must be >= 1");
  if (static_cast<int>(chi.exps.size()) != g.coords())
    throw Error("InvalidCharacter", "expected " + std::to_string(g.coords()) + " exponents");
  for (int c = g.rank; c < g.coords(); ++c)
    if (floor_mod(g.modulus(c) * chi.exps[c], chi.order) != 0)
      throw Error("InvalidCharacter", "torsion generator of order " + std::to_string(g.modulus(c)) +
                                          " sent to x^" + std::to_string(chi.exps[c]) + " mod " +
                                          std::to_string(chi.order));
}

std::vector<H1Character> all_characters(const AbelianGroup& g, int order) {
  const int n = g.coords();
  std::vector<int64_t> step(n, 1);
  for (int c = g.rank; c < n; ++c) step[c] = order / std::gcd<int64_t>(order, g.modulus(c));
  std::vector<H1Character> out;
  IntRow e(n, 0);
  for (;;) {
    out.push_back({e, order});
    int c = 0;
    for (; c < n; ++c) {
      e[c] += step[c];
      if (e[c] < order) break;
      e[c] = 0;
    }
    if (c == n) break;
  }
  return out;
}

int64_t character_exponent(const AbelianGroup& g, const H1Character& chi, const IntRow& key) {
  int64_t s = 0;
  for (int c = 0; c < g.coords(); ++c) s += floor_mod(key[c], chi.order) * chi.exps[c] % chi.order;
  return floor_mod(s, chi.order);
}

int64_t generator_exponent(const AbelianGroup& g, const H1Character& chi, const std::string& gen) {
  return character_exponent(g, chi, g.generator_key(gen));
}

H1Character solve_character(const AbelianGroup& g, const std::map<std::string, int64_t>& values, int order) {
  if (order < 1) throw Error("InvalidCharacter", "order must be >= 1");
  std::vector<std::pair<IntRow, int64_t>> constraints;
  for (const auto& [k, v] : values) {
    int c = g.coordinate_index(k);
    IntRow key(g.coords(), 0);
    if (g.has_generator(k))
      key = g.generator_key(k);
    else if (c >= 0)
      key[c] = 1;
    else
      throw Error("UnknownGenerator", k);
    constraints.push_back({key, floor_mod(v, order)});
  }
  std::vector<H1Character> found;
  for (auto& chi : all_characters(g, order)) {
    bool ok = true;
    for (const auto& [key, v] : constraints)
      if (character_exponent(g, chi, key) != v) {
        ok = false;
        break;
      }
    if (ok) found.push_back(chi);
    if (found.size() > 1) break;
  }
  if (found.empty()) throw Error("InvalidCharacter", "no character of H1 takes the requested values");
  if (found.size() > 1) throw Error("InvalidCharacter", "values do not determine a unique character of H1");
  return found[0];
}

Cyclotomic evaluate(const GroupRingElement& el, const H1Character& chi) {
  const AbelianGroup& g = *el.group();
  check_character(g, chi);
  Cyclotomic r(chi.order);
  for (const auto& [k, c] : el.terms()) r += Cyclotomic::root_power(chi.order, character_exponent(g, chi, k)) * c;
  return r;
}

GroupRingElement transport(const GroupRingElement& el, const GroupPtr& target, const GeneratorMap& map) {
  const AbelianGroup& src = *el.group();
  GroupRingElement out(target);
  for (const auto& [k, c] : el.terms()) {
    IntRow x(src.generators.size(), 0);
    for (int co = 0; co < src.coords(); ++co)
      for (size_t i = 0; i < x.size(); ++i) x[i] += k[co] * src.lift[co][i];
    IntRow y(target->generators.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      const std::string& gen = src.generators[i];
      auto it = map.find(gen);
      std::string to = gen;
      int sign = 1;
      if (it != map.end()) {
        to = it->second.first;
        sign = it->second.second;
      }
      if (to.empty()) continue;
      int j = target->generator_index(to);
      if (j < 0) throw Error("UnknownGenerator", gen + " has no image");
      y[j] += sign * x[i];
    }
    out.add_term(target->project(y), c);
  }
  return out;
}

GroupRingElement divide_by_t_minus_one(const GroupRingElement& el, int coord) {
  const GroupPtr& g = el.group();
  if (coord < 0 || coord >= g->rank) throw Error("NotDivisible", "coordinate is not a free generator");
  std::map<IntRow, std::map<int64_t, int64_t>> slices;
  for (const auto& [k, c] : el.terms()) {
    IntRow rest = k;
    rest[coord] = 0;
    slices[rest][k[coord]] = c;
  }
  GroupRingElement q(g);
  for (const auto& [rest, f] : slices) {
    int64_t lo = f.begin()->first, hi = f.rbegin()->first;
    int64_t carry = 0;
    for (int64_t m = hi; m > lo; --m) {
      auto it = f.find(m);
      carry += it == f.end() ? 0 : it->second;
      IntRow key = rest;
      key[coord] = m - 1;
      q.add_term(key, carry);
    }
    if (f.at(lo) + carry != 0) throw Error("NotDivisible", el.str() + " is not a multiple of (t - 1)");
  }
  IntRow shift(g->coords(), 0);
  shift[coord] = 1;
  if (q.shifted(shift) - q != el) throw Error("NotDivisible", "division check failed");
  return q;
}

}  // namespace suturant
