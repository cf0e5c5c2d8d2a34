#include "suturant/kuperberg.hpp"

#include <algorithm>
#include <unordered_map>

#include "suturant/errors.hpp"

namespace suturant {

namespace {

int64_t floor_mod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

struct Term {
  int64_t coeff;
  std::vector<int> idx;
};

int64_t power(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

CharacterAssignment assignment_from(const AbelianGroup& g, const H1Character& chi) {
  check_character(g, chi);
  CharacterAssignment a;
  a.order = chi.order;
  for (const auto& id : g.generators) a.psi[id] = generator_exponent(g, chi, id);
  return a;
}

Cyclotomic contract(const ExtendedDiagram& based, const HopfPackage& pkg, const CharacterAssignment& chars) {
  const PresentedAlgebra& h = pkg.algebra;
  const auto& in = pkg.integral;
  const auto& co = pkg.cointegral;
  const int D = h.dim;
  const int N = chars.order;
  if (N < 1) throw Error("CharacterMismatch", "order must be >= 1");

  auto alphas = based.family(Family::Alpha);
  auto betas = based.family(Family::Beta);
  for (const auto& [id, e] : chars.psi)
    if (!based.has_curve(id) || based.curve(id).family != Family::Beta)
      throw Error("CharacterMismatch", "psi given for unknown beta curve " + id);
  for (const auto& [id, v] : chars.phi) {
    if (!based.has_curve(id) || based.curve(id).family != Family::Alpha)
      throw Error("CharacterMismatch", "phi given for unknown alpha curve " + id);
    if (v.size() != co.a_basis.size()) throw Error("CharacterMismatch", "phi for " + id + " has wrong dimension");
  }
  std::vector<int64_t> beta_e;
  for (const Curve* b : betas) {
    auto it = chars.psi.find(b->id);
    int64_t e = it == chars.psi.end() ? 0 : floor_mod(it->second, N);
    if (floor_mod(e * in.glike_b_order, N) != 0)
      throw Error("CharacterMismatch", "psi(" + b->id + ") is not defined on b of order " +
                                           std::to_string(in.glike_b_order));
    beta_e.push_back(e);
  }

  // slots in alpha order; beta_pos gives each crossing's place in beta order
  std::unordered_map<std::string, int> beta_pos;
  int nslots = 0;
  for (const Curve* b : betas)
    for (const auto& x : b->order) beta_pos[x] = nslots++;

  Vec unit_a = suturant::apply(co.pi_a_matrix, basis_vector(D, h.unit_index));
  std::vector<std::vector<Term>> alpha_terms;
  std::vector<int> slot_beta;  // alpha slot -> beta slot
  int closed_alpha = 0;
  for (const Curve* a : alphas) {
    bool closed = a->topology == Topology::Closed;
    closed_alpha += closed;
    auto it = chars.phi.find(a->id);
    const Vec& phi = it == chars.phi.end() ? unit_a : it->second;
    Vec seed = suturant::apply(closed ? co.iota_matrix : co.i_a_matrix, phi);
    const int k = static_cast<int>(a->order.size());
    std::vector<Term> terms;
    for (auto& t : coproduct_power(pkg, seed, k)) terms.push_back({t.coeff, t.idx});
    for (int s = 0; s < k; ++s) {
      slot_beta.push_back(beta_pos.at(a->order[s]));
      if (based.crossing(a->order[s]).sign > 0) continue;
      std::vector<Term> next;
      for (const auto& t : terms)
        for (int j = 0; j < D; ++j) {
          int64_t v = h.antipode(t.idx[s], j);
          if (v == 0) continue;
          Term n = t;
          n.coeff *= v;
          n.idx[s] = j;
          next.push_back(std::move(n));
        }
      terms.swap(next);
    }
    alpha_terms.push_back(std::move(terms));
  }

  Cyclotomic total(N);
  std::vector<int> slot_elem(nslots, 0);  // indexed by beta slot
  std::vector<int> odd_alpha_order;
  std::vector<std::vector<int>> beta_slots;
  {
    int p = 0;
    for (const Curve* b : betas) {
      std::vector<int> s;
      for (size_t i = 0; i < b->order.size(); ++i) s.push_back(p++);
      beta_slots.push_back(s);
    }
  }

  auto leaf = [&](int64_t coeff) {
    // Koszul sign: inversions among odd elements between alpha and beta order
    odd_alpha_order.clear();
    for (int s = 0; s < nslots; ++s)
      if (h.parity[slot_elem[slot_beta[s]]]) odd_alpha_order.push_back(slot_beta[s]);
    int inv = 0;
    for (size_t i = 0; i < odd_alpha_order.size(); ++i)
      for (size_t j = i + 1; j < odd_alpha_order.size(); ++j)
        if (odd_alpha_order[i] > odd_alpha_order[j]) ++inv;
    Cyclotomic value = Cyclotomic::integer(N, inv % 2 ? -coeff : coeff);
    Vec prod(D), next(D);
    for (size_t bi = 0; bi < betas.size(); ++bi) {
      std::fill(prod.begin(), prod.end(), 0);
      prod[h.unit_index] = 1;
      int parity = 0;
      for (int s : beta_slots[bi]) {
        int e = slot_elem[s];
        parity ^= h.parity[e];
        std::fill(next.begin(), next.end(), 0);
        for (int i = 0; i < D; ++i) {
          if (prod[i] == 0) continue;
          for (int k = 0; k < D; ++k) next[k] += prod[i] * h.mul(i, e, k);
        }
        prod.swap(next);
      }
      bool closed = betas[bi]->topology == Topology::Closed;
      Vec out = suturant::apply(closed ? in.mu_matrix : in.pi_b_matrix, prod);
      bool nonzero = std::any_of(out.begin(), out.end(), [](int64_t v) { return v != 0; });
      if (!nonzero) return;
      if (parity != (closed ? in.mu_parity : 0))
        throw Error("OddScalar", "beta curve " + betas[bi]->id + " produced a scalar of odd degree");
      Cyclotomic s(N);
      for (size_t k = 0; k < out.size(); ++k)
        if (out[k] != 0) s += Cyclotomic::root_power(N, beta_e[bi] * in.b_powers[k]) * out[k];
      value *= s;
      if (value.is_zero()) return;
    }
    total += value;
  };

  std::vector<int> alpha_first_slot;
  {
    int p = 0;
    for (const Curve* a : alphas) {
      alpha_first_slot.push_back(p);
      p += static_cast<int>(a->order.size());
    }
  }
  auto rec = [&](auto&& self, size_t ai, int64_t coeff) -> void {
    if (ai == alphas.size()) {
      leaf(coeff);
      return;
    }
    int base = alpha_first_slot[ai];
    for (const auto& t : alpha_terms[ai]) {
      for (size_t s = 0; s < t.idx.size(); ++s) slot_elem[slot_beta[base + s]] = t.idx[s];
      self(self, ai + 1, coeff * t.coeff);
    }
  };
  rec(rec, 0, 1);

  total = total * power(co.iota_num, closed_alpha);
  return total.div_exact(power(co.iota_den, closed_alpha));
}

ExtendedDiagram rotate_curve(const ExtendedDiagram& diag, const std::string& curve_id, int new_start) {
  ExtendedDiagram out = diag;
  Curve& c = out.curve(curve_id);
  if (c.topology != Topology::Closed) throw Error("ArcCurve", curve_id + " is an arc");
  int k = static_cast<int>(c.order.size());
  if (new_start < 0 || new_start > k) throw Error("InvalidArgument", "start position out of range");
  if (k > 0) std::rotate(c.order.begin(), c.order.begin() + new_start % k, c.order.end());
  return out;
}

Cyclotomic basepoint_shift(const ExtendedDiagram& based, const std::string& curve_id, int new_start,
                           const HopfPackage& pkg, const CharacterAssignment& chars) {
  const Curve& c = based.curve(curve_id);
  if (c.topology != Topology::Closed) throw Error("ArcCurve", curve_id + " has no basepoint");
  int k = static_cast<int>(c.order.size());
  if (new_start < 0 || new_start > k) throw Error("InvalidArgument", "start position out of range");
  const int N = chars.order;
  if (c.family == Family::Beta) {
    for (auto a : pkg.cointegral.astar)
      if (a != 0) throw Error("Unsupported", "basepoint shift on beta curves needs a trivial a*");
    return Cyclotomic::integer(N, 1);
  }
  int64_t e = 0;
  for (int s = new_start; s < k; ++s) {
    const Crossing& x = based.crossing(c.order[s]);
    auto it = chars.psi.find(x.beta);
    e += x.sign * (it == chars.psi.end() ? 0 : it->second);
  }
  return Cyclotomic::root_power(N, e);
}

}  // namespace suturant
