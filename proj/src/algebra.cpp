#include "suturant/algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "suturant/cyclotomic.hpp"
#include "suturant/errors.hpp"

namespace suturant {

bool AxiomReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

Vec basis_vector(int dim, int i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

Vec apply(const IntMat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) out[r] += m[r][c] * v[c];
  return out;
}

Vec multiply(const PresentedAlgebra& h, const Vec& x, const Vec& y) {
  Vec out(h.dim, 0);
  for (int i = 0; i < h.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < h.dim; ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < h.dim; ++k) out[k] += x[i] * y[j] * h.mul(i, j, k);
    }
  }
  return out;
}

Vec antipode(const PresentedAlgebra& h, const Vec& x) {
  Vec out(h.dim, 0);
  for (int i = 0; i < h.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < h.dim; ++j) out[j] += x[i] * h.antipode(i, j);
  }
  return out;
}

namespace {

IntMat zeros(int r, int c) { return IntMat(r, std::vector<int64_t>(c, 0)); }

std::string power_label(int i, const std::string& sym) {
  if (i == 0) return sym.empty() ? "1" : sym;
  std::string k = i == 1 ? "K" : "K^" + std::to_string(i);
  return k + sym;
}

}  // namespace

HopfPackage build_hn(int n) {
  if (n < 1) throw Error("InvalidArgument", "H_n needs n >= 1");
  const int D = 2 * n;
  HopfPackage pkg;
  pkg.name = n == 1 ? "exterior" : "hn";
  PresentedAlgebra& h = pkg.algebra;
  h.dim = D;
  h.mul_sc.assign(D * D * D, 0);
  h.comul_sc.assign(D * D * D, 0);
  h.antipode_sc.assign(D * D, 0);
  h.counit_vec.assign(D, 0);
  h.unit_index = 0;
  auto k_ = [n](int i) { return ((i % n) + n) % n; };
  auto kx = [n, &k_](int i) { return n + k_(i); };
  for (int i = 0; i < n; ++i) {
    h.basis_labels.push_back(power_label(i, ""));
    h.parity.push_back(0);
  }
  for (int i = 0; i < n; ++i) {
    h.basis_labels.push_back(power_label(i, "X"));
    h.parity.push_back(1);
  }
  auto M = [&](int i, int j, int k, int64_t c) { h.mul_sc[(i * D + j) * D + k] += c; };
  auto C = [&](int i, int j, int k, int64_t c) { h.comul_sc[(i * D + j) * D + k] += c; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      M(i, j, k_(i + j), 1);
      M(i, kx(j), kx(i + j), 1);
      M(kx(i), j, kx(i + j), 1);
    }
    C(i, i, i, 1);
    C(kx(i), k_(i + 1), kx(i), 1);
    C(kx(i), kx(i), k_(i), 1);
    h.antipode_sc[i * D + k_(-i)] = 1;
    h.antipode_sc[kx(i) * D + kx(-i - 1)] = -1;
    h.counit_vec[i] = 1;
  }

  RelativeIntegralData& in = pkg.integral;
  in.i_b_matrix = zeros(D, n);
  in.pi_b_matrix = zeros(n, D);
  in.mu_matrix = zeros(n, D);
  for (int i = 0; i < n; ++i) {
    in.b_basis.push_back(i);
    in.i_b_matrix[i][i] = 1;
    in.pi_b_matrix[i][i] = 1;
    in.mu_matrix[i][kx(i)] = 1;
    in.b_powers.push_back(i);
  }
  in.glike_b = basis_vector(n, k_(1));
  in.glike_b_order = n;
  in.mu_parity = 1;

  RelativeCointegralData& co = pkg.cointegral;
  co.a_basis = {0};
  co.pi_a_matrix = zeros(1, D);
  co.i_a_matrix = zeros(D, 1);
  co.iota_matrix = zeros(D, 1);
  for (int i = 0; i < n; ++i) {
    co.pi_a_matrix[0][i] = 1;
    co.iota_matrix[kx(i)][0] = 1;
  }
  co.i_a_matrix[0][0] = 1;
  co.astar = {0};
  co.astar_order = 1;
  co.iota_parity = 1;
  co.iota_num = 1;
  co.iota_den = n;
  return pkg;
}

HopfPackage build_cyclic_group_algebra(int m) {
  if (m < 1) throw Error("InvalidArgument", "group order must be >= 1");
  HopfPackage pkg;
  pkg.name = "cyclic-group-algebra";
  PresentedAlgebra& h = pkg.algebra;
  h.dim = m;
  h.mul_sc.assign(m * m * m, 0);
  h.comul_sc.assign(m * m * m, 0);
  h.antipode_sc.assign(m * m, 0);
  h.counit_vec.assign(m, 1);
  h.parity.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    h.basis_labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < m; ++j) h.mul_sc[(i * m + j) * m + (i + j) % m] = 1;
    h.comul_sc[(i * m + i) * m + i] = 1;
    h.antipode_sc[i * m + (m - i) % m] = 1;
  }
  RelativeIntegralData& in = pkg.integral;
  in.b_basis = {0};
  in.i_b_matrix = zeros(m, 1);
  in.i_b_matrix[0][0] = 1;
  in.pi_b_matrix = IntMat{Vec(m, 1)};
  in.mu_matrix = zeros(1, m);
  in.mu_matrix[0][0] = 1;
  in.glike_b = {1};
  in.glike_b_order = 1;
  in.b_powers = {0};
  in.mu_parity = 0;

  RelativeCointegralData& co = pkg.cointegral;
  co.a_basis = {0};
  co.pi_a_matrix = IntMat{Vec(m, 1)};
  co.i_a_matrix = zeros(m, 1);
  co.i_a_matrix[0][0] = 1;
  co.iota_matrix = IntMat(m, Vec{1});
  co.astar = {0};
  co.astar_order = 1;
  co.iota_parity = 0;
  return pkg;
}

std::vector<TensorTerm> coproduct_power(const HopfPackage& pkg, const Vec& x, int k) {
  const PresentedAlgebra& h = pkg.algebra;
  if (static_cast<int>(x.size()) != h.dim) throw Error("InvalidArgument", "element has wrong dimension");
  if (k < 0) throw Error("InvalidArgument", "negative coproduct power");
  std::vector<TensorTerm> out;
  if (k == 0) {
    int64_t e = 0;
    for (int i = 0; i < h.dim; ++i) e += x[i] * h.counit_vec[i];
    if (e != 0) out.push_back({e, {}});
    return out;
  }
  std::map<std::vector<int>, int64_t> cur;
  for (int i = 0; i < h.dim; ++i)
    if (x[i] != 0) cur[{i}] += x[i];
  for (int step = 1; step < k; ++step) {
    std::map<std::vector<int>, int64_t> next;
    for (const auto& [idx, c] : cur) {
      int last = idx.back();
      for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b) {
          int64_t v = h.comul(last, a, b);
          if (v == 0) continue;
          std::vector<int> ni(idx.begin(), idx.end() - 1);
          ni.push_back(a);
          ni.push_back(b);
          next[ni] += c * v;
        }
    }
    cur.swap(next);
  }
  for (const auto& [idx, c] : cur)
    if (c != 0) out.push_back({c, idx});
  return out;
}

namespace {

using CVec = std::vector<Cyclotomic>;

// Sparse views of the structure constants plus the derived maps on A and B.
class Checker {
 public:
  explicit Checker(const HopfPackage& pkg)
      : p(pkg), h(pkg.algebra), D(pkg.algebra.dim), in(pkg.integral), co(pkg.cointegral) {
    mulS.assign(D, std::vector<std::vector<std::pair<int, int64_t>>>(D));
    comS.assign(D, {});
    antS.assign(D, {});
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j) {
        for (int k = 0; k < D; ++k) {
          if (h.mul(i, j, k) != 0) mulS[i][j].push_back({k, h.mul(i, j, k)});
          if (h.comul(i, j, k) != 0) comS[i].push_back({j, k, h.comul(i, j, k)});
        }
        if (h.antipode(i, j) != 0) antS[i].push_back({j, h.antipode(i, j)});
      }
    }
    nb = static_cast<int>(in.pi_b_matrix.size());
    na = static_cast<int>(co.pi_a_matrix.size());
    for (int k = 0; k < nb; ++k) parB.push_back(parity_of(iB(basis_vector(nb, k))));
    for (int k = 0; k < na; ++k) parA.push_back(parity_of(iA(basis_vector(na, k))));
  }

  const HopfPackage& p;
  const PresentedAlgebra& h;
  const int D;
  const RelativeIntegralData& in;
  const RelativeCointegralData& co;
  int nb = 0, na = 0;
  std::vector<int> parB, parA;
  std::vector<std::vector<std::vector<std::pair<int, int64_t>>>> mulS;
  std::vector<std::vector<std::tuple<int, int, int64_t>>> comS;
  std::vector<std::vector<std::pair<int, int64_t>>> antS;

  int par(int i) const { return h.parity[i]; }

  // 0/1 for homogeneous nonzero, 0 for zero, 2 if mixed.
  int parity_of(const Vec& v) const {
    int seen = -1;
    for (int i = 0; i < D; ++i) {
      if (v[i] == 0) continue;
      if (seen == -1) seen = par(i);
      else if (seen != par(i)) return 2;
    }
    return seen < 0 ? 0 : seen;
  }

  Vec e(int i) const { return basis_vector(D, i); }
  Vec one() const { return e(h.unit_index); }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out(D, 0);
    for (int i = 0; i < D; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < D; ++j) {
        if (y[j] == 0) continue;
        for (auto [k, c] : mulS[i][j]) out[k] += x[i] * y[j] * c;
      }
    }
    return out;
  }

  Vec comul(const Vec& x) const {
    Vec out(D * D, 0);
    for (int i = 0; i < D; ++i) {
      if (x[i] == 0) continue;
      for (auto [a, b, c] : comS[i]) out[a * D + b] += x[i] * c;
    }
    return out;
  }

  Vec S(const Vec& x) const {
    Vec out(D, 0);
    for (int i = 0; i < D; ++i) {
      if (x[i] == 0) continue;
      for (auto [j, c] : antS[i]) out[j] += x[i] * c;
    }
    return out;
  }

  int64_t eps(const Vec& x) const {
    int64_t s = 0;
    for (int i = 0; i < D; ++i) s += x[i] * h.counit_vec[i];
    return s;
  }

  Vec tau(const Vec& t) const {
    Vec out(D * D, 0);
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        int64_t v = t[a * D + b];
        if (v == 0) continue;
        out[b * D + a] += (par(a) & par(b)) ? -v : v;
      }
    return out;
  }

  // (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
  Vec mul2(const Vec& x, const Vec& y) const {
    Vec out(D * D, 0);
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        int64_t u = x[a * D + b];
        if (u == 0) continue;
        for (int c = 0; c < D; ++c)
          for (int d = 0; d < D; ++d) {
            int64_t v = y[c * D + d];
            if (v == 0) continue;
            int64_t s = (par(b) & par(c)) ? -1 : 1;
            for (auto [k1, c1] : mulS[a][c])
              for (auto [k2, c2] : mulS[b][d]) out[k1 * D + k2] += s * u * v * c1 * c2;
          }
      }
    return out;
  }

  Vec iB(const Vec& u) const { return apply(in.i_b_matrix, u); }
  Vec piB(const Vec& x) const { return apply(in.pi_b_matrix, x); }
  Vec mu(const Vec& x) const { return apply(in.mu_matrix, x); }
  Vec iA(const Vec& u) const { return apply(co.i_a_matrix, u); }
  Vec piA(const Vec& x) const { return apply(co.pi_a_matrix, x); }
  Vec iota(const Vec& u) const { return apply(co.iota_matrix, u); }

  Vec mB(const Vec& u, const Vec& v) const { return piB(mul(iB(u), iB(v))); }
  Vec mA(const Vec& u, const Vec& v) const { return piA(mul(iA(u), iA(v))); }
  Vec SB(const Vec& u) const { return piB(S(iB(u))); }
  Vec SA(const Vec& u) const { return piA(S(iA(u))); }
  int64_t epsB(const Vec& u) const { return eps(iB(u)); }
  int64_t epsA(const Vec& u) const { return eps(iA(u)); }
  Vec unitB() const { return piB(one()); }
  Vec unitA() const { return piA(one()); }

  // (f (x) g) applied to a D*D tensor, results as rows x cols flattened.
  Vec map2(const Vec& t, const std::function<Vec(const Vec&)>& f, int fr,
           const std::function<Vec(const Vec&)>& g, int gr) const {
    Vec out(fr * gr, 0);
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        int64_t v = t[a * D + b];
        if (v == 0) continue;
        Vec fa = f(e(a)), gb = g(e(b));
        for (int i = 0; i < fr; ++i) {
          if (fa[i] == 0) continue;
          for (int j = 0; j < gr; ++j) out[i * gr + j] += v * fa[i] * gb[j];
        }
      }
    return out;
  }

  Vec DeltaB(const Vec& u) const {
    return map2(comul(iB(u)), [&](const Vec& x) { return piB(x); }, nb,
                [&](const Vec& x) { return piB(x); }, nb);
  }
  Vec DeltaA(const Vec& u) const {
    return map2(comul(iA(u)), [&](const Vec& x) { return piA(x); }, na,
                [&](const Vec& x) { return piA(x); }, na);
  }

  Cyclotomic astar_of(const Vec& a) const {
    Cyclotomic s(co.astar_order);
    for (int k = 0; k < na; ++k)
      if (a[k] != 0) s += Cyclotomic::root_power(co.astar_order, co.astar[k]) * a[k];
    return s;
  }

  // Delta_{a*}(x) = sum x_(1) a*(pi_A(x_(2)))
  CVec delta_astar(const Vec& x) const {
    CVec out(D, Cyclotomic(co.astar_order));
    Vec t = comul(x);
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        int64_t v = t[a * D + b];
        if (v == 0) continue;
        out[a] += astar_of(piA(e(b))) * v;
      }
    return out;
  }

  CVec lift(const Vec& v) const {
    CVec out;
    for (auto c : v) out.push_back(Cyclotomic::integer(co.astar_order, c));
    return out;
  }

  std::string label(int i) const { return h.basis_labels[i]; }
  std::string labelB(int k) const { return sub_label(in.i_b_matrix, k, "B"); }
  std::string labelA(int k) const { return sub_label(co.i_a_matrix, k, "A"); }

  std::string sub_label(const IntMat& inc, int k, const std::string& tag) const {
    int hit = -1;
    for (int i = 0; i < D; ++i) {
      if (inc[i][k] == 0) continue;
      if (hit != -1 || inc[i][k] != 1) return tag + "[" + std::to_string(k) + "]";
      hit = i;
    }
    return hit < 0 ? tag + "[" + std::to_string(k) + "]" : label(hit);
  }
};

using Witness = std::optional<std::string>;

std::string tuple_label(std::initializer_list<std::string> parts) {
  std::string s = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) s += ", ";
    s += p;
    first = false;
  }
  return s + ")";
}

Vec scale(Vec v, int64_t c) {
  for (auto& x : v) x *= c;
  return v;
}

Vec add(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

AxiomReport check_axioms(const HopfPackage& pkg) {
  AxiomReport rep;
  Checker K(pkg);
  const int D = K.D;
  const int nb = K.nb, na = K.na;
  const auto& in = pkg.integral;
  const auto& co = pkg.cointegral;
  auto run = [&](const std::string& name, const std::function<Witness()>& body) {
    Witness w;
    try {
      w = body();
    } catch (const std::exception& ex) {
      w = std::string("exception: ") + ex.what();
    }
    rep.results.push_back({name, !w.has_value(), w.value_or("")});
  };

  run("multiplication is even", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        for (auto [k, c] : K.mulS[i][j])
          if (K.par(k) != (K.par(i) ^ K.par(j))) return tuple_label({K.label(i), K.label(j)});
    return std::nullopt;
  });
  run("comultiplication is even", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      for (auto [a, b, c] : K.comS[i])
        if ((K.par(a) ^ K.par(b)) != K.par(i)) return K.label(i);
    return std::nullopt;
  });
  run("antipode is even", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      for (auto [j, c] : K.antS[i])
        if (K.par(i) != K.par(j)) return K.label(i);
    return std::nullopt;
  });
  run("counit vanishes on odd elements", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      if (K.par(i) == 1 && pkg.algebra.counit_vec[i] != 0) return K.label(i);
    return std::nullopt;
  });
  run("unit is even", [&]() -> Witness {
    if (K.par(pkg.algebra.unit_index) != 0) return K.label(pkg.algebra.unit_index);
    return std::nullopt;
  });
  run("associativity", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        for (int k = 0; k < D; ++k)
          if (K.mul(K.mul(K.e(i), K.e(j)), K.e(k)) != K.mul(K.e(i), K.mul(K.e(j), K.e(k))))
            return tuple_label({K.label(i), K.label(j), K.label(k)});
    return std::nullopt;
  });
  run("unitality", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      if (K.mul(K.one(), K.e(i)) != K.e(i) || K.mul(K.e(i), K.one()) != K.e(i)) return K.label(i);
    return std::nullopt;
  });
  run("coassociativity", [&]() -> Witness {
    for (int i = 0; i < D; ++i) {
      Vec left(D * D * D, 0), right(D * D * D, 0);
      for (auto [a, b, c] : K.comS[i]) {
        for (auto [a1, a2, c1] : K.comS[a]) left[(a1 * D + a2) * D + b] += c * c1;
        for (auto [b1, b2, c2] : K.comS[b]) right[(a * D + b1) * D + b2] += c * c2;
      }
      if (left != right) return K.label(i);
    }
    return std::nullopt;
  });
  run("counitality", [&]() -> Witness {
    for (int i = 0; i < D; ++i) {
      Vec l(D, 0), r(D, 0);
      for (auto [a, b, c] : K.comS[i]) {
        l[b] += c * pkg.algebra.counit_vec[a];
        r[a] += c * pkg.algebra.counit_vec[b];
      }
      if (l != K.e(i) || r != K.e(i)) return K.label(i);
    }
    return std::nullopt;
  });
  run("bialgebra compatibility", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        if (K.comul(K.mul(K.e(i), K.e(j))) != K.mul2(K.comul(K.e(i)), K.comul(K.e(j))))
          return tuple_label({K.label(i), K.label(j)});
    return std::nullopt;
  });
  run("counit is multiplicative", [&]() -> Witness {
    if (K.eps(K.one()) != 1) return K.label(pkg.algebra.unit_index);
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        if (K.eps(K.mul(K.e(i), K.e(j))) != K.eps(K.e(i)) * K.eps(K.e(j)))
          return tuple_label({K.label(i), K.label(j)});
    return std::nullopt;
  });
  run("unit is group-like", [&]() -> Witness {
    Vec want(D * D, 0);
    want[pkg.algebra.unit_index * D + pkg.algebra.unit_index] = 1;
    if (K.comul(K.one()) != want) return K.label(pkg.algebra.unit_index);
    return std::nullopt;
  });
  run("antipode axiom", [&]() -> Witness {
    for (int i = 0; i < D; ++i) {
      Vec l(D, 0), r(D, 0);
      for (auto [a, b, c] : K.comS[i]) {
        l = add(l, scale(K.mul(K.S(K.e(a)), K.e(b)), c));
        r = add(r, scale(K.mul(K.e(a), K.S(K.e(b))), c));
      }
      Vec want = scale(K.one(), K.eps(K.e(i)));
      if (l != want || r != want) return K.label(i);
    }
    return std::nullopt;
  });
  run("antipode is involutive", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      if (K.S(K.S(K.e(i))) != K.e(i)) return K.label(i);
    return std::nullopt;
  });

  // Relative integral.
  run("integral: pi_B o i_B = id", [&]() -> Witness {
    for (int k = 0; k < nb; ++k)
      if (K.piB(K.iB(basis_vector(nb, k))) != basis_vector(nb, k)) return K.labelB(k);
    return std::nullopt;
  });
  run("integral: i_B(B) is central", [&]() -> Witness {
    for (int k = 0; k < nb; ++k) {
      Vec u = K.iB(basis_vector(nb, k));
      for (int i = 0; i < D; ++i) {
        int64_t s = (K.parB[k] & K.par(i)) ? -1 : 1;
        if (K.mul(u, K.e(i)) != scale(K.mul(K.e(i), u), s)) return tuple_label({K.labelB(k), K.label(i)});
      }
    }
    return std::nullopt;
  });
  run("integral: i_B is a Hopf map", [&]() -> Witness {
    if (K.iB(K.unitB()) != K.one()) return std::string("unit");
    for (int k = 0; k < nb; ++k) {
      Vec u = basis_vector(nb, k);
      for (int l = 0; l < nb; ++l) {
        Vec v = basis_vector(nb, l);
        if (K.iB(K.mB(u, v)) != K.mul(K.iB(u), K.iB(v))) return tuple_label({K.labelB(k), K.labelB(l)});
      }
      Vec lhs = K.comul(K.iB(u));
      Vec rhs = K.map2(lhs, [&](const Vec& x) { return K.iB(K.piB(x)); }, D,
                       [&](const Vec& x) { return K.iB(K.piB(x)); }, D);
      if (lhs != rhs) return K.labelB(k);
    }
    return std::nullopt;
  });
  run("integral: pi_B is a Hopf map", [&]() -> Witness {
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j)
        if (K.piB(K.mul(K.e(i), K.e(j))) != K.mB(K.piB(K.e(i)), K.piB(K.e(j))))
          return tuple_label({K.label(i), K.label(j)});
      Vec lhs = K.map2(K.comul(K.e(i)), [&](const Vec& x) { return K.piB(x); }, nb,
                       [&](const Vec& x) { return K.piB(x); }, nb);
      if (lhs != K.DeltaB(K.piB(K.e(i)))) return K.label(i);
      if (K.epsB(K.piB(K.e(i))) != K.eps(K.e(i))) return K.label(i);
    }
    return std::nullopt;
  });
  run("integral: mu is homogeneous", [&]() -> Witness {
    for (int k = 0; k < nb; ++k)
      for (int i = 0; i < D; ++i)
        if (in.mu_matrix[k][i] != 0 && K.parB[k] != (K.par(i) ^ in.mu_parity)) return K.label(i);
    return std::nullopt;
  });
  run("integral: mu is B-linear", [&]() -> Witness {
    for (int k = 0; k < nb; ++k) {
      Vec u = basis_vector(nb, k);
      for (int i = 0; i < D; ++i) {
        int64_t s = (in.mu_parity & K.parB[k]) ? -1 : 1;
        if (K.mu(K.mul(K.iB(u), K.e(i))) != scale(K.mB(u, K.mu(K.e(i))), s))
          return tuple_label({K.labelB(k), K.label(i)});
      }
    }
    return std::nullopt;
  });
  run("integral: relative integral relation", [&]() -> Witness {
    for (int i = 0; i < D; ++i) {
      Vec lhs = K.map2(K.comul(K.e(i)), [&](const Vec& x) { return K.mu(x); }, nb,
                       [&](const Vec& x) { return x; }, D);
      Vec db = K.DeltaB(K.mu(K.e(i)));
      Vec rhs(nb * D, 0);
      for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
          int64_t v = db[a * nb + b];
          if (v == 0) continue;
          Vec ib = K.iB(basis_vector(nb, b));
          for (int j = 0; j < D; ++j) rhs[a * D + j] += v * ib[j];
        }
      if (lhs != rhs) return K.label(i);
    }
    return std::nullopt;
  });

  // Relative cointegral.
  run("cointegral: pi_A o i_A = id", [&]() -> Witness {
    for (int k = 0; k < na; ++k)
      if (K.piA(K.iA(basis_vector(na, k))) != basis_vector(na, k)) return K.labelA(k);
    return std::nullopt;
  });
  run("cointegral: pi_A is cocentral", [&]() -> Witness {
    auto pa = [&](const Vec& x) { return K.piA(x); };
    auto id = [](const Vec& x) { return x; };
    for (int i = 0; i < D; ++i) {
      Vec t = K.comul(K.e(i));
      if (K.map2(t, pa, na, id, D) != K.map2(K.tau(t), pa, na, id, D)) return K.label(i);
    }
    return std::nullopt;
  });
  run("cointegral: i_A is a Hopf map", [&]() -> Witness {
    if (K.iA(K.unitA()) != K.one()) return std::string("unit");
    for (int k = 0; k < na; ++k) {
      Vec u = basis_vector(na, k);
      for (int l = 0; l < na; ++l) {
        Vec v = basis_vector(na, l);
        if (K.iA(K.mA(u, v)) != K.mul(K.iA(u), K.iA(v))) return tuple_label({K.labelA(k), K.labelA(l)});
      }
      Vec lhs = K.comul(K.iA(u));
      Vec rhs = K.map2(lhs, [&](const Vec& x) { return K.iA(K.piA(x)); }, D,
                       [&](const Vec& x) { return K.iA(K.piA(x)); }, D);
      if (lhs != rhs) return K.labelA(k);
    }
    return std::nullopt;
  });
  run("cointegral: pi_A is a Hopf map", [&]() -> Witness {
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < D; ++j)
        if (K.piA(K.mul(K.e(i), K.e(j))) != K.mA(K.piA(K.e(i)), K.piA(K.e(j))))
          return tuple_label({K.label(i), K.label(j)});
      Vec lhs = K.map2(K.comul(K.e(i)), [&](const Vec& x) { return K.piA(x); }, na,
                       [&](const Vec& x) { return K.piA(x); }, na);
      if (lhs != K.DeltaA(K.piA(K.e(i)))) return K.label(i);
      if (K.epsA(K.piA(K.e(i))) != K.eps(K.e(i))) return K.label(i);
    }
    return std::nullopt;
  });
  run("cointegral: iota is homogeneous", [&]() -> Witness {
    for (int k = 0; k < na; ++k)
      for (int i = 0; i < D; ++i)
        if (co.iota_matrix[i][k] != 0 && K.par(i) != (K.parA[k] ^ co.iota_parity)) return K.labelA(k);
    return std::nullopt;
  });
  run("cointegral: iota is A-colinear", [&]() -> Witness {
    for (int k = 0; k < na; ++k) {
      Vec u = basis_vector(na, k);
      Vec lhs = K.map2(K.comul(K.iota(u)), [&](const Vec& x) { return K.piA(x); }, na,
                       [](const Vec& x) { return x; }, D);
      Vec da = K.DeltaA(u);
      Vec rhs(na * D, 0);
      for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
          int64_t v = da[a * na + b];
          if (v == 0) continue;
          int64_t s = (co.iota_parity & K.parA[a]) ? -1 : 1;
          Vec ib = K.iota(basis_vector(na, b));
          for (int j = 0; j < D; ++j) rhs[a * D + j] += s * v * ib[j];
        }
      if (lhs != rhs) return K.labelA(k);
    }
    return std::nullopt;
  });
  run("cointegral: relative cointegral relation", [&]() -> Witness {
    for (int k = 0; k < na; ++k) {
      Vec u = basis_vector(na, k);
      for (int i = 0; i < D; ++i)
        if (K.mul(K.iota(u), K.e(i)) != K.iota(K.mA(u, K.piA(K.e(i)))))
          return tuple_label({K.labelA(k), K.label(i)});
    }
    return std::nullopt;
  });

  // Distinguished group-likes.
  run("b is group-like in B", [&]() -> Witness {
    const Vec& b = in.glike_b;
    Vec bb(nb * nb, 0);
    for (int a = 0; a < nb; ++a)
      for (int c = 0; c < nb; ++c) bb[a * nb + c] = b[a] * b[c];
    if (K.DeltaB(b) != bb || K.epsB(b) != 1) return std::string("b");
    return std::nullopt;
  });
  run("b has the declared order", [&]() -> Witness {
    Vec acc = K.unitB();
    for (int j = 0; j < in.glike_b_order; ++j) acc = K.mB(acc, in.glike_b);
    if (acc != K.unitB()) return std::string("b^") + std::to_string(in.glike_b_order);
    return std::nullopt;
  });
  run("B basis is the powers of b", [&]() -> Witness {
    if (static_cast<int>(in.b_powers.size()) != nb) return std::string("b_powers size");
    for (int k = 0; k < nb; ++k) {
      Vec acc = K.unitB();
      for (int j = 0; j < in.b_powers[k]; ++j) acc = K.mB(acc, in.glike_b);
      if (acc != basis_vector(nb, k)) return K.labelB(k);
    }
    return std::nullopt;
  });
  run("a* is a character of A", [&]() -> Witness {
    if (static_cast<int>(co.astar.size()) != na) return std::string("astar size");
    if (K.astar_of(K.unitA()) != Cyclotomic::integer(co.astar_order, 1)) return std::string("unit");
    for (int k = 0; k < na; ++k)
      for (int l = 0; l < na; ++l) {
        Vec u = basis_vector(na, k), v = basis_vector(na, l);
        if (K.astar_of(K.mA(u, v)) != K.astar_of(u) * K.astar_of(v))
          return tuple_label({K.labelA(k), K.labelA(l)});
      }
    return std::nullopt;
  });
  run("degree of mu equals degree of iota", [&]() -> Witness {
    if (in.mu_parity != co.iota_parity) return std::string("mu/iota");
    return std::nullopt;
  });

  // Compatibility conditions.
  run("compatibility (1)", [&]() -> Witness {
    Vec b = K.iB(in.glike_b);
    int64_t s = in.mu_parity ? -1 : 1;
    for (int i = 0; i < D; ++i)
      if (K.mu(K.mul(b, K.e(i))) != scale(K.SB(K.mu(K.S(K.e(i)))), s)) return K.label(i);
    return std::nullopt;
  });
  run("compatibility (2)", [&]() -> Witness {
    int64_t s = co.iota_parity ? -1 : 1;
    for (int k = 0; k < na; ++k) {
      Vec u = basis_vector(na, k);
      CVec lhs = K.delta_astar(K.iota(u));
      CVec rhs = K.lift(scale(K.S(K.iota(K.SA(u))), s));
      if (lhs != rhs) return K.labelA(k);
    }
    return std::nullopt;
  });
  run("compatibility (3)", [&]() -> Witness {
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        int64_t s = (K.par(i) & K.par(j)) ? -1 : 1;
        CVec lhs = K.lift(scale(K.mu(K.mul(K.e(j), K.e(i))), s));
        CVec dj = K.delta_astar(K.e(j));
        CVec rhs(nb, Cyclotomic(co.astar_order));
        for (int c = 0; c < D; ++c) {
          if (dj[c].is_zero()) continue;
          Vec m = K.mu(K.mul(K.e(i), K.e(c)));
          for (int k = 0; k < nb; ++k)
            if (m[k] != 0) rhs[k] += dj[c] * m[k];
        }
        if (lhs != rhs) return tuple_label({K.label(i), K.label(j)});
      }
    return std::nullopt;
  });
  run("compatibility (4)", [&]() -> Witness {
    Vec b = K.iB(in.glike_b);
    for (int k = 0; k < na; ++k) {
      Vec t = K.comul(K.iota(basis_vector(na, k)));
      Vec oneb(D * D, 0);
      for (int j = 0; j < D; ++j) oneb[pkg.algebra.unit_index * D + j] = b[j];
      Vec rhs = K.mul2(oneb, t);
      if (K.tau(t) != rhs) return K.labelA(k);
    }
    return std::nullopt;
  });
  run("compatibility (5)", [&]() -> Witness {
    for (int k = 0; k < na; ++k) {
      Vec u = basis_vector(na, k);
      if (K.piB(K.iA(u)) != scale(K.unitB(), K.epsA(u))) return K.labelA(k);
    }
    return std::nullopt;
  });
  run("compatibility (6)", [&]() -> Witness {
    int64_t v = K.epsB(K.mu(K.iota(K.unitA())));
    if (v * co.iota_num != co.iota_den) return "value " + std::to_string(v);
    return std::nullopt;
  });

  // Handleslide identities: m_H(f1(a) (x) -)(Delta f2(a')) = (f1 (x) f2)(m_A (x) id)(a (x) Delta_A a').
  struct Side {
    std::function<Vec(const Vec&)> f;
    int parity;
  };
  Side iota_side{[&](const Vec& u) { return K.iota(u); }, co.iota_parity};
  Side ia_side{[&](const Vec& u) { return K.iA(u); }, 0};
  auto hslide = [&](const std::string& name, const Side& f1, const Side& f2) {
    run(name, [&]() -> Witness {
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < na; ++l) {
          Vec a1 = basis_vector(na, k), a2 = basis_vector(na, l);
          Vec x = f1.f(a1);
          Vec t = K.comul(f2.f(a2));
          Vec lhs(D * D, 0);
          for (int y1 = 0; y1 < D; ++y1)
            for (int y2 = 0; y2 < D; ++y2) {
              int64_t v = t[y1 * D + y2];
              if (v == 0) continue;
              Vec m = K.mul(x, K.e(y1));
              for (int j = 0; j < D; ++j)
                if (m[j] != 0) lhs[j * D + y2] += v * m[j];
            }
          Vec da = K.DeltaA(a2);
          Vec rhs(D * D, 0);
          for (int p = 0; p < na; ++p)
            for (int q = 0; q < na; ++q) {
              int64_t v = da[p * na + q];
              if (v == 0) continue;
              Vec left = K.mA(a1, basis_vector(na, p));
              int lp = (K.parA[k] + K.parA[p]) & 1;
              int64_t s = (f2.parity & lp) ? -1 : 1;
              Vec fl = f1.f(left), fr = f2.f(basis_vector(na, q));
              for (int i = 0; i < D; ++i) {
                if (fl[i] == 0) continue;
                for (int j = 0; j < D; ++j) rhs[i * D + j] += s * v * fl[i] * fr[j];
              }
            }
          if (lhs != rhs) return tuple_label({K.labelA(k), K.labelA(l)});
        }
      return std::nullopt;
    });
  };
  hslide("handleslide (iota, iota)", iota_side, iota_side);
  hslide("handleslide (iota, i_A)", iota_side, ia_side);
  hslide("handleslide (i_A, i_A)", ia_side, ia_side);
  return rep;
}

}  // namespace suturant
