#include "suturant/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "suturant/errors.hpp"

namespace suturant {

const Crossing& ExtendedDiagram::crossing(const std::string& id) const {
  for (const auto& c : crossings)
    if (c.id == id) return c;
  throw Error("UnknownCrossing", id);
}

Crossing& ExtendedDiagram::crossing(const std::string& id) {
  for (auto& c : crossings)
    if (c.id == id) return c;
  throw Error("UnknownCrossing", id);
}

const Curve& ExtendedDiagram::curve(const std::string& id) const {
  for (const auto& c : curves)
    if (c.id == id) return c;
  throw Error("UnknownCurve", id);
}

Curve& ExtendedDiagram::curve(const std::string& id) {
  for (auto& c : curves)
    if (c.id == id) return c;
  throw Error("UnknownCurve", id);
}

bool ExtendedDiagram::has_curve(const std::string& id) const {
  for (const auto& c : curves)
    if (c.id == id) return true;
  return false;
}

bool ExtendedDiagram::has_crossing(const std::string& id) const {
  for (const auto& c : crossings)
    if (c.id == id) return true;
  return false;
}

std::vector<const Curve*> ExtendedDiagram::family(Family f) const {
  std::vector<const Curve*> out;
  for (const auto& c : curves)
    if (c.family == f) out.push_back(&c);
  return out;
}

std::vector<const Curve*> ExtendedDiagram::closed(Family f) const {
  std::vector<const Curve*> out;
  for (const auto& c : curves)
    if (c.family == f && c.topology == Topology::Closed) out.push_back(&c);
  return out;
}

std::vector<const Curve*> ExtendedDiagram::arcs(Family f) const {
  std::vector<const Curve*> out;
  for (const auto& c : curves)
    if (c.family == f && c.topology == Topology::Arc) out.push_back(&c);
  return out;
}

int ExtendedDiagram::d() const { return static_cast<int>(closed(Family::Alpha).size()); }

int ExtendedDiagram::closed_index(const std::string& id) const {
  const Curve& c = curve(id);
  if (c.topology != Topology::Closed) return -1;
  auto list = closed(c.family);
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i]->id == id) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> Multipoint::sorted_picks() const {
  auto s = picks;
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw Error("SyntaxError", "line " + std::to_string(line) + ": " + msg);
}

const char* family_name(Family f) { return f == Family::Alpha ? "alpha" : "beta"; }

}  // namespace

ExtendedDiagram parse_diagram(const std::string& text) {
  ExtendedDiagram diag;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  std::map<std::string, int> curve_line, crossing_line, mp_line, order_line;
  std::vector<std::pair<std::string, int>> order_refs;
  bool named = false;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "diagram") {
      if (tok.size() < 2) syntax(lineno, "diagram needs a name");
      if (named) syntax(lineno, "second diagram line");
      named = true;
      diag.name = tok[1];
      for (size_t i = 2; i < tok.size(); ++i) diag.name += " " + tok[i];
    } else if (kw == "alpha" || kw == "beta") {
      if (tok.size() != 3) syntax(lineno, kw + " needs <id> closed|arc");
      if (tok[2] != "closed" && tok[2] != "arc") syntax(lineno, "expected closed or arc, got '" + tok[2] + "'");
      if (curve_line.count(tok[1])) throw Error("DuplicateId", "line " + std::to_string(lineno) + ": curve " + tok[1]);
      curve_line[tok[1]] = lineno;
      Curve c;
      c.id = tok[1];
      c.family = kw == "alpha" ? Family::Alpha : Family::Beta;
      c.topology = tok[2] == "closed" ? Topology::Closed : Topology::Arc;
      diag.curves.push_back(c);
    } else if (kw == "crossing") {
      if (tok.size() != 5) syntax(lineno, "crossing needs <id> <alpha> <beta> +|-");
      if (tok[4] != "+" && tok[4] != "-") syntax(lineno, "crossing sign must be + or -");
      if (crossing_line.count(tok[1]))
        throw Error("DuplicateId", "line " + std::to_string(lineno) + ": crossing " + tok[1]);
      crossing_line[tok[1]] = lineno;
      diag.crossings.push_back({tok[1], tok[2], tok[3], tok[4] == "+" ? 1 : -1});
    } else if (kw == "order") {
      if (tok.size() < 4 || (tok[1] != "alpha" && tok[1] != "beta") || tok[3] != ":")
        syntax(lineno, "order needs alpha|beta <id> : <crossings>");
      auto it = curve_line.find(tok[2]);
      if (it == curve_line.end()) syntax(lineno, "order for undeclared curve " + tok[2]);
      Curve& c = diag.curve(tok[2]);
      if (family_name(c.family) != tok[1]) syntax(lineno, tok[2] + " is not a " + tok[1] + " curve");
      if (order_line.count(tok[2])) syntax(lineno, "second order line for " + tok[2]);
      order_line[tok[2]] = lineno;
      for (size_t i = 4; i < tok.size(); ++i) {
        c.order.push_back(tok[i]);
        order_refs.push_back({tok[i], lineno});
      }
    } else if (kw == "multipoint") {
      if (tok.size() < 3 || tok[2] != ":") syntax(lineno, "multipoint needs <name> : <crossings>");
      if (mp_line.count(tok[1]))
        throw Error("DuplicateId", "line " + std::to_string(lineno) + ": multipoint " + tok[1]);
      mp_line[tok[1]] = lineno;
      NamedMultipoint m{tok[1], {tok.begin() + 3, tok.end()}};
      for (const auto& p : m.picks) order_refs.push_back({p, lineno});
      diag.multipoints.push_back(m);
    } else {
      syntax(lineno, "unknown keyword '" + kw + "'");
    }
  }
  for (const auto& x : diag.crossings) {
    int ln = crossing_line[x.id];
    auto a = curve_line.find(x.alpha);
    if (a == curve_line.end()) syntax(ln, "crossing " + x.id + " references missing curve " + x.alpha);
    if (diag.curve(x.alpha).family != Family::Alpha) syntax(ln, x.alpha + " is not an alpha curve");
    auto b = curve_line.find(x.beta);
    if (b == curve_line.end()) syntax(ln, "crossing " + x.id + " references missing curve " + x.beta);
    if (diag.curve(x.beta).family != Family::Beta) syntax(ln, x.beta + " is not a beta curve");
  }
  for (const auto& [id, ln] : order_refs)
    if (!crossing_line.count(id)) syntax(ln, "unknown crossing " + id);
  return diag;
}

ExtendedDiagram load_diagram(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("IOError", "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

std::string serialize_diagram(const ExtendedDiagram& diag) {
  std::ostringstream os;
  os << "diagram " << diag.name << "\n";
  for (const auto& c : diag.curves)
    os << family_name(c.family) << " " << c.id << " " << (c.topology == Topology::Closed ? "closed" : "arc")
       << "\n";
  for (const auto& x : diag.crossings)
    os << "crossing " << x.id << " " << x.alpha << " " << x.beta << " " << (x.sign > 0 ? "+" : "-") << "\n";
  for (const auto& c : diag.curves) {
    os << "order " << family_name(c.family) << " " << c.id << " :";
    for (const auto& x : c.order) os << " " << x;
    os << "\n";
  }
  for (const auto& m : diag.multipoints) {
    os << "multipoint " << m.name << " :";
    for (const auto& p : m.picks) os << " " << p;
    os << "\n";
  }
  return os.str();
}

Report validate(const ExtendedDiagram& diag) {
  Report rep;
  auto& v = rep.violations;
  std::set<std::string> ids;
  for (const auto& c : diag.curves)
    if (!ids.insert(c.id).second) v.push_back("DuplicateId: curve " + c.id);
  std::set<std::string> xids;
  for (const auto& x : diag.crossings) {
    if (!xids.insert(x.id).second) v.push_back("DuplicateId: crossing " + x.id);
    if (x.sign != 1 && x.sign != -1) v.push_back("BadSign: crossing " + x.id);
    if (!diag.has_curve(x.alpha) || diag.curve(x.alpha).family != Family::Alpha)
      v.push_back("UnknownCurve: crossing " + x.id + " alpha " + x.alpha);
    if (!diag.has_curve(x.beta) || diag.curve(x.beta).family != Family::Beta)
      v.push_back("UnknownCurve: crossing " + x.id + " beta " + x.beta);
  }
  size_t ca = diag.closed(Family::Alpha).size(), cb = diag.closed(Family::Beta).size();
  if (ca != cb)
    v.push_back("Unbalanced: " + std::to_string(ca) + " closed alpha curves, " + std::to_string(cb) +
                " closed beta curves");
  for (Family f : {Family::Alpha, Family::Beta}) {
    const Curve* seen_arc = nullptr;
    for (const Curve* c : diag.family(f)) {
      if (c->topology == Topology::Arc && !seen_arc) seen_arc = c;
      if (c->topology == Topology::Closed && seen_arc)
        v.push_back(std::string("Ordering: ") + family_name(f) + " arc " + seen_arc->id + " precedes closed " +
                    c->id);
    }
  }
  std::map<std::string, int> in_alpha, in_beta;
  for (const auto& c : diag.curves) {
    std::set<std::string> local;
    for (const auto& x : c.order) {
      if (!local.insert(x).second) v.push_back("DoubleUse: crossing " + x + " repeated on " + c.id);
      if (!diag.has_crossing(x)) {
        v.push_back("UnknownCrossing: " + x + " on " + c.id);
        continue;
      }
      const Crossing& cr = diag.crossing(x);
      const std::string& owner = c.family == Family::Alpha ? cr.alpha : cr.beta;
      if (owner != c.id) v.push_back("Mismatch: crossing " + x + " listed on " + c.id + " but belongs to " + owner);
      (c.family == Family::Alpha ? in_alpha : in_beta)[x]++;
    }
  }
  for (const auto& x : diag.crossings) {
    for (auto [tbl, fam] : {std::pair{&in_alpha, "alpha"}, std::pair{&in_beta, "beta"}}) {
      int n = tbl->count(x.id) ? tbl->at(x.id) : 0;
      if (n == 0) v.push_back(std::string("Unlisted: crossing ") + x.id + " in no " + fam + " order");
      if (n > 1)
        v.push_back(std::string("DoubleUse: crossing ") + x.id + " listed " + std::to_string(n) + " times in " +
                    fam + " orders");
    }
  }
  if (v.empty()) {
    for (const auto& m : diag.multipoints) {
      try {
        make_multipoint(diag, m.picks);
      } catch (const Error& e) {
        v.push_back("InvalidMultipoint: " + m.name + ": " + e.what());
      }
    }
  }
  return rep;
}

Multipoint make_multipoint(const ExtendedDiagram& diag, const std::vector<std::string>& picks) {
  const int d = diag.d();
  if (static_cast<int>(picks.size()) != d)
    throw Error("InvalidMultipoint", "expected " + std::to_string(d) + " picks, got " + std::to_string(picks.size()));
  Multipoint m;
  m.picks.assign(d, "");
  m.sigma.assign(d, -1);
  std::vector<bool> used_beta(d, false);
  for (const auto& p : picks) {
    if (!diag.has_crossing(p)) throw Error("InvalidMultipoint", "unknown crossing " + p);
    const Crossing& x = diag.crossing(p);
    int i = diag.closed_index(x.alpha), j = diag.closed_index(x.beta);
    if (i < 0 || j < 0) throw Error("InvalidMultipoint", "pick " + p + " is not on closed curves");
    if (!m.picks[i].empty()) throw Error("InvalidMultipoint", "two picks on " + x.alpha);
    if (used_beta[j]) throw Error("InvalidMultipoint", "two picks on " + x.beta);
    m.picks[i] = p;
    m.sigma[i] = j;
    used_beta[j] = true;
  }
  return m;
}

std::vector<Multipoint> enumerate_multipoints(const ExtendedDiagram& diag) {
  auto ca = diag.closed(Family::Alpha);
  const int d = static_cast<int>(ca.size());
  std::vector<std::vector<std::pair<std::string, int>>> options(d);
  for (int i = 0; i < d; ++i)
    for (const auto& x : ca[i]->order) {
      int j = diag.closed_index(diag.crossing(x).beta);
      if (j >= 0) options[i].push_back({x, j});
    }
  std::vector<Multipoint> out;
  Multipoint cur;
  cur.picks.assign(d, "");
  cur.sigma.assign(d, -1);
  std::vector<bool> used(d, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      out.push_back(cur);
      return;
    }
    for (const auto& [x, j] : options[i]) {
      if (used[j]) continue;
      used[j] = true;
      cur.picks[i] = x;
      cur.sigma[i] = j;
      rec(i + 1);
      used[j] = false;
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(),
                   [](const Multipoint& a, const Multipoint& b) { return a.sorted_picks() < b.sorted_picks(); });
  return out;
}

Multipoint named_multipoint(const ExtendedDiagram& diag, const std::string& name) {
  for (const auto& m : diag.multipoints)
    if (m.name == name) return make_multipoint(diag, m.picks);
  throw Error("InvalidMultipoint", "no multipoint named " + name);
}

namespace {

int position_of(const Curve& c, const std::string& x) {
  for (size_t i = 0; i < c.order.size(); ++i)
    if (c.order[i] == x) return static_cast<int>(i);
  throw Error("InvalidMultipoint", "crossing " + x + " not on " + c.id);
}

// Gap index of the basepoint attached to x: before x when positive, after x when negative.
int gap_of(const ExtendedDiagram& diag, const Curve& c, const std::string& x) {
  int pos = position_of(c, x);
  return diag.crossing(x).sign > 0 ? pos : pos + 1;
}

void rotate_to(Curve& c, int gap) {
  if (c.order.empty()) return;
  int k = static_cast<int>(c.order.size());
  gap %= k;
  std::rotate(c.order.begin(), c.order.begin() + gap, c.order.end());
}

}  // namespace

ExtendedDiagram rebase(const ExtendedDiagram& diag, const Multipoint& x) {
  make_multipoint(diag, x.picks);
  ExtendedDiagram out = diag;
  for (const auto& p : x.picks) {
    const Crossing& cr = diag.crossing(p);
    for (const std::string& cid : {cr.alpha, cr.beta}) {
      Curve& c = out.curve(cid);
      rotate_to(c, gap_of(diag, diag.curve(cid), p));
    }
  }
  return out;
}

FreeWord alpha_word(const ExtendedDiagram& diag, const std::string& alpha_id) {
  if (!diag.has_curve(alpha_id) || diag.curve(alpha_id).family != Family::Alpha)
    throw Error("UnknownCurve", alpha_id + " is not an alpha curve");
  FreeWord w;
  for (const auto& x : diag.curve(alpha_id).order) {
    const Crossing& c = diag.crossing(x);
    w.push_back({c.beta, c.sign});
  }
  return w;
}

FreeWord epsilon_class(const ExtendedDiagram& diag, const Multipoint& x, const Multipoint& y) {
  Multipoint mx = make_multipoint(diag, x.picks), my = make_multipoint(diag, y.picks);
  auto ca = diag.closed(Family::Alpha);
  FreeWord w;
  for (size_t i = 0; i < ca.size(); ++i) {
    const Curve& c = *ca[i];
    int k = static_cast<int>(c.order.size());
    int gx = gap_of(diag, c, mx.picks[i]) % k, gy = gap_of(diag, c, my.picks[i]) % k;
    int len = ((gy - gx) % k + k) % k;
    for (int t = 0; t < len; ++t) {
      const Crossing& cr = diag.crossing(c.order[(gx + t) % k]);
      w.push_back({cr.beta, cr.sign});
    }
  }
  return w;
}

int multipoint_sign(const ExtendedDiagram& diag, const Multipoint& x) {
  Multipoint m = make_multipoint(diag, x.picks);
  int s = 1;
  for (const auto& p : m.picks) s *= diag.crossing(p).sign;
  for (size_t i = 0; i < m.sigma.size(); ++i)
    for (size_t j = i + 1; j < m.sigma.size(); ++j)
      if (m.sigma[i] > m.sigma[j]) s = -s;
  return s;
}

std::vector<std::vector<long long>> intersection_matrix(const ExtendedDiagram& diag) {
  const int d = diag.d();
  std::vector<std::vector<long long>> m(d, std::vector<long long>(d, 0));
  for (const auto& x : diag.crossings) {
    int i = diag.closed_index(x.alpha), j = diag.closed_index(x.beta);
    if (i >= 0 && j >= 0) m[i][j] += x.sign;
  }
  return m;
}

std::optional<int> canonical_sign(const ExtendedDiagram& diag) {
  auto m = intersection_matrix(diag);
  const int d = static_cast<int>(m.size());
  std::vector<__int128> minor(size_t(1) << d, 0);
  minor[0] = 1;
  for (size_t mask = 1; mask < minor.size(); ++mask) {
    int row = __builtin_popcountll(mask) - 1;
    __int128 acc = 0;
    int above = 0;
    for (int j = d - 1; j >= 0; --j) {
      if (!(mask >> j & 1)) continue;
      __int128 term = m[row][j] * minor[mask & ~(size_t(1) << j)];
      acc += (above % 2 == 0) ? term : -term;
      ++above;
    }
    minor[mask] = acc;
  }
  __int128 det = minor.back();
  if (det == 0) return std::nullopt;
  return det > 0 ? 1 : -1;
}

FreeWord parse_word(const std::string& text) {
  std::string t = text;
  for (auto& ch : t)
    if (ch == '*' || ch == '.' || ch == ',') ch = ' ';
  FreeWord w;
  for (const auto& tok : tokenize(t)) {
    if (tok == "1") continue;
    auto caret = tok.find('^');
    std::string gen = tok.substr(0, caret);
    long long e = 1;
    if (caret != std::string::npos) {
      try {
        size_t used = 0;
        e = std::stoll(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error("SyntaxError", "bad exponent in '" + tok + "'");
      }
    }
    if (gen.empty()) throw Error("SyntaxError", "empty generator in '" + tok + "'");
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) w.push_back({gen, e < 0 ? -1 : 1});
  }
  return w;
}

std::string word_str(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w[i].gen;
    if (w[i].exp != 1) s += "^" + std::to_string(w[i].exp);
  }
  return s;
}

FreeWord inverse(const FreeWord& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (auto& l : r) l.exp = -l.exp;
  return r;
}

}  // namespace suturant
