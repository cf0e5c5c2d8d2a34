#include "suturant/moves.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "suturant/errors.hpp"

namespace suturant {

namespace {

[[noreturn]] void illegal(const std::string& why) { throw Error("IllegalMove", why); }

std::string fresh(const std::set<std::string>& taken, const std::string& prefix) {
  for (int i = 1;; ++i) {
    std::string id = prefix + std::to_string(i);
    if (!taken.count(id)) return id;
  }
}

std::set<std::string> curve_ids(const ExtendedDiagram& d) {
  std::set<std::string> s;
  for (const auto& c : d.curves) s.insert(c.id);
  return s;
}

std::set<std::string> crossing_ids(const ExtendedDiagram& d) {
  std::set<std::string> s;
  for (const auto& c : d.crossings) s.insert(c.id);
  return s;
}

int index_in(const std::vector<std::string>& v, const std::string& x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

const Curve& need_curve(const ExtendedDiagram& d, const std::string& id, Family f) {
  if (!d.has_curve(id)) illegal("unknown curve " + id);
  const Curve& c = d.curve(id);
  if (c.family != f) illegal(id + (f == Family::Alpha ? " is not an alpha curve" : " is not a beta curve"));
  return c;
}

void remove_crossing(ExtendedDiagram& d, const std::string& x) {
  for (auto& c : d.curves) c.order.erase(std::remove(c.order.begin(), c.order.end(), x), c.order.end());
  d.crossings.erase(std::remove_if(d.crossings.begin(), d.crossings.end(),
                                   [&](const Crossing& c) { return c.id == x; }),
                    d.crossings.end());
}

// Named multipoints that lose a pick are dropped.
void drop_multipoints_with(ExtendedDiagram& d, const std::set<std::string>& gone) {
  d.multipoints.erase(std::remove_if(d.multipoints.begin(), d.multipoints.end(),
                                     [&](const NamedMultipoint& m) {
                                       for (const auto& p : m.picks)
                                         if (gone.count(p)) return true;
                                       return false;
                                     }),
                      d.multipoints.end());
}

void insert_curve_after_closed(ExtendedDiagram& d, Curve c) {
  size_t pos = 0;
  for (size_t i = 0; i < d.curves.size(); ++i)
    if (d.curves[i].family == c.family && d.curves[i].topology == Topology::Closed) pos = i + 1;
  if (pos == 0) {
    // no closed curve of this family yet: go in front of its first arc, else at the end
    pos = d.curves.size();
    for (size_t i = 0; i < d.curves.size(); ++i)
      if (d.curves[i].family == c.family) {
        pos = i;
        break;
      }
  }
  d.curves.insert(d.curves.begin() + pos, std::move(c));
}

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

MoveResult start(const ExtendedDiagram& d) {
  MoveResult r;
  r.diagram = d;
  for (const Curve* b : d.family(Family::Beta)) r.generators[b->id] = {b->id, 1};
  return r;
}

void reorder(MoveResult& r, const Move& m) {
  ExtendedDiagram& d = r.diagram;
  std::vector<size_t> slots;
  for (size_t i = 0; i < d.curves.size(); ++i)
    if (d.curves[i].family == m.family && d.curves[i].topology == m.topology) slots.push_back(i);
  std::vector<int> sorted = m.permutation;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != slots.size()) illegal("permutation has the wrong length");
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) illegal("not a permutation");
  std::vector<Curve> old;
  for (auto s : slots) old.push_back(d.curves[s]);
  for (size_t i = 0; i < slots.size(); ++i) d.curves[slots[i]] = old[m.permutation[i]];
  if (m.topology == Topology::Closed) r.orientation = permutation_sign(m.permutation);
}

void reverse(MoveResult& r, const Move& m) {
  ExtendedDiagram& d = r.diagram;
  if (!d.has_curve(m.curve)) illegal("unknown curve " + m.curve);
  Curve& c = d.curve(m.curve);
  std::reverse(c.order.begin(), c.order.end());
  for (const auto& x : c.order) d.crossing(x).sign *= -1;
  if (c.topology == Topology::Closed) r.orientation = -1;
  if (c.family == Family::Beta) r.generators[c.id] = {c.id, -1};
}

void finger(MoveResult& r, const Move& m) {
  ExtendedDiagram& d = r.diagram;
  const Curve& a = need_curve(d, m.alpha, Family::Alpha);
  const Curve& b = need_curve(d, m.beta, Family::Beta);
  std::vector<int> signs;
  if (m.pattern == "+-")
    signs = {1, -1};
  else if (m.pattern == "-+")
    signs = {-1, 1};
  else if ((m.pattern == "+" || m.pattern == "-") && a.topology == Topology::Arc)
    signs = {m.pattern == "+" ? 1 : -1};
  else
    illegal("finger pattern '" + m.pattern + "' not allowed here");
  if (m.alpha_pos < 0 || m.alpha_pos > static_cast<int>(a.order.size())) illegal("alpha position out of range");
  if (m.beta_pos < 0 || m.beta_pos > static_cast<int>(b.order.size())) illegal("beta position out of range");
  auto taken = crossing_ids(d);
  std::vector<std::string> ids;
  for (int s : signs) {
    std::string id = fresh(taken, "x");
    taken.insert(id);
    ids.push_back(id);
    d.crossings.push_back({id, m.alpha, m.beta, s});
  }
  Curve& am = d.curve(m.alpha);
  am.order.insert(am.order.begin() + m.alpha_pos, ids.begin(), ids.end());
  Curve& bm = d.curve(m.beta);
  bm.order.insert(bm.order.begin() + m.beta_pos, ids.begin(), ids.end());
}

void cancel(MoveResult& r, const Move& m) {
  ExtendedDiagram& d = r.diagram;
  for (const auto& x : m.crossings)
    if (!d.has_crossing(x)) illegal("unknown crossing " + x);
  if (m.crossings.size() == 1) {
    const Crossing& x = d.crossing(m.crossings[0]);
    if (d.curve(x.alpha).topology != Topology::Arc) illegal("a single crossing can only be removed from an alpha arc");
  } else if (m.crossings.size() == 2) {
    const Crossing& x = d.crossing(m.crossings[0]);
    const Crossing& y = d.crossing(m.crossings[1]);
    if (x.id == y.id) illegal("crossing listed twice");
    if (x.alpha != y.alpha || x.beta != y.beta) illegal("crossings lie on different curves");
    if (x.sign == y.sign) illegal("crossings have the same sign");
    const auto& ao = d.curve(x.alpha).order;
    const auto& bo = d.curve(x.beta).order;
    if (std::abs(index_in(ao, x.id) - index_in(ao, y.id)) != 1) illegal("crossings not adjacent on " + x.alpha);
    if (std::abs(index_in(bo, x.id) - index_in(bo, y.id)) != 1) illegal("crossings not adjacent on " + x.beta);
  } else {
    illegal("cancel takes one or two crossings");
  }
  std::set<std::string> gone(m.crossings.begin(), m.crossings.end());
  for (const auto& x : m.crossings) remove_crossing(d, x);
  drop_multipoints_with(d, gone);
  r.removed_picks = m.crossings;
}

void stabilize(MoveResult& r) {
  ExtendedDiagram& d = r.diagram;
  auto cids = curve_ids(d);
  std::string a = fresh(cids, "a");
  std::string b = fresh(cids, "b");
  std::string x = fresh(crossing_ids(d), "x");
  insert_curve_after_closed(d, {a, Family::Alpha, Topology::Closed, {x}});
  insert_curve_after_closed(d, {b, Family::Beta, Topology::Closed, {x}});
  d.crossings.push_back({x, a, b, 1});
  for (auto& mp : d.multipoints) mp.picks.push_back(x);
  r.added_picks = {x};
}

void destabilize(MoveResult& r, const Move& m) {
  ExtendedDiagram& d = r.diagram;
  const Curve& a = need_curve(d, m.alpha, Family::Alpha);
  const Curve& b = need_curve(d, m.beta, Family::Beta);
  if (a.topology != Topology::Closed || b.topology != Topology::Closed) illegal("destabilize needs closed curves");
  if (a.order.size() != 1 || b.order.size() != 1 || a.order[0] != b.order[0])
    illegal(m.alpha + " and " + m.beta + " must meet exactly once and nothing else");
  std::string x = a.order[0];
  r.orientation = d.crossing(x).sign * ((d.closed_index(m.alpha) + d.closed_index(m.beta)) % 2 ? -1 : 1);
  remove_crossing(d, x);
  d.curves.erase(std::remove_if(d.curves.begin(), d.curves.end(),
                                [&](const Curve& c) { return c.id == m.alpha || c.id == m.beta; }),
                 d.curves.end());
  for (auto& mp : d.multipoints) mp.picks.erase(std::remove(mp.picks.begin(), mp.picks.end(), x), mp.picks.end());
  r.generators[m.beta] = {"", 1};
  r.removed_picks = {x};
}

void handleslide(MoveResult& r, const Move& m) {
  ExtendedDiagram& d = r.diagram;
  const Curve& slid = need_curve(d, m.slid, Family::Alpha);
  const Curve& over = need_curve(d, m.over, Family::Alpha);
  if (m.slid == m.over) illegal("a curve cannot slide over itself");
  bool arcs = slid.topology == Topology::Arc && over.topology == Topology::Arc;
  if (over.topology != Topology::Closed && !arcs) illegal("the over curve must be closed");
  const std::vector<std::string> over_order = over.order;
  auto taken = crossing_ids(d);
  auto make = [&](const std::string& beta, int sign) {
    std::string id = fresh(taken, "x");
    taken.insert(id);
    d.crossings.push_back({id, m.slid, beta, sign});
    return id;
  };
  std::vector<std::string> appended, delta_ids;
  for (const auto& st : m.delta) {
    need_curve(d, st.beta, Family::Beta);
    if (st.sign != 1 && st.sign != -1) illegal("delta sign must be +1 or -1");
    auto& bo = d.curve(st.beta).order;
    if (st.position < 0 || st.position > static_cast<int>(bo.size())) illegal("delta position out of range");
    std::string id = make(st.beta, st.sign);
    bo.insert(bo.begin() + st.position, id);
    delta_ids.push_back(id);
    appended.push_back(id);
  }
  for (const auto& y : over_order) {
    Crossing orig = d.crossing(y);
    std::string id = make(orig.beta, orig.sign);
    auto& bo = d.curve(orig.beta).order;
    bo.insert(bo.begin() + index_in(bo, y) + 1, id);
    appended.push_back(id);
  }
  for (size_t k = m.delta.size(); k-- > 0;) {
    const auto& st = m.delta[k];
    std::string id = make(st.beta, -st.sign);
    auto& bo = d.curve(st.beta).order;
    bo.insert(bo.begin() + index_in(bo, delta_ids[k]) + 1, id);
    appended.push_back(id);
  }
  auto& so = d.curve(m.slid).order;
  so.insert(so.end(), appended.begin(), appended.end());
}

void trivial_handles(MoveResult& r, const Move& m) {
  if (m.count < 0) illegal("negative handle count");
  ExtendedDiagram& d = r.diagram;
  for (int i = 0; i < m.count; ++i) {
    auto ids = curve_ids(d);
    std::string a = fresh(ids, "a");
    ids.insert(a);
    std::string b = fresh(ids, "b");
    d.curves.push_back({a, Family::Alpha, Topology::Arc, {}});
    d.curves.push_back({b, Family::Beta, Topology::Arc, {}});
  }
}

}  // namespace

MoveResult apply_move_full(const ExtendedDiagram& diag, const Move& m) {
  MoveResult r = start(diag);
  switch (m.kind) {
    case MoveKind::ReorderCurves: reorder(r, m); break;
    case MoveKind::ReverseCurve: reverse(r, m); break;
    case MoveKind::FingerIsotopy: finger(r, m); break;
    case MoveKind::CancelFinger: cancel(r, m); break;
    case MoveKind::Stabilize: stabilize(r); break;
    case MoveKind::Destabilize: destabilize(r, m); break;
    case MoveKind::HandleslideCurve: handleslide(r, m); break;
    case MoveKind::AddTrivialHandles: trivial_handles(r, m); break;
  }
  return r;
}

ExtendedDiagram apply_move(const ExtendedDiagram& diag, const Move& m) { return apply_move_full(diag, m).diagram; }

Multipoint transport_multipoint(const MoveResult& r, const Multipoint& x) {
  std::vector<std::string> picks;
  for (const auto& p : x.picks)
    if (std::find(r.removed_picks.begin(), r.removed_picks.end(), p) == r.removed_picks.end()) picks.push_back(p);
  picks.insert(picks.end(), r.added_picks.begin(), r.added_picks.end());
  return make_multipoint(r.diagram, picks);
}

GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second) {
  GeneratorMap out;
  for (const auto& [from, to] : first) {
    if (to.first.empty()) {
      out[from] = to;
      continue;
    }
    auto it = second.find(to.first);
    if (it == second.end()) throw Error("UnknownGenerator", to.first + " has no image");
    out[from] = it->second.first.empty() ? it->second : std::pair{it->second.first, to.second * it->second.second};
  }
  return out;
}

std::vector<Move> random_move_sequence(const ExtendedDiagram& diag, uint64_t seed, int length,
                                       const std::vector<std::string>& keep) {
  if (length < 0) throw Error("InvalidArgument", "negative length");
  std::mt19937_64 rng(seed);
  auto pick = [&](size_t n) { return static_cast<size_t>(std::uniform_int_distribution<size_t>(0, n - 1)(rng)); };
  std::set<std::string> kept(keep.begin(), keep.end());
  ExtendedDiagram cur = diag;
  std::vector<Move> out;
  while (static_cast<int>(out.size()) < length) {
    Move m;
    const size_t total_crossings = cur.crossings.size();
    auto alphas = cur.family(Family::Alpha);
    auto betas = cur.family(Family::Beta);
    auto closed_alphas = cur.closed(Family::Alpha);
    switch (pick(8)) {
      case 0: {
        std::vector<std::pair<Family, Topology>> blocks;
        for (Family f : {Family::Alpha, Family::Beta})
          for (Topology t : {Topology::Closed, Topology::Arc}) {
            size_t n = 0;
            for (const auto& c : cur.curves) n += c.family == f && c.topology == t;
            if (n >= 2) blocks.push_back({f, t});
          }
        if (blocks.empty()) continue;
        auto [f, t] = blocks[pick(blocks.size())];
        m.kind = MoveKind::ReorderCurves;
        m.family = f;
        m.topology = t;
        for (const auto& c : cur.curves)
          if (c.family == f && c.topology == t) m.permutation.push_back(static_cast<int>(m.permutation.size()));
        std::shuffle(m.permutation.begin(), m.permutation.end(), rng);
        break;
      }
      case 1:
        if (cur.curves.empty()) continue;
        m.kind = MoveKind::ReverseCurve;
        m.curve = cur.curves[pick(cur.curves.size())].id;
        m.family = cur.curve(m.curve).family;
        break;
      case 2: {
        if (alphas.empty() || betas.empty() || total_crossings > 60) continue;
        const Curve* a = alphas[pick(alphas.size())];
        const Curve* b = betas[pick(betas.size())];
        m.kind = MoveKind::FingerIsotopy;
        m.alpha = a->id;
        m.beta = b->id;
        m.alpha_pos = static_cast<int>(pick(a->order.size() + 1));
        m.beta_pos = static_cast<int>(pick(b->order.size() + 1));
        if (a->topology == Topology::Arc && pick(3) == 0)
          m.pattern = pick(2) ? "+" : "-";
        else
          m.pattern = pick(2) ? "+-" : "-+";
        break;
      }
      case 3: {
        std::vector<std::vector<std::string>> cands;
        for (const Curve* a : alphas) {
          const auto& o = a->order;
          for (size_t i = 0; i < o.size(); ++i) {
            const Crossing& x = cur.crossing(o[i]);
            if (kept.count(x.id)) continue;
            if (a->topology == Topology::Arc) cands.push_back({x.id});
            if (i + 1 >= o.size()) continue;
            const Crossing& y = cur.crossing(o[i + 1]);
            if (kept.count(y.id) || y.beta != x.beta || y.sign == x.sign) continue;
            const auto& bo = cur.curve(x.beta).order;
            if (std::abs(index_in(bo, x.id) - index_in(bo, y.id)) == 1) cands.push_back({x.id, y.id});
          }
        }
        if (cands.empty()) continue;
        m.kind = MoveKind::CancelFinger;
        m.crossings = cands[pick(cands.size())];
        break;
      }
      case 4:
        if (closed_alphas.size() >= 6) continue;
        m.kind = MoveKind::Stabilize;
        break;
      case 5: {
        std::vector<std::pair<std::string, std::string>> cands;
        for (const Curve* a : closed_alphas) {
          if (a->order.size() != 1) continue;
          const Crossing& x = cur.crossing(a->order[0]);
          const Curve& b = cur.curve(x.beta);
          if (b.topology == Topology::Closed && b.order.size() == 1) cands.push_back({a->id, b.id});
        }
        if (cands.empty()) continue;
        m.kind = MoveKind::Destabilize;
        std::tie(m.alpha, m.beta) = cands[pick(cands.size())];
        break;
      }
      case 6: {
        if (total_crossings > 60 || alphas.size() < 2) continue;
        const Curve* s = alphas[pick(alphas.size())];
        std::vector<const Curve*> overs;
        for (const Curve* a : alphas)
          if (a != s && (a->topology == Topology::Closed || s->topology == Topology::Arc)) overs.push_back(a);
        if (overs.empty()) continue;
        m.kind = MoveKind::HandleslideCurve;
        m.slid = s->id;
        m.over = overs[pick(overs.size())]->id;
        if (!betas.empty()) {
          size_t steps = pick(3);
          for (size_t k = 0; k < steps; ++k) {
            const Curve* b = betas[pick(betas.size())];
            m.delta.push_back({b->id, static_cast<int>(pick(b->order.size() + 1)), pick(2) ? 1 : -1});
          }
        }
        break;
      }
      default:
        if (cur.curves.size() > 16) continue;
        m.kind = MoveKind::AddTrivialHandles;
        m.count = 1;
        break;
    }
    cur = apply_move(cur, m);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool parse_at(const std::string& tok, std::string& id, int& pos) {
  auto at = tok.find('@');
  if (at == std::string::npos || at == 0) return false;
  id = tok.substr(0, at);
  try {
    size_t used = 0;
    pos = std::stoi(tok.substr(at + 1), &used);
    return used == tok.size() - at - 1;
  } catch (const std::exception&) {
    return false;
  }
}

int parse_int(const std::string& s, const std::string& line) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("SyntaxError", "expected an integer in '" + line + "'");
}

}  // namespace

Move parse_move(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tok;
  std::string t;
  while (is >> t) tok.push_back(t);
  auto bad = [&]() -> Move { throw Error("SyntaxError", "cannot parse move '" + line + "'"); };
  if (tok.empty()) return bad();
  Move m;
  const std::string& v = tok[0];
  if (v == "reorder") {
    if (tok.size() < 3 || (tok[1] != "alpha" && tok[1] != "beta") || (tok[2] != "closed" && tok[2] != "arc"))
      return bad();
    m.kind = MoveKind::ReorderCurves;
    m.family = tok[1] == "alpha" ? Family::Alpha : Family::Beta;
    m.topology = tok[2] == "closed" ? Topology::Closed : Topology::Arc;
    for (size_t i = 3; i < tok.size(); ++i) m.permutation.push_back(parse_int(tok[i], line));
  } else if (v == "reverse") {
    if (tok.size() != 3 || (tok[1] != "alpha" && tok[1] != "beta")) return bad();
    m.kind = MoveKind::ReverseCurve;
    m.family = tok[1] == "alpha" ? Family::Alpha : Family::Beta;
    m.curve = tok[2];
  } else if (v == "finger") {
    if (tok.size() != 4 || !parse_at(tok[1], m.alpha, m.alpha_pos) || !parse_at(tok[2], m.beta, m.beta_pos))
      return bad();
    m.kind = MoveKind::FingerIsotopy;
    m.pattern = tok[3];
  } else if (v == "cancel") {
    if (tok.size() < 2 || tok.size() > 3) return bad();
    m.kind = MoveKind::CancelFinger;
    m.crossings.assign(tok.begin() + 1, tok.end());
  } else if (v == "stabilize") {
    if (tok.size() != 1) return bad();
    m.kind = MoveKind::Stabilize;
  } else if (v == "destabilize") {
    if (tok.size() != 3) return bad();
    m.kind = MoveKind::Destabilize;
    m.alpha = tok[1];
    m.beta = tok[2];
  } else if (v == "handleslide") {
    if (tok.size() < 4 || tok[2] != "over") return bad();
    m.kind = MoveKind::HandleslideCurve;
    m.slid = tok[1];
    m.over = tok[3];
    if (tok.size() > 4) {
      if (tok[4] != ":") return bad();
      std::string rest;
      for (size_t i = 5; i < tok.size(); ++i) rest += tok[i] + " ";
      for (auto& ch : rest)
        if (ch == '(' || ch == ')') ch = ' ';
      std::istringstream rs(rest);
      std::vector<std::string> parts;
      while (rs >> t) parts.push_back(t);
      if (parts.size() % 2) return bad();
      for (size_t i = 0; i < parts.size(); i += 2) {
        DeltaStep st;
        if (!parse_at(parts[i], st.beta, st.position)) return bad();
        if (parts[i + 1] != "+" && parts[i + 1] != "-") return bad();
        st.sign = parts[i + 1] == "+" ? 1 : -1;
        m.delta.push_back(st);
      }
    }
  } else if (v == "trivial-handles") {
    if (tok.size() != 2) return bad();
    m.kind = MoveKind::AddTrivialHandles;
    m.count = parse_int(tok[1], line);
  } else {
    return bad();
  }
  return m;
}

std::vector<Move> parse_script(const std::string& text) {
  std::vector<Move> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_move(line));
  }
  return out;
}

std::string format_move(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::ReorderCurves:
      os << "reorder " << (m.family == Family::Alpha ? "alpha" : "beta") << " "
         << (m.topology == Topology::Closed ? "closed" : "arc");
      for (int p : m.permutation) os << " " << p;
      break;
    case MoveKind::ReverseCurve:
      os << "reverse " << (m.family == Family::Alpha ? "alpha" : "beta") << " " << m.curve;
      break;
    case MoveKind::FingerIsotopy:
      os << "finger " << m.alpha << "@" << m.alpha_pos << " " << m.beta << "@" << m.beta_pos << " " << m.pattern;
      break;
    case MoveKind::CancelFinger:
      os << "cancel";
      for (const auto& x : m.crossings) os << " " << x;
      break;
    case MoveKind::Stabilize: os << "stabilize"; break;
    case MoveKind::Destabilize: os << "destabilize " << m.alpha << " " << m.beta; break;
    case MoveKind::HandleslideCurve:
      os << "handleslide " << m.slid << " over " << m.over;
      if (!m.delta.empty()) {
        os << " :";
        for (const auto& st : m.delta) os << " (" << st.beta << "@" << st.position << " " << (st.sign > 0 ? "+" : "-") << ")";
      }
      break;
    case MoveKind::AddTrivialHandles: os << "trivial-handles " << m.count; break;
  }
  return os.str();
}

}  // namespace suturant
