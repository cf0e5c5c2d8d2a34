#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suturant/diagram.hpp"
#include "suturant/foxcalc.hpp"

namespace suturant {

enum class MoveKind {
  ReorderCurves,
  ReverseCurve,
  FingerIsotopy,
  CancelFinger,
  Stabilize,
  Destabilize,
  HandleslideCurve,
  AddTrivialHandles,
};

struct DeltaStep {
  std::string beta;
  int position = 0;  // insertion index in the beta order
  int sign = 1;
};

struct Move {
  MoveKind kind = MoveKind::Stabilize;

  // ReorderCurves: block[i] becomes old block[permutation[i]]
  Family family = Family::Alpha;
  Topology topology = Topology::Closed;
  std::vector<int> permutation;

  // ReverseCurve
  std::string curve;

  // FingerIsotopy / Destabilize
  std::string alpha, beta;
  int alpha_pos = 0, beta_pos = 0;
  std::string pattern;  // "+-", "-+", or "+"/"-" on an alpha arc

  // CancelFinger
  std::vector<std::string> crossings;

  // HandleslideCurve
  std::string slid, over;
  std::vector<DeltaStep> delta;

  // AddTrivialHandles
  int count = 0;
};

struct MoveResult {
  ExtendedDiagram diagram;
  GeneratorMap generators;  // every old beta id
  int orientation = 1;      // factor picked up by the sign convention
  std::vector<std::string> added_picks;
  std::vector<std::string> removed_picks;
};

MoveResult apply_move_full(const ExtendedDiagram& diag, const Move& m);
ExtendedDiagram apply_move(const ExtendedDiagram& diag, const Move& m);
Multipoint transport_multipoint(const MoveResult& r, const Multipoint& x);
// first, then second.
GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second);

// Crossings in `keep` are never cancelled.
std::vector<Move> random_move_sequence(const ExtendedDiagram& diag, uint64_t seed, int length,
                                       const std::vector<std::string>& keep = {});

Move parse_move(const std::string& line);
std::vector<Move> parse_script(const std::string& text);
std::string format_move(const Move& m);

}  // namespace suturant
