#pragma once

#include <string>
#include <vector>

#include "selfsim/pillow.hpp"

namespace selfsim {

// A strip folded in half per instruction letter (last letter folded first,
// 'L' lays the moving half above, 'R' below), then opened so every crease
// is a right angle.  Segments are half-unit; the walk starts at the fixed
// strip end, at the origin, heading east.
struct TurnPath {
  std::string v;
  std::vector<char> turns;       // 'L'/'R' per crease along the strip
  std::vector<DyadicGauss> pts;  // turns.size() + 2 points
};

TurnPath unfold(const std::string& v);

// The path together with its half-turn image about the midpoint of its
// endpoints, one closed curve.  vertex_at marks the two junction indices;
// orientation 0 flags the degenerate doubled segment of the empty word.
GridCurve close_twin(const TurnPath& p);

// Rigid congruence between closed grid curves: one of the eight signed
// rotations, a translation, a cyclic offset and an optional reversal.
// Applied as z -> mul * (conj ? conj(z) : z) + shift, matching a onto b.
struct Isometry {
  bool ok = false;
  DyadicGauss mul{1, 0, 0};
  bool conj = false;
  DyadicGauss shift;
  bool reversed = false;
  int offset = 0;
  int mismatch_at = -1;  // first structural difference when !ok
};

Isometry compare_isometric(const GridCurve& a, const GridCurve& b);

// The boundary-curve parameter whose plane lift the closed double of v
// reproduces (one letter shorter; pinned empirically and asserted in tests).
// Throws std::invalid_argument for the empty word.
std::string fold_partner(const std::string& v);

struct FoldReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Splits the plane lift of the level curve at the four marked-point lifts,
// checks the quarter-turn relations between consecutive pieces (turn sense
// set by the last letter) and the one-letter extension rule.
FoldReport foldrule_check(const std::string& v);

// Same checks against a caller-supplied trace claimed to be the lift for v.
FoldReport foldrule_check_curve(const std::string& v, const GridCurve& c);

}  // namespace selfsim
