#include "selfsim/fold.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace selfsim {

namespace {

void check_fold_word(const std::string& v) {
  if (v.size() > 26) throw std::invalid_argument("folding word is too long");
  for (char c : v)
    if (c != 'L' && c != 'R') throw std::invalid_argument("fold letters are L or R");
}

const DyadicGauss kUnitI{0, 1, 0};
const DyadicGauss kUnitMinusI{0, -1, 0};

bool is_unit(const DyadicGauss& m) {
  if (m.exp != 0) return false;
  return (m.im == 0 && (m.re == 1 || m.re == -1)) || (m.re == 0 && (m.im == 1 || m.im == -1));
}

DyadicGauss rot_about(const DyadicGauss& p, const DyadicGauss& c, const DyadicGauss& m) {
  return c + m * (p - c);
}

// sign of twice the enclosed area of a closed polyline
int polyline_orientation(const std::vector<DyadicGauss>& pts) {
  DyadicGauss acc;
  for (size_t k = 0; k + 1 < pts.size(); k++) {
    DyadicGauss c = pts[k].conj() * pts[k + 1];
    acc = acc + DyadicGauss(c.im, 0, c.exp);
  }
  if (acc.re > 0) return 1;
  if (acc.re < 0) return -1;
  return 0;
}

}  // namespace

TurnPath unfold(const std::string& v) {
  check_fold_word(v);
  int n = (int)v.size();
  long long cells = 1LL << n;

  // layers of the folded packet, bottom to top; a layer covers packet
  // positions 0..width-1 with strip cell start + dir * position
  struct Layer {
    long long start;
    int dir;
  };
  std::vector<Layer> stack{{0, 1}};
  long long width = cells;
  for (int i = n - 1; i >= 0; i--) {
    long long half = width / 2;
    std::vector<Layer> near, far;
    near.reserve(stack.size());
    far.reserve(stack.size());
    for (const Layer& l : stack) {
      near.push_back(l);
      far.push_back({l.start + (long long)l.dir * (width - 1), -l.dir});
    }
    std::reverse(far.begin(), far.end());
    if (v[i] == 'L') {
      // the moving half swings over the top of the fixed half
      near.insert(near.end(), far.begin(), far.end());
      stack = std::move(near);
    } else {
      far.insert(far.end(), near.begin(), near.end());
      stack = std::move(far);
    }
    width = half;
  }

  std::vector<long long> height(cells);
  std::vector<int> dir(cells);
  for (size_t t = 0; t < stack.size(); t++) {
    height[stack[t].start] = (long long)t;
    dir[stack[t].start] = stack[t].dir;
  }

  TurnPath p;
  p.v = v;
  p.turns.reserve(cells - 1);
  for (long long k = 1; k < cells; k++) {
    // the crease joining cells k-1,k sits at the packet edge the previous
    // cell points at; the upper of the two cells opens upward
    int edge = dir[k - 1];
    int above = height[k] > height[k - 1] ? 1 : -1;
    p.turns.push_back(above * edge > 0 ? 'L' : 'R');
  }

  p.pts.reserve(cells + 1);
  DyadicGauss at, step{1, 0, 1};
  p.pts.push_back(at);
  for (long long k = 0; k < cells; k++) {
    if (k > 0) step = step * (p.turns[k - 1] == 'L' ? kUnitI : kUnitMinusI);
    at = at + step;
    p.pts.push_back(at);
  }
  return p;
}

GridCurve close_twin(const TurnPath& p) {
  if (p.pts.size() < 2) throw std::invalid_argument("empty turn path");
  int m = (int)p.pts.size() - 1;
  GridCurve c;
  c.v = p.v;
  c.n = (int)p.v.size();
  c.pts = p.pts;
  c.pts.reserve(2 * m + 1);
  DyadicGauss twice_center = p.pts[0] + p.pts[m];
  for (int k = 1; k <= m; k++) c.pts.push_back(twice_center - p.pts[k]);
  c.vertex_at = {0, m};
  c.orientation = polyline_orientation(c.pts);
  return c;
}

Isometry compare_isometric(const GridCurve& a, const GridCurve& b) {
  if (a.pts.size() < 2 || b.pts.size() < 2) throw std::invalid_argument("empty curve");
  if (a.pts.front() != a.pts.back() || b.pts.front() != b.pts.back())
    throw std::invalid_argument("closed curves expected");
  Isometry out;
  int na = (int)a.pts.size() - 1, nb = (int)b.pts.size() - 1;
  if (na != nb) return out;
  int n = na;
  int best = -1;
  for (int revf = 0; revf < 2; revf++) {
    for (int conjf = 0; conjf < 2; conjf++) {
      std::vector<DyadicGauss> t(n + 1);
      for (int k = 0; k <= n; k++) {
        DyadicGauss q = revf ? a.pts[n - k] : a.pts[k];
        t[k] = conjf ? q.conj() : q;
      }
      DyadicGauss inv0 = (t[1] - t[0]).inverse();
      for (int s = 0; s < n; s++) {
        DyadicGauss mul = (b.pts[s + 1] - b.pts[s]) * inv0;
        if (!is_unit(mul)) continue;
        DyadicGauss shift = b.pts[s] - mul * t[0];
        int k = 1;
        for (; k <= n; k++) {
          int idx = s + k;
          if (idx >= n) idx -= n;
          if (mul * t[k] + shift != b.pts[idx]) break;
        }
        if (k > n) {
          out.ok = true;
          out.mul = mul;
          out.conj = conjf != 0;
          out.shift = shift;
          out.reversed = revf != 0;
          out.offset = s;
          out.mismatch_at = -1;
          return out;
        }
        best = std::max(best, k);
      }
    }
  }
  out.mismatch_at = best;
  return out;
}

std::string fold_partner(const std::string& v) {
  check_fold_word(v);
  if (v.empty()) throw std::invalid_argument("need a nonempty folding word");
  std::string w;
  w.reserve(v.size() - 1);
  for (size_t k = 1; k < v.size(); k++) w += v[0] == v[k] ? 'L' : 'R';
  return w;
}

namespace {

// true when 2p lies on the level-n sublattice, i.e. p is a quotient cone point
bool is_cone_point(const DyadicGauss& p, int n) {
  DyadicGauss q = p.times_pow2(1);
  if (q.exp != 0) return false;
  DyadicGauss pw{1, 0, 0};
  for (int i = 0; i < n; i++) pw = pw * DyadicGauss{1, 1, 0};
  return (q * pw.inverse()).exp == 0;
}

struct QuarterSplit {
  bool ok = false;
  std::string err;
  int idx[4] = {-1, -1, -1, -1};  // A, B, CAB, C positions in the trace
  bool pos = true;
  std::vector<std::vector<DyadicGauss>> pc;  // pieces A>B, B>CAB, CAB>C, C>A
};

std::vector<DyadicGauss> extract_forward(const std::vector<DyadicGauss>& pts, int n, int i,
                                         int j) {
  std::vector<DyadicGauss> out;
  int k = i;
  out.push_back(pts[k]);
  while (k != j) {
    k = (k + 1) % n;
    out.push_back(pts[k]);
  }
  return out;
}

// locate the four cone lifts on the trace and split it there; the quarter
// rotation sense m must carry each piece onto the next one reversed
QuarterSplit split_quarters(const std::string& v, const GridCurve& c, bool expect_pos,
                            const DyadicGauss& m) {
  QuarterSplit q;
  int n = (int)v.size();
  int np = (int)c.pts.size() - 1;
  DeltaGraph d = delta_graphs(1, v);
  DyadicGauss zclass[3];
  for (int t = 0; t < 3; t++) zclass[t] = pillow_canon(d.zp[t], n);
  int iA = -1, iB = -1, iCAB = -1, iC = -1;
  for (int k = 0; k < np; k++) {
    if (c.pts[k] == d.zp[0]) iCAB = k;
    if (c.pts[k] == d.zp[1]) iB = k;
    if (c.pts[k] == d.zp[2]) iC = k;
    if (is_cone_point(c.pts[k], n)) {
      DyadicGauss cn = pillow_canon(c.pts[k], n);
      if (cn != zclass[0] && cn != zclass[1] && cn != zclass[2]) iA = k;
    }
  }
  if (iA < 0 || iB < 0 || iCAB < 0 || iC < 0) {
    q.err = "a cone lift is missing from the trace";
    return q;
  }
  auto rel = [&](int i) { return (i - iA + np) % np; };
  bool fwd = rel(iB) < rel(iCAB) && rel(iCAB) < rel(iC);
  bool bwd = rel(iC) < rel(iCAB) && rel(iCAB) < rel(iB);
  if (fwd == bwd) {
    q.err = "cone lifts are not in quarter order";
    return q;
  }
  q.pos = fwd;
  if (q.pos != expect_pos) {
    q.err = "pieces wind against the direction set by the last letter";
    return q;
  }
  int seq[5] = {iA, iB, iCAB, iC, iA};
  q.pc.resize(4);
  for (int j = 0; j < 4; j++) {
    if (q.pos) {
      q.pc[j] = extract_forward(c.pts, np, seq[j], seq[j + 1]);
    } else {
      q.pc[j] = extract_forward(c.pts, np, seq[j + 1], seq[j]);
      std::reverse(q.pc[j].begin(), q.pc[j].end());
    }
  }
  for (int j = 0; j < 4; j++) {
    const auto& a = q.pc[j];
    const auto& b = q.pc[(j + 1) % 4];
    if (a.size() != b.size()) {
      q.err = "quarter pieces differ in length";
      return q;
    }
    DyadicGauss ctr = a.back();
    size_t len = a.size();
    for (size_t t = 0; t < len; t++)
      if (rot_about(a[t], ctr, m) != b[len - 1 - t]) {
        q.err = "a quarter turn does not carry a piece onto the next";
        return q;
      }
  }
  q.ok = true;
  q.idx[0] = iA;
  q.idx[1] = iB;
  q.idx[2] = iCAB;
  q.idx[3] = iC;
  return q;
}

FoldReport foldrule_on(const std::string& v, const GridCurve& c) {
  FoldReport r;
  auto note = [&](bool ok, const std::string& what) {
    r.lines.push_back(std::string(ok ? "ok " : "FAIL ") + what);
    if (!ok) r.ok = false;
  };
  int n = (int)v.size();
  bool pos = v.empty() || v.back() == 'L';
  DyadicGauss m = pos ? kUnitMinusI : kUnitI;
  QuarterSplit q = split_quarters(v, c, pos, m);
  if (q.ok) {
    note(true, "cone lifts split the trace into four quarter-turn pieces, " +
                   std::string(pos ? "positive" : "negative") + " sense");
  } else {
    struct Alt {
      bool p;
      DyadicGauss mm;
      const char* what;
    } alts[3] = {
        {!pos, m, "pieces wind backward for the last letter (mirrored trace)"},
        {pos, -m, "quarter turns carry the opposite sign (mirrored trace)"},
        {!pos, -m, "winding and turn sign both flipped (mirrored trace)"},
    };
    bool diagnosed = false;
    for (const Alt& a : alts)
      if (split_quarters(v, c, a.p, a.mm).ok) {
        note(false, a.what);
        diagnosed = true;
        break;
      }
    if (!diagnosed) note(false, q.err);
    return r;
  }
  if (n == 0) {
    note(true, "base word, no extension step");
    return r;
  }

  std::string u = v.substr(0, v.size() - 1);
  GridCurve cu = rho_curve(u);
  bool upos = u.empty() || u.back() == 'L';
  QuarterSplit qu = split_quarters(u, cu, upos, upos ? kUnitMinusI : kUnitI);
  if (!qu.ok) {
    note(false, "parent trace: " + qu.err);
    return r;
  }

  // the long half of the child trace is the parent's long half joined with
  // its quarter-turn image around the parent's second marked cone lift, up
  // to the unit rotation aligning the two lifts
  DeltaGraph du = delta_graphs(1, u);
  std::vector<DyadicGauss> su = qu.pc[3];
  su.insert(su.end(), qu.pc[0].begin() + 1, qu.pc[0].end());
  DyadicGauss m2 = v.back() == 'L' ? kUnitMinusI : kUnitI;
  std::vector<DyadicGauss> ext = su;
  for (int t = (int)su.size() - 2; t >= 0; t--) ext.push_back(rot_about(su[t], du.zp[1], m2));
  std::vector<DyadicGauss> half = q.pc[3];
  half.insert(half.end(), q.pc[0].begin() + 1, q.pc[0].end());
  if (half.size() != ext.size()) {
    note(false, "extension length off: " + std::to_string(ext.size()) + " points against " +
                    std::to_string(half.size()));
    return r;
  }
  const DyadicGauss units[4] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  bool matched = false;
  for (const DyadicGauss& rm : units) {
    DyadicGauss shift = half[0] - rm * ext[0];
    bool all = true;
    for (size_t k = 0; k < ext.size(); k++)
      if (rm * ext[k] + shift != half[k]) {
        all = false;
        break;
      }
    if (all) {
      matched = true;
      note(true, "one-letter extension rebuilds the long half (aligned by " + rm.str() +
                     " with shift " + shift.str() + ")");
      break;
    }
  }
  if (!matched) note(false, "one-letter extension does not rebuild the long half");
  return r;
}

}  // namespace

FoldReport foldrule_check(const std::string& v) {
  check_fold_word(v);
  return foldrule_on(v, rho_curve(v));
}

FoldReport foldrule_check_curve(const std::string& v, const GridCurve& c) {
  check_fold_word(v);
  return foldrule_on(v, c);
}

}  // namespace selfsim
