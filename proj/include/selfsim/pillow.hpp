#pragma once

#include <string>
#include <utility>
#include <vector>

#include "selfsim/system.hpp"

namespace selfsim {

// Exact dyadic Gaussian number (re + im*i) / 2^exp, kept with exp minimal.
struct DyadicGauss {
  long long re = 0;
  long long im = 0;
  int exp = 0;

  DyadicGauss() = default;
  DyadicGauss(long long r, long long i, int e = 0);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_integral() const { return exp == 0; }

  DyadicGauss operator+(const DyadicGauss& o) const;
  DyadicGauss operator-(const DyadicGauss& o) const;
  DyadicGauss operator-() const;
  DyadicGauss operator*(const DyadicGauss& o) const;
  DyadicGauss conj() const { return {re, -im, exp}; }
  // value * 2^k (k may be negative)
  DyadicGauss times_pow2(int k) const;
  // multiplicative inverse; exists exactly when |value|^2 is a power of two
  DyadicGauss inverse() const;

  bool operator==(const DyadicGauss& o) const {
    return re == o.re && im == o.im && exp == o.exp;
  }
  bool operator!=(const DyadicGauss& o) const { return !(*this == o); }
  // exact order by real value, then imaginary value
  bool operator<(const DyadicGauss& o) const;

  double real() const;
  double imag() const;
  std::string str() const;
};

// z -> sign * scale * z + shift with exact coefficients.
struct AffineMap {
  int sign = 1;
  DyadicGauss scale = {1, 0, 0};
  DyadicGauss shift;

  DyadicGauss operator()(const DyadicGauss& z) const;
  // this applied first, then g
  AffineMap then(const AffineMap& g) const;
  AffineMap inverse() const;
  // maps are equal when they agree as functions
  bool same_map(const AffineMap& o) const;
};

// Affine model of the plane group: A, B, C are the point reflections with
// q = 1, 1+i, 0; a word applies its letters left to right.  Letters x1..x4
// stand for the four contracting basis maps.
AffineMap affine_of_word(const std::string& w);

// Replays the whole recursion table of the three-generator plane group in
// exact affine arithmetic and cross-checks it against the catalog system:
// for every generator g and letter x, g then x equals the permuted letter
// followed by the recorded section.
struct LattesReport {
  bool ok = true;
  std::vector<std::string> lines;
};
LattesReport verify_lattes();

// --- quotients of the plane by the level subgroups -------------------------

// Canonical representative of p modulo the group of maps z -> ±z + q with q
// divisible by (1+i)^n: reduce into the lattice cell, take the smaller of the
// two sign images.  Pure function of the value.
DyadicGauss pillow_canon(const DyadicGauss& p, int n);

// +1 when p sits on the integral translates of the basepoint (1+i)/4, -1 on
// the reflected copies; throws when p is not an orbit point.
int pillow_parity(const DyadicGauss& p);

enum PillowLabel { kPA = 0, kPB = 1, kPC = 2, kPCAB = 3 };
extern const char* const kPillowLabelName[4];

// The neighbor of orbit point p along the generator edge, in the plane.
DyadicGauss pillow_step(const DyadicGauss& p, int label);

struct PillowGraph {
  int n = 0;
  std::vector<DyadicGauss> verts;  // canonical class representatives, sorted
  struct Edge {
    int u, w;
    int label;
    bool loop;
  };
  std::vector<Edge> edges;
  DyadicGauss singular[4];  // classes of 1/2, (1+i)/2, 0, i/2
  int find(const DyadicGauss& canon_rep) const;
};

// Orbit of the basepoint modulo the level-n subgroup with the four labeled
// generator edge classes; 2^n vertices, four loops.
PillowGraph pillow_graph(int n);

// --- the two spanning trees of a level component ---------------------------

// Words are strings over '1'..'4' naming the basis letters; the component of
// a given L/R parameter consists of the words whose letter pair (12 vs 34)
// follows the parameter.
struct Partition {
  std::string v;   // parameter over {L,R}
  int n = 0;
  PillowGraph graph;
  std::vector<std::string> words;  // component words, sorted
  std::vector<int> point_of;       // word index -> vertex of graph
  int root = -1;                   // word whose letters all have second index 0
  struct TreeEdge {
    int u, w;   // word indices
    int label;  // PillowLabel of the step
  };
  std::vector<TreeEdge> tree1, tree2;
  // plane lifts of the two trees, anchored at the basepoint
  std::vector<DyadicGauss> lift1, lift2;
  int word_index(const std::string& w) const;
};

// Splits the level graph of the plane group into the two spanning trees cut
// out by the two halves of the doubled group: the first tree takes every
// CAB edge plus the B and C edges moved by the first half, the second tree
// takes the A edges plus the rest.
Partition partition(const std::string& v);

// Binary parameters of the two trees: first letter from comparing against L
// (resp. R), later letters from comparing consecutive parameter letters.
std::string tree_parameter(const std::string& v, bool second);

// --- one-letter recursion on plane lifts -----------------------------------

struct DeltaGraph {
  std::string v;
  int which = 1;  // 1 or 2
  std::vector<std::pair<DyadicGauss, DyadicGauss>> edges;  // full edges
  DyadicGauss z[3];   // marked vertices: alpha, beta, gamma
  DyadicGauss zp[3];  // hanging ends of the half-edges at the marks
};

DeltaGraph delta_base(int which);
// Doubles the lift by a half turn around the hanging alpha end, joins the
// alpha copies by an edge, remarks, and drops the stale half-edge.
DeltaGraph delta_step(const DeltaGraph& d, char x);
DeltaGraph delta_graphs(int which, const std::string& v);

// --- closed curves on the pillow -------------------------------------------

struct GridCurve {
  std::string v;
  int n = 0;
  // +1 when the closed trace runs counterclockwise in the plane
  int orientation = 0;
  // closed polyline in the plane (lift); back() == front()
  std::vector<DyadicGauss> pts;
  // for the boundary curve: indices into pts that are tree vertices, in
  // traversal order
  std::vector<int> vertex_at;
  // for the grid curve: (index into pts, singular id 0..3) visits
  std::vector<std::pair<int, int>> singular_at;
};

// Boundary between the squares holding the first tree and the rest; oriented
// with the first tree on the left.  Singular squares count as second-tree
// squares unless the flag moves them.
GridCurve lambda_curve(const std::string& v, bool singular_first = false);

// Closed trace of the half-integer grid around the first tree: at every grid
// corner the one diagonal present in either tree splits the four side ends
// into the two passages.
GridCurve rho_curve(const std::string& v);

// --- the second pair of Schreier graphs ------------------------------------

enum SigmaLabel { kSA = 0, kSABA = 1, kSC = 2 };

struct SigmaGraph {
  std::string v;
  int n = 0;
  std::vector<std::string> words;
  struct Edge {
    int u, w;
    int label;  // SigmaLabel
  };
  std::vector<Edge> edges;
  std::vector<DyadicGauss> pos;  // plane lift of each vertex, anchored at the root
  int root = -1;
};

// The companion tree on the opposite checkerboard class, generated by the
// conjugated generating set; the first graph of the pair is the first tree
// of partition() itself.
SigmaGraph sigma2_graph(const std::string& v);

struct CorridorReport {
  bool ok = true;
  std::vector<std::string> lines;
};
// Checks the crossing trichotomy: every regular grid corner carries exactly
// one present diagonal (a first-tree edge or a second-sigma edge), crossing
// labels pair as A-A, B-ABA, C-C, CAB-ABC, and the two trees are disjoint
// point sets.
CorridorReport corridors_check(const std::string& v);

// --- rendering --------------------------------------------------------------

std::string emit_partition_svg(const Partition& p);
std::string emit_partition_json(const Partition& p);
std::string emit_curve_svg(const GridCurve& c, bool unfolded = false);
std::string emit_curve_json(const GridCurve& c, bool unfolded = false);

}  // namespace selfsim
