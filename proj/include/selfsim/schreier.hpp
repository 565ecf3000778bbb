#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/system.hpp"

namespace selfsim {

// Edge-labeled orbit graph of the three-generator action on the level set
// selected by a parameter word v.  Vertices are the binary level words; each
// of alpha/beta/gamma acts as an involution, so every label class is a
// partial matching plus loops.  Loops are kept in the data and skipped by
// the renderers unless asked for.
struct SchreierGraph {
  struct Edge {
    int u = 0, w = 0;  // vertex ids, u <= w; loop when u == w
    int label = 0;     // 0 alpha, 1 beta, 2 gamma
    auto operator<=>(const Edge&) const = default;
  };

  std::string v;                   // parameter word
  std::vector<std::string> verts;  // binary words, lexicographic
  std::vector<Edge> edges;         // sorted, no duplicates
  std::array<std::vector<int>, 3> perm;  // generator action on vertex ids
  std::map<std::string, int> marked;     // z_alpha, z_beta, z_gamma
  bool has_pos = false;
  std::vector<std::pair<long long, long long>> pos;  // unit-edge grid points
  std::vector<std::string> notes;  // embedding diagnostics

  int find_vertex(const std::string& w) const;  // -1 when absent
};

extern const char* const kSchreierLabel[3];

// Closed-form positions of the three special vertices: the unique level words
// over which some generator has a nontrivial section.
struct MarkedWords {
  std::string z_alpha, z_beta, z_gamma;
};
MarkedWords marked_words(const std::string& v);

// Builds the graph straight from the tree action.
SchreierGraph gamma_direct(const std::string& v);

// Assembles the graph for u+v out of |2^|v|| copies of the graph for u wired
// along the graph for v; equals gamma_direct(u+v) vertex for vertex.
SchreierGraph gamma_glue(const std::string& u, const std::string& v);

// One-letter extensions: append a parameter letter (two copies joined at the
// copies of z_alpha) or prepend one (each vertex doubles into an alpha-pair).
SchreierGraph rule1_extend(const SchreierGraph& g, int x);
SchreierGraph rule2_extend(const SchreierGraph& g, int x);

// Assigns grid coordinates by walking the tree from z_gamma: at every vertex
// the beta edge leaves at +90 degrees from the alpha edge and the gamma edge
// at -90 (swapped when mirror is set).  Overlaps are reported in notes, not
// treated as errors.
SchreierGraph embed(const SchreierGraph& g, bool mirror = false);

bool same_labeled_graph(const SchreierGraph& a, const SchreierGraph& b);

// Deterministic renderers; svg lays the graph out at 64 px per unit edge and
// embeds on the fly when positions are missing.
std::string emit_dot(const SchreierGraph& g, bool include_loops = false);
std::string emit_svg(const SchreierGraph& g, bool include_loops = false);
std::string emit_json(const SchreierGraph& g);

}  // namespace selfsim
