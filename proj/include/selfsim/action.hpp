#pragma once

#include <string>
#include <vector>

#include "selfsim/system.hpp"

namespace selfsim {

enum class Tri { no = 0, yes = 1, undecided = 2 };

const char* tri_name(Tri t);

// SELFSIM_BUDGET from the environment, else 1000000.
long default_budget();

// Image of a tree word under the group word g (rightmost letter of g acts
// first).  Letters of w are 0-based alphabet indices, w[0] the root level.
std::vector<int> act(const System& sys, const Word& g, const std::vector<int>& w);

// Decides triviality by closing the word under sections.  A nontrivial root
// permutation anywhere in the closure refutes; a completed closure with
// identity permutations everywhere proves.  The budget caps how many words
// get expanded before giving up; max_len caps how long a section word may
// grow before its branch is abandoned (the result is then at best undecided).
Tri is_trivial(const System& sys, Word w, long budget = -1, int max_len = -1);

// Same search, but only states within the given depth count; a completed
// pass certifies the action is trivial on levels <= depth only.
Tri is_trivial_to_depth(const System& sys, Word w, int depth, long budget = -1);

Tri equal(const System& sys, const Word& a, const Word& b, long budget = -1);

struct OrderResult {
  Tri status;  // yes: order found, no: no order <= max_k, undecided: budget
  int order = 0;
};
OrderResult order_of(const System& sys, const Word& g, int max_k = 16, long budget = -1);

// Orbit sizes of the full generator set acting on level-n words, descending.
std::vector<long> orbit_sizes(const System& sys, int level);

// States whose root permutation moves some letter across lettermap classes
// refute; otherwise the group word acts trivially on projected words down to
// the given depth.
Tri projected_trivial(const System& sys, Word w, const std::vector<int>& lettermap,
                      int depth, long budget = -1);

struct MorphismReport {
  bool ok = false;
  std::string detail;
};

// Verifies lettermap(g . w) == genmap(g) . lettermap(w) for every generator g
// and every tree word w with |w| <= depth.  genmap entries are words over
// dst's generators; lettermap sends src letters to dst letters.
MorphismReport check_morphism(const System& src, const System& dst,
                              const std::vector<Word>& genmap,
                              const std::vector<int>& lettermap, int depth);

// Involution audit for one declared generator: re-proves g*g = e with g's own
// involution reduction switched off (other declarations stay), so the check
// cannot assume what it is proving.  Falls back to a depth-bounded action
// check when the closure search gives up.
struct InvolutionReport {
  Tri algebraic;    // is_trivial(g*g) without g's reduction rule
  bool action_ok;   // g*g acts trivially to action_depth
  int action_depth;
};
InvolutionReport check_involution(const System& sys, int gen, int action_depth = 12,
                                  long budget = -1);

}  // namespace selfsim
