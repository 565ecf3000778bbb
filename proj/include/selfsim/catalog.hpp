#pragma once

#include <string>
#include <vector>

#include "selfsim/system.hpp"

namespace selfsim {

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::string dsl;
  int expected_nucleus = 0;  // 0 when not pinned
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

// Parsed, cached per name.  Throws on unknown names.
const System& catalog_system(const std::string& name);

// Cross recursions used by the composition and conjugation checks.
// mba: <ga, b> over two letters with sections in <bg, a>
// mab: <bg, a> over two letters with sections in <ga, b>
// mba_full: four-letter product form with the commuting circle factor S
// mab_full: two-letter form with the circle factor T carried by a section
// sga: binary recursion of <S, ga> with sections in <T, bg>
// odo_s / odo_t: one-generator halves of the binary odometer
// b1a1: three-generator cross recursion over four letters
const System& cross_mba();
const System& cross_mab();
const System& cross_mba_full();
const System& cross_mab_full();
const System& cross_sga();
const System& cross_odo_s();
const System& cross_odo_t();
const System& cross_b1a1();

// One-letter template of the three-generator action restricted to the binary
// subtree picked out by a first-index word.  beta's nontrivial section sits
// over the letter matching the parameter; alpha and gamma do not depend on it.
const System& restrict_binary(int x1);

// Acts on a binary level word by threading the per-letter templates along the
// parameter word v.  Needs |w| <= |v|.  g is a word over alpha/beta/gamma.
std::vector<int> binary_subtree_act(const std::string& v, const Word& g,
                                    const std::vector<int>& w);

// Projects a word over the six-generator overgroup onto the binary shadow:
// alpha/beta/gamma letters vanish, a/b/c keep their names.  The matching
// letter map sends e_ij to i.
Word project_to_K(const Word& w);

// Checks the index-two embedding: move the overgroup to the basis
// (1, beta, a, beta*alpha*a); then alpha/beta/gamma map to themselves and the
// words beta*b*a and a*c*alpha*gamma satisfy the P and S recursions of the
// quartic monodromy system, verified as a morphism to the given depth.
bool imgind2_check(int depth = 8);

}  // namespace selfsim
