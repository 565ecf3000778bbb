#pragma once

#include <string>
#include <vector>

#include "selfsim/words.hpp"

namespace selfsim {

struct Perm {
  std::vector<std::uint8_t> img;  // img[i] = image of letter i

  static Perm identity(int k);
  // Cycles use 1-based letter numbers; entries must stay within 1..k.
  static Perm from_cycles(int k, const std::vector<std::vector<int>>& cycles);

  int k() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }
  bool is_identity() const;
  Perm inverse() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based

  bool operator==(const Perm&) const = default;
};

// (p*q)(i) = p(q(i))
Perm operator*(const Perm& p, const Perm& q);

struct GenRule {
  Perm perm;
  std::vector<Word> sections;  // indexed by source letter: g.x_i = x_perm(i) . sections[i]
};

// Wreath recursion.  For self-similar systems sections are words over the
// acting generators themselves (self == true, sgens == gens).  A cross
// recursion writes sections over a different generator set.
struct System {
  std::string name;
  GenSet gens;
  GenSet sgens;
  bool self = true;
  std::vector<std::string> basis;
  std::vector<GenRule> rules;

  int letters() const { return static_cast<int>(basis.size()); }
  int letter_id(const std::string& name) const;
  const GenRule& rule(int gen) const { return rules[static_cast<size_t>(gen)]; }
};

struct WreathElem {
  Perm perm;
  std::vector<Word> secs;
};

WreathElem wreath_identity(int k);
WreathElem wreath_of_gen(const System& sys, Letter l);
// Product in the wreath group, sections reduced over section_gens.
WreathElem wmul(const GenSet& section_gens, const WreathElem& a, const WreathElem& b);
WreathElem winv(const GenSet& section_gens, const WreathElem& a);
// c^-1 * a * c
WreathElem conjugated(const GenSet& section_gens, const WreathElem& c, const WreathElem& a);
WreathElem wreath_of_word(const System& sys, const Word& w);

// One letter of w acting on tree letter x; appends the section to out and
// returns the image letter.
int step(const System& sys, Letter l, int x, Word& out);
// Image of tree letter x under the whole word (rightmost letter acts first).
// The section at x, reduced, lands in *sec when sec != nullptr.
int act_letter(const System& sys, const Word& w, int x, Word* sec);

// Replaces every rule by c^-1 * rule * c.
System change_basis(const System& sys, const WreathElem& c);

// r1 maps group B over alphabet X with sections in group A; r2 maps A over Y
// with sections in B.  The result recurses B over X x Y with sections in B.
System compose_cross(const System& r1, const System& r2);

}  // namespace selfsim
