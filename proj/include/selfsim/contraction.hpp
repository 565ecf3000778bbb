#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/system.hpp"

namespace selfsim {

// Maps words to canonical representatives of their group elements.  Words with
// the same action on all tree words up to sig_depth share a bucket; within a
// bucket, equality is settled by the triviality search, so two words get the
// same id exactly when they are equal in the group.
class Canonicalizer {
 public:
  Canonicalizer(const System& sys, int sig_depth = 4, long budget = -1);

  // -1 when the equality search gave up (undecided() turns true).
  int canon(Word w);
  bool undecided() const { return undecided_; }

  int count() const { return static_cast<int>(reps_.size()); }
  // shortest word seen for the class (shortlex)
  const Word& display(int id) const { return display_[static_cast<size_t>(id)]; }
  const System& system() const { return sys_; }

 private:
  std::string signature(const Word& w);

  const System& sys_;
  int sig_depth_;
  long budget_;
  bool undecided_ = false;
  std::vector<std::vector<int>> probe_words_;
  std::unordered_map<Word, int, WordHash> exact_;
  std::unordered_map<std::string, std::vector<int>> buckets_;
  std::vector<Word> reps_;
  std::vector<Word> display_;
};

enum class NucleusStatus { ok, not_contracting, undecided };

struct Nucleus {
  NucleusStatus status = NucleusStatus::undecided;
  // canonical states sorted shortlex; index 0 is the identity
  std::vector<Word> states;
  // trans[s][x] = {output letter, next state index}
  std::vector<std::vector<std::pair<int, int>>> trans;
  std::vector<Perm> perms;

  int find(const System& sys, const Word& w, long budget = -1) const;  // -1 if absent
};

struct NucleusOptions {
  int sig_depth = 4;
  long state_budget = 20000;  // canonical classes before giving up
  long triv_budget = -1;
};

// Smallest section-closed set N with e, the generators and their inverses
// eventually landing in N, and N*N eventually landing in N: iterates
// "close under sections, keep the eventual image, add products" to a fixed
// point.  The eventual image keeps exactly the states on or downstream of
// cycles of the section map.
Nucleus nucleus(const System& sys, const NucleusOptions& opts = {});

// Every section state of g within the given depth lies in N.
bool sections_within(const System& sys, const Nucleus& nuc, const Word& g, int depth,
                     long budget = -1);

std::string moore_dot(const System& sys, const Nucleus& nuc);
std::string moore_json(const System& sys, const Nucleus& nuc);

}  // namespace selfsim
