#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace selfsim {

struct GenInfo {
  std::string name;
  bool involution = false;

  bool operator==(const GenInfo&) const = default;
};

// Ordered set of group generators.  Words are sequences of (generator,
// inverse-flag) letters; a generator declared as an involution makes g and
// g^-1 the same letter under reduction.
struct GenSet {
  std::vector<GenInfo> gens;

  int id(const std::string& name) const;
  int size() const { return static_cast<int>(gens.size()); }
  const GenInfo& operator[](int i) const { return gens[static_cast<size_t>(i)]; }
  bool operator==(const GenSet&) const = default;
};

struct Letter {
  std::uint8_t gen = 0;
  bool inv = false;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Reverse the word and flip inverse flags.  No reduction.
Word inverse(const Word& w);

// Free reduction.  Inverse flags on involution generators are cleared first,
// then adjacent cancelling pairs collapse.
void reduce(const GenSet& gs, Word& w);
Word reduced(const GenSet& gs, Word w);

Word concat(const Word& a, const Word& b);

// Length first, then letterwise (gen index, inverse flag).
bool shortlex_less(const Word& a, const Word& b);

// "e" for the empty word, otherwise factors joined with '*', inverses as ^-1.
std::string format_word(const GenSet& gs, const Word& w);

// Parses the factor syntax accepted by format_word.  Throws std::runtime_error
// on unknown generator names or malformed input.
Word parse_word(const GenSet& gs, const std::string& text);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace selfsim
