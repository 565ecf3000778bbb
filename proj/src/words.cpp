#include "selfsim/words.hpp"

#include <cctype>
#include <stdexcept>

namespace selfsim {

int GenSet::id(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->gen, !it->inv});
  return out;
}

void reduce(const GenSet& gs, Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (gs[l.gen].involution) l.inv = false;
    if (!out.empty() && out.back().gen == l.gen) {
      bool cancel = gs[l.gen].involution ? out.back().inv == l.inv
                                         : out.back().inv != l.inv;
      if (cancel) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(l);
  }
  w = std::move(out);
}

Word reduced(const GenSet& gs, Word w) {
  reduce(gs, w);
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string format_word(const GenSet& gs, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += gs[w[i].gen].name;
    if (w[i].inv) out += "^-1";
  }
  return out;
}

Word parse_word(const GenSet& gs, const std::string& text) {
  Word out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto ident = [&]() -> std::string {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) throw std::runtime_error("expected generator name in word: " + text);
    return text.substr(start, pos - start);
  };
  std::string first = ident();
  skip_ws();
  if (first == "e") {
    if (pos != text.size()) throw std::runtime_error("unexpected input after 'e': " + text);
    return out;
  }
  pos = 0;
  for (;;) {
    std::string name = ident();
    int g = gs.id(name);
    if (g < 0) throw std::runtime_error("unknown generator '" + name + "'");
    bool inv = false;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      if (text.compare(pos, 3, "^-1") != 0)
        throw std::runtime_error("expected ^-1 in word: " + text);
      pos += 3;
      inv = true;
    }
    out.push_back(Letter{static_cast<std::uint8_t>(g), inv});
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw std::runtime_error("expected '*' in word: " + text);
    ++pos;
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : w) {
    h = (h ^ l.gen) * 1099511628211ull;
    h = (h ^ static_cast<std::size_t>(l.inv)) * 1099511628211ull;
  }
  return h;
}

}  // namespace selfsim
