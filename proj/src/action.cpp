#include "selfsim/action.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace selfsim {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    default: return "undecided";
  }
}

long default_budget() {
  if (const char* env = std::getenv("SELFSIM_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 1000000;
}

std::vector<int> act(const System& sys, const Word& g, const std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  Word cur = reduced(sys.sgens, g);
  for (int x : w) {
    if (x < 0 || x >= sys.letters())
      throw std::out_of_range("letter " + std::to_string(x) +
                              " outside alphabet of size " +
                              std::to_string(sys.letters()));
    Word sec;
    out.push_back(act_letter(sys, cur, x, &sec));
    cur = std::move(sec);
  }
  return out;
}

namespace {

struct Search {
  const System& sys;
  long budget;
  std::size_t max_len;
  long used = 0;
  bool pruned = false;
  std::unordered_set<Word, WordHash> visited;
  std::deque<std::pair<Word, int>> queue;  // word, depth reached so far

  Search(const System& s, long b, int ml)
      : sys(s),
        budget(b < 0 ? default_budget() : b),
        max_len(ml < 0 ? 4096 : static_cast<std::size_t>(ml)) {}

  void push(Word w, int depth) {
    if (w.empty()) return;
    if (w.size() > max_len) {
      // sections stopped shrinking under free reduction; give up on this branch
      pruned = true;
      return;
    }
    if (visited.insert(w).second) queue.emplace_back(std::move(w), depth);
  }
};

// shared closure walk; depth_limit < 0 means unbounded (full proof)
Tri closure_trivial(const System& sys, Word w, int depth_limit, long budget,
                    const std::vector<int>* lettermap, int max_len) {
  if (!sys.self) throw std::runtime_error("triviality needs a self-similar system");
  reduce(sys.sgens, w);
  Search s(sys, budget, max_len);
  s.push(std::move(w), 0);
  while (!s.queue.empty()) {
    if (++s.used > s.budget) return Tri::undecided;
    auto [cur, depth] = std::move(s.queue.front());
    s.queue.pop_front();
    // a state at depth d drives the action on level d+1
    if (depth_limit >= 0 && depth >= depth_limit) continue;
    WreathElem we = wreath_of_word(sys, cur);
    if (lettermap) {
      for (int i = 0; i < sys.letters(); ++i)
        if ((*lettermap)[static_cast<size_t>(we.perm(i))] != (*lettermap)[static_cast<size_t>(i)])
          return Tri::no;
    } else if (!we.perm.is_identity()) {
      return Tri::no;
    }
    if (depth_limit >= 0 && depth + 1 >= depth_limit) continue;
    for (int i = 0; i < sys.letters(); ++i) s.push(std::move(we.secs[static_cast<size_t>(i)]), depth + 1);
  }
  return s.pruned ? Tri::undecided : Tri::yes;
}

}  // namespace

Tri is_trivial(const System& sys, Word w, long budget, int max_len) {
  return closure_trivial(sys, std::move(w), -1, budget, nullptr, max_len);
}

Tri is_trivial_to_depth(const System& sys, Word w, int depth, long budget) {
  return closure_trivial(sys, std::move(w), depth, budget, nullptr, -1);
}

Tri equal(const System& sys, const Word& a, const Word& b, long budget) {
  return is_trivial(sys, concat(a, inverse(b)), budget);
}

OrderResult order_of(const System& sys, const Word& g, int max_k, long budget) {
  Word pw;
  bool sawUndecided = false;
  for (int k = 1; k <= max_k; ++k) {
    pw = reduced(sys.sgens, concat(pw, g));
    Tri t = is_trivial(sys, pw, budget);
    if (t == Tri::yes) return {Tri::yes, k};
    if (t == Tri::undecided) sawUndecided = true;
  }
  return {sawUndecided ? Tri::undecided : Tri::no, 0};
}

Tri projected_trivial(const System& sys, Word w, const std::vector<int>& lettermap,
                      int depth, long budget) {
  return closure_trivial(sys, std::move(w), depth, budget, &lettermap, -1);
}

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(long n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
};

std::vector<int> decode(long idx, int k, int level) {
  std::vector<int> w(static_cast<size_t>(level));
  for (int j = level - 1; j >= 0; --j) {
    w[static_cast<size_t>(j)] = static_cast<int>(idx % k);
    idx /= k;
  }
  return w;
}

long encode(const std::vector<int>& w, int k) {
  long idx = 0;
  for (int x : w) idx = idx * k + x;
  return idx;
}

}  // namespace

std::vector<long> orbit_sizes(const System& sys, int level) {
  int k = sys.letters();
  long total = 1;
  for (int i = 0; i < level; ++i) total *= k;
  DSU dsu(total);
  for (int g = 0; g < sys.gens.size(); ++g) {
    Word gw{Letter{static_cast<std::uint8_t>(g), false}};
    for (long idx = 0; idx < total; ++idx) {
      std::vector<int> w = decode(idx, k, level);
      dsu.unite(static_cast<int>(idx), static_cast<int>(encode(act(sys, gw, w), k)));
    }
  }
  std::vector<long> count(static_cast<size_t>(total), 0);
  for (long idx = 0; idx < total; ++idx) ++count[static_cast<size_t>(dsu.find(static_cast<int>(idx)))];
  std::vector<long> sizes;
  for (long c : count)
    if (c > 0) sizes.push_back(c);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

MorphismReport check_morphism(const System& src, const System& dst,
                              const std::vector<Word>& genmap,
                              const std::vector<int>& lettermap, int depth) {
  if (static_cast<int>(genmap.size()) != src.gens.size())
    return {false, "genmap size mismatch"};
  if (static_cast<int>(lettermap.size()) != src.letters())
    return {false, "lettermap size mismatch"};
  int k = src.letters();
  for (int g = 0; g < src.gens.size(); ++g) {
    Word gw{Letter{static_cast<std::uint8_t>(g), false}};
    for (int level = 1; level <= depth; ++level) {
      long total = 1;
      for (int i = 0; i < level; ++i) total *= k;
      for (long idx = 0; idx < total; ++idx) {
        std::vector<int> w = decode(idx, k, level);
        std::vector<int> lhs = act(src, gw, w);
        for (int& x : lhs) x = lettermap[static_cast<size_t>(x)];
        std::vector<int> mapped(w.size());
        for (size_t j = 0; j < w.size(); ++j) mapped[j] = lettermap[static_cast<size_t>(w[j])];
        std::vector<int> rhs = act(dst, genmap[static_cast<size_t>(g)], mapped);
        if (lhs != rhs) {
          std::string detail = "mismatch at generator " + src.gens[g].name + ", word";
          for (int x : w) detail += " " + src.basis[static_cast<size_t>(x)];
          return {false, detail};
        }
      }
    }
  }
  return {true, ""};
}

InvolutionReport check_involution(const System& sys, int gen, int action_depth, long budget) {
  if (!sys.gens[gen].involution)
    throw std::runtime_error("generator is not declared an involution");
  System stripped = sys;
  stripped.gens.gens[static_cast<size_t>(gen)].involution = false;
  stripped.sgens = stripped.gens;
  Letter l{static_cast<std::uint8_t>(gen), false};
  Word square{l, l};
  InvolutionReport rep;
  // the unbounded closure is a best-effort probe: saturating squares finish
  // with short words in a few thousand pops, and anything else should fail
  // fast (by the length cap) instead of burning the whole budget
  long probe = budget < 0 ? default_budget() : budget;
  rep.algebraic = is_trivial(stripped, square, std::min(probe, 20000L), 64);
  rep.action_depth = action_depth;
  rep.action_ok = is_trivial_to_depth(stripped, square, action_depth, budget) == Tri::yes;
  return rep;
}

}  // namespace selfsim
