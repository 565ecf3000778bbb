#include "selfsim/contraction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace selfsim {

Canonicalizer::Canonicalizer(const System& sys, int sig_depth, long budget)
    : sys_(sys), sig_depth_(sig_depth), budget_(budget) {
  int k = sys.letters();
  std::vector<std::vector<int>> level{{}};
  for (int d = 1; d <= sig_depth_; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& w : level)
      for (int x = 0; x < k; ++x) {
        std::vector<int> nw = w;
        nw.push_back(x);
        next.push_back(std::move(nw));
      }
    for (const auto& w : next) probe_words_.push_back(w);
    level = std::move(next);
  }
}

std::string Canonicalizer::signature(const Word& w) {
  std::string sig;
  sig.reserve(probe_words_.size() * 2);
  for (const auto& probe : probe_words_) {
    std::vector<int> img = act(sys_, w, probe);
    for (int x : img) sig += static_cast<char>('a' + x);
    sig += '|';
  }
  return sig;
}

int Canonicalizer::canon(Word w) {
  reduce(sys_.sgens, w);
  auto it = exact_.find(w);
  if (it != exact_.end()) {
    int id = it->second;
    if (shortlex_less(w, display_[static_cast<size_t>(id)])) display_[static_cast<size_t>(id)] = w;
    return id;
  }
  std::string sig = signature(w);
  auto& bucket = buckets_[sig];
  for (int id : bucket) {
    Tri t = equal(sys_, w, reps_[static_cast<size_t>(id)], budget_);
    if (t == Tri::undecided) {
      undecided_ = true;
      return -1;
    }
    if (t == Tri::yes) {
      exact_.emplace(w, id);
      if (shortlex_less(w, display_[static_cast<size_t>(id)])) display_[static_cast<size_t>(id)] = w;
      return id;
    }
  }
  int id = static_cast<int>(reps_.size());
  reps_.push_back(w);
  display_.push_back(w);
  bucket.push_back(id);
  exact_.emplace(std::move(w), id);
  return id;
}

namespace {

struct NucleusBuilder {
  const System& sys;
  const NucleusOptions& opts;
  Canonicalizer canon;
  // per canonical id: permutation and per-letter (output, section id)
  std::vector<Perm> perms;
  std::vector<std::vector<std::pair<int, int>>> arrows;

  NucleusBuilder(const System& s, const NucleusOptions& o)
      : sys(s), opts(o), canon(s, o.sig_depth, o.triv_budget) {}

  bool expand(int id) {
    while (static_cast<int>(arrows.size()) <= id) {
      int cur = static_cast<int>(arrows.size());
      WreathElem we = wreath_of_word(sys, canon.display(cur));
      std::vector<std::pair<int, int>> row(static_cast<size_t>(sys.letters()));
      for (int x = 0; x < sys.letters(); ++x) {
        int sid = canon.canon(we.secs[static_cast<size_t>(x)]);
        if (sid < 0) return false;
        row[static_cast<size_t>(x)] = {we.perm(x), sid};
      }
      perms.push_back(we.perm);
      arrows.push_back(std::move(row));
    }
    return true;
  }

  // close S under sections
  bool close(std::set<int>& S) {
    std::deque<int> todo(S.begin(), S.end());
    while (!todo.empty()) {
      int id = todo.front();
      todo.pop_front();
      if (!expand(id)) return false;
      if (canon.count() > opts.state_budget) return false;
      for (auto [out, sid] : arrows[static_cast<size_t>(id)]) {
        (void)out;
        if (S.insert(sid).second) todo.push_back(sid);
      }
    }
    return true;
  }

  // states of S on or downstream of a cycle of the section map
  std::set<int> eventual_image(const std::set<int>& S) {
    // Tarjan over the subgraph induced by S
    std::unordered_map<int, int> index, low;
    std::unordered_map<int, bool> onstack;
    std::vector<int> stack;
    std::set<int> cyclic;
    int counter = 0;

    struct Frame {
      int v;
      size_t edge = 0;
    };
    for (int root : S) {
      if (index.count(root)) continue;
      std::vector<Frame> frames{{root}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      onstack[root] = true;
      while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& row = arrows[static_cast<size_t>(f.v)];
        if (f.edge < row.size()) {
          int w = row[f.edge++].second;
          if (!S.count(w)) continue;
          if (!index.count(w)) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            onstack[w] = true;
            frames.push_back({w});
          } else if (onstack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
        } else {
          if (low[f.v] == index[f.v]) {
            std::vector<int> comp;
            for (;;) {
              int w = stack.back();
              stack.pop_back();
              onstack[w] = false;
              comp.push_back(w);
              if (w == f.v) break;
            }
            bool has_cycle = comp.size() > 1;
            if (!has_cycle)
              for (auto [out, sid] : arrows[static_cast<size_t>(comp[0])]) {
                (void)out;
                if (sid == comp[0]) has_cycle = true;
              }
            if (has_cycle) cyclic.insert(comp.begin(), comp.end());
          }
          int v = f.v;
          frames.pop_back();
          if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
    // forward closure of the cyclic states
    std::set<int> keep;
    std::deque<int> todo(cyclic.begin(), cyclic.end());
    keep.insert(cyclic.begin(), cyclic.end());
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop_front();
      for (auto [out, sid] : arrows[static_cast<size_t>(v)]) {
        (void)out;
        if (keep.insert(sid).second) todo.push_back(sid);
      }
    }
    return keep;
  }
};

}  // namespace

Nucleus nucleus(const System& sys, const NucleusOptions& opts) {
  Nucleus result;
  NucleusBuilder nb(sys, opts);

  std::set<int> A;
  auto add = [&](const Word& w) {
    int id = nb.canon.canon(w);
    if (id >= 0) A.insert(id);
    return id >= 0;
  };
  if (!add(Word{})) return result;
  for (int g = 0; g < sys.gens.size(); ++g) {
    Letter l{static_cast<std::uint8_t>(g), false};
    if (!add(Word{l})) return result;
    if (!add(Word{Letter{l.gen, true}})) return result;
  }
  if (!nb.close(A)) {
    result.status = nb.canon.undecided() ? NucleusStatus::undecided : NucleusStatus::not_contracting;
    return result;
  }
  std::set<int> N = nb.eventual_image(A);

  for (;;) {
    std::set<int> next = N;
    for (int a : N)
      for (int b : N) {
        int id = nb.canon.canon(concat(nb.canon.display(a), nb.canon.display(b)));
        if (id < 0) {
          result.status = NucleusStatus::undecided;
          return result;
        }
        next.insert(id);
      }
    if (!nb.close(next)) {
      result.status =
          nb.canon.undecided() ? NucleusStatus::undecided : NucleusStatus::not_contracting;
      return result;
    }
    std::set<int> N2 = nb.eventual_image(next);
    if (N2 == N) break;
    N = std::move(N2);
  }

  // order states shortlex by display word
  std::vector<int> ids(N.begin(), N.end());
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return shortlex_less(nb.canon.display(a), nb.canon.display(b));
  });
  std::unordered_map<int, int> pos;
  for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
  result.status = NucleusStatus::ok;
  for (int id : ids) {
    result.states.push_back(nb.canon.display(id));
    result.perms.push_back(nb.perms[static_cast<size_t>(id)]);
    std::vector<std::pair<int, int>> row;
    for (auto [out, sid] : nb.arrows[static_cast<size_t>(id)]) row.emplace_back(out, pos.at(sid));
    result.trans.push_back(std::move(row));
  }
  return result;
}

int Nucleus::find(const System& sys, const Word& w, long budget) const {
  for (size_t i = 0; i < states.size(); ++i)
    if (equal(sys, w, states[i], budget) == Tri::yes) return static_cast<int>(i);
  return -1;
}

bool sections_within(const System& sys, const Nucleus& nuc, const Word& g, int depth,
                     long budget) {
  Canonicalizer canon(sys, 4, budget);
  std::set<int> member;
  for (const Word& s : nuc.states) {
    int id = canon.canon(s);
    if (id < 0) return false;
    member.insert(id);
  }
  int start = canon.canon(g);
  if (start < 0) return false;

  // every depth-`depth` descendant of the start state must be a member;
  // members are section-closed, so they satisfy this at any remaining depth
  std::unordered_map<int, std::vector<std::pair<int, int>>> rows;  // id -> sections
  std::map<std::pair<int, int>, bool> memo;
  std::function<bool(int, int)> good = [&](int id, int remaining) -> bool {
    if (member.count(id)) return true;
    if (remaining == 0) return false;
    auto key = std::make_pair(id, remaining);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = false;  // cycles of non-members never reach N
    auto rit = rows.find(id);
    if (rit == rows.end()) {
      WreathElem we = wreath_of_word(sys, canon.display(id));
      std::vector<std::pair<int, int>> row;
      for (int x = 0; x < sys.letters(); ++x) {
        int sid = canon.canon(we.secs[static_cast<size_t>(x)]);
        if (sid < 0) return false;
        row.emplace_back(we.perm(x), sid);
      }
      rit = rows.emplace(id, std::move(row)).first;
    }
    bool ok = true;
    for (auto [out, sid] : rit->second) {
      (void)out;
      if (!good(sid, remaining - 1)) {
        ok = false;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };
  return good(start, depth);
}

std::string moore_dot(const System& sys, const Nucleus& nuc) {
  std::string out = "digraph moore {\n  rankdir=LR;\n";
  for (size_t i = 0; i < nuc.states.size(); ++i) {
    out += "  s" + std::to_string(i) + " [label=\"" +
           format_word(sys.sgens, nuc.states[i]) + "\"];\n";
  }
  for (size_t i = 0; i < nuc.trans.size(); ++i)
    for (size_t x = 0; x < nuc.trans[i].size(); ++x) {
      auto [outl, next] = nuc.trans[i][x];
      out += "  s" + std::to_string(i) + " -> s" + std::to_string(next) + " [label=\"" +
             sys.basis[x] + "|" + sys.basis[static_cast<size_t>(outl)] + "\"];\n";
    }
  out += "}\n";
  return out;
}

std::string moore_json(const System& sys, const Nucleus& nuc) {
  nlohmann::json j;
  j["states"] = nlohmann::json::array();
  for (const Word& s : nuc.states) j["states"].push_back(format_word(sys.sgens, s));
  j["transitions"] = nlohmann::json::array();
  for (size_t i = 0; i < nuc.trans.size(); ++i)
    for (size_t x = 0; x < nuc.trans[i].size(); ++x) {
      auto [outl, next] = nuc.trans[i][x];
      j["transitions"].push_back({{"from", i},
                                  {"in", sys.basis[x]},
                                  {"out", sys.basis[static_cast<size_t>(outl)]},
                                  {"to", next}});
    }
  return j.dump(2);
}

}  // namespace selfsim
