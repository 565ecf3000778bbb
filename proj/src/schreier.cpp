#include "selfsim/schreier.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "selfsim/action.hpp"
#include "selfsim/catalog.hpp"

namespace selfsim {

const char* const kSchreierLabel[3] = {"alpha", "beta", "gamma"};

namespace {

constexpr int kMaxLevel = 16;

const System& gsys() { return catalog_system("G"); }

Word gen_word(int label) {
  const System& sys = gsys();
  return parse_word(sys.gens, kSchreierLabel[label]);
}

void check_param(const std::string& v) {
  if (v.size() > kMaxLevel) throw std::invalid_argument("level too deep");
  for (char c : v)
    if (c != '0' && c != '1')
      throw std::invalid_argument("parameter word letters must be 0 or 1");
}

std::string bits(int idx, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int k = n - 1; k >= 0; --k, idx >>= 1)
    if (idx & 1) s[static_cast<size_t>(k)] = '1';
  return s;
}

// pairs the parameter word with a level word into four-letter tree letters
std::vector<int> pair_word(const std::string& v, const std::string& j) {
  std::vector<int> w(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    w[k] = 2 * (v[k] - '0') + (j[k] - '0');
  return w;
}

// section of the generator after consuming the whole level word
Word section_at(const System& sys, const Word& g, const std::vector<int>& w) {
  Word cur = reduced(sys.sgens, g);
  for (int x : w) {
    Word sec;
    act_letter(sys, cur, x, &sec);
    cur = std::move(sec);
  }
  return cur;
}

// For each generator g there is exactly one vertex z over which some
// generator h keeps a nontrivial section, and that section is g.
struct LinkInfo {
  std::array<std::string, 3> z;
  std::array<int, 3> h;
};

LinkInfo link_info(const std::string& v) {
  MarkedWords m = marked_words(v);
  LinkInfo li;
  li.z = {m.z_alpha, m.z_beta, m.z_gamma};
  const System& sys = gsys();
  for (int g = 0; g < 3; ++g) {
    li.h[g] = -1;
    std::vector<int> at = pair_word(v, li.z[static_cast<size_t>(g)]);
    for (int h = 0; h < 3; ++h) {
      if (equal(sys, section_at(sys, gen_word(h), at), gen_word(g)) == Tri::yes) {
        li.h[g] = h;
        break;
      }
    }
    if (li.h[g] < 0) throw std::logic_error("no generator carries the section");
  }
  return li;
}

void mark_from_words(SchreierGraph& g) {
  MarkedWords m = marked_words(g.v);
  g.marked = {{"z_alpha", g.find_vertex(m.z_alpha)},
              {"z_beta", g.find_vertex(m.z_beta)},
              {"z_gamma", g.find_vertex(m.z_gamma)}};
}

// rebuilds the three permutations from the edge set and validates that each
// label class is a partial matching
void perms_from_edges(SchreierGraph& g) {
  int n = static_cast<int>(g.verts.size());
  for (auto& p : g.perm) {
    p.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  }
  std::array<std::vector<bool>, 3> used;
  for (auto& u : used) u.assign(static_cast<size_t>(n), false);
  for (const auto& e : g.edges) {
    if (e.u == e.w) continue;
    auto& u = used[static_cast<size_t>(e.label)];
    if (u[static_cast<size_t>(e.u)] || u[static_cast<size_t>(e.w)])
      throw std::logic_error("label class is not a matching");
    u[static_cast<size_t>(e.u)] = u[static_cast<size_t>(e.w)] = true;
    g.perm[static_cast<size_t>(e.label)][static_cast<size_t>(e.u)] = e.w;
    g.perm[static_cast<size_t>(e.label)][static_cast<size_t>(e.w)] = e.u;
  }
}

std::vector<std::string> all_words(int n) {
  std::vector<std::string> out(static_cast<size_t>(1) << n);
  for (int i = 0; i < static_cast<int>(out.size()); ++i)
    out[static_cast<size_t>(i)] = bits(i, n);
  return out;
}

}  // namespace

int SchreierGraph::find_vertex(const std::string& w) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), w);
  if (it == verts.end() || *it != w) return -1;
  return static_cast<int>(it - verts.begin());
}

MarkedWords marked_words(const std::string& v) {
  check_param(v);
  size_t n = v.size();
  MarkedWords m;
  m.z_gamma = std::string(n, '0');
  if (n >= 1) {
    m.z_beta = std::string(n - 1, '0') + "1";
    char last = v.back() == '0' ? '1' : '0';
    std::string full = std::string(n >= 2 ? n - 2 : 0, '0') + "1" + last;
    m.z_alpha = full.substr(full.size() - n);
  }
  return m;
}

SchreierGraph gamma_direct(const std::string& v) {
  check_param(v);
  int n = static_cast<int>(v.size());
  SchreierGraph g;
  g.v = v;
  g.verts = all_words(n);
  int count = static_cast<int>(g.verts.size());
  const System& sys = gsys();
  std::set<SchreierGraph::Edge> es;
  for (int label = 0; label < 3; ++label) {
    g.perm[static_cast<size_t>(label)].resize(static_cast<size_t>(count));
    Word gw = gen_word(label);
    for (int i = 0; i < count; ++i) {
      std::vector<int> img = act(sys, gw, pair_word(v, g.verts[static_cast<size_t>(i)]));
      int j = 0;
      for (int k = 0; k < n; ++k) {
        if (img[static_cast<size_t>(k)] / 2 != v[static_cast<size_t>(k)] - '0')
          throw std::logic_error("action left the level set");
        j = j * 2 + img[static_cast<size_t>(k)] % 2;
      }
      g.perm[static_cast<size_t>(label)][static_cast<size_t>(i)] = j;
      if (n > 0) es.insert({std::min(i, j), std::max(i, j), label});
    }
  }
  g.edges.assign(es.begin(), es.end());
  mark_from_words(g);
  return g;
}

SchreierGraph gamma_glue(const std::string& u, const std::string& v) {
  check_param(u);
  check_param(v);
  if (u.size() + v.size() > kMaxLevel) throw std::invalid_argument("level too deep");
  // the root graph is bare by convention, so nothing to assemble
  if (u.empty() && v.empty()) return gamma_direct("");
  SchreierGraph gu = gamma_direct(u);
  SchreierGraph gv = gamma_direct(v);
  LinkInfo lu = link_info(u);
  LinkInfo lv = link_info(v);

  // the three loops that open up into connections between the copies
  std::set<SchreierGraph::Edge> special;
  for (int g = 0; g < 3; ++g) {
    int zi = gu.find_vertex(lu.z[static_cast<size_t>(g)]);
    special.insert({zi, zi, lu.h[static_cast<size_t>(g)]});
  }

  SchreierGraph out;
  out.v = u + v;
  out.verts = all_words(static_cast<int>(out.v.size()));
  std::set<SchreierGraph::Edge> es;
  auto id = [&](const std::string& name) { return out.find_vertex(name); };

  for (const std::string& w : gv.verts) {
    for (const auto& e : gu.edges) {
      if (special.count(e)) continue;
      int a = id(gu.verts[static_cast<size_t>(e.u)] + w);
      int b = id(gu.verts[static_cast<size_t>(e.w)] + w);
      es.insert({std::min(a, b), std::max(a, b), e.label});
    }
  }
  for (int g = 0; g < 3; ++g) {
    const std::string& z = lu.z[static_cast<size_t>(g)];
    for (int i = 0; i < static_cast<int>(gv.verts.size()); ++i) {
      int j = gv.perm[static_cast<size_t>(g)][static_cast<size_t>(i)];
      int a = id(z + gv.verts[static_cast<size_t>(i)]);
      int b = id(z + gv.verts[static_cast<size_t>(j)]);
      es.insert({std::min(a, b), std::max(a, b), lu.h[static_cast<size_t>(g)]});
    }
  }
  out.edges.assign(es.begin(), es.end());
  perms_from_edges(out);

  // marks carried over: the special vertex for g sits in the copy indexed by
  // the special vertex for g one level up
  for (int g = 0; g < 3; ++g) {
    static const char* kName[3] = {"z_alpha", "z_beta", "z_gamma"};
    const std::string& w = lv.z[static_cast<size_t>(g)];
    const std::string& a = lu.z[static_cast<size_t>(lv.h[static_cast<size_t>(g)])];
    out.marked[kName[g]] = id(a + w);
  }
  return out;
}

SchreierGraph rule1_extend(const SchreierGraph& g, int x) {
  if (x != 0 && x != 1) throw std::invalid_argument("appended letter must be 0 or 1");
  if (g.v.size() + 1 > kMaxLevel) throw std::invalid_argument("level too deep");
  LinkInfo li = link_info(g.v);
  SchreierGraph out;
  out.v = g.v + static_cast<char>('0' + x);
  out.verts = all_words(static_cast<int>(out.v.size()));
  auto id = [&](const std::string& name) { return out.find_vertex(name); };

  int za = g.find_vertex(li.z[0]);
  SchreierGraph::Edge drop{za, za, li.h[0]};
  std::set<SchreierGraph::Edge> es;
  for (char w : {'0', '1'}) {
    for (const auto& e : g.edges) {
      if (e == drop) continue;
      int a = id(g.verts[static_cast<size_t>(e.u)] + w);
      int b = id(g.verts[static_cast<size_t>(e.w)] + w);
      es.insert({std::min(a, b), std::max(a, b), e.label});
    }
    // loops over the special beta and gamma vertices stay closed
    for (int gg : {1, 2}) {
      int z = id(li.z[static_cast<size_t>(gg)] + w);
      es.insert({z, z, li.h[static_cast<size_t>(gg)]});
    }
  }
  int a0 = id(li.z[0] + "0");
  int a1 = id(li.z[0] + "1");
  es.insert({std::min(a0, a1), std::max(a0, a1), li.h[0]});
  out.edges.assign(es.begin(), es.end());
  perms_from_edges(out);

  out.marked = {{"z_alpha", id(li.z[1] + static_cast<char>('0' + 1 - x))},
                {"z_beta", id(li.z[2] + "1")},
                {"z_gamma", id(li.z[2] + "0")}};
  return out;
}

SchreierGraph rule2_extend(const SchreierGraph& g, int x) {
  if (x != 0 && x != 1) throw std::invalid_argument("prepended letter must be 0 or 1");
  if (g.v.size() + 1 > kMaxLevel) throw std::invalid_argument("level too deep");
  SchreierGraph out;
  out.v = static_cast<char>('0' + x) + g.v;
  out.verts = all_words(static_cast<int>(out.v.size()));
  auto id = [&](const std::string& name) { return out.find_vertex(name); };
  char keep = static_cast<char>('0' + x);
  char move = static_cast<char>('0' + 1 - x);

  std::set<SchreierGraph::Edge> es;
  for (int i = 0; i < static_cast<int>(g.verts.size()); ++i) {
    const std::string& w = g.verts[static_cast<size_t>(i)];
    int a0 = id("0" + w);
    int a1 = id("1" + w);
    es.insert({std::min(a0, a1), std::max(a0, a1), 0});

    int ai = g.perm[0][static_cast<size_t>(i)];
    int bi = g.perm[1][static_cast<size_t>(i)];
    int ci = g.perm[2][static_cast<size_t>(i)];
    const std::string& aw = g.verts[static_cast<size_t>(ai)];
    const std::string& bw = g.verts[static_cast<size_t>(bi)];
    const std::string& cw = g.verts[static_cast<size_t>(ci)];

    int m1 = id(move + w), m2 = id(move + aw);
    es.insert({std::min(m1, m2), std::max(m1, m2), 1});
    int k = id(keep + w);
    es.insert({k, k, 1});

    int g1 = id("0" + w), g2 = id("0" + cw);
    es.insert({std::min(g1, g2), std::max(g1, g2), 2});
    int g3 = id("1" + w), g4 = id("1" + bw);
    es.insert({std::min(g3, g4), std::max(g3, g4), 2});
  }
  out.edges.assign(es.begin(), es.end());
  perms_from_edges(out);
  mark_from_words(out);
  return out;
}

SchreierGraph embed(const SchreierGraph& g, bool mirror) {
  SchreierGraph out = g;
  int n = static_cast<int>(g.verts.size());
  out.pos.assign(static_cast<size_t>(n), {0, 0});
  out.has_pos = true;
  out.notes.clear();

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (const auto& e : g.edges) {
    if (e.u == e.w) continue;
    adj[static_cast<size_t>(e.u)].push_back({e.w, e.label});
    adj[static_cast<size_t>(e.w)].push_back({e.u, e.label});
  }

  // unit steps per label; crossing any edge flips the frame
  std::pair<long long, long long> rot[3] = {{1, 0}, {0, 1}, {0, -1}};
  if (mirror) std::swap(rot[1], rot[2]);

  auto root_it = g.marked.find("z_gamma");
  int root = root_it != g.marked.end() && root_it->second >= 0 ? root_it->second : 0;
  std::vector<int> sign(static_cast<size_t>(n), 0);
  sign[static_cast<size_t>(root)] = 1;
  std::deque<int> queue{root};
  int seen = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (auto [nbr, label] : adj[static_cast<size_t>(cur)]) {
      if (sign[static_cast<size_t>(nbr)] != 0) continue;
      out.pos[static_cast<size_t>(nbr)] = {
          out.pos[static_cast<size_t>(cur)].first +
              sign[static_cast<size_t>(cur)] * rot[label].first,
          out.pos[static_cast<size_t>(cur)].second +
              sign[static_cast<size_t>(cur)] * rot[label].second};
      sign[static_cast<size_t>(nbr)] = -sign[static_cast<size_t>(cur)];
      queue.push_back(nbr);
      ++seen;
    }
  }
  if (seen < n) out.notes.push_back("graph not connected; unreached vertices at the origin");

  std::map<std::pair<long long, long long>, int> where;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = where.insert({out.pos[static_cast<size_t>(i)], i});
    if (!fresh) {
      std::ostringstream os;
      os << "overlap: " << g.verts[static_cast<size_t>(it->second)] << " and "
         << g.verts[static_cast<size_t>(i)] << " share ("
         << out.pos[static_cast<size_t>(i)].first << ","
         << out.pos[static_cast<size_t>(i)].second << ")";
      out.notes.push_back(os.str());
    }
  }
  return out;
}

bool same_labeled_graph(const SchreierGraph& a, const SchreierGraph& b) {
  return a.v == b.v && a.verts == b.verts && a.edges == b.edges && a.marked == b.marked;
}

namespace {

const char* kEdgeColor[3] = {"#202020", "#1f6feb", "#d1242f"};

}  // namespace

std::string emit_dot(const SchreierGraph& g, bool include_loops) {
  std::ostringstream os;
  os << "graph \"gamma_" << (g.v.empty() ? "e" : g.v) << "\" {\n";
  os << "  layout=neato;\n  node [shape=point, width=0.12];\n";
  for (size_t i = 0; i < g.verts.size(); ++i) {
    os << "  \"" << g.verts[i] << "\"";
    if (g.has_pos)
      os << " [pos=\"" << g.pos[i].first << "," << g.pos[i].second << "!\"]";
    os << ";\n";
  }
  for (const auto& e : g.edges) {
    if (e.u == e.w && !include_loops) continue;
    os << "  \"" << g.verts[static_cast<size_t>(e.u)] << "\" -- \""
       << g.verts[static_cast<size_t>(e.w)] << "\" [label=\"" << kSchreierLabel[e.label]
       << "\", color=\"" << kEdgeColor[e.label] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string emit_svg(const SchreierGraph& g, bool include_loops) {
  SchreierGraph laid = g.has_pos ? g : embed(g);
  long long minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& p : laid.pos) {
    minx = std::min(minx, p.first);
    maxx = std::max(maxx, p.first);
    miny = std::min(miny, p.second);
    maxy = std::max(maxy, p.second);
  }
  const long long unit = 64, pad = 48;
  long long w = (maxx - minx) * unit + 2 * pad;
  long long h = (maxy - miny) * unit + 2 * pad;
  auto px = [&](const std::pair<long long, long long>& p) {
    return std::pair<long long, long long>{pad + (p.first - minx) * unit,
                                           pad + (maxy - p.second) * unit};
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
  for (const auto& e : laid.edges) {
    auto a = px(laid.pos[static_cast<size_t>(e.u)]);
    if (e.u == e.w) {
      if (!include_loops) continue;
      // loop glyph pushed off the vertex in the direction of its label
      long long dx = e.label == 0 ? 12 : 0;
      long long dy = e.label == 1 ? -12 : (e.label == 2 ? 12 : 0);
      os << "<circle cx=\"" << a.first + dx << "\" cy=\"" << a.second + dy
         << "\" r=\"9\" fill=\"none\" stroke=\"" << kEdgeColor[e.label]
         << "\" stroke-width=\"1.5\"/>\n";
      continue;
    }
    auto b = px(laid.pos[static_cast<size_t>(e.w)]);
    os << "<line x1=\"" << a.first << "\" y1=\"" << a.second << "\" x2=\"" << b.first
       << "\" y2=\"" << b.second << "\" stroke=\"" << kEdgeColor[e.label]
       << "\" stroke-width=\"2\"/>\n";
  }
  for (size_t i = 0; i < laid.verts.size(); ++i) {
    auto p = px(laid.pos[i]);
    os << "<circle cx=\"" << p.first << "\" cy=\"" << p.second
       << "\" r=\"4\" fill=\"#202020\"/>\n";
  }
  for (const auto& [name, idx] : laid.marked) {
    if (idx < 0) continue;
    auto p = px(laid.pos[static_cast<size_t>(idx)]);
    os << "<circle cx=\"" << p.first << "\" cy=\"" << p.second
       << "\" r=\"8\" fill=\"none\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_json(const SchreierGraph& g) {
  nlohmann::ordered_json j;
  j["parameter"] = g.v;
  j["vertices"] = g.verts;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"u", g.verts[static_cast<size_t>(e.u)]},
                     {"w", g.verts[static_cast<size_t>(e.w)]},
                     {"label", kSchreierLabel[e.label]},
                     {"loop", e.u == e.w}});
  }
  auto& marked = j["marked"] = nlohmann::ordered_json::object();
  for (const auto& [name, idx] : g.marked)
    marked[name] = idx >= 0 ? nlohmann::ordered_json(g.verts[static_cast<size_t>(idx)])
                            : nlohmann::ordered_json(nullptr);
  if (g.has_pos) {
    auto& pos = j["positions"] = nlohmann::ordered_json::object();
    for (size_t i = 0; i < g.verts.size(); ++i)
      pos[g.verts[i]] = {g.pos[i].first, g.pos[i].second};
  }
  if (!g.notes.empty()) j["notes"] = g.notes;
  return j.dump(2) + "\n";
}

}  // namespace selfsim
