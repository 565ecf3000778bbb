#include "selfsim/pillow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "selfsim/action.hpp"
#include "selfsim/catalog.hpp"
#include "selfsim/words.hpp"

namespace selfsim {

namespace {

long long pow2ll(int k) { return 1LL << k; }

}  // namespace

DyadicGauss::DyadicGauss(long long r, long long i, int e) : re(r), im(i), exp(e) {
  if (exp < 0) {
    long long f = pow2ll(-exp);
    re *= f;
    im *= f;
    exp = 0;
  }
  while (exp > 0 && re % 2 == 0 && im % 2 == 0) {
    re /= 2;
    im /= 2;
    --exp;
  }
}

DyadicGauss DyadicGauss::operator+(const DyadicGauss& o) const {
  int e = std::max(exp, o.exp);
  long long f1 = pow2ll(e - exp), f2 = pow2ll(e - o.exp);
  return {re * f1 + o.re * f2, im * f1 + o.im * f2, e};
}

DyadicGauss DyadicGauss::operator-(const DyadicGauss& o) const {
  return *this + (-o);
}

DyadicGauss DyadicGauss::operator-() const { return {-re, -im, exp}; }

DyadicGauss DyadicGauss::operator*(const DyadicGauss& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re, exp + o.exp};
}

DyadicGauss DyadicGauss::times_pow2(int k) const {
  return {re, im, exp - k};
}

DyadicGauss DyadicGauss::inverse() const {
  long long n2 = re * re + im * im;
  if (n2 == 0) throw std::domain_error("zero has no inverse");
  if ((n2 & (n2 - 1)) != 0)
    throw std::domain_error("inverse is not dyadic");
  int k = 0;
  while (pow2ll(k) < n2) ++k;
  return DyadicGauss(re, -im, k - exp);
}

bool DyadicGauss::operator<(const DyadicGauss& o) const {
  int e = std::max(exp, o.exp);
  long long f1 = pow2ll(e - exp), f2 = pow2ll(e - o.exp);
  long long a1 = re * f1, a2 = o.re * f2;
  if (a1 != a2) return a1 < a2;
  return im * f1 < o.im * f2;
}

double DyadicGauss::real() const { return std::ldexp((double)re, -exp); }
double DyadicGauss::imag() const { return std::ldexp((double)im, -exp); }

std::string DyadicGauss::str() const {
  std::ostringstream os;
  if (exp == 0) {
    os << re;
    os << (im < 0 ? "" : "+") << im << "i";
  } else {
    os << "(" << re << (im < 0 ? "" : "+") << im << "i)/" << pow2ll(exp);
  }
  return os.str();
}

namespace {

DyadicGauss coeff_of(const AffineMap& m) {
  return m.sign < 0 ? -m.scale : m.scale;
}

}  // namespace

DyadicGauss AffineMap::operator()(const DyadicGauss& z) const {
  return coeff_of(*this) * z + shift;
}

AffineMap AffineMap::then(const AffineMap& g) const {
  AffineMap r;
  r.sign = sign * g.sign;
  r.scale = scale * g.scale;
  r.shift = coeff_of(g) * shift + g.shift;
  return r;
}

AffineMap AffineMap::inverse() const {
  AffineMap r;
  r.sign = sign;
  r.scale = scale.inverse();
  r.shift = -(coeff_of(r) * shift);
  return r;
}

bool AffineMap::same_map(const AffineMap& o) const {
  return coeff_of(*this) == coeff_of(o) && shift == o.shift;
}

namespace {

AffineMap gen_affine(char c) {
  AffineMap m;
  m.sign = -1;
  switch (c) {
    case 'A': m.shift = {1, 0, 0}; break;
    case 'B': m.shift = {1, 1, 0}; break;
    case 'C': m.shift = {0, 0, 0}; break;
    default: throw std::invalid_argument("unknown plane generator");
  }
  return m;
}

AffineMap letter_affine(int i) {
  AffineMap m;
  switch (i) {
    case 0: m.sign = 1;  m.scale = {1, -1, 1}; break;
    case 1: m.sign = -1; m.scale = {1, -1, 1}; m.shift = {1, 1, 1}; break;
    case 2: m.sign = 1;  m.scale = {1, 1, 1};  break;
    case 3: m.sign = -1; m.scale = {1, 1, 1};  m.shift = {1, 1, 1}; break;
    default: throw std::invalid_argument("basis letter out of range");
  }
  return m;
}

}  // namespace

AffineMap affine_of_word(const std::string& w) {
  AffineMap f;
  for (size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (c == ' ' || c == '*' || c == '.' || c == 'e') continue;
    if (c == 'A' || c == 'B' || c == 'C') {
      f = f.then(gen_affine(c));
      continue;
    }
    if (c == 'x' && i + 1 < w.size() && w[i + 1] >= '1' && w[i + 1] <= '4') {
      f = f.then(letter_affine(w[i + 1] - '1'));
      ++i;
      continue;
    }
    throw std::invalid_argument("bad letter in affine word");
  }
  return f;
}

LattesReport verify_lattes() {
  LattesReport rep;
  auto note = [&](bool ok, const std::string& line) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  };
  const System& H = catalog_system("H");
  auto aff_of_letters = [&](const Word& w) {
    AffineMap f;
    for (const Letter& l : w) f = f.then(gen_affine(H.gens[l.gen].name[0]));
    return f;
  };
  struct Row {
    char g;
    int i, j;
    const char* sec;
  };
  static const Row rows[] = {
      {'A', 0, 1, "BA"}, {'A', 1, 0, "AB"},  {'A', 2, 3, ""},    {'A', 3, 2, ""},
      {'B', 0, 0, "A"},  {'B', 1, 1, "CAB"}, {'B', 2, 2, "CAB"}, {'B', 3, 3, "A"},
      {'C', 0, 0, "C"},  {'C', 1, 1, "B"},   {'C', 2, 2, "C"},   {'C', 3, 3, "B"},
  };
  for (const Row& r : rows) {
    AffineMap lhs = affine_of_word(std::string(1, r.g)).then(letter_affine(r.i));
    AffineMap rhs = letter_affine(r.j).then(affine_of_word(r.sec));
    bool plane = lhs.same_map(rhs);
    Word g = parse_word(H.gens, std::string(1, r.g));
    Word sec;
    int img = act_letter(H, g, r.i, &sec);
    bool table = img == r.j && aff_of_letters(sec).same_map(affine_of_word(r.sec));
    std::ostringstream os;
    os << r.g << ".x" << (r.i + 1) << " = x" << (r.j + 1);
    if (r.sec[0] != '\0') os << "." << r.sec;
    note(plane && table, os.str());
  }
  AffineMap cab = affine_of_word("CAB");
  AffineMap half_turn_i;
  half_turn_i.sign = -1;
  half_turn_i.shift = {0, 1, 0};
  note(cab.same_map(half_turn_i), "CAB = half turn with shift i");
  for (char c : {'A', 'B', 'C'}) {
    AffineMap sq = gen_affine(c).then(gen_affine(c));
    note(sq.same_map(AffineMap{}), std::string(1, c) + " is an involution");
  }
  return rep;
}

// --- lattice helpers ---------------------------------------------------------

namespace {

const DyadicGauss kXi{1, 1, 2};
const DyadicGauss kZeta2{1, -1, 2};
const DyadicGauss kI{0, 1, 0};
const DyadicGauss kTwo{2, 0, 0};

// steps to the labeled neighbors as seen from a positive parity point
const DyadicGauss kDelta[4] = {
    {1, -1, 1},   // A
    {1, 1, 1},    // B
    {-1, -1, 1},  // C
    {-1, 1, 1},   // CAB
};

// steps of the conjugated generating set on the reflected orbit;
// the fourth entry only names crossing directions
const DyadicGauss kSDelta[4] = {
    {1, 1, 1},    // A
    {1, -1, 1},   // ABA
    {-1, 1, 1},   // C
    {-1, -1, 1},  // ABC
};

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

const DyadicGauss& lattice_base(int n) {
  static const std::vector<DyadicGauss> cache = [] {
    std::vector<DyadicGauss> c{DyadicGauss{1, 0, 0}};
    for (int k = 1; k <= 24; ++k) c.push_back(c.back() * DyadicGauss{1, 1, 0});
    return c;
  }();
  return cache[n];
}

// p minus the lattice element that carries it into the fundamental cell
DyadicGauss reduce_cell(const DyadicGauss& p, int n) {
  const DyadicGauss& u = lattice_base(n);
  DyadicGauss s = p * u.conj();
  long long den = pow2ll(s.exp + n);
  long long fa = floor_div(s.re, den);
  long long fb = floor_div(s.im, den);
  return p - u * DyadicGauss{fa, 0, 0} - (u * kI) * DyadicGauss{fb, 0, 0};
}

bool is_orbit_pt(const DyadicGauss& p) {
  return (p - kXi).is_integral() || (p + kXi).is_integral();
}

int parity2(const DyadicGauss& p) {
  if ((p - kZeta2).is_integral()) return 1;
  if ((p + kZeta2).is_integral()) return -1;
  throw std::invalid_argument("not a reflected orbit point");
}

DyadicGauss sigma_step(const DyadicGauss& p, int label) {
  DyadicGauss d = kSDelta[label];
  return parity2(p) > 0 ? p + d : p - d;
}

using Key = std::tuple<long long, long long, int>;
Key key_of(const DyadicGauss& g) { return {g.re, g.im, g.exp}; }

}  // namespace

DyadicGauss pillow_canon(const DyadicGauss& p, int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("level out of range");
  DyadicGauss a = reduce_cell(p, n);
  DyadicGauss b = reduce_cell(-p, n);
  return b < a ? b : a;
}

int pillow_parity(const DyadicGauss& p) {
  if ((p - kXi).is_integral()) return 1;
  if ((p + kXi).is_integral()) return -1;
  throw std::invalid_argument("not a basepoint orbit point");
}

const char* const kPillowLabelName[4] = {"A", "B", "C", "CAB"};

DyadicGauss pillow_step(const DyadicGauss& p, int label) {
  if (label < 0 || label > 3) throw std::invalid_argument("bad edge label");
  DyadicGauss d = kDelta[label];
  return pillow_parity(p) > 0 ? p + d : p - d;
}

int PillowGraph::find(const DyadicGauss& canon_rep) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), canon_rep);
  if (it == verts.end() || !(*it == canon_rep)) return -1;
  return (int)(it - verts.begin());
}

PillowGraph pillow_graph(int n) {
  if (n < 0 || n > 16) throw std::invalid_argument("level out of range");
  PillowGraph g;
  g.n = n;
  std::map<Key, int> index;
  std::vector<DyadicGauss> reps;
  auto intern = [&](const DyadicGauss& c) {
    auto it = index.find(key_of(c));
    if (it != index.end()) return it->second;
    int id = (int)reps.size();
    index.emplace(key_of(c), id);
    reps.push_back(c);
    return id;
  };
  std::set<std::tuple<int, int, int>> eset;
  intern(pillow_canon(kXi, n));
  for (size_t i = 0; i < reps.size(); ++i) {
    DyadicGauss p = reps[i];
    for (int label = 0; label < 4; ++label) {
      int j = intern(pillow_canon(pillow_step(p, label), n));
      eset.insert({std::min<int>((int)i, j), std::max<int>((int)i, j), label});
    }
  }
  if ((long long)reps.size() != pow2ll(n))
    throw std::logic_error("orbit size is off at this level");
  std::vector<int> order(reps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return reps[a] < reps[b]; });
  std::vector<int> where(reps.size());
  for (size_t i = 0; i < order.size(); ++i) where[order[i]] = (int)i;
  g.verts.resize(reps.size());
  for (size_t i = 0; i < order.size(); ++i) g.verts[i] = reps[order[i]];
  std::set<std::tuple<int, int, int>> remapped;
  for (const auto& [a, b, label] : eset) {
    int u = where[a], w = where[b];
    if (u > w) std::swap(u, w);
    remapped.insert({u, w, label});
  }
  for (const auto& [u, w, label] : remapped) g.edges.push_back({u, w, label, u == w});
  static const DyadicGauss fixed[4] = {{1, 0, 1}, {1, 1, 1}, {0, 0, 0}, {0, 1, 1}};
  for (int k = 0; k < 4; ++k) g.singular[k] = pillow_canon(fixed[k], n);
  return g;
}

// --- level components and the two trees --------------------------------------

namespace {

std::vector<std::string> component_words(const std::string& v) {
  for (char c : v)
    if (c != 'L' && c != 'R')
      throw std::invalid_argument("parameter letters must be L or R");
  int n = (int)v.size();
  if (n > 14) throw std::invalid_argument("parameter too long");
  std::vector<std::string> words((size_t)1 << n);
  for (long long i = 0; i < (long long)words.size(); ++i) {
    std::string w(n, '0');
    for (int k = 0; k < n; ++k) {
      int bit = (int)((i >> (n - 1 - k)) & 1);
      w[k] = (char)((v[k] == 'L' ? '1' : '3') + bit);
    }
    words[i] = w;
  }
  return words;
}

std::string act_word_letters(const System& sys, const Word& g, const std::string& w) {
  std::vector<int> lv(w.size());
  for (size_t k = 0; k < w.size(); ++k) lv[k] = w[k] - '1';
  std::vector<int> r = act(sys, g, lv);
  std::string out(w.size(), '0');
  for (size_t k = 0; k < w.size(); ++k) out[k] = (char)('1' + r[k]);
  return out;
}

}  // namespace

int Partition::word_index(const std::string& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) return -1;
  return (int)(it - words.begin());
}

Partition partition(const std::string& v) {
  Partition P;
  P.v = v;
  P.n = (int)v.size();
  P.words = component_words(v);
  P.graph = pillow_graph(P.n);
  const System& H = catalog_system("H");
  const System& X = catalog_system("GhatX");
  const Word hgen[4] = {parse_word(H.gens, "A"), parse_word(H.gens, "B"),
                        parse_word(H.gens, "C"), parse_word(H.gens, "C*A*B")};
  const Word half1[2] = {parse_word(X.gens, "beta1"), parse_word(X.gens, "gamma1")};
  const Word half2[2] = {parse_word(X.gens, "beta2"), parse_word(X.gens, "gamma2")};
  long long total = (long long)P.words.size();
  auto widx = [&](const std::string& w) {
    int i = P.word_index(w);
    if (i < 0) throw std::logic_error("action left the component");
    return i;
  };
  P.root = 0;  // the all zero second indices sort first
  P.point_of.assign(P.words.size(), -1);
  int base = P.graph.find(pillow_canon(kXi, P.n));
  if (base < 0) throw std::logic_error("basepoint missing from the level graph");
  P.point_of[P.root] = base;
  std::deque<int> queue{P.root};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    DyadicGauss p = P.graph.verts[P.point_of[i]];
    for (int label = 0; label < 4; ++label) {
      int j = widx(act_word_letters(H, hgen[label], P.words[i]));
      int t = P.graph.find(pillow_canon(pillow_step(p, label), P.n));
      if (t < 0) throw std::logic_error("step left the level graph");
      if (j == i) {
        if (t != P.point_of[i])
          throw std::logic_error("word loop is not a point loop");
        continue;
      }
      if (P.point_of[j] < 0) {
        P.point_of[j] = t;
        queue.push_back(j);
      } else if (P.point_of[j] != t) {
        throw std::logic_error("level action disagrees with the plane moves");
      }
    }
  }
  std::set<int> seen;
  for (int t : P.point_of) {
    if (t < 0) throw std::logic_error("component word unreached");
    seen.insert(t);
  }
  if ((long long)seen.size() != total) throw std::logic_error("word classes collide");
  for (long long i = 0; i < total; ++i) {
    const std::string& w = P.words[i];
    for (int label = 0; label < 4; ++label) {
      std::string img = act_word_letters(H, hgen[label], w);
      if (img == w) {
        if (label == kPB || label == kPC) {
          int h = (label == kPB) ? 0 : 1;
          if (act_word_letters(X, half1[h], w) != w ||
              act_word_letters(X, half2[h], w) != w)
            throw std::logic_error("half generator moves a fixed word");
        }
        continue;
      }
      int j = widx(img);
      if (j < i) continue;
      if (label == kPA) {
        P.tree2.push_back({(int)i, j, label});
      } else if (label == kPCAB) {
        P.tree1.push_back({(int)i, j, label});
      } else {
        int h = (label == kPB) ? 0 : 1;
        std::string i1 = act_word_letters(X, half1[h], w);
        std::string i2 = act_word_letters(X, half2[h], w);
        bool m1 = i1 != w, m2 = i2 != w;
        if (m1 == m2) throw std::logic_error("the halves must split an edge");
        if ((m1 ? i1 : i2) != img) throw std::logic_error("half image mismatch");
        (m1 ? P.tree1 : P.tree2).push_back({(int)i, j, label});
      }
    }
  }
  long long want = total - 1;
  if ((long long)P.tree1.size() != want || (long long)P.tree2.size() != want)
    throw std::logic_error("tree edge counts are off");
  auto lift = [&](const std::vector<Partition::TreeEdge>& tree) {
    std::vector<std::vector<std::pair<int, int>>> adj(P.words.size());
    for (const auto& e : tree) {
      adj[e.u].push_back({e.w, e.label});
      adj[e.w].push_back({e.u, e.label});
    }
    std::vector<DyadicGauss> pos(P.words.size());
    std::vector<char> done(P.words.size(), 0);
    pos[P.root] = kXi;
    done[P.root] = 1;
    std::deque<int> q2{P.root};
    while (!q2.empty()) {
      int i = q2.front();
      q2.pop_front();
      for (auto [j, label] : adj[i]) {
        if (done[j]) continue;
        pos[j] = pillow_step(pos[i], label);
        done[j] = 1;
        q2.push_back(j);
      }
    }
    for (size_t i = 0; i < done.size(); ++i) {
      if (!done[i]) throw std::logic_error("tree does not span the component");
      if (P.graph.find(pillow_canon(pos[i], P.n)) != P.point_of[i])
        throw std::logic_error("tree lift drifts off the classes");
    }
    return pos;
  };
  P.lift1 = lift(P.tree1);
  P.lift2 = lift(P.tree2);
  return P;
}

std::string tree_parameter(const std::string& v, bool second) {
  for (char c : v)
    if (c != 'L' && c != 'R')
      throw std::invalid_argument("parameter letters must be L or R");
  std::string out(v.size(), '0');
  char prev = second ? 'R' : 'L';
  for (size_t k = 0; k < v.size(); ++k) {
    out[k] = (v[k] == prev) ? '0' : '1';
    prev = v[k];
  }
  return out;
}

// --- one letter recursion on plane lifts --------------------------------------

namespace {

std::pair<DyadicGauss, DyadicGauss> ordered_edge(const DyadicGauss& a,
                                                 const DyadicGauss& b) {
  return b < a ? std::make_pair(b, a) : std::make_pair(a, b);
}

}  // namespace

DeltaGraph delta_base(int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("tree id must be 1 or 2");
  DeltaGraph d;
  d.which = which;
  for (int k = 0; k < 3; ++k) d.z[k] = kXi;
  d.zp[0] = kXi + kDelta[which == 1 ? kPCAB : kPA].times_pow2(-1);
  d.zp[1] = kXi + kDelta[kPB].times_pow2(-1);
  d.zp[2] = kXi + kDelta[kPC].times_pow2(-1);
  return d;
}

DeltaGraph delta_step(const DeltaGraph& d, char x) {
  if (x != 'L' && x != 'R') throw std::invalid_argument("step letter must be L or R");
  DeltaGraph e;
  e.which = d.which;
  e.v = d.v + x;
  auto rot = [&](const DyadicGauss& z) { return d.zp[0] * kTwo - z; };
  e.edges = d.edges;
  for (const auto& [a, b] : d.edges) e.edges.push_back(ordered_edge(rot(a), rot(b)));
  e.edges.push_back(ordered_edge(d.z[0], rot(d.z[0])));
  bool cond = (!d.v.empty() && d.v.back() == x) ||
              (d.v.empty() && ((x == 'L' && d.which == 1) || (x == 'R' && d.which == 2)));
  e.z[0] = cond ? rot(d.z[1]) : d.z[1];
  e.z[1] = rot(d.z[2]);
  e.z[2] = d.z[2];
  e.zp[0] = cond ? rot(d.zp[1]) : d.zp[1];
  e.zp[1] = rot(d.zp[2]);
  e.zp[2] = d.zp[2];
  return e;
}

DeltaGraph delta_graphs(int which, const std::string& v) {
  if (v.size() > 16) throw std::invalid_argument("parameter too long");
  DeltaGraph d = delta_base(which);
  for (char x : v) d = delta_step(d, x);
  return d;
}

// --- closed curves -------------------------------------------------------------

namespace {

DyadicGauss ccw(const DyadicGauss& d) { return d * kI; }

const DyadicGauss kDirs[4] = {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}};

DyadicGauss side_left_square(const DyadicGauss& corner, const DyadicGauss& d) {
  return corner + (d + ccw(d)).times_pow2(-1);
}

DyadicGauss side_right_square(const DyadicGauss& corner, const DyadicGauss& d) {
  return corner + (d - ccw(d)).times_pow2(-1);
}

int cross_sign(const DyadicGauss& a, const DyadicGauss& b) {
  long long c = a.re * b.im - a.im * b.re;
  return (c > 0) - (c < 0);
}

int polygon_orientation(const std::vector<DyadicGauss>& pts) {
  DyadicGauss acc{0, 0, 0};
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const DyadicGauss& a = pts[i];
    const DyadicGauss& b = pts[i + 1];
    acc = acc + DyadicGauss{a.re * b.im - a.im * b.re, 0, a.exp + b.exp};
  }
  return (acc.re > 0) - (acc.re < 0);
}

// direction of the basepoint colored diagonal at a half integer corner
DyadicGauss red_diag(const DyadicGauss& m) {
  bool slash = m.is_integral() || (m - DyadicGauss{1, 1, 1}).is_integral();
  return slash ? DyadicGauss{1, 1, 2} : DyadicGauss{1, -1, 2};
}

// half integer points fixed by a half turn of the level subgroup; these center
// the squares whose diagonals are loops of the level graph
bool center_is_cone(const DyadicGauss& m, int n) {
  DyadicGauss s = (m * kTwo) * lattice_base(n).conj();
  if (s.exp != 0) return false;
  long long den = pow2ll(n);
  return s.re % den == 0 && s.im % den == 0;
}

std::set<Key> tree1_mid_classes(const Partition& P) {
  std::set<Key> s;
  for (const auto& e : P.tree1)
    s.insert(key_of(
        pillow_canon((P.lift1[e.u] + P.lift1[e.w]).times_pow2(-1), P.n)));
  return s;
}

}  // namespace

GridCurve lambda_curve(const std::string& v, bool singular_first) {
  Partition P = partition(v);
  int n = P.n;
  if (n == 0) throw std::invalid_argument("need a nonempty parameter");
  std::set<Key> tmid = tree1_mid_classes(P);
  auto first_side = [&](const DyadicGauss& m) {
    if (tmid.count(key_of(pillow_canon(m, n)))) return true;
    if (center_is_cone(m, n)) return singular_first;
    return false;
  };
  std::vector<DyadicGauss> seeds;
  for (const auto& e : P.tree1)
    seeds.push_back((P.lift1[e.u] + P.lift1[e.w]).times_pow2(-1));
  if (singular_first) {
    // the first set may swallow every side of the tree squares, so offer the
    // nearby singular squares as trace seeds too
    long long alo = 0, ahi = 0, blo = 0, bhi = 0;
    bool any = false;
    for (const auto& g : P.lift1) {
      long long a = (long long)std::llround(g.real() * 2.0);
      long long b = (long long)std::llround(g.imag() * 2.0);
      if (!any) {
        alo = ahi = a;
        blo = bhi = b;
        any = true;
      }
      alo = std::min(alo, a);
      ahi = std::max(ahi, a);
      blo = std::min(blo, b);
      bhi = std::max(bhi, b);
    }
    for (long long a = alo - 2; a <= ahi + 2; ++a)
      for (long long b = blo - 2; b <= bhi + 2; ++b) {
        DyadicGauss m{a, b, 1};
        if (center_is_cone(m, n)) seeds.push_back(m);
      }
  }
  std::optional<std::pair<DyadicGauss, DyadicGauss>> start;
  for (const DyadicGauss& m0 : seeds) {
    for (const DyadicGauss& d : kDirs) {
      if (first_side(m0 + d)) continue;
      DyadicGauss t = ccw(d);
      DyadicGauss c = m0 + d.times_pow2(-1);
      start = {{c - t.times_pow2(-1), c + t.times_pow2(-1)}};
      break;
    }
    if (start) break;
  }
  if (!start) throw std::logic_error("no boundary side found");
  std::vector<DyadicGauss> pts{start->first, start->second};
  long long cap = pow2ll(n + 3) + 64;
  while (true) {
    if (--cap < 0) throw std::logic_error("boundary trace does not close");
    DyadicGauss B = pts.back();
    DyadicGauss h = B - pts[pts.size() - 2];
    std::vector<DyadicGauss> outs;
    for (const DyadicGauss& s : kDirs) {
      bool pl = first_side(side_left_square(B, s));
      bool pr = first_side(side_right_square(B, s));
      if (pl && !pr) outs.push_back(s);
    }
    DyadicGauss step;
    if (outs.size() == 1) {
      step = outs[0];
    } else if (outs.size() == 2) {
      DyadicGauss left = ccw(h);
      if (!(outs[0] == left || outs[1] == left))
        throw std::logic_error("pinch without a left turn");
      step = left;
    } else {
      throw std::logic_error("boundary trace stuck");
    }
    if (B == start->first && B + step == start->second) break;
    pts.push_back(B + step);
  }
  GridCurve c;
  c.v = v;
  c.n = n;
  c.orientation = polygon_orientation(pts);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (is_orbit_pt(pts[i])) c.vertex_at.push_back((int)i);
  c.pts = std::move(pts);
  return c;
}

GridCurve rho_curve(const std::string& v) {
  Partition P = partition(v);
  int n = P.n;
  std::set<Key> red_present = tree1_mid_classes(P);
  auto present_diag = [&](const DyadicGauss& m) {
    DyadicGauss r = red_diag(m);
    if (red_present.count(key_of(pillow_canon(m, n)))) return r;
    return r.conj();
  };
  auto partner = [&](const DyadicGauss& stub, const DyadicGauss& diag) {
    int s0 = cross_sign(diag, stub);
    for (const DyadicGauss& s : kDirs) {
      if (s == stub) continue;
      if (cross_sign(diag, s) == s0) return s;
    }
    throw std::logic_error("no paired side end");
  };
  DyadicGauss A0{0, 0, 0}, B0{1, 0, 1};
  std::vector<DyadicGauss> pts{A0, B0};
  std::set<Key> used;
  used.insert(key_of(pillow_canon((A0 + B0).times_pow2(-1), n)));
  long long cap = pow2ll(n + 2) + 8;
  while (true) {
    if (--cap < 0) throw std::logic_error("grid trace does not close");
    DyadicGauss B = pts.back();
    DyadicGauss h = B - pts[pts.size() - 2];
    DyadicGauss out = partner(-h, present_diag(B));
    if (!is_orbit_pt(side_left_square(B, out)))
      throw std::logic_error("grid trace lost the basepoint side");
    if (B == A0 && B + out == B0) break;
    DyadicGauss mid = B + out.times_pow2(-1);
    if (!used.insert(key_of(pillow_canon(mid, n))).second)
      throw std::logic_error("grid side repeated");
    pts.push_back(B + out);
  }
  if ((long long)used.size() != pow2ll(n + 2))
    throw std::logic_error("grid trace misses sides");
  GridCurve c;
  c.v = v;
  c.n = n;
  c.orientation = polygon_orientation(pts);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    DyadicGauss k = pillow_canon(pts[i], n);
    for (int s = 0; s < 4; ++s)
      if (k == P.graph.singular[s]) c.singular_at.push_back({(int)i, s});
  }
  c.pts = std::move(pts);
  return c;
}

// --- companion tree on the reflected orbit ------------------------------------

SigmaGraph sigma2_graph(const std::string& v) {
  SigmaGraph S;
  S.v = v;
  S.n = (int)v.size();
  S.words = component_words(v);
  const System& X = catalog_system("GhatX");
  const Word gens[3] = {parse_word(X.gens, "alpha2"),
                        parse_word(X.gens, "alpha2*beta2*alpha2"),
                        parse_word(X.gens, "gamma2")};
  long long total = (long long)S.words.size();
  auto widx = [&](const std::string& w) {
    auto it = std::lower_bound(S.words.begin(), S.words.end(), w);
    if (it == S.words.end() || *it != w)
      throw std::logic_error("action left the component");
    return (int)(it - S.words.begin());
  };
  S.root = 0;
  S.pos.assign(S.words.size(), DyadicGauss{});
  std::vector<char> done(S.words.size(), 0);
  S.pos[0] = kZeta2;
  done[0] = 1;
  std::set<std::tuple<int, int, int>> eset;
  std::deque<int> q{0};
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int label = 0; label < 3; ++label) {
      int j = widx(act_word_letters(X, gens[label], S.words[i]));
      // a fixed word means the corresponding plane edge is absent here; it
      // crosses a tree edge of the other family instead
      if (j == i) continue;
      DyadicGauss t = sigma_step(S.pos[i], label);
      eset.insert({std::min(i, j), std::max(i, j), label});
      if (!done[j]) {
        S.pos[j] = t;
        done[j] = 1;
        q.push_back(j);
      } else if (!(S.pos[j] == t)) {
        throw std::logic_error("companion tree positions disagree");
      }
    }
  }
  for (char f : done)
    if (!f) throw std::logic_error("conjugated set is not transitive");
  if ((long long)eset.size() != total - 1)
    throw std::logic_error("companion graph is not a tree");
  std::set<Key> cls;
  for (const auto& p : S.pos) cls.insert(key_of(pillow_canon(p, S.n)));
  if ((long long)cls.size() != total)
    throw std::logic_error("companion classes collide");
  for (const auto& [a, b, label] : eset) S.edges.push_back({a, b, label});
  return S;
}

CorridorReport corridors_check(const std::string& v) {
  CorridorReport rep;
  auto note = [&](bool ok, const std::string& line) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  };
  Partition P = partition(v);
  SigmaGraph S2 = sigma2_graph(v);
  int n = P.n;
  std::map<Key, int> redmap;
  for (const auto& e : P.tree1)
    redmap[key_of(pillow_canon((P.lift1[e.u] + P.lift1[e.w]).times_pow2(-1), n))] =
        e.label;
  std::map<Key, int> whitemap;
  for (const auto& e : S2.edges)
    whitemap[key_of(pillow_canon((S2.pos[e.u] + S2.pos[e.w]).times_pow2(-1), n))] =
        e.label;
  std::map<Key, std::pair<DyadicGauss, int>> corners;
  bool unique_corners = true;
  for (const auto& e : P.graph.edges) {
    DyadicGauss p = P.graph.verts[e.u];
    DyadicGauss m = (p + pillow_step(p, e.label)).times_pow2(-1);
    auto [it, fresh] =
        corners.emplace(key_of(pillow_canon(m, n)), std::make_pair(m, e.label));
    (void)it;
    if (!fresh) unique_corners = false;
  }
  note(unique_corners, "edge classes meet distinct grid corners");
  note((long long)corners.size() == pow2ll(n + 1) + 2,
       "corner class count is 2^(n+1)+2");
  static const int pair_label[4] = {kSA, kSABA, kSC, 3};
  int cones = 0, reds = 0, whites = 0;
  bool tri_ok = true, pair_ok = true;
  for (const auto& [k, info] : corners) {
    const auto& [m, red_label] = info;
    bool r = redmap.count(k) > 0;
    bool w = whitemap.count(k) > 0;
    if (center_is_cone(m, n)) {
      ++cones;
      if (r || w) tri_ok = false;
    } else {
      if (r == w) tri_ok = false;
      if (r) ++reds;
      if (w) ++whites;
    }
    DyadicGauss swhite = red_diag(m).conj();
    DyadicGauss e1 = m - swhite;
    int p2 = parity2(e1);
    DyadicGauss diff = swhite * kTwo;
    int gw = -1;
    for (int t = 0; t < 4; ++t) {
      DyadicGauss want = p2 > 0 ? kSDelta[t] : -kSDelta[t];
      if (diff == want) {
        gw = t;
        break;
      }
    }
    if (gw != pair_label[red_label]) pair_ok = false;
    if (w) {
      auto wit = whitemap.find(k);
      if (wit->second != pair_label[red_label]) pair_ok = false;
    }
  }
  note(tri_ok, "regular corners carry exactly one diagonal, cones none");
  note(cones == 4, "four cone corners");
  note(reds == (int)P.tree1.size() && whites == (int)S2.edges.size(),
       "present diagonal counts match the two trees");
  note(pair_ok, "crossing labels pair A-A, B-ABA, C-C, CAB-ABC");
  bool disj = true;
  for (const auto& p : S2.pos)
    if (P.graph.find(pillow_canon(p, n)) >= 0) disj = false;
  note(disj, "the two vertex orbits stay disjoint");
  return rep;
}

// --- rendering -----------------------------------------------------------------

namespace {

std::string fmt2(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void dg_json(std::ostringstream& os, const DyadicGauss& g) {
  os << "[" << g.re << "," << g.im << "," << g.exp << "]";
}

}  // namespace

std::string emit_partition_svg(const Partition& p) {
  int n = p.n;
  DyadicGauss u = lattice_base(n);
  DyadicGauss iu = u * kI;
  double cx[4] = {0, u.real(), u.real() + iu.real() * 0.5, iu.real() * 0.5};
  double cy[4] = {0, u.imag(), u.imag() + iu.imag() * 0.5, iu.imag() * 0.5};
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int k = 0; k < 4; ++k) {
    minx = std::min(minx, cx[k]);
    maxx = std::max(maxx, cx[k]);
    miny = std::min(miny, cy[k]);
    maxy = std::max(maxy, cy[k]);
  }
  for (const auto& lift : {p.lift1, p.lift2}) {
    for (const auto& g : lift) {
      minx = std::min(minx, g.real());
      maxx = std::max(maxx, g.real());
      miny = std::min(miny, g.imag());
      maxy = std::max(maxy, g.imag());
    }
  }
  minx = std::floor(minx * 2.0) / 2.0 - 0.5;
  miny = std::floor(miny * 2.0) / 2.0 - 0.5;
  maxx = std::ceil(maxx * 2.0) / 2.0 + 0.5;
  maxy = std::ceil(maxy * 2.0) / 2.0 + 0.5;
  const double S = 64.0;
  auto PX = [&](double x) { return (x - minx) * S; };
  auto PY = [&](double y) { return (maxy - y) * S; };
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << fmt2(PX(maxx))
     << "' height='" << fmt2(PY(miny)) << "' viewBox='0 0 " << fmt2(PX(maxx))
     << " " << fmt2(PY(miny)) << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  long long ax0 = (long long)std::llround(minx * 2.0);
  long long ax1 = (long long)std::llround(maxx * 2.0);
  long long ay0 = (long long)std::llround(miny * 2.0);
  long long ay1 = (long long)std::llround(maxy * 2.0);
  for (long long ax = ax0; ax < ax1; ++ax) {
    for (long long ay = ay0; ay < ay1; ++ay) {
      DyadicGauss c{2 * ax + 1, 2 * ay + 1, 2};
      if (!is_orbit_pt(c)) continue;
      os << "<rect x='" << fmt2(PX(ax * 0.5)) << "' y='" << fmt2(PY(ay * 0.5 + 0.5))
         << "' width='" << fmt2(S * 0.5) << "' height='" << fmt2(S * 0.5)
         << "' fill='#f6d9d2'/>\n";
    }
  }
  os << "<polygon points='";
  for (int k = 0; k < 4; ++k)
    os << fmt2(PX(cx[k])) << "," << fmt2(PY(cy[k])) << (k < 3 ? " " : "");
  os << "' fill='none' stroke='#9a9a9a' stroke-dasharray='6 4' stroke-width='1.5'/>\n";
  auto draw_tree = [&](const std::vector<Partition::TreeEdge>& tree,
                       const std::vector<DyadicGauss>& lift, const char* color,
                       double wdt) {
    for (const auto& e : tree) {
      os << "<line x1='" << fmt2(PX(lift[e.u].real())) << "' y1='"
         << fmt2(PY(lift[e.u].imag())) << "' x2='" << fmt2(PX(lift[e.w].real()))
         << "' y2='" << fmt2(PY(lift[e.w].imag())) << "' stroke='" << color
         << "' stroke-width='" << fmt2(wdt) << "' stroke-linecap='round'/>\n";
    }
  };
  draw_tree(p.tree1, p.lift1, "#c0392b", 3.0);
  draw_tree(p.tree2, p.lift2, "#222222", 2.0);
  for (const auto& g : p.lift1)
    os << "<circle cx='" << fmt2(PX(g.real())) << "' cy='" << fmt2(PY(g.imag()))
       << "' r='3.2' fill='#c0392b'/>\n";
  for (const auto& g : p.lift2)
    os << "<circle cx='" << fmt2(PX(g.real())) << "' cy='" << fmt2(PY(g.imag()))
       << "' r='2.8' fill='white' stroke='#222222' stroke-width='1.4'/>\n";
  for (int k = 0; k < 4; ++k) {
    const DyadicGauss& s = p.graph.singular[k];
    os << "<circle cx='" << fmt2(PX(s.real())) << "' cy='" << fmt2(PY(s.imag()))
       << "' r='3.2' fill='#2563a8'/>\n";
    os << "<text x='" << fmt2(PX(s.real()) + 5) << "' y='" << fmt2(PY(s.imag()) - 5)
       << "' font-size='11' fill='#2563a8'>Z_" << kPillowLabelName[k] << "</text>\n";
  }
  os << "<text x='8' y='16' font-size='13' fill='#333'>v = "
     << (p.v.empty() ? "(empty)" : p.v) << ", w1 = "
     << (p.v.empty() ? "(empty)" : tree_parameter(p.v, false)) << ", w2 = "
     << (p.v.empty() ? "(empty)" : tree_parameter(p.v, true)) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string emit_partition_json(const Partition& p) {
  std::ostringstream os;
  os << "{\n  \"v\": \"" << p.v << "\",\n  \"n\": " << p.n << ",\n";
  os << "  \"w1\": \"" << tree_parameter(p.v, false) << "\",\n";
  os << "  \"w2\": \"" << tree_parameter(p.v, true) << "\",\n";
  os << "  \"words\": [";
  for (size_t i = 0; i < p.words.size(); ++i)
    os << (i ? ", " : "") << "\"" << p.words[i] << "\"";
  os << "],\n  \"class_of_word\": [";
  for (size_t i = 0; i < p.point_of.size(); ++i)
    os << (i ? ", " : "") << p.point_of[i];
  os << "],\n";
  auto tree_json = [&](const char* name, const std::vector<Partition::TreeEdge>& t,
                       const std::vector<DyadicGauss>& lift, bool last) {
    os << "  \"" << name << "\": {\"edges\": [";
    for (size_t i = 0; i < t.size(); ++i) {
      os << (i ? ", " : "") << "[" << t[i].u << ", " << t[i].w << ", \""
         << kPillowLabelName[t[i].label] << "\"]";
    }
    os << "], \"lift\": [";
    for (size_t i = 0; i < lift.size(); ++i) {
      if (i) os << ", ";
      dg_json(os, lift[i]);
    }
    os << "]}" << (last ? "\n" : ",\n");
  };
  tree_json("tree1", p.tree1, p.lift1, false);
  tree_json("tree2", p.tree2, p.lift2, true);
  os << "}\n";
  return os.str();
}

namespace {

// cell coordinates of a plane point with respect to the level lattice
void cell_coords(const DyadicGauss& z, int n, double* a, double* b) {
  DyadicGauss s = z * lattice_base(n).conj();
  double den = std::ldexp(1.0, n);
  *a = s.real() / den;
  *b = s.imag() / den;
}

struct PtD {
  double x, y;
};

PtD plane_of_cell(double a, double b, int n) {
  DyadicGauss u = lattice_base(n);
  DyadicGauss iu = u * kI;
  return {a * u.real() + b * iu.real(), a * u.imag() + b * iu.imag()};
}

// fold one point into the half cell (pointwise; used for markers)
PtD fold_pt(const DyadicGauss& z, int n) {
  double a, b;
  cell_coords(z, n, &a, &b);
  a -= std::floor(a + 1e-9);
  b -= std::floor(b + 1e-9);
  if (b > 0.5 + 1e-9) {
    a = 1.0 - a;
    b = 1.0 - b;
  }
  return plane_of_cell(a, b, n);
}

}  // namespace

std::string emit_curve_svg(const GridCurve& c, bool unfolded) {
  const double S = 64.0;
  std::vector<std::vector<PtD>> runs;
  std::vector<PtD> marks_vertex, marks_sing;
  if (unfolded) {
    std::vector<PtD> run;
    for (const auto& g : c.pts) run.push_back({g.real(), g.imag()});
    runs.push_back(std::move(run));
    for (int i : c.vertex_at)
      marks_vertex.push_back({c.pts[i].real(), c.pts[i].imag()});
    for (const auto& [i, s] : c.singular_at) {
      (void)s;
      marks_sing.push_back({c.pts[i].real(), c.pts[i].imag()});
    }
  } else {
    for (size_t i = 0; i + 1 < c.pts.size(); ++i) {
      double a0, b0, a1, b1;
      cell_coords(c.pts[i], c.n, &a0, &b0);
      cell_coords(c.pts[i + 1], c.n, &a1, &b1);
      std::vector<double> ts{0.0, 1.0};
      auto add_cuts = [&](double q0, double q1, double den) {
        double lo = std::min(q0, q1), hi = std::max(q0, q1);
        for (long long k = (long long)std::ceil(lo * den - 1e-9);
             k <= (long long)std::floor(hi * den + 1e-9); ++k) {
          double q = k / den;
          if (q0 == q1) continue;
          double t = (q - q0) / (q1 - q0);
          if (t > 1e-9 && t < 1.0 - 1e-9) ts.push_back(t);
        }
      };
      add_cuts(a0, a1, 1.0);
      add_cuts(b0, b1, 2.0);
      std::sort(ts.begin(), ts.end());
      for (size_t k = 0; k + 1 < ts.size(); ++k) {
        double t0 = ts[k], t1 = ts[k + 1];
        if (t1 - t0 < 1e-12) continue;
        double tm = 0.5 * (t0 + t1);
        double am = a0 + tm * (a1 - a0), bm = b0 + tm * (b1 - b0);
        double fa = std::floor(am), fb = std::floor(bm);
        bool flip = (bm - fb) > 0.5;
        auto tr = [&](double t) {
          double a = a0 + t * (a1 - a0) - fa, b = b0 + t * (b1 - b0) - fb;
          if (flip) {
            a = 1.0 - a;
            b = 1.0 - b;
          }
          return plane_of_cell(a, b, c.n);
        };
        PtD p0 = tr(t0), p1 = tr(t1);
        if (!runs.empty()) {
          const PtD& last = runs.back().back();
          if (std::abs(last.x - p0.x) < 1e-9 && std::abs(last.y - p0.y) < 1e-9) {
            runs.back().push_back(p1);
            continue;
          }
        }
        runs.push_back({p0, p1});
      }
    }
    for (int i : c.vertex_at) marks_vertex.push_back(fold_pt(c.pts[i], c.n));
    for (const auto& [i, s] : c.singular_at) {
      (void)s;
      marks_sing.push_back(fold_pt(c.pts[i], c.n));
    }
  }
  double minx = 1e18, maxx = -1e18, miny = 1e18, maxy = -1e18;
  for (const auto& run : runs) {
    for (const auto& p : run) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  if (runs.empty()) minx = maxx = miny = maxy = 0;
  minx -= 0.5;
  miny -= 0.5;
  maxx += 0.5;
  maxy += 0.5;
  auto PX = [&](double x) { return (x - minx) * S; };
  auto PY = [&](double y) { return (maxy - y) * S; };
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << fmt2(PX(maxx))
     << "' height='" << fmt2(PY(miny)) << "' viewBox='0 0 " << fmt2(PX(maxx))
     << " " << fmt2(PY(miny)) << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  if (!unfolded) {
    DyadicGauss u = lattice_base(c.n);
    DyadicGauss iu = u * kI;
    double hx[4] = {0, u.real(), u.real() + iu.real() * 0.5, iu.real() * 0.5};
    double hy[4] = {0, u.imag(), u.imag() + iu.imag() * 0.5, iu.imag() * 0.5};
    os << "<polygon points='";
    for (int k = 0; k < 4; ++k)
      os << fmt2(PX(hx[k])) << "," << fmt2(PY(hy[k])) << (k < 3 ? " " : "");
    os << "' fill='none' stroke='#bbbbbb' stroke-width='1'/>\n";
  }
  for (const auto& run : runs) {
    os << "<polyline points='";
    for (size_t i = 0; i < run.size(); ++i)
      os << fmt2(PX(run[i].x)) << "," << fmt2(PY(run[i].y))
         << (i + 1 < run.size() ? " " : "");
    os << "' fill='none' stroke='#7b3fa0' stroke-width='2'"
       << " stroke-linecap='round' stroke-linejoin='round'/>\n";
  }
  for (const auto& p : marks_vertex)
    os << "<circle cx='" << fmt2(PX(p.x)) << "' cy='" << fmt2(PY(p.y))
       << "' r='2.6' fill='#c0392b'/>\n";
  for (const auto& p : marks_sing)
    os << "<circle cx='" << fmt2(PX(p.x)) << "' cy='" << fmt2(PY(p.y))
       << "' r='3.0' fill='#2563a8'/>\n";
  os << "<text x='8' y='16' font-size='13' fill='#333'>v = "
     << (c.v.empty() ? "(empty)" : c.v) << (unfolded ? " (unfolded)" : "")
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string emit_curve_json(const GridCurve& c, bool unfolded) {
  std::ostringstream os;
  os << "{\n  \"v\": \"" << c.v << "\",\n  \"n\": " << c.n << ",\n";
  os << "  \"closed\": true,\n  \"orientation\": " << c.orientation << ",\n";
  os << "  \"unfolded\": " << (unfolded ? "true" : "false") << ",\n";
  os << "  \"points\": [";
  for (size_t i = 0; i < c.pts.size(); ++i) {
    if (i) os << ", ";
    dg_json(os, c.pts[i]);
  }
  os << "],\n  \"vertices\": [";
  for (size_t i = 0; i < c.vertex_at.size(); ++i)
    os << (i ? ", " : "") << c.vertex_at[i];
  os << "],\n  \"singular\": [";
  for (size_t i = 0; i < c.singular_at.size(); ++i)
    os << (i ? ", " : "") << "[" << c.singular_at[i].first << ", "
       << c.singular_at[i].second << "]";
  os << "]\n}\n";
  return os.str();
}

}  // namespace selfsim
