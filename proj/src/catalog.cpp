#include "selfsim/catalog.hpp"

#include <map>
#include <stdexcept>

#include "selfsim/action.hpp"
#include "selfsim/dsl.hpp"

namespace selfsim {

namespace {

const char* kImgF = R"(
# quartic rational-map monodromy group over a four-letter alphabet
basis L0 L1 R0 R1;
gen alpha inv = (1 2)(3 4) [beta, beta^-1, beta*alpha, alpha^-1*beta^-1];
gen beta  inv = id        [e, beta*alpha*beta^-1, alpha, e];
gen gamma inv = id        [gamma, beta, gamma, beta];
gen P     inv = (1 3)(2 4) [e, e, e, e];
gen S           = (1 4)(2 3) [P^-1*beta*alpha*gamma, P^-1, S^-1*beta*alpha*gamma, S^-1];
)";

const char* kGbar = R"(
# six-generator overgroup on the level-pair basis
basis e00 e01 e10 e11;
gen alpha inv = (1 2)(3 4) [e, e, e, e];
gen beta  inv = id        [e, alpha, alpha, e];
gen gamma inv = id        [gamma, beta, gamma, beta];
gen a     inv = (1 3)(2 4) [e, e, e, e];
gen b     inv = id        [a, a, alpha*a, alpha*a];
gen c     inv = id        [beta*b, beta*b, gamma*c, gamma*c];
)";

const char* kG = R"(
# the three-generator subgroup of the overgroup
basis x1 x2 x3 x4;
gen alpha inv = (1 2)(3 4) [e, e, e, e];
gen beta  inv = id        [e, alpha, alpha, e];
gen gamma inv = id        [gamma, beta, gamma, beta];
)";

const char* kK = R"(
# binary shadow of the overgroup
basis x0 x1;
gen a inv = (1 2) [e, e];
gen b inv = id   [a, a];
gen c inv = id   [b, c];
)";

const char* kImgf = R"(
# binary monodromy group of the quadratic map
basis L R;
gen S       = (1 2) [P, S^-1];
gen P inv = (1 2) [e, e];
)";

const char* kR = R"(
# ten-state group over four letters
basis x1 x2 x3 x4;
gen P   inv = (1 3)(2 4) [e, e, e, e];
gen S         = (1 4)(2 3) [P*tau^-1, P, S^-1*tau^-1, S^-1];
gen tau       = (1 2)(3 4) [e, tau, e, tau];
)";

const char* kGhat = R"(
# doubled six-involution group
basis x1 x2 x3 x4;
gen alpha1 inv = (1 2)(3 4) [beta1, beta1, beta1*alpha1, alpha1*beta1];
gen beta1  inv = id        [e, beta1*alpha1*beta1, alpha1, e];
gen gamma1 inv = id        [gamma1, beta1, gamma1, beta1];
gen alpha2 inv = (1 2)(3 4) [beta2*alpha2, alpha2*beta2, beta2, beta2];
gen beta2  inv = id        [alpha2, e, e, beta2*alpha2*beta2];
gen gamma2 inv = id        [gamma2, beta2, gamma2, beta2];
)";

const char* kGhatX = R"(
# the doubled group written on the conjugated basis
basis x1 x2 x3 x4;
gen alpha1 inv = (1 2)(3 4) [e, e, alpha2*gamma1*gamma2, gamma1*gamma2*alpha2];
gen beta1  inv = id        [e, gamma1*gamma2*alpha2*beta1*beta2, gamma1*gamma2*alpha2*beta1*beta2, e];
gen gamma1 inv = id        [gamma1, beta1, gamma1, beta1];
gen alpha2 inv = (1 2)(3 4) [beta1*beta2*alpha2, alpha2*beta1*beta2, e, e];
gen beta2  inv = id        [alpha2, e, e, alpha2];
gen gamma2 inv = id        [gamma2, beta2, gamma2, beta2];
)";

const char* kH = R"(
# three-generator group matching the diagonal of the doubled group
basis x1 x2 x3 x4;
gen A inv = (1 2)(3 4) [B*A, A*B, e, e];
gen B inv = id        [A, C*A*B, C*A*B, A];
gen C inv = id        [C, B, C, B];
)";

std::vector<CatalogEntry> make_catalog() {
  return {
      {"imgF", "five generators over four letters, contracting with 60 states", kImgF, 60},
      {"Gbar", "six-generator overgroup on the paired basis", kGbar, 0},
      {"G", "three-generator subgroup, nucleus of size 4", kG, 4},
      {"K", "binary three-generator shadow", kK, 4},
      {"imgf", "binary quadratic monodromy, nucleus of size 4", kImgf, 4},
      {"R", "rational-map group with ten-state nucleus", kR, 10},
      {"Ghat", "doubled group with 122-state nucleus", kGhat, 122},
      {"GhatX", "doubled group on the conjugated basis", kGhatX, 0},
      {"H", "diagonal three-generator group", kH, 0},
  };
}

System make_cross(const std::string& name, GenSet src, GenSet dst,
                  std::vector<std::string> basis,
                  const std::vector<std::pair<std::vector<std::vector<int>>,
                                              std::vector<std::string>>>& rules) {
  System sys;
  sys.name = name;
  sys.gens = std::move(src);
  sys.sgens = std::move(dst);
  sys.self = sys.gens == sys.sgens;
  sys.basis = std::move(basis);
  int k = sys.letters();
  for (const auto& [cycles, secs] : rules) {
    GenRule rule;
    rule.perm = Perm::from_cycles(k, cycles);
    for (const std::string& s : secs) rule.sections.push_back(parse_word(sys.sgens, s));
    sys.rules.push_back(std::move(rule));
  }
  return sys;
}

GenSet gens_of(std::initializer_list<GenInfo> list) {
  GenSet gs;
  gs.gens.assign(list.begin(), list.end());
  return gs;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

const System& catalog_system(const std::string& name) {
  static std::map<std::string, System> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw std::runtime_error("unknown catalog system '" + name + "'");
  System sys = parse_system(e->dsl);
  sys.name = e->name;
  return cache.emplace(name, std::move(sys)).first->second;
}

const System& cross_mba() {
  static const System sys = make_cross(
      "mba", gens_of({{"ga", false}, {"b", true}}), gens_of({{"bg", false}, {"a", true}}),
      {"x0", "x1"},
      {{{{1, 2}}, {"e", "bg"}},
       {{}, {"e", "a"}}});
  return sys;
}

const System& cross_mab() {
  static const System sys = make_cross(
      "mab", gens_of({{"bg", false}, {"a", true}}), gens_of({{"ga", false}, {"b", true}}),
      {"y0", "y1"},
      {{{}, {"ga", "b"}},
       {{{1, 2}}, {"e", "e"}}});
  return sys;
}

const System& cross_mba_full() {
  // four letters split as pair-coordinate times circle-coordinate: the
  // circle generator only moves the second index, the pair only the first
  static const System sys = make_cross(
      "mba_full",
      gens_of({{"S", false}, {"ga", false}, {"b", true}}),
      gens_of({{"T", false}, {"bg", false}, {"a", true}}),
      {"x1", "x2", "x3", "x4"},
      {{{{1, 3}, {2, 4}}, {"e", "e", "T", "T"}},
       {{{1, 2}, {3, 4}}, {"e", "bg", "e", "bg"}},
       {{}, {"e", "a", "e", "a"}}});
  return sys;
}

const System& cross_sga() {
  // binary recursion of the subgroup generated by the circle generator and
  // the alternating product, sections on the other side
  static const System sys = make_cross(
      "sga", gens_of({{"S", false}, {"ga", false}}),
      gens_of({{"T", false}, {"bg", false}}), {"x0", "x1"},
      {{{{1, 2}}, {"e", "T"}},
       {{{1, 2}}, {"e", "bg"}}});
  return sys;
}

const System& cross_mab_full() {
  static const System sys = make_cross(
      "mab_full",
      gens_of({{"T", false}, {"bg", false}, {"a", true}}),
      gens_of({{"S", false}, {"ga", false}, {"b", true}}),
      {"y0", "y1"},
      {{{}, {"S", "S"}},
       {{}, {"ga", "b"}},
       {{{1, 2}}, {"e", "e"}}});
  return sys;
}

const System& cross_odo_s() {
  static const System sys =
      make_cross("odo_s", gens_of({{"S", false}}), gens_of({{"T", false}}), {"x0", "x1"},
                 {{{{1, 2}}, {"e", "T"}}});
  return sys;
}

const System& cross_odo_t() {
  static const System sys =
      make_cross("odo_t", gens_of({{"T", false}}), gens_of({{"S", false}}), {"y0", "y1"},
                 {{{{1, 2}}, {"e", "S"}}});
  return sys;
}

const System& cross_b1a1() {
  static const System sys = make_cross(
      "b1a1",
      gens_of({{"alpha", true}, {"gamma", true}, {"Sga", false}}),
      gens_of({{"beta", true}, {"gamma", true}, {"T", false}}),
      {"x1", "x2", "x3", "x4"},
      {{{{1, 2}, {3, 4}}, {"e", "e", "e", "e"}},
       {{}, {"gamma", "beta", "gamma", "beta"}},
       {{{1, 3}, {2, 4}}, {"e", "e", "T*beta*gamma", "T*beta*gamma"}}});
  return sys;
}

const System& restrict_binary(int x1) {
  static const System t0 = parse_system(R"(
# binary subtree template, parameter letter 0
basis x0 x1;
gen alpha inv = (1 2) [e, e];
gen beta  inv = id    [e, alpha];
gen gamma inv = id    [gamma, beta];
)");
  static const System t1 = parse_system(R"(
# binary subtree template, parameter letter 1
basis x0 x1;
gen alpha inv = (1 2) [e, e];
gen beta  inv = id    [alpha, e];
gen gamma inv = id    [gamma, beta];
)");
  if (x1 != 0 && x1 != 1) throw std::invalid_argument("parameter letter must be 0 or 1");
  return x1 ? t1 : t0;
}

std::vector<int> binary_subtree_act(const std::string& v, const Word& g,
                                    const std::vector<int>& w) {
  if (w.size() > v.size())
    throw std::invalid_argument("level word longer than parameter word");
  std::vector<int> out;
  out.reserve(w.size());
  Word cur = reduced(restrict_binary(0).sgens, g);
  for (size_t k = 0; k < w.size(); ++k) {
    if (v[k] != '0' && v[k] != '1')
      throw std::invalid_argument("parameter word letters must be 0 or 1");
    if (w[k] != 0 && w[k] != 1)
      throw std::out_of_range("level letters must be 0 or 1");
    const System& t = restrict_binary(v[k] - '0');
    Word sec;
    out.push_back(act_letter(t, cur, w[k], &sec));
    cur = std::move(sec);
  }
  return out;
}

Word project_to_K(const Word& w) {
  const System& gbar = catalog_system("Gbar");
  const System& k = catalog_system("K");
  std::vector<int> map(static_cast<size_t>(gbar.gens.size()), -1);
  map[static_cast<size_t>(gbar.gens.id("a"))] = k.gens.id("a");
  map[static_cast<size_t>(gbar.gens.id("b"))] = k.gens.id("b");
  map[static_cast<size_t>(gbar.gens.id("c"))] = k.gens.id("c");
  Word out;
  for (const Letter& l : w) {
    int m = map[l.gen];
    if (m < 0) continue;
    Letter img = l;
    img.gen = static_cast<std::uint8_t>(m);
    out.push_back(img);
  }
  reduce(k.gens, out);
  return out;
}

bool imgind2_check(int depth) {
  const System& gbar = catalog_system("Gbar");
  const System& quartic = catalog_system("imgF");
  WreathElem c = wreath_identity(4);
  c.secs[1] = parse_word(gbar.gens, "beta");
  c.secs[2] = parse_word(gbar.gens, "a");
  c.secs[3] = parse_word(gbar.gens, "beta*alpha*a");
  System moved = change_basis(gbar, c);
  std::vector<Word> genmap(static_cast<size_t>(quartic.gens.size()));
  genmap[static_cast<size_t>(quartic.gens.id("alpha"))] = parse_word(moved.gens, "alpha");
  genmap[static_cast<size_t>(quartic.gens.id("beta"))] = parse_word(moved.gens, "beta");
  genmap[static_cast<size_t>(quartic.gens.id("gamma"))] = parse_word(moved.gens, "gamma");
  genmap[static_cast<size_t>(quartic.gens.id("P"))] = parse_word(moved.gens, "beta*b*a");
  genmap[static_cast<size_t>(quartic.gens.id("S"))] =
      parse_word(moved.gens, "a*c*alpha*gamma");
  return check_morphism(quartic, moved, genmap, {0, 1, 2, 3}, depth).ok;
}

}  // namespace selfsim
