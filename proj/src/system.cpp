#include "selfsim/system.hpp"

#include <stdexcept>

namespace selfsim {

Perm Perm::identity(int k) {
  Perm p;
  p.img.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) p.img[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(k);
  for (const auto& cyc : cycles) {
    Perm c = identity(k);
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j];
      int to = cyc[(j + 1) % cyc.size()];
      if (from < 1 || from > k || to < 1 || to > k)
        throw std::runtime_error("cycle entry out of range");
      c.img[static_cast<size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
    }
    p = c * p;
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < k(); ++i)
    if (img[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p = identity(k());
  for (int i = 0; i < k(); ++i) p.img[img[static_cast<size_t>(i)]] = static_cast<std::uint8_t>(i);
  return p;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(k()), false);
  for (int i = 0; i < k(); ++i) {
    if (seen[static_cast<size_t>(i)] || (*this)(i) == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j + 1);
      j = (*this)(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm operator*(const Perm& p, const Perm& q) {
  Perm r;
  r.img.resize(q.img.size());
  for (int i = 0; i < q.k(); ++i) r.img[static_cast<size_t>(i)] = p.img[q.img[static_cast<size_t>(i)]];
  return r;
}

int System::letter_id(const std::string& name) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == name) return static_cast<int>(i);
  return -1;
}

WreathElem wreath_identity(int k) {
  WreathElem e;
  e.perm = Perm::identity(k);
  e.secs.resize(static_cast<size_t>(k));
  return e;
}

WreathElem wreath_of_gen(const System& sys, Letter l) {
  const GenRule& r = sys.rule(l.gen);
  WreathElem w;
  if (!l.inv) {
    w.perm = r.perm;
    w.secs = r.sections;
    return w;
  }
  w.perm = r.perm.inverse();
  w.secs.resize(r.sections.size());
  for (int i = 0; i < sys.letters(); ++i)
    w.secs[static_cast<size_t>(i)] = inverse(r.sections[static_cast<size_t>(w.perm(i))]);
  return w;
}

WreathElem wmul(const GenSet& section_gens, const WreathElem& a, const WreathElem& b) {
  WreathElem r;
  r.perm = a.perm * b.perm;
  r.secs.resize(b.secs.size());
  for (int i = 0; i < b.perm.k(); ++i) {
    r.secs[static_cast<size_t>(i)] =
        reduced(section_gens, concat(a.secs[static_cast<size_t>(b.perm(i))],
                                     b.secs[static_cast<size_t>(i)]));
  }
  return r;
}

WreathElem winv(const GenSet& section_gens, const WreathElem& a) {
  WreathElem r;
  r.perm = a.perm.inverse();
  r.secs.resize(a.secs.size());
  for (int i = 0; i < a.perm.k(); ++i)
    r.secs[static_cast<size_t>(i)] =
        reduced(section_gens, inverse(a.secs[static_cast<size_t>(r.perm(i))]));
  return r;
}

WreathElem conjugated(const GenSet& section_gens, const WreathElem& c, const WreathElem& a) {
  return wmul(section_gens, wmul(section_gens, winv(section_gens, c), a), c);
}

WreathElem wreath_of_word(const System& sys, const Word& w) {
  WreathElem acc = wreath_identity(sys.letters());
  for (Letter l : w) acc = wmul(sys.sgens, acc, wreath_of_gen(sys, l));
  return acc;
}

int step(const System& sys, Letter l, int x, Word& out) {
  const GenRule& r = sys.rule(l.gen);
  if (!l.inv) {
    const Word& s = r.sections[static_cast<size_t>(x)];
    out.insert(out.end(), s.begin(), s.end());
    return r.perm(x);
  }
  int y = r.perm.inverse()(x);
  Word s = inverse(r.sections[static_cast<size_t>(y)]);
  out.insert(out.end(), s.begin(), s.end());
  return y;
}

int act_letter(const System& sys, const Word& w, int x, Word* sec) {
  std::vector<Word> parts(w.size());
  int cur = x;
  for (size_t idx = w.size(); idx-- > 0;) {
    Word piece;
    cur = step(sys, w[idx], cur, piece);
    parts[idx] = std::move(piece);
  }
  if (sec) {
    Word total;
    for (const Word& p : parts) total.insert(total.end(), p.begin(), p.end());
    reduce(sys.sgens, total);
    *sec = std::move(total);
  }
  return cur;
}

System change_basis(const System& sys, const WreathElem& c) {
  if (!sys.self) throw std::runtime_error("change_basis needs a self-similar system");
  System out = sys;
  out.name = sys.name + "'";
  for (size_t g = 0; g < sys.rules.size(); ++g) {
    WreathElem w = conjugated(sys.sgens, c, wreath_of_gen(sys, Letter{static_cast<std::uint8_t>(g), false}));
    out.rules[g].perm = w.perm;
    out.rules[g].sections = w.secs;
  }
  return out;
}

System compose_cross(const System& r1, const System& r2) {
  if (!(r1.sgens == r2.gens) || !(r2.sgens == r1.gens))
    throw std::runtime_error("compose_cross: generator sets do not chain");
  System out;
  out.name = r1.name + "." + r2.name;
  out.gens = r1.gens;
  out.sgens = r2.sgens;
  out.self = out.gens == out.sgens;
  int kx = r1.letters();
  int ky = r2.letters();
  for (const std::string& x : r1.basis)
    for (const std::string& y : r2.basis) out.basis.push_back(x + "_" + y);
  out.rules.resize(r1.rules.size());
  for (size_t g = 0; g < r1.rules.size(); ++g) {
    GenRule rule;
    rule.perm.img.resize(static_cast<size_t>(kx * ky));
    rule.sections.resize(static_cast<size_t>(kx * ky));
    for (int x = 0; x < kx; ++x) {
      Word h;
      int x2 = act_letter(r1, Word{Letter{static_cast<std::uint8_t>(g), false}}, x, &h);
      for (int y = 0; y < ky; ++y) {
        Word k;
        int y2 = act_letter(r2, h, y, &k);
        rule.perm.img[static_cast<size_t>(x * ky + y)] =
            static_cast<std::uint8_t>(x2 * ky + y2);
        rule.sections[static_cast<size_t>(x * ky + y)] = std::move(k);
      }
    }
    out.rules[g] = std::move(rule);
  }
  return out;
}

}  // namespace selfsim
