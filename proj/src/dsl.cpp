#include "selfsim/dsl.hpp"

#include <cctype>
#include <stdexcept>

#include <json.hpp>

namespace selfsim {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, InvMark, End } kind = End;
  std::string text;
  long value = 0;
  int line = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("line " + std::to_string(tok_.line) + ": " + msg);
  }

 private:
  void advance() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    tok_ = Token{};
    tok_.line = line_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Int;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.value = std::stol(tok_.text);
      return;
    }
    if (c == '^') {
      if (text_.compare(pos_, 3, "^-1") != 0)
        throw std::runtime_error("line " + std::to_string(line_) + ": expected ^-1");
      pos_ += 3;
      tok_.kind = Token::InvMark;
      tok_.text = "^-1";
      return;
    }
    tok_.kind = Token::Punct;
    tok_.text = std::string(1, c);
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  Token tok_;
};

bool is_punct(const Token& t, char c) {
  return t.kind == Token::Punct && t.text[0] == c;
}

void expect_punct(Lexer& lex, char c) {
  if (!is_punct(lex.peek(), c))
    lex.fail(std::string("expected '") + c + "', got '" + lex.peek().text + "'");
  lex.take();
}

Word parse_word_tokens(Lexer& lex, const GenSet& gs) {
  Word w;
  if (lex.peek().kind != Token::Ident) lex.fail("expected word");
  if (lex.peek().text == "e") {
    lex.take();
    return w;
  }
  for (;;) {
    if (lex.peek().kind != Token::Ident) lex.fail("expected generator name");
    Token t = lex.take();
    int g = gs.id(t.text);
    if (g < 0) lex.fail("unknown generator '" + t.text + "'");
    bool inv = false;
    if (lex.peek().kind == Token::InvMark) {
      lex.take();
      inv = true;
    }
    w.push_back(Letter{static_cast<std::uint8_t>(g), inv});
    if (!is_punct(lex.peek(), '*')) break;
    lex.take();
  }
  return w;
}

Perm parse_perm(Lexer& lex, int k) {
  if (lex.peek().kind == Token::Ident && lex.peek().text == "id") {
    lex.take();
    return Perm::identity(k);
  }
  std::vector<std::vector<int>> cycles;
  while (is_punct(lex.peek(), '(')) {
    lex.take();
    std::vector<int> cyc;
    while (lex.peek().kind == Token::Int) cyc.push_back(static_cast<int>(lex.take().value));
    expect_punct(lex, ')');
    if (cyc.empty()) lex.fail("empty cycle");
    cycles.push_back(std::move(cyc));
  }
  return Perm::from_cycles(k, cycles);
}

}  // namespace

System parse_system(const std::string& text) {
  // first pass: generator names and involution flags
  GenSet gs;
  {
    Lexer lex(text);
    while (lex.peek().kind != Token::End) {
      Token t = lex.take();
      if (t.kind == Token::Ident && t.text == "gen") {
        if (lex.peek().kind != Token::Ident) lex.fail("expected generator name after 'gen'");
        GenInfo info;
        info.name = lex.take().text;
        if (info.name == "e" || info.name == "id" || info.name == "inv" ||
            info.name == "gen" || info.name == "basis")
          lex.fail("reserved name '" + info.name + "' used as generator");
        if (lex.peek().kind == Token::Ident && lex.peek().text == "inv") {
          lex.take();
          info.involution = true;
        }
        if (gs.id(info.name) >= 0) lex.fail("duplicate generator '" + info.name + "'");
        gs.gens.push_back(std::move(info));
      }
    }
  }
  if (gs.size() == 0) throw std::runtime_error("no generators defined");

  System sys;
  Lexer lex(text);
  if (!(lex.peek().kind == Token::Ident && lex.peek().text == "basis"))
    lex.fail("expected 'basis'");
  lex.take();
  while (lex.peek().kind == Token::Ident) sys.basis.push_back(lex.take().text);
  if (sys.basis.empty()) lex.fail("basis needs at least one letter");
  expect_punct(lex, ';');
  int k = static_cast<int>(sys.basis.size());

  sys.gens = gs;
  sys.sgens = gs;
  sys.self = true;
  sys.rules.resize(static_cast<size_t>(gs.size()));
  std::vector<bool> defined(static_cast<size_t>(gs.size()), false);

  while (lex.peek().kind != Token::End) {
    if (!(lex.peek().kind == Token::Ident && lex.peek().text == "gen"))
      lex.fail("expected 'gen'");
    lex.take();
    std::string name = lex.take().text;
    int g = gs.id(name);
    if (lex.peek().kind == Token::Ident && lex.peek().text == "inv") lex.take();
    expect_punct(lex, '=');
    GenRule rule;
    rule.perm = parse_perm(lex, k);
    expect_punct(lex, '[');
    for (;;) {
      rule.sections.push_back(parse_word_tokens(lex, gs));
      if (!is_punct(lex.peek(), ',')) break;
      lex.take();
    }
    expect_punct(lex, ']');
    expect_punct(lex, ';');
    if (static_cast<int>(rule.sections.size()) != k)
      lex.fail("generator '" + name + "' has " + std::to_string(rule.sections.size()) +
               " sections, basis has " + std::to_string(k));
    if (defined[static_cast<size_t>(g)]) lex.fail("duplicate definition of '" + name + "'");
    defined[static_cast<size_t>(g)] = true;
    sys.rules[static_cast<size_t>(g)] = std::move(rule);
  }
  for (int g = 0; g < gs.size(); ++g)
    if (!defined[static_cast<size_t>(g)])
      throw std::runtime_error("generator '" + gs[g].name + "' never defined");
  return sys;
}

namespace {

std::string render_perm(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "id";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace

std::string render_system(const System& sys) {
  std::string out = "basis";
  for (const std::string& b : sys.basis) out += " " + b;
  out += ";\n";
  for (int g = 0; g < sys.gens.size(); ++g) {
    const GenRule& r = sys.rule(g);
    out += "gen " + sys.gens[g].name;
    if (sys.gens[g].involution) out += " inv";
    out += " = " + render_perm(r.perm) + " [";
    for (int i = 0; i < sys.letters(); ++i) {
      if (i) out += ", ";
      out += format_word(sys.sgens, r.sections[static_cast<size_t>(i)]);
    }
    out += "];\n";
  }
  return out;
}

std::string system_to_json(const System& sys) {
  nlohmann::json j;
  j["basis"] = sys.basis;
  j["generators"] = nlohmann::json::array();
  for (int g = 0; g < sys.gens.size(); ++g) {
    const GenRule& r = sys.rule(g);
    nlohmann::json jg;
    jg["name"] = sys.gens[g].name;
    jg["involution"] = sys.gens[g].involution;
    std::vector<int> img;
    for (int i = 0; i < sys.letters(); ++i) img.push_back(r.perm(i) + 1);
    jg["perm"] = img;
    std::vector<std::string> secs;
    for (int i = 0; i < sys.letters(); ++i)
      secs.push_back(format_word(sys.sgens, r.sections[static_cast<size_t>(i)]));
    jg["sections"] = secs;
    j["generators"].push_back(std::move(jg));
  }
  return j.dump(2);
}

System system_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  System sys;
  sys.basis = j.at("basis").get<std::vector<std::string>>();
  int k = static_cast<int>(sys.basis.size());
  for (const auto& jg : j.at("generators")) {
    GenInfo info;
    info.name = jg.at("name").get<std::string>();
    info.involution = jg.value("involution", false);
    sys.gens.gens.push_back(std::move(info));
  }
  sys.sgens = sys.gens;
  sys.self = true;
  for (const auto& jg : j.at("generators")) {
    GenRule rule;
    auto img = jg.at("perm").get<std::vector<int>>();
    if (static_cast<int>(img.size()) != k) throw std::runtime_error("perm size mismatch");
    rule.perm.img.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      if (img[static_cast<size_t>(i)] < 1 || img[static_cast<size_t>(i)] > k)
        throw std::runtime_error("perm entry out of range");
      rule.perm.img[static_cast<size_t>(i)] = static_cast<std::uint8_t>(img[static_cast<size_t>(i)] - 1);
    }
    for (const auto& s : jg.at("sections"))
      rule.sections.push_back(parse_word(sys.sgens, s.get<std::string>()));
    if (static_cast<int>(rule.sections.size()) != k)
      throw std::runtime_error("section count mismatch");
    sys.rules.push_back(std::move(rule));
  }
  return sys;
}

}  // namespace selfsim
