#include "fpknot/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace fpknot {

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error(message + " (offset " + std::to_string(position) + ")"),
      _position(position) {}

namespace {

constexpr long long kMaxExponent = 1ll << 40;

struct Token {
  enum Kind { Name, Int, Punct, End } kind = End;
  std::string_view text;
  long long value = 0;  // for Int
  char punct = 0;       // for Punct
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : _input(input) { advance(); }

  const Token& peek() const { return _tok; }

  Token take() {
    Token t = _tok;
    advance();
    return t;
  }

 private:
  void skip_blanks() {
    while (_pos < _input.size()) {
      char ch = _input[_pos];
      if (ch == '#') {
        while (_pos < _input.size() && _input[_pos] != '\n') ++_pos;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++_pos;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_blanks();
    _tok = Token{};
    _tok.pos = _pos;
    if (_pos >= _input.size()) {
      _tok.kind = Token::End;
      return;
    }
    char ch = _input[_pos];
    if (ch >= 'a' && ch <= 'z') {
      std::size_t start = _pos;
      while (_pos < _input.size() &&
             (std::isalnum(static_cast<unsigned char>(_input[_pos])) || _input[_pos] == '_')) {
        ++_pos;
      }
      _tok.kind = Token::Name;
      _tok.text = _input.substr(start, _pos - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = _pos;
      long long v = 0;
      while (_pos < _input.size() && std::isdigit(static_cast<unsigned char>(_input[_pos]))) {
        v = v * 10 + (_input[_pos] - '0');
        if (v > kMaxExponent) throw ParseError("exponent overflow", start);
        ++_pos;
      }
      _tok.kind = Token::Int;
      _tok.value = v;
      _tok.text = _input.substr(start, _pos - start);
      return;
    }
    static constexpr std::string_view punct = "^*()<>|,=-+";
    if (punct.find(ch) != std::string_view::npos) {
      _tok.kind = Token::Punct;
      _tok.punct = ch;
      _tok.text = _input.substr(_pos, 1);
      ++_pos;
      return;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", _pos);
  }

  std::string_view _input;
  std::size_t _pos = 0;
  Token _tok;
};

class Parser {
 public:
  Parser(std::string_view input, const std::vector<std::string>* alphabet)
      : _lex(input), _alphabet(alphabet) {}

  Word word() {
    Word w = factor();
    while (starts_factor() || is_punct('*')) {
      if (is_punct('*')) _lex.take();
      w = w * factor();
    }
    return w;
  }

  Presentation presentation() {
    expect('<');
    std::vector<std::string> names;
    names.push_back(generator_name());
    while (is_punct(',')) {
      _lex.take();
      names.push_back(generator_name());
    }
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (names[i] == names[j]) {
          throw ParseError("duplicate generator name '" + names[i] + "'", _lex.peek().pos);
        }
      }
    }
    _names = &names;
    expect('|');
    std::vector<Word> relators;
    if (!is_punct('>')) {
      relators.push_back(relation());
      while (is_punct(',')) {
        _lex.take();
        relators.push_back(relation());
      }
    }
    expect('>');
    _names = nullptr;
    return Presentation(std::move(names), std::move(relators));
  }

  void expect_end() {
    if (_lex.peek().kind != Token::End) {
      throw ParseError("trailing input after end of expression", _lex.peek().pos);
    }
  }

 private:
  const std::vector<std::string>& names() const { return _names ? *_names : *_alphabet; }

  bool is_punct(char ch) const {
    return _lex.peek().kind == Token::Punct && _lex.peek().punct == ch;
  }

  void expect(char ch) {
    if (!is_punct(ch)) {
      throw ParseError(std::string("expected '") + ch + "'", _lex.peek().pos);
    }
    _lex.take();
  }

  std::string generator_name() {
    if (_lex.peek().kind != Token::Name) {
      throw ParseError("expected a generator name", _lex.peek().pos);
    }
    return std::string(_lex.take().text);
  }

  bool starts_factor() const {
    const Token& t = _lex.peek();
    if (t.kind == Token::Name) return true;
    if (t.kind == Token::Int && t.value == 1) return true;
    if (t.kind == Token::Punct && t.punct == '(') return true;
    return false;
  }

  Word relation() {
    Word lhs = word();
    if (is_punct('=')) {
      _lex.take();
      Word rhs = word();
      return lhs * rhs.inverse();
    }
    return lhs;
  }

  Word atom() {
    const Token t = _lex.peek();
    if (t.kind == Token::Name) {
      _lex.take();
      const auto& ns = names();
      auto it = std::find(ns.begin(), ns.end(), t.text);
      if (it == ns.end()) {
        throw ParseError("unknown generator '" + std::string(t.text) + "'", t.pos);
      }
      return Word::generator(static_cast<int>(it - ns.begin()));
    }
    if (t.kind == Token::Int) {
      if (t.value != 1) throw ParseError("expected a generator, '(' or '1'", t.pos);
      _lex.take();
      return Word();
    }
    if (t.kind == Token::Punct && t.punct == '(') {
      _lex.take();
      Word w = word();
      expect(')');
      return w;
    }
    throw ParseError("expected a generator, '(' or '1'", t.pos);
  }

  Word factor() {
    Word base = atom();
    if (!is_punct('^')) return base;
    const std::size_t caret_pos = _lex.peek().pos;
    _lex.take();
    long long sign = 1;
    if (is_punct('-')) {
      _lex.take();
      sign = -1;
    } else if (is_punct('+')) {
      _lex.take();
    }
    if (_lex.peek().kind != Token::Int) {
      throw ParseError("expected an integer exponent", _lex.peek().pos);
    }
    long long e = sign * _lex.take().value;
    try {
      return base.pow(e);
    } catch (const std::overflow_error&) {
      throw ParseError("exponent overflow", caret_pos);
    }
  }

  Lexer _lex;
  const std::vector<std::string>* _alphabet;
  const std::vector<std::string>* _names = nullptr;
};

std::string letter_text(letter_t l, const std::vector<std::string>& names) {
  std::string s = names[letter_gen(l)];
  if (letter_sign(l) < 0) s += "^-1";
  return s;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet) {
  Parser p(text, &alphabet);
  Word w = p.word();
  p.expect_end();
  return w;
}

Presentation parse_presentation(std::string_view text) {
  Parser p(text, nullptr);
  Presentation pres = p.presentation();
  p.expect_end();
  return pres;
}

std::string print_word(const Word& w, const std::vector<std::string>& alphabet) {
  if (w.empty()) return "1";
  const auto& c = w.code();
  const std::size_t n = c.size();
  std::vector<std::string> factors;
  // Periods are searched only up to a small bound: longer blocks stay
  // uncompressed, which keeps the scan linear on long words. Any
  // factorization re-parses to the same word.
  constexpr std::size_t kMaxPeriod = 64;
  std::size_t i = 0;
  while (i < n) {
    // Greedy run detection: the block of period p repeated k times covering
    // the most letters wins; ties go to the shorter period.
    std::size_t best_p = 1, best_k = 1;
    for (std::size_t p = 1; p <= kMaxPeriod && i + 2 * p <= n; ++p) {
      std::size_t k = 1;
      while (i + (k + 1) * p <= n &&
             std::equal(c.begin() + i, c.begin() + i + p, c.begin() + i + k * p)) {
        ++k;
      }
      if (k >= 2 && p * k > best_p * best_k) {
        best_p = p;
        best_k = k;
      }
    }
    if (best_k >= 2) {
      if (best_p == 1) {
        long long e = static_cast<long long>(best_k) * letter_sign(c[i]);
        factors.push_back(alphabet[letter_gen(c[i])] + "^" + std::to_string(e));
      } else {
        std::string inner;
        for (std::size_t j = 0; j < best_p; ++j) {
          if (j) inner += "*";
          inner += letter_text(c[i + j], alphabet);
        }
        factors.push_back("(" + inner + ")^" + std::to_string(best_k));
      }
      i += best_p * best_k;
    } else {
      factors.push_back(letter_text(c[i], alphabet));
      ++i;
    }
  }
  std::string out;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j) out += "*";
    out += factors[j];
  }
  return out;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  if (p.relators.empty()) {
    out += "1";
  } else {
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i) out += ", ";
      out += print_word(p.relators[i], p.generators);
    }
  }
  out += " >";
  return out;
}

}  // namespace fpknot
