#include "gv/dsl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace gv {

namespace {

enum class Tok { Ident, Number, LBrace, RBrace, Semi, Comma, Plus, Minus, Star, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, int l, int c) {
    out.push_back({k, std::move(text), l, c});
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const int l = line, c = col;
    if (ch == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string t;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t += src[i++];
        ++col;
      }
      push(Tok::Ident, t, l, c);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string t;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t += src[i++];
        ++col;
      }
      if (i < src.size() && src[i] == '/') {
        t += src[i++];
        ++col;
        if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
          throw ParseError(line, col, "expected digits after '/' in rational literal");
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
          t += src[i++];
          ++col;
        }
      }
      push(Tok::Number, t, l, c);
      continue;
    }
    switch (ch) {
      case '{': push(Tok::LBrace, "{", l, c); break;
      case '}': push(Tok::RBrace, "}", l, c); break;
      case ';': push(Tok::Semi, ";", l, c); break;
      case ',': push(Tok::Comma, ",", l, c); break;
      case '+': push(Tok::Plus, "+", l, c); break;
      case '-': push(Tok::Minus, "-", l, c); break;
      case '*': push(Tok::Star, "*", l, c); break;
      default:
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  QuadAlgebra parse() {
    expect_keyword("algebra");
    expect(Tok::Ident, "algebra name");
    expect(Tok::LBrace, "'{'");
    expect_keyword("gens");
    QuadAlgebra a;
    if (peek().kind == Tok::Semi)
      throw ParseError(peek().line, peek().col, "empty generator list");
    while (true) {
      const Token t = expect(Tok::Ident, "generator name");
      for (const auto& existing : a.names)
        if (existing == t.text)
          throw ParseError(t.line, t.col, "duplicate generator '" + t.text + "'");
      a.names.push_back(t.text);
      if (peek().kind == Tok::Comma) {
        advance();
        continue;
      }
      break;
    }
    expect(Tok::Semi, "';' after generator list");
    a.n = static_cast<int>(a.names.size());
    expect_keyword("rels");
    Matrix rows(0, a.n * a.n);
    std::vector<Rational> storage;
    int nrows = 0;
    while (true) {
      std::vector<Rational> row = parse_expr(a);
      storage.insert(storage.end(), row.begin(), row.end());
      ++nrows;
      if (peek().kind == Tok::Comma) {
        advance();
        continue;
      }
      break;
    }
    expect(Tok::Semi, "';' after relation list");
    expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of input");
    rows.rows = nrows;
    rows.a = std::move(storage);
    a.rel = Subspace::from_rows(a.n * a.n, rows);
    return a;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError(peek().line, peek().col,
                       "expected " + what + ", found '" + peek().text + "'");
    Token t = peek();
    advance();
    return t;
  }

  void expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::Ident || peek().text != kw)
      throw ParseError(peek().line, peek().col,
                       "expected '" + kw + "', found '" + peek().text + "'");
    advance();
  }

  int generator_index(const QuadAlgebra& a, const Token& t) const {
    for (std::size_t i = 0; i < a.names.size(); ++i)
      if (a.names[i] == t.text) return static_cast<int>(i);
    throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
  }

  bool at_term_end() const {
    const Tok k = peek().kind;
    return k == Tok::Plus || k == Tok::Minus || k == Tok::Comma || k == Tok::Semi;
  }

  std::vector<Rational> parse_expr(const QuadAlgebra& a) {
    std::vector<Rational> row(static_cast<std::size_t>(a.n) * a.n, Rational(0));
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      negative = true;
      advance();
    } else if (peek().kind == Tok::Plus) {
      advance();
    }
    while (true) {
      parse_term(a, row, negative);
      if (peek().kind == Tok::Plus) {
        negative = false;
        advance();
      } else if (peek().kind == Tok::Minus) {
        negative = true;
        advance();
      } else {
        break;
      }
    }
    return row;
  }

  void parse_term(const QuadAlgebra& a, std::vector<Rational>& row, bool negative) {
    Rational coeff = 1;
    if (peek().kind == Tok::Number) {
      const Token num = peek();
      advance();
      coeff = rat_parse(num.text);
      if (at_term_end()) {
        if (coeff == 0) return;  // bare 0 is the zero relation
        throw ParseError(num.line, num.col, "non-quadratic term (constant)");
      }
      if (peek().kind == Tok::Star) advance();
    }
    const Token first = peek();
    if (first.kind != Tok::Ident)
      throw ParseError(first.line, first.col,
                       "expected generator, found '" + first.text + "'");
    advance();
    const int i = generator_index(a, first);
    if (at_term_end() || peek().kind != Tok::Star)
      throw ParseError(first.line, first.col, "non-quadratic term (degree 1)");
    advance();  // '*'
    const Token second = expect(Tok::Ident, "generator");
    const int j = generator_index(a, second);
    if (peek().kind == Tok::Star)
      throw ParseError(peek().line, peek().col, "non-quadratic term (degree > 2)");
    row[static_cast<std::size_t>(i) * a.n + j] += negative ? -coeff : coeff;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string word(int i, int j, const std::vector<std::string>& names) {
  return names[i] + "*" + names[j];
}

}  // namespace

QuadAlgebra parse_algebra(const std::string& src) { return Parser(src).parse(); }

std::string serialize_algebra(const QuadAlgebra& a, const std::string& name) {
  std::vector<std::string> names = a.names;
  if (static_cast<int>(names.size()) != a.n) {
    names.clear();
    for (int i = 0; i < a.n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  std::ostringstream os;
  os << "algebra " << name << " {\n  gens ";
  for (int i = 0; i < a.n; ++i) os << (i ? ", " : "") << names[i];
  os << ";\n  rels ";
  if (a.rel.dim() == 0) {
    os << "0";
  } else {
    for (int r = 0; r < a.rel.dim(); ++r) {
      if (r) os << ",\n       ";
      bool first = true;
      for (int c = 0; c < a.n * a.n; ++c) {
        const Rational& v = a.rel.basis.at(r, c);
        if (v == 0) continue;
        const Rational mag = v < 0 ? Rational(-v) : v;
        if (first) {
          if (v < 0) os << "-";
          first = false;
        } else {
          os << (v < 0 ? " - " : " + ");
        }
        if (mag != 1) os << rat_str(mag) << "*";
        os << word(c / a.n, c % a.n, names);
      }
    }
  }
  os << ";\n}\n";
  return os.str();
}

}  // namespace gv
