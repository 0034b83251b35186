#include "mcm/dsl.hpp"

#include <cctype>

#include "mcm/congruence.hpp"
#include "mcm/json_io.hpp"
#include "mcm/quotient.hpp"

namespace mcm {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (!done()) fail("trailing input");
    return e;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
  }

  int nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (advance() - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  Point point() {
    expect('(', "to open a point");
    const int i = nat();
    expect(',', "between point coordinates");
    const int j = nat();
    expect(')', "to close a point");
    if (i < 1 || j < 1) fail("point coordinates start at 1");
    return Point{i, j};
  }

  Expr expr() {
    Expr prod;
    prod.kind = Expr::Kind::Product;
    prod.children.push_back(term());
    while (eat('*')) prod.children.push_back(term());
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  Expr term() {
    Expr base = atom();
    skip_ws();
    if (peek() == '^') {
      advance();
      Expr pow;
      pow.kind = Expr::Kind::Power;
      pow.number = nat();
      pow.children.push_back(std::move(base));
      return pow;
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    if (done()) fail("unexpected end of input");
    const int at_line = line_, at_col = col_;
    const char c = peek();
    switch (c) {
      case 'I':
        advance();
        return Expr{};
      case 'W': {
        advance();
        Expr e;
        e.kind = Expr::Kind::Swap;
        return e;
      }
      case 'G':
      case 'U': {
        advance();
        Expr e;
        e.kind = c == 'G' ? Expr::Kind::RowGen : Expr::Kind::ColGen;
        e.number = nat();
        if (e.number < 1) throw ParseError("generator index must be positive", at_line, at_col);
        return e;
      }
      case 'E': {
        advance();
        expect('{', "to open a hole list");
        Expr e;
        e.kind = Expr::Kind::PartialId;
        skip_ws();
        if (peek() != '}') {
          do {
            skip_ws();
            const int pt_line = line_, pt_col = col_;
            if (!e.holes.insert(point()).second)
              throw ParseError("duplicate hole", pt_line, pt_col);
          } while (eat(','));
        }
        expect('}', "to close a hole list");
        return e;
      }
      case '(': {
        advance();
        Expr e = expr();
        expect(')', "to close a group");
        return e;
      }
      case '@': {
        advance();
        Expr e;
        e.kind = Expr::Kind::File;
        skip_ws();
        if (peek() == '"') {
          advance();
          while (!done() && peek() != '"') e.path.push_back(advance());
          if (done()) fail("unterminated path string");
          advance();
        } else {
          while (!done() && !std::isspace(static_cast<unsigned char>(peek())) &&
                 peek() != '*' && peek() != '^' && peek() != ')')
            e.path.push_back(advance());
        }
        if (e.path.empty()) fail("empty literal path");
        return e;
      }
      case '{': {
        // Inline JSON literal: scan the balanced object, then parse it.
        std::string raw;
        int depth = 0;
        bool in_string = false;
        do {
          if (done()) throw ParseError("unterminated literal", at_line, at_col);
          const char ch = advance();
          raw.push_back(ch);
          if (in_string) {
            if (ch == '\\' && !done())
              raw.push_back(advance());
            else if (ch == '"')
              in_string = false;
          } else if (ch == '"') {
            in_string = true;
          } else if (ch == '{') {
            ++depth;
          } else if (ch == '}') {
            --depth;
          }
        } while (depth > 0);
        Expr e;
        e.kind = Expr::Kind::Literal;
        try {
          e.literal = element_from_json(nlohmann::json::parse(raw));
        } catch (const std::exception& ex) {
          throw ParseError(std::string("bad element literal: ") + ex.what(), at_line, at_col);
        }
        return e;
      }
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

Element eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Identity:
      return mk_identity();
    case Expr::Kind::Swap:
      return mk_swap();
    case Expr::Kind::RowGen:
      return mk_row_shift(e.number);
    case Expr::Kind::ColGen:
      return mk_col_shift(e.number);
    case Expr::Kind::PartialId:
      return mk_partial_identity(e.holes);
    case Expr::Kind::File:
      return element_from_file(e.path);
    case Expr::Kind::Literal:
      return e.literal;
    case Expr::Kind::Product: {
      Element acc = eval(e.children.front());
      for (size_t k = 1; k < e.children.size(); ++k) acc = compose(acc, eval(e.children[k]));
      return acc;
    }
    case Expr::Kind::Power: {
      Element acc = mk_identity();
      const Element base = eval(e.children.front());
      for (int t = 0; t < e.number; ++t) acc = compose(acc, base);
      return acc;
    }
  }
  throw InternalError("unhandled expression kind");
}

std::string print_expression(const Element& e) {
  auto [plus, g] = decompose(e);
  const FreeWord w = generator_word(plus);

  std::string word;
  auto append = [&word](char name, int index, int exp) {
    if (!word.empty()) word += " * ";
    word += name;
    word += std::to_string(index);
    if (exp > 1) word += "^" + std::to_string(exp);
  };
  for (const auto& [k, exp] : w.a) append('G', k, exp);
  for (const auto& [l, exp] : w.b) append('U', l, exp);
  if (g) word += word.empty() ? "W" : " * W";

  const Element pi = class_preimage(SemidirectElement{w, g});
  if (equals(e, pi)) return word.empty() ? "I" : word;

  if (natural_leq(e, pi)) {
    std::set<Point> holes = domain_complement(e);
    for (const Point& h : domain_complement(pi)) holes.erase(h);
    std::string out = "E{";
    bool first = true;
    for (const Point& h : holes) {
      if (!first) out += ",";
      first = false;
      out += "(" + std::to_string(h.i) + "," + std::to_string(h.j) + ")";
    }
    out += "}";
    if (!word.empty()) out += " * " + word;
    return out;
  }

  return element_to_json(normalize(e)).dump();
}

}  // namespace mcm
