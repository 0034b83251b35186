#pragma once

#include <set>
#include <string>
#include <vector>

#include "mcm/element.hpp"

namespace mcm {

/// Expression over the element constructors. Products apply left to right
/// (the left factor acts first), matching the composition convention of the
/// rest of the library.
///
/// Grammar, whitespace insignificant:
///   expr  := term { "*" term }
///   term  := atom [ "^" NAT ]
///   atom  := "I" | "W" | "G" NAT | "U" NAT
///          | "E" "{" [point {"," point}] "}"
///          | "(" expr ")"
///          | "@" path          (JSON element literal loaded from a file)
///          | "{" json "}"      (inline JSON element literal)
///   point := "(" NAT "," NAT ")"
struct Expr {
  enum class Kind {
    Identity,   // I
    Swap,       // W
    RowGen,     // G n
    ColGen,     // U n
    PartialId,  // E{holes}
    File,       // @path
    Literal,    // inline JSON
    Product,    // children, left to right
    Power,      // children[0] ^ number
  };
  Kind kind = Kind::Identity;
  int number = 0;
  std::set<Point> holes;
  std::string path;
  Element literal;
  std::vector<Expr> children;
};

/// Carries the 1-based position of the offending character.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(std::string msg, int line_, int col_)
      : std::runtime_error(std::move(msg) + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
};

Expr parse(const std::string& text);

/// Folds the tree through the element constructors and compose. File
/// literals are read here; I/O errors propagate.
Element eval(const Expr& e);

/// Canonical expression for an element: the generator word of its class
/// ("G k^e * ... * U l^f * ... [* W]"), prefixed with an "E{holes}" factor
/// when the element is a proper restriction of the word product, or a raw
/// inline JSON literal when the finite part deviates further. Feeding the
/// result through parse and eval reproduces an equal element.
std::string print_expression(const Element& e);

}  // namespace mcm
