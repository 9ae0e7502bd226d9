#pragma once

#include "gammacalc/abgroup.hpp"

#include <cctype>

namespace gammacalc {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg) + " at position " + std::to_string(pos)),
        position(pos) {}
};

// One summand of a group expression: Z, Z^k, Z/n, or Z/n^k.
struct GroupAtom {
  Int modulus = 0;      // 0 for Z
  std::size_t copies = 1;
};

struct GroupExpression {
  std::vector<GroupAtom> atoms;

  FgAbGroup evaluate() const {
    std::vector<Int> orders;
    for (const GroupAtom& a : atoms)
      for (std::size_t k = 0; k < a.copies; ++k) orders.push_back(a.modulus);
    return group_of_orders(orders);
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) out += " + ";
      out += "Z";
      if (atoms[i].modulus != 0) out += "/" + atoms[i].modulus.str();
      if (atoms[i].copies != 1) out += "^" + std::to_string(atoms[i].copies);
    }
    return out.empty() ? "0" : out;
  }
};

// grammar: expr := atom ('+' atom)* ; atom := 'Z' | 'Z^'INT | 'Z/'INT | 'Z/'INT'^'INT
inline GroupExpression parse_group(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> Int {
    skip_ws();
    std::size_t start = pos;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    if (digits.empty()) throw ParseError("expected an integer", start);
    return Int(digits);
  };

  GroupExpression expr;
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'Z')
      throw ParseError("expected 'Z'", pos);
    ++pos;
    GroupAtom atom;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t mod_pos = pos;
      atom.modulus = read_int();
      if (atom.modulus < 2)
        throw ParseError("modulus must be at least 2", mod_pos);
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t exp_pos = pos;
      Int k = read_int();
      if (k < 1) throw ParseError("exponent must be at least 1", exp_pos);
      atom.copies = k.convert_to<std::size_t>();
    }
    expr.atoms.push_back(atom);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+' or end of input", pos);
    ++pos;
  }
  return expr;
}

}  // namespace gammacalc
