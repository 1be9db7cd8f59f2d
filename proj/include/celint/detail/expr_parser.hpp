#pragma once

#include "celint/errors.hpp"
#include "celint/rational.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace celint::detail {

/// Recursive-descent parser for the arithmetic expression grammar shared by
/// rational functions and class literals:
///
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := ('+'|'-') unary | power
///   power  := atom ('^' digits)?
///   atom   := digits | '(' expr ')' | <domain atom>
///
/// The Domain supplies the value type, arithmetic and the atoms it knows
/// (the indeterminate m, basis names).
template <class Domain>
class ExprParser {
public:
  using Value = typename Domain::Value;

  ExprParser(const Domain& domain, std::string_view text) : domain_(domain), text_(text) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = domain_.add(v, term());
      else if (accept('-'))
        v = domain_.sub(v, term());
      else
        return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*'))
        v = domain_.mul(v, unary());
      else if (accept('/'))
        v = domain_.div(v, unary());
      else
        return v;
    }
  }

  Value unary() {
    if (accept('-')) return domain_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return domain_.pow(base, std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return domain_.constant(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (auto hit = domain_.match_atom(text_.substr(pos_))) {
      pos_ += hit->second;
      return std::move(hit->first);
    }
    fail("unknown symbol");
  }

  const Domain& domain_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace celint::detail
