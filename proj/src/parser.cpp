#include "kahler/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail(ErrorCode::SyntaxError, "empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& why) const { throw ParseError(code, why, pos_); }

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

  Polynomial expr() {
    skip_ws();
    bool negate = accept('-');
    if (!negate) accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (start == pos_) fail(ErrorCode::SyntaxError, "expected a natural exponent after '^'");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) {
        pos_ = start;
        fail(ErrorCode::SyntaxError, "exponent too large");
      }
      b = pow(b, static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ == text_.size()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return inner;
    }
    if (digit(c)) return literal();
    if (ident_start(c)) return variable();
    fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
  }

  Polynomial literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    // a '/' directly after digits continues the literal
    std::size_t look = pos_;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    std::string lit(text_.substr(start, pos_ - start));
    if (look < text_.size() && text_[look] == '/') {
      pos_ = look + 1;
      skip_ws();
      const std::size_t den_start = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (den_start == pos_) fail(ErrorCode::InvalidLiteral, "expected a positive integer denominator");
      lit += '/';
      lit += text_.substr(den_start, pos_ - den_start);
    }
    try {
      return Polynomial::constant(ring_, parse_literal(lit, ring_->field));
    } catch (const ParseError& e) {
      throw ParseError(ErrorCode::InvalidLiteral, "invalid literal '" + lit + "'", start);
    }
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto& names = ring_->names;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      pos_ = start;
      fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    }
    return Polynomial::variable(ring_, static_cast<std::size_t>(it - names.begin()));
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      const std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    } else if (digit(text[i])) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<std::string> infer_variables(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  for (const auto& t : texts) {
    for (auto& n : collect_identifiers(t)) names.insert(std::move(n));
  }
  unsigned long max_index = 0;
  bool indexed = !names.empty();
  for (const auto& n : names) {
    if (n.size() < 2 || n[0] != 'x' || !std::all_of(n.begin() + 1, n.end(), digit) || n[1] == '0' || n.size() > 7) {
      indexed = false;
      break;
    }
    max_index = std::max(max_index, std::stoul(n.substr(1)));
  }
  std::vector<std::string> out;
  if (indexed) {
    for (unsigned long i = 1; i <= max_index; ++i) out.push_back("x" + std::to_string(i));
  } else {
    out.assign(names.begin(), names.end());
  }
  return out;
}

}  // namespace kahler
