#include "gf2perfect/text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace gf2p {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Recursive descent over
//   sum     := product ('+' product)*
//   product := power (['*'] power)*
//   power   := atom ('^' integer)*
//   atom    := 'x' | '0' | '1' | hex | '(' sum ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial expression");
    Poly p = sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  static bool starts_atom(char c) { return c == 'x' || c == 'X' || c == '(' || c == '0' || c == '1'; }

  Poly sum() {
    Poly acc = product();
    while (peek() == '+') {
      ++pos_;
      acc += product();
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        if (!starts_atom(peek())) fail("expected a factor after '*'");
      } else if (!starts_atom(c)) {
        break;
      }
      const std::size_t start = pos_;
      Poly rhs = power();
      check_degree(acc, rhs, start);
      acc *= rhs;
    }
    return acc;
  }

  void check_degree(const Poly& a, const Poly& b, std::size_t at) const {
    if (a.is_zero() || b.is_zero()) return;
    if (static_cast<long long>(a.degree()) + b.degree() > kMaxParsedDegree) {
      throw ParseError("expression degree exceeds " + std::to_string(kMaxParsedDegree), at);
    }
  }

  Poly power() {
    Poly base = atom();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      const unsigned long long e = integer();
      if (!base.is_zero() && base.degree() > 0 &&
          e > static_cast<unsigned long long>(kMaxParsedDegree / base.degree())) {
        throw ParseError("exponent too large", start);
      }
      base = pow(base, e);
    }
    return base;
  }

  unsigned long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned long long value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || value > static_cast<unsigned long long>(kMaxParsedDegree)) {
      throw ParseError("exponent out of range", start);
    }
    return value;
  }

  Poly atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Poly::x();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '0' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
      pos_ += 2;
      const std::size_t digits = pos_;
      while (!at_end() && hex_digit(text_[pos_]) >= 0) ++pos_;
      if (digits == pos_) throw ParseError("empty hex literal", start);
      return from_hex(text_.substr(start, pos_ - start));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("coefficients must be 0 or 1", start);
      }
      return c == '1' ? Poly::one() : Poly::zero();
    }
    if (at_end()) fail("unexpected end of expression");
    if (std::isdigit(static_cast<unsigned char>(c))) fail("coefficients must be 0 or 1");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^";
      out += std::to_string(i);
    }
  }
  return out;
}

std::string to_hex(const Poly& p) {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (p.is_zero()) return "0x0";
  std::string out = "0x";
  for (int nib = p.degree() / 4; nib >= 0; --nib) {
    unsigned v = 0;
    for (int b = 3; b >= 0; --b) v = (v << 1) | (p.coeff(nib * 4 + b) ? 1U : 0U);
    out += kDigits[v];
  }
  return out;
}

Poly from_hex(std::string_view text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw ParseError("expected a hex literal of the form 0x...", 0);
  }
  std::vector<Poly::Word> words((text.size() - 2 + 15) / 16, 0);
  std::size_t nibble = 0;
  for (std::size_t i = text.size(); i-- > 2; ++nibble) {
    const int v = hex_digit(text[i]);
    if (v < 0) throw ParseError("invalid hex digit", i);
    words[nibble / 16] |= static_cast<Poly::Word>(v) << (4 * (nibble % 16));
  }
  return Poly(std::move(words));
}

}  // namespace gf2p
