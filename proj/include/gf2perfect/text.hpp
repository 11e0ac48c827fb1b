#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gf2perfect/poly.hpp"

namespace gf2p {

/// Raised by parse_poly; position() is the 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Largest degree the parser will materialise.
inline constexpr int kMaxParsedDegree = 1 << 20;

/// Accepts sums of "x^k", "x", "1", "0" and hex literals "0x...", plus
/// products with '*', implicit adjacency, '^' powers and parentheses, e.g.
/// "x^6(x+1)^3(x^3+x^2+1)(x^3+x+1)". Whitespace is ignored.
Poly parse_poly(std::string_view text);

/// Descending-term text, e.g. "x^4+x+1"; zero prints as "0".
std::string to_text(const Poly& p);

/// Lowercase coefficient bitmask, e.g. "0x13"; zero prints as "0x0".
std::string to_hex(const Poly& p);

/// Parses a bare "0x..." literal.
Poly from_hex(std::string_view text);

}  // namespace gf2p
