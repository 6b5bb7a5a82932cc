#ifndef OBSTRUKT_WORD_SYNTAX_HPP
#define OBSTRUKT_WORD_SYNTAX_HPP

// Text form of move words.
//
//   word := term { "*" term }
//   term := move [ "^" integer ]
//   move := "xi(" idx ")"
//         | "eta(" idx "," elem "," elem ")"
//         | "rho(" idx "," elem "," elem ")"
//         | "tau(" idx "," idx "," elem ")"
//         | "theta(" elem ")"
//         | "delta(" nat "," idx "," elem "," elem ")"
//   elem := "(" int "," int "," int "," int ")"
//   idx  := "1" | "2"
//
// Whitespace between tokens is ignored. An exponent k >= 0 repeats the move
// k times; negative exponents are rejected.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "obstrukt/moves.hpp"

namespace obstrukt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  // Byte offset into the input, at most its length.
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

// Upper bound on the number of moves a parsed word may expand to.
inline constexpr std::size_t kMaxParsedWordLength = 1'000'000;

MoveWord parse_word(std::string_view text);
GroupElement parse_element(std::string_view text);

// Canonical text: runs of equal moves written as move^k, terms joined by " * ".
std::string format_word(const MoveWord& w);
std::string format_move(const Move& m);
std::string format_element(const GroupElement& g);

}  // namespace obstrukt

#endif  // OBSTRUKT_WORD_SYNTAX_HPP
