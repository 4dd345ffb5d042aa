#ifndef FPKNOT_TEXT_HPP
#define FPKNOT_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpknot/presentation.hpp"
#include "fpknot/word.hpp"

namespace fpknot {

// Word grammar:
//   word    := factor (('*' | whitespace) factor)*
//   factor  := atom ('^' integer)?
//   atom    := name | '(' word ')' | '1'
//   integer := signed decimal
// Presentation grammar:
//   presentation := '<' name (',' name)* '|' relation (',' relation)* '>'
//   relation     := word ('=' word)?
// Input is UTF-8; '#' starts a comment running to end of line.
// A relation "w1 = w2" is stored as the relator w1*w2^-1; a bare word w
// means w = 1. An empty relation list ("< a | >") is accepted.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position);
  std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;  // byte offset into the input
};

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet);
Presentation parse_presentation(std::string_view text);

std::string print_word(const Word& w, const std::vector<std::string>& alphabet);
std::string print_presentation(const Presentation& p);

}  // namespace fpknot

#endif  // FPKNOT_TEXT_HPP
