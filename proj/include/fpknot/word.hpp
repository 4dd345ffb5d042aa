#ifndef FPKNOT_WORD_HPP
#define FPKNOT_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fpknot {

// A letter is a signed generator reference: +(g+1) for generator g,
// -(g+1) for its inverse. Generator indices are 0-based positions in
// some alphabet owned by a Presentation.
using letter_t = std::int32_t;

inline constexpr letter_t make_letter(int gen, int sign) {
  return sign >= 0 ? letter_t(gen + 1) : letter_t(-(gen + 1));
}
inline constexpr int letter_gen(letter_t l) { return (l > 0 ? l : -l) - 1; }
inline constexpr int letter_sign(letter_t l) { return l > 0 ? 1 : -1; }

// A word over a generator alphabet, always stored freely reduced.
// The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Free-reduces the raw letter sequence; the only way to build a Word.
  static Word from_letters(const std::vector<letter_t>& letters);
  static Word generator(int gen, int sign = 1);

  std::size_t size() const noexcept { return _code.size(); }
  bool empty() const noexcept { return _code.empty(); }
  letter_t at(std::size_t i) const { return _code[i]; }
  int gen_at(std::size_t i) const { return letter_gen(_code[i]); }
  int sign_at(std::size_t i) const { return letter_sign(_code[i]); }
  const std::vector<letter_t>& code() const noexcept { return _code; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  // w^e, flattened; negative e inverts. Throws std::overflow_error when the
  // expansion would exceed the internal length cap.
  Word pow(long long e) const;

  // Largest generator index referenced, or -1 for the empty word.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<letter_t> _code;
};

// Unique freely reduced form of a raw letter list. Idempotent.
Word free_reduce(const std::vector<letter_t>& letters);

// Strips matching first/last letters (conjugation) until the word is
// cyclically reduced. Expects a freely reduced input, which Word guarantees.
Word cyclic_reduce(const Word& w);

}  // namespace fpknot

#endif  // FPKNOT_WORD_HPP
