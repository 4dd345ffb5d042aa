#include "fpknot/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpknot {

namespace {
constexpr std::size_t kMaxWordLength = 1u << 23;  // 8M letters
}

Word Word::from_letters(const std::vector<letter_t>& letters) {
  Word w;
  w._code.reserve(letters.size());
  for (letter_t l : letters) {
    if (l == 0) throw std::invalid_argument("letter code 0 is not a letter");
    if (!w._code.empty() && w._code.back() == -l) {
      w._code.pop_back();
    } else {
      w._code.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int gen, int sign) {
  if (gen < 0) throw std::invalid_argument("generator index must be nonnegative");
  Word w;
  w._code.push_back(make_letter(gen, sign));
  return w;
}

Word Word::inverse() const {
  Word w;
  w._code.reserve(_code.size());
  for (auto it = _code.rbegin(); it != _code.rend(); ++it) w._code.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  // Both sides are reduced, so cancellation happens only at the seam.
  Word w;
  w._code = _code;
  for (letter_t l : rhs._code) {
    if (!w._code.empty() && w._code.back() == -l) {
      w._code.pop_back();
    } else {
      w._code.push_back(l);
    }
  }
  return w;
}

Word Word::pow(long long e) const {
  const Word base = e >= 0 ? *this : inverse();
  unsigned long long k = e >= 0 ? (unsigned long long)e : 0ull - (unsigned long long)e;
  if (k != 0 && base._code.size() > kMaxWordLength / k) {
    throw std::overflow_error("word power exceeds length cap");
  }
  Word w;
  w._code.reserve(base._code.size() * k);
  for (unsigned long long i = 0; i < k; ++i) {
    // base is reduced and no cancellation can occur between copies unless the
    // base is cyclically reducible; handle the general case via the seam rule.
    for (letter_t l : base._code) {
      if (!w._code.empty() && w._code.back() == -l) {
        w._code.pop_back();
      } else {
        w._code.push_back(l);
      }
    }
  }
  return w;
}

int Word::max_generator() const {
  int m = -1;
  for (letter_t l : _code) m = std::max(m, letter_gen(l));
  return m;
}

Word free_reduce(const std::vector<letter_t>& letters) { return Word::from_letters(letters); }

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  const auto& c = w.code();
  while (hi - lo >= 2 && c[lo] == -c[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word::from_letters(std::vector<letter_t>(c.begin() + lo, c.begin() + hi));
}

}  // namespace fpknot
