#include "thue/word.hpp"

#include <algorithm>

namespace thue {

std::optional<SquareOccurrence> find_square(std::span<const Color> w) {
  const std::size_t n = w.size();
  std::optional<SquareOccurrence> best;
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    // Only starts strictly left of the current best can improve on it;
    // equal starts lose to the already-found shorter half length.
    const std::size_t start_limit = best ? best->start : n;
    std::size_t run = 0;
    for (std::size_t j = 0; j + h < n; ++j) {
      if (j + 1 >= start_limit + h) break;
      run = (w[j] == w[j + h]) ? run + 1 : 0;
      if (run == h) {
        best = SquareOccurrence{j + 1 - h, h};
        break;
      }
    }
  }
  return best;
}

bool is_square(std::span<const Color> w) {
  if (w.empty() || w.size() % 2 != 0) return false;
  const std::size_t h = w.size() / 2;
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h),
                    w.begin() + static_cast<std::ptrdiff_t>(h));
}

ColorWord squarefree_ternary_word(std::size_t n) {
  ColorWord word;
  word.reserve(n + 2);
  if (n == 0) return word;
  word.push_back(0);
  // The word is a fixed point, so expanding symbol i in place appends the
  // image of word[i]; position i is always fully determined before we read it.
  for (std::size_t i = 0; word.size() < n; ++i) {
    switch (word[i]) {
      case 0:
        if (i == 0) {
          word.push_back(1);
          word.push_back(2);
        } else {
          word.insert(word.end(), {0, 1, 2});
        }
        break;
      case 1:
        word.insert(word.end(), {0, 2});
        break;
      default:
        word.push_back(1);
        break;
    }
  }
  word.resize(n);
  return word;
}

}  // namespace thue
