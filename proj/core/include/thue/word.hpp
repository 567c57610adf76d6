#pragma once

#include <optional>
#include <span>

#include "thue/types.hpp"

namespace thue {

/// An occurrence of a square `xx` inside a word: w[start, start+half_len)
/// equals w[start+half_len, start+2*half_len).
struct SquareOccurrence {
  std::size_t start = 0;
  std::size_t half_len = 0;

  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Returns the leftmost square in `w` (ties broken by shortest half length),
/// or nullopt if `w` is squarefree.
///
/// Runs in O(n^2) time: for each half length h a single pass counts the run
/// of positions j with w[j] == w[j+h]; a run of length h is a square.
std::optional<SquareOccurrence> find_square(std::span<const Color> w);

/// True iff the whole word has the form xx with x non-empty.
bool is_square(std::span<const Color> w);

/// Prefix of length n of the fixed point of 0 -> 012, 1 -> 02, 2 -> 1.
ColorWord squarefree_ternary_word(std::size_t n);

}  // namespace thue
