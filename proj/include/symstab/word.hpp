#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace symstab {

// A degeneracy word in Eilenberg-Zilber normal form is a strictly decreasing
// sequence of operator indices s_{j1} s_{j2} ... s_{jr}, j1 > j2 > ... > jr.
// Such a word is determined by its index set, so we store it as a bitmask.
using Word = std::uint32_t;

inline int word_length(Word w) { return std::popcount(w); }

inline Word word_mask(int k) { return k >= 32 ? ~Word(0) : (Word(1) << k) - 1; }

// Normal form of s_a composed on the left with a normalized word:
// every index >= a shifts up by one, then a joins the set.
inline Word word_insert(int a, Word w) {
  const Word low = w & word_mask(a);
  const Word high = (w >> a) << (a + 1);
  return high | (Word(1) << a) | low;
}

// Normal form of prefix[0] o ... o prefix[len-1] o w (prefix applied on the
// left, prefix[len-1] innermost).
inline Word word_compose(const std::int8_t* prefix, int len, Word w) {
  for (int k = len - 1; k >= 0; --k) w = word_insert(prefix[k], w);
  return w;
}

// Result of pushing a face operator d_i through a degeneracy word.
struct FacePush {
  bool cancelled;  // d_i annihilated against some s_j
  Word word;       // cancelled: the full residual word (normal form)
  int face_index;  // !cancelled: index of the face operator that emerges
  Word prefix;     // !cancelled: degeneracy operators left of the emerging d
};

// d_i s_{j1} ... s_{jr}: commute d_i to the right using the simplicial
// identities, either cancelling against some s_j or emerging on the right.
inline FacePush push_face(int i, Word w) {
  std::array<std::int8_t, 32> prefix;
  int np = 0;
  Word rest = w;
  while (rest) {
    const int j = 31 - std::countl_zero(rest);
    rest &= ~(Word(1) << j);
    if (i == j || i == j + 1) {
      // prefix entries all exceed the untouched tail, so the union is normal
      Word out = rest;
      for (int k = 0; k < np; ++k) out |= Word(1) << prefix[k];
      return {true, out, 0, 0};
    }
    if (i < j) {
      prefix[np++] = static_cast<std::int8_t>(j - 1);
    } else {  // i > j + 1
      prefix[np++] = static_cast<std::int8_t>(j);
      --i;
    }
  }
  Word p = 0;
  for (int k = 0; k < np; ++k) p |= Word(1) << prefix[k];
  return {false, 0, i, p};
}

// Compose a prefix produced by push_face with a stored face word.
inline Word word_compose(Word prefix, Word w) {
  // prefix bits must be applied innermost-first, i.e. ascending
  while (prefix) {
    const int a = std::countr_zero(prefix);
    prefix &= prefix - 1;
    w = word_insert(a, w);
  }
  return w;
}

}  // namespace symstab
