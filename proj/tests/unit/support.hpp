#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "bvs/braid.hpp"
#include "bvs/weyl.hpp"

namespace testing {

inline const bvs::DoubleBraidWord kRunning{-2, 1, 2, 1, -1, 1, 2};

// Permutations as plain vectors, independent of bvs::Perm.
using Raw = std::vector<int>;

inline Raw raw_identity(int n) {
  Raw r(n);
  for (int k = 0; k < n; ++k) r[k] = k + 1;
  return r;
}

inline int raw_length(const Raw& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
  return inv;
}

// w * s_i: swap the entries in positions i, i+1.
inline Raw raw_right(Raw w, int i) {
  std::swap(w[i - 1], w[i]);
  return w;
}

// s_i * w: swap the values i, i+1.
inline Raw raw_left(Raw w, int i) {
  for (int& x : w) x = x == i ? i + 1 : (x == i + 1 ? i : x);
  return w;
}

inline Raw raw_of_word(int n, const bvs::Word& word) {
  Raw w = raw_identity(n);
  for (int i : word) w = raw_right(w, i);
  return w;
}

inline Raw raw_longest(int n) {
  Raw r(n);
  for (int k = 0; k < n; ++k) r[k] = n - k;
  return r;
}

// Demazure product as the longest product over all subwords.
inline Raw brute_demazure(int n, const bvs::Word& word) {
  Raw best = raw_identity(n);
  const std::size_t L = word.size();
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    bvs::Word sub;
    for (std::size_t k = 0; k < L; ++k)
      if (mask & (1u << k)) sub.push_back(word[k]);
    Raw w = raw_of_word(n, sub);
    if (raw_length(w) > raw_length(best)) best = w;
  }
  return best;
}

// Random double braid word in SL_n (n <= 4) whose Demazure product is w0.
inline bvs::DoubleBraidWord random_full_word(std::mt19937_64& rng, int n, int max_length, bool positive_only = false) {
  const int lw0 = n * (n - 1) / 2;
  for (;;) {
    int L = lw0 + static_cast<int>(rng() % static_cast<unsigned>(max_length - lw0 + 1));
    bvs::DoubleBraidWord b;
    for (int k = 0; k < L; ++k) {
      int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      b.push_back(positive_only || rng() % 2 ? i : -i);
    }
    // Starred negatives in order, then the positives reversed.
    bvs::Word single;
    for (int x : b)
      if (x < 0) single.push_back(n + x);
    bvs::Word pos;
    for (int x : b)
      if (x > 0) pos.push_back(x);
    single.insert(single.end(), pos.rbegin(), pos.rend());
    if (bvs::demazure_product(n, single) == bvs::Perm::longest(n)) return b;
  }
}

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace testing
