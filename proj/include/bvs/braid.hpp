#pragma once

#include <string>
#include <vector>

#include "bvs/cartan.hpp"
#include "bvs/weyl.hpp"

namespace bvs {

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Letters of a double braid word are nonzero signed indices.  Positions are
// 1-based throughout this header: letter c of b is b[c-1].
using DoubleBraidWord = std::vector<int>;

struct DoubleStringEntry {
  int index = 1;
  Side side = Side::Right;
  bool operator==(const DoubleStringEntry&) const = default;
};
using DoubleString = std::vector<DoubleStringEntry>;

// n of SL_n for type A Cartan data; throws for other families.
int sl_rank(const CartanData& c);

void validate_word(const CartanData& c, const DoubleBraidWord& b);

Word to_single(const CartanData& c, const DoubleBraidWord& b);
Perm demazure_of_double(const CartanData& c, const DoubleBraidWord& b);

// w[c] for c = 0..L with w[L] = id and
// w[c-1] = s^-_{|i_c|*} * w[c] * s^+_{i_c} (Demazure steps).
struct WSequence {
  std::vector<Perm> w;
  int length() const { return static_cast<int>(w.size()) - 1; }
  const Perm& at(int c) const { return w.at(static_cast<std::size_t>(c)); }
  // The same sequence read from the string side: depth k <-> index L - k.
  const Perm& mirrored(int k) const { return at(length() - k); }
};

WSequence w_sequence(const CartanData& c, const DoubleBraidWord& b);

// Solid crossings in decreasing order.
std::vector<int> solid_indices(const CartanData& c, const DoubleBraidWord& b);

inline int mirror_index(int length, int c) { return length - c; }

DoubleString double_string_of(const CartanData& c, const DoubleBraidWord& b);
DoubleBraidWord double_word_of(const CartanData& c, const DoubleString& s);
// Demazure products of the prefixes of s, depths 0..L.
std::vector<Perm> w_sequence_of_string(const CartanData& c, const DoubleString& s);

std::vector<Perm> v_sequence(const CartanData& c, const DoubleBraidWord& b, int e);
bool is_mutable(const CartanData& c, const DoubleBraidWord& b, int e);

enum class MoveKind { B1, B2, B3, B4, B5 };

struct MoveResult {
  DoubleBraidWord word;
  MoveKind kind = MoveKind::B1;
  int position = 1;  // leftmost letter of the window
  int c = 1;         // rightmost letter of the window
  bool all_solid = false;
  bool special = false;  // B1 only: all solid and w_c s_|i| = s_|j|* w_c
};

// Windows: B1/B2 swap letters p, p+1; B3 rewrites p..p+2; B4 acts on the
// last letter and B5 on the first (position is ignored for those two).
MoveResult apply_move(const CartanData& c, const DoubleBraidWord& b, MoveKind kind, int position);
bool move_applies(const CartanData& c, const DoubleBraidWord& b, MoveKind kind, int position);
MoveKind parse_move_kind(const std::string& s);
std::string to_string(MoveKind k);

Word richardson_to_braid(const CartanData& c, const Word& v_word, const Word& w_word);

std::string to_string(const DoubleString& s);
DoubleString parse_double_string(const CartanData& c, const std::string& text);

}  // namespace bvs
