#pragma once

#include <boost/rational.hpp>

#include <map>
#include <string>
#include <vector>

#include "bvs/braid.hpp"
#include "bvs/cartan.hpp"
#include "bvs/weave.hpp"

namespace bvs {

class TropicalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rational = boost::rational<long>;

// A Lusztig cycle on a weave: one nonnegative value per edge id.
struct Cycle {
  std::vector<long> values;
  long at(int edge) const { return values.at(static_cast<std::size_t>(edge)); }
  // Values read along the slice at the given depth.
  std::vector<long> on_slice(const Weave& w, int depth) const;
  bool operator==(const Cycle&) const = default;
};

struct LusztigDatum {
  Word word;
  std::vector<long> weights;
  bool operator==(const LusztigDatum&) const = default;
};

// Signed letters; negative letters are read from the left.
struct DoubleLusztigDatum {
  std::vector<int> word;
  std::vector<long> weights;
  bool operator==(const DoubleLusztigDatum&) const = default;
  bool operator<(const DoubleLusztigDatum& o) const {
    return word != o.word ? word < o.word : weights < o.weights;
  }
};

// Tropical rules for the three local vertex types that a type A weave can
// contain.  Inputs are listed left to right above the vertex.
std::vector<long> tropical_braid(long a1, long a2, long a3);
inline long tropical_trivalent(long a1, long a2) { return std::min(a1, a2); }

Cycle vertex_cycle(const Weave& w, int e);
// Re-checks the local rules at every vertex below the source of the cycle.
bool satisfies_tropical_rules(const Weave& w, int e, const Cycle& cyc);

LusztigDatum lusztig_datum(const Weave& w, int depth, int e);

// Generic-type reducedness test via inversion roots.
bool is_reduced_word(const CartanData& c, const Word& word);

CoweightVec coweight(const CartanData& c, const LusztigDatum& d);

// The weave cocharacter for the double inductive weave of b at depth c and
// vertex crossing e (both in weave indexing).
CoweightVec weave_cocharacter(const CartanData& c, const DoubleBraidWord& b, int depth, int e);
CoweightVec weave_cocharacter(const CartanData& c, const Weave& w, int depth, int e);

std::vector<Rational> dual_cycle(const CartanData& c, int color, const std::vector<long>& values, const Word& slice);

Rational slice_intersection(const CartanData& c, const Word& slice, int color_c, const std::vector<long>& nu_c,
                            const std::vector<long>& nu_d);

// Weight propagation through commutation and braid moves of a single word.
LusztigDatum lusztig_move(const LusztigDatum& d, const WordMove& m);
LusztigDatum propagate(const LusztigDatum& d, const std::vector<WordMove>& chain);

// Double Lusztig data.  Positions are 1-based; B4 acts on the first letter.
Perm double_reduced_element(const CartanData& c, const std::vector<int>& word);
bool is_double_reduced(const CartanData& c, const std::vector<int>& word);
bool double_move_applies(const CartanData& c, const std::vector<int>& word, MoveKind kind, int position);
DoubleLusztigDatum double_lusztig_move(const CartanData& c, const DoubleLusztigDatum& d, MoveKind kind,
                                       int position);
std::vector<std::pair<MoveKind, int>> double_moves(const CartanData& c, const std::vector<int>& word);

// Every datum reachable from d by B1-B4.  Throws if two paths reach the same
// word with different weights.
std::vector<DoubleLusztigDatum> double_class(const CartanData& c, const DoubleLusztigDatum& d);
// Representative: the weights attached to the lexicographically smallest
// reachable word.
DoubleLusztigDatum canonical_form(const CartanData& c, const DoubleLusztigDatum& d);

bool etop_applies(const CartanData& c, const std::vector<int>& word, int i);
DoubleLusztigDatum etop(const CartanData& c, const DoubleLusztigDatum& d, int i);

LusztigDatum datum_to_single(const CartanData& c, const DoubleLusztigDatum& d);

// "s2s1.chi2"-style rendering of a Lusztig datum's coweight.
std::string coweight_expression(const LusztigDatum& d);

struct LusztigTable {
  std::vector<int> vertices;  // vertex crossings, increasing
  std::vector<Word> words;    // slice words for depths 1..L
  // data[c-1][k] is the datum of vertices[k] at depth c.
  std::vector<std::vector<LusztigDatum>> data;
  std::vector<std::vector<CoweightVec>> coweights;
};

LusztigTable lusztig_table(const CartanData& c, const Weave& w);
std::string render_table_text(const LusztigTable& t);
std::string render_table_json(const LusztigTable& t);

}  // namespace bvs
