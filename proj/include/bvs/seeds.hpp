#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "bvs/geometry.hpp"
#include "bvs/tropical.hpp"
#include "bvs/weave.hpp"

namespace bvs {

class SeedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// Everything derived from one double braid word.  Solid crossings are kept
// in decreasing order; "row r" of any matrix below refers to solid[r].
struct SeedPipeline {
  SeedPipeline(CartanData c, DoubleBraidWord b) : cartan(std::move(c)), word(std::move(b)) {}
  CartanData cartan;
  DoubleBraidWord word;
  int n = 0;
  int length = 0;
  WSequence ws;
  std::vector<int> solid;
  Weave weave;
  // gamma[c][r]: cocharacter of solid[r] at Deodhar index c.
  std::vector<std::vector<CoweightVec>> gamma;
  GridMinorTable minors;
  IntMatrix exponents;
  IntMatrix exponents_inverse;
  std::vector<Poly> chamber;
  std::vector<Poly> variables;
  std::vector<bool> frozen;

  int row_of(int e) const;
  // Order of vanishing of Delta_{c,k} along the divisor of solid[r], for a
  // signed index k.
  long ord(int c, int k, int r) const;
};

// The weave defaults to the double inductive weave of the word; a different
// weave with the same slices (such as a compiled plabic weave) may be given.
SeedPipeline build_pipeline(const CartanData& c, const DoubleBraidWord& b, const Weave* weave = nullptr);

std::vector<std::vector<CoweightVec>> cochar_table(const CartanData& c, const DoubleBraidWord& b, const Weave& w);

// Skew matrices of 2-form coefficients, indexed like SeedPipeline rows.
// Entry (e, f) is the coefficient of dlog x_e ^ dlog x_f for e < f.
// Each solid crossing c contributes sign(i_c) 2 d L_{c,i} ^ L_{c-1,i} in the
// CurrentFirst orientation; PreviousFirst swaps the two factors, which
// negates the whole form.
enum class DeodharOrientation { CurrentFirst, PreviousFirst };
RationalMatrix deodhar_exchange(const SeedPipeline& p, DeodharOrientation o = DeodharOrientation::CurrentFirst);
RationalMatrix weave_exchange(const SeedPipeline& p);

// Local vertex forms in u-variables.  Rows and columns follow the edge
// order top-left to top-right, then bottom-left to bottom-right.
RationalMatrix slice_form(const CartanData& c, const Word& slice);
RationalMatrix trivalent_form(long d, Side side);  // edges: old, top, south
RationalMatrix hexavalent_form(long d);            // edges: 3 in, 3 out
RationalMatrix octavalent_form();                  // edges: 4 in, 4 out
RationalMatrix dodecavalent_form(const CartanData& g2);  // 6 in (212121), 6 out (121212)

struct Seed {
  std::vector<int> indices;  // Deodhar indices, decreasing
  int length = 0;            // word length, for the weave index e -> L - e
  std::vector<Poly> variables;
  std::vector<bool> frozen;
  RationalMatrix epsilon;
  std::vector<long> d;
  int position(int e) const;
};

RationalMatrix extract_epsilon(const RationalMatrix& omega, const std::vector<long>& d, const std::vector<bool>& frozen);
Seed make_seed(const SeedPipeline& p);
Seed make_seed(const CartanData& c, const DoubleBraidWord& b);
Seed mutate(const Seed& s, int e);

struct SeedComparison {
  bool matched = false;
  std::map<int, int> relabel;  // index of T -> index of S
  bool identity() const;
  std::string detail;
};
// Pulls the variables of t back along the coordinate change and matches them
// against s up to sign, then compares exchange matrices under the matching.
SeedComparison compare_seeds(const Seed& s, const Seed& t, const std::map<int, Poly>& t_to_s = {});

// Coordinates of the moved word in terms of the original ones (0-based
// variable indices).
std::map<int, Poly> move_coordinate_change(const MoveResult& m);

struct MoveReport {
  MoveResult move;
  std::string expected;  // "equal", "relabel" or "mutation"
  int mutation_index = 0;
  SeedComparison comparison;
  bool verified = false;
};
MoveReport check_move(const CartanData& c, const DoubleBraidWord& b, MoveKind kind, int position);

struct VerifyOptions {
  bool tori = true, vars = true, forms = true;
  int points = 20;
};

struct VerifyReport {
  bool tori = true, vars = true, cross_route = true, forms = true;
  int torus_points = 0;
  int off_torus_points = 0;
  int undecided_irreducibility = 0;
  std::vector<std::string> failures;
  bool ok() const { return tori && vars && cross_route && forms; }
};
VerifyReport verify_main_theorem(const SeedPipeline& p, std::mt19937_64& rng, const VerifyOptions& opt = {});
VerifyReport verify_main_theorem(const CartanData& c, const DoubleBraidWord& b, std::mt19937_64& rng,
                                 const VerifyOptions& opt = {});

std::string seed_json(const Seed& s, bool opposite_quiver = false);
std::string seed_dot(const Seed& s, bool opposite_quiver = false);

}  // namespace bvs
