#pragma once

#include <random>
#include <vector>

#include "bvs/braid.hpp"
#include "bvs/poly.hpp"
#include "bvs/weyl.hpp"

namespace bvs {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SL_n building blocks.  Matrix indices are 0-based, Lie indices 1-based.
PolyMatrix b_matrix(int n, int i, const Poly& z);
PolyMatrix chevalley_x(int n, int i, const Poly& p);
PolyMatrix s_dot(int n, int i);
QMatrix torus_chi(int n, int i, const mpq_class& t);
// Product of s_dot over the lexicographically smallest reduced word of w.
PolyMatrix lift(const Perm& w);
QMatrix lift_q(const Perm& w);

// B_{word[0]}(z_{first}) B_{word[1]}(z_{first+1}) ... with 0-based variable
// numbering (variable k prints as z<k+1>).
PolyMatrix braid_matrix(int n, const Word& word, int first_var = 0);

struct BraidVarietyIdeal {
  std::vector<Poly> equations;        // strictly lower entries of lift(w0) B_beta
  std::vector<Poly> open_conditions;  // diagonal entries
};
BraidVarietyIdeal braid_variety_ideal(int n, const Word& beta);

struct Parametrization {
  std::vector<PolyMatrix> g_prime;  // c = 0..L
  std::vector<PolyMatrix> g;        // c = 0..L
  std::vector<PolyMatrix> F;        // d = 0..L, in the primed variables
  // phi[c-1] = index d such that z'_c pulls back to z_d (both 1-based).
  std::vector<int> phi;
};
Parametrization parametrize(const CartanData& c, const DoubleBraidWord& b);
// Substitution z'_c -> z_{phi(c)} as a variable renaming (0-based).
std::vector<int> phi_star_renaming(const Parametrization& p);

// Z_c = g'_c^{-1} g_c written directly as a product of braid matrices.
PolyMatrix z_coset(const CartanData& c, const DoubleBraidWord& b, int index);

struct BruhatCell {
  Perm w;
  std::vector<mpq_class> h;  // diagonal of the torus part
};
// Decomposes an invertible matrix as u lift(w) diag(h) u' with u, u'
// upper unitriangular.
BruhatCell bruhat_position(const QMatrix& m);
QMatrix compose_bruhat(const QMatrix& u, const Perm& w, const std::vector<mpq_class>& h, const QMatrix& u2);

struct SymbolicBruhatCell {
  Perm w;
  std::vector<RatFunc> h;
};
// Symbolic variant: the permutation is read off at random evaluation points
// (retrying on degenerate points) and h from ratios of grid minors.
SymbolicBruhatCell bruhat_position(const PolyMatrix& m, std::mt19937_64& rng);

// epsilon * minor of m on rows w({1..i}), columns {1..i}; epsilon is the
// same minor of lift(w).
Poly positive_grid_minor(const PolyMatrix& m, const Perm& w, int i);
// omega_i of u h u^{-1} for u = w0 w, given h as a list of ratios.
RatFunc negative_grid_minor(const std::vector<Poly>& positive_minors, const Perm& w, int i);

// All grid minors of a double braid word: positive[c][i-1] and
// negative[c][i-1] for c = 0..L and i = 1..n-1.
struct GridMinorTable {
  int n = 0;
  std::vector<Perm> w;
  std::vector<PolyMatrix> Z;
  std::vector<std::vector<Poly>> positive;
  std::vector<std::vector<RatFunc>> negative;
  // Signed index i (nonzero).
  RatFunc minor(int c, int i) const;
};
GridMinorTable grid_minors(const CartanData& c, const DoubleBraidWord& b);

// Delta_c = Delta_{c-1, i_c}, asserted polynomial.
Poly chamber_minor(const GridMinorTable& t, const DoubleBraidWord& b, int index);

// Random rational points with coordinates in [-bound, bound].
std::vector<mpq_class> random_point(int nvars, long bound, std::mt19937_64& rng);

}  // namespace bvs
