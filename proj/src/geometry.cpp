#include "bvs/geometry.hpp"

#include <algorithm>
#include <optional>

namespace bvs {

namespace {

void check_lie_index(int n, int i) {
  if (i < 1 || i >= n) throw GeometryError("index " + std::to_string(i) + " out of range for SL_" + std::to_string(n));
}

QMatrix to_q(const PolyMatrix& m) { return m.eval({}); }

}  // namespace

PolyMatrix b_matrix(int n, int i, const Poly& z) {
  check_lie_index(n, i);
  PolyMatrix m = PolyMatrix::identity(n);
  m.at(i - 1, i - 1) = z;
  m.at(i - 1, i) = Poly(-1);
  m.at(i, i - 1) = Poly(1);
  m.at(i, i) = Poly(0);
  return m;
}

PolyMatrix chevalley_x(int n, int i, const Poly& p) {
  check_lie_index(n, i);
  PolyMatrix m = PolyMatrix::identity(n);
  m.at(i - 1, i) = p;
  return m;
}

PolyMatrix s_dot(int n, int i) { return b_matrix(n, i, Poly(0)); }

QMatrix torus_chi(int n, int i, const mpq_class& t) {
  check_lie_index(n, i);
  if (t == 0) throw GeometryError("torus element with zero parameter");
  QMatrix m = q_identity(n);
  m[i - 1][i - 1] = t;
  m[i][i] = 1 / t;
  return m;
}

PolyMatrix lift(const Perm& w) {
  PolyMatrix m = PolyMatrix::identity(w.n());
  for (int i : lex_reduced_word(w)) m = m * s_dot(w.n(), i);
  return m;
}

QMatrix lift_q(const Perm& w) { return to_q(lift(w)); }

PolyMatrix braid_matrix(int n, const Word& word, int first_var) {
  PolyMatrix m = PolyMatrix::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k)
    m = m * b_matrix(n, word[k], Poly::var(first_var + static_cast<int>(k)));
  return m;
}

BraidVarietyIdeal braid_variety_ideal(int n, const Word& beta) {
  if (!(demazure_product(n, beta) == Perm::longest(n)))
    throw GeometryError("Demazure product of " + word_to_string(beta) + " is not the longest element");
  PolyMatrix m = lift(Perm::longest(n)) * braid_matrix(n, beta);
  BraidVarietyIdeal out;
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < r; ++col)
      if (!m.at(r, col).is_zero()) out.equations.push_back(m.at(r, col));
  for (int r = 0; r < n; ++r) out.open_conditions.push_back(m.at(r, r));
  return out;
}

Parametrization parametrize(const CartanData& c, const DoubleBraidWord& b) {
  validate_word(c, b);
  const int n = sl_rank(c);
  const int L = static_cast<int>(b.size());
  Parametrization p;
  p.g_prime.push_back(PolyMatrix::identity(n));
  for (int k = 1; k <= L; ++k) {
    int i = b[k - 1];
    p.g_prime.push_back(i < 0 ? p.g_prime.back() * b_matrix(n, star(c, -i), Poly::var(k - 1)) : p.g_prime.back());
  }
  p.g.assign(static_cast<std::size_t>(L) + 1, PolyMatrix());
  p.g[L] = p.g_prime[L];
  for (int k = L; k >= 1; --k) {
    int i = b[k - 1];
    p.g[k - 1] = i > 0 ? p.g[k] * b_matrix(n, i, Poly::var(k - 1)) : p.g[k];
  }
  Word single = to_single(c, b);
  p.F.push_back(PolyMatrix::identity(n));
  for (int d = 1; d <= L; ++d) p.F.push_back(p.F.back() * b_matrix(n, single[d - 1], Poly::var(d - 1)));
  std::vector<int> neg, pos;
  for (int k = 1; k <= L; ++k) (b[k - 1] < 0 ? neg : pos).push_back(k);
  p.phi = neg;
  p.phi.insert(p.phi.end(), pos.rbegin(), pos.rend());
  return p;
}

std::vector<int> phi_star_renaming(const Parametrization& p) {
  std::vector<int> out;
  for (int d : p.phi) out.push_back(d - 1);
  return out;
}

PolyMatrix z_coset(const CartanData& c, const DoubleBraidWord& b, int index) {
  validate_word(c, b);
  const int n = sl_rank(c);
  const int L = static_cast<int>(b.size());
  if (index < 0 || index > L) throw GeometryError("coset index out of range");
  PolyMatrix m = PolyMatrix::identity(n);
  for (int d = index + 1; d <= L; ++d)
    if (b[d - 1] < 0) m = m * b_matrix(n, star(c, -b[d - 1]), Poly::var(d - 1));
  for (int d = L; d > index; --d)
    if (b[d - 1] > 0) m = m * b_matrix(n, b[d - 1], Poly::var(d - 1));
  return m;
}

BruhatCell bruhat_position(const QMatrix& input) {
  const int n = static_cast<int>(input.size());
  QMatrix m = input;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<mpq_class> pivots(static_cast<std::size_t>(n));
  for (int col = 0; col < n; ++col) {
    int r = -1;
    for (int row = n - 1; row >= 0; --row)
      if (!used[row] && m[row][col] != 0) {
        r = row;
        break;
      }
    if (r < 0) throw GeometryError("singular matrix has no Bruhat position");
    used[r] = true;
    image[col] = r + 1;
    pivots[col] = m[r][col];
    // Rows above the pivot are cleared with the pivot row (left U+), then
    // the pivot row is cleared to the right (right U+).
    for (int row = 0; row < r; ++row) {
      if (m[row][col] == 0) continue;
      mpq_class f = m[row][col] / m[r][col];
      for (int k = 0; k < n; ++k) m[row][k] -= f * m[r][k];
    }
    for (int k = col + 1; k < n; ++k) {
      if (m[r][k] == 0) continue;
      mpq_class f = m[r][k] / m[r][col];
      for (int row = 0; row < n; ++row) m[row][k] -= f * m[row][col];
    }
  }
  BruhatCell cell{Perm(image), {}};
  QMatrix l = lift_q(cell.w);
  for (int col = 0; col < n; ++col) cell.h.push_back(pivots[col] / l[image[col] - 1][col]);
  return cell;
}

QMatrix compose_bruhat(const QMatrix& u, const Perm& w, const std::vector<mpq_class>& h, const QMatrix& u2) {
  QMatrix d = q_identity(w.n());
  for (int k = 0; k < w.n(); ++k) d[k][k] = h.at(k);
  return q_mul(q_mul(q_mul(u, lift_q(w)), d), u2);
}

std::vector<mpq_class> random_point(int nvars, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<mpq_class> out;
  for (int k = 0; k < nvars; ++k) out.emplace_back(dist(rng));
  return out;
}

SymbolicBruhatCell bruhat_position(const PolyMatrix& m, std::mt19937_64& rng) {
  int nvars = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) nvars = std::max(nvars, m.at(r, c).max_var() + 1);
  // The generic cell is the largest one met; two agreeing samples settle it.
  std::optional<Perm> best;
  int agree = 0;
  for (int attempt = 0; attempt < 5 && agree < 2; ++attempt) {
    QMatrix q = m.eval(random_point(nvars, 1000000, rng));
    if (q_det(q) == 0) continue;
    Perm w = bruhat_position(q).w;
    if (!best || w.length() > best->length()) {
      best = w;
      agree = 1;
    } else if (w == *best) {
      ++agree;
    }
  }
  if (!best) throw GeometryError("matrix is singular at every sampled point");
  SymbolicBruhatCell cell{*best, {}};
  Poly prev(1);
  for (int j = 1; j <= m.rows(); ++j) {
    Poly cur = positive_grid_minor(m, cell.w, j);
    cell.h.emplace_back(cur, prev);
    prev = cur;
  }
  return cell;
}

Poly positive_grid_minor(const PolyMatrix& m, const Perm& w, int i) {
  std::vector<int> rows, cols;
  for (int k = 1; k <= i; ++k) {
    rows.push_back(w(k) - 1);
    cols.push_back(k - 1);
  }
  std::sort(rows.begin(), rows.end());
  Poly eps = lift(w).minor(rows, cols);
  if (!(eps == Poly(1) || eps == Poly(-1))) throw GeometryError("lift minor is not a sign");
  return eps * m.minor(rows, cols);
}

RatFunc negative_grid_minor(const std::vector<Poly>& positive, const Perm& w, int i) {
  const int n = w.n();
  Perm uinv = (Perm::longest(n) * w).inverse();
  // h_j = Delta_j / Delta_{j-1}, with Delta_0 = Delta_n = 1.
  std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k <= i; ++k) {
    int j = uinv(k);
    ++exponent[j];
    --exponent[j - 1];
  }
  Poly num(1), den(1);
  for (int j = 1; j < n; ++j) {
    if (exponent[j] > 0) num *= positive.at(j - 1).pow(static_cast<unsigned>(exponent[j]));
    if (exponent[j] < 0) den *= positive.at(j - 1).pow(static_cast<unsigned>(-exponent[j]));
  }
  return RatFunc(num, den);
}

RatFunc GridMinorTable::minor(int c, int i) const {
  if (i == 0 || std::abs(i) >= n) throw GeometryError("grid minor index out of range");
  if (i > 0) return positive.at(c).at(i - 1);
  return negative.at(c).at(-i - 1);
}

GridMinorTable grid_minors(const CartanData& c, const DoubleBraidWord& b) {
  GridMinorTable t;
  t.n = sl_rank(c);
  t.w = w_sequence(c, b).w;
  const int L = static_cast<int>(b.size());
  for (int k = 0; k <= L; ++k) {
    t.Z.push_back(z_coset(c, b, k));
    std::vector<Poly> pos;
    for (int i = 1; i < t.n; ++i) pos.push_back(positive_grid_minor(t.Z.back(), t.w[k], i));
    std::vector<RatFunc> neg;
    for (int i = 1; i < t.n; ++i) neg.push_back(negative_grid_minor(pos, t.w[k], i));
    t.positive.push_back(std::move(pos));
    t.negative.push_back(std::move(neg));
  }
  return t;
}

Poly chamber_minor(const GridMinorTable& t, const DoubleBraidWord& b, int index) {
  if (index < 1 || index > static_cast<int>(b.size())) throw GeometryError("chamber index out of range");
  RatFunc m = t.minor(index - 1, b[index - 1]);
  if (!m.is_polynomial()) throw GeometryError("chamber minor " + std::to_string(index) + " is not a polynomial");
  return m.as_poly();
}

}  // namespace bvs
