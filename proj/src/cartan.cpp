#include "bvs/cartan.hpp"

#include <sstream>

namespace bvs {

namespace {

// Leading principal minors of an integer matrix by fraction-free elimination.
bool positive_definite(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  long long prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;  // k-th leading minor divided by the previous one
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

// Action of a Weyl element on the root lattice, as columns w(alpha_j).
using RootAction = std::vector<RootVec>;

}  // namespace

CartanData::CartanData(IntMatrix a, std::vector<long> d, CartanFamily family)
    : a_(std::move(a)), d_(std::move(d)), family_(family) {
  const std::size_t n = a_.size();
  if (n == 0) throw CartanError("Cartan matrix must have positive rank");
  if (d_.size() != n) throw CartanError("symmetrizer count does not match rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw CartanError("Cartan matrix is not square");
    if (d_[i] <= 0) throw CartanError("symmetrizers must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i][i] != 2) throw CartanError("diagonal Cartan entries must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw CartanError("off-diagonal Cartan entries must be <= 0");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw CartanError("a_ij = 0 must imply a_ji = 0");
      if (d_[i] * a_[i][j] != d_[j] * a_[j][i])
        throw CartanError("matrix is not symmetrized by the given d");
    }
  }
  IntMatrix sym(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym[i][j] = d_[i] * a_[i][j];
  if (!positive_definite(sym)) throw CartanError("Cartan matrix is not of finite type");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a_[i][j] * a_[j][i] > 3) throw CartanError("Cartan matrix is not of finite type");

  // Longest element: keep multiplying on the right while the length grows.
  RootAction w;
  for (int j = 1; j <= rank(); ++j) w.push_back(simple_root(j));
  auto positive = [](const RootVec& r) {
    for (long x : r.coords)
      if (x < 0) return false;
    return true;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= rank(); ++i) {
      if (!positive(w[i - 1])) continue;
      // w s_i applied to alpha_j equals w(alpha_j - a_{ji} alpha_i).
      RootAction nw = w;
      for (int j = 1; j <= rank(); ++j) {
        long coef = a_[j - 1][i - 1];
        for (int k = 0; k < rank(); ++k) nw[j - 1].coords[k] -= coef * w[i - 1].coords[k];
      }
      w = std::move(nw);
      grew = true;
      break;
    }
  }
  star_.assign(n, 0);
  for (int i = 1; i <= rank(); ++i) {
    const auto& col = w[i - 1].coords;
    for (int k = 0; k < rank(); ++k)
      if (col[k] == -1) star_[i - 1] = k + 1;
  }
}

void CartanData::check_index(int i) const {
  if (i < 1 || i > rank())
    throw CartanError("index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
}

int CartanData::braid_order(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return 1;
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

CoweightVec CartanData::simple_coroot(int i) const {
  check_index(i);
  CoweightVec v{std::vector<long>(rank(), 0)};
  v.coords[i - 1] = 1;
  return v;
}

RootVec CartanData::simple_root(int i) const {
  check_index(i);
  RootVec v{std::vector<long>(rank(), 0)};
  v.coords[i - 1] = 1;
  return v;
}

CartanData type_a(int n_minus_1) {
  if (n_minus_1 < 1) throw CartanError("type A rank must be at least 1");
  IntMatrix a(n_minus_1, std::vector<long>(n_minus_1, 0));
  for (int i = 0; i < n_minus_1; ++i) {
    a[i][i] = 2;
    if (i + 1 < n_minus_1) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return CartanData(std::move(a), std::vector<long>(n_minus_1, 1), CartanFamily::TypeA);
}

CartanData cartan_from_matrix(IntMatrix a, std::vector<long> d) {
  CartanData generic(a, d);
  if (generic == type_a(generic.rank())) return type_a(generic.rank());
  return generic;
}

int star(const CartanData& c, int i) {
  c.check_index(i);
  return c.star_[i - 1];
}

CoweightVec reflect_coweight(const CartanData& c, int i, const CoweightVec& v) {
  c.check_index(i);
  long t = 0;
  for (int k = 1; k <= c.rank(); ++k) t += c.a(i, k) * v.coords[k - 1];
  CoweightVec out = v;
  out.coords[i - 1] -= t;
  return out;
}

RootVec reflect_root(const CartanData& c, int i, const RootVec& r) {
  c.check_index(i);
  long t = 0;
  for (int k = 1; k <= c.rank(); ++k) t += r.coords[k - 1] * c.a(k, i);
  RootVec out = r;
  out.coords[i - 1] -= t;
  return out;
}

long pair(const CartanData& c, const RootVec& r, const CoweightVec& v) {
  long s = 0;
  for (int j = 1; j <= c.rank(); ++j)
    for (int k = 1; k <= c.rank(); ++k) s += r.coords[j - 1] * v.coords[k - 1] * c.a(j, k);
  return s;
}

CoweightVec operator+(const CoweightVec& a, const CoweightVec& b) {
  CoweightVec out = a;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += b.coords.at(k);
  return out;
}

CoweightVec operator*(long k, const CoweightVec& v) {
  CoweightVec out = v;
  for (long& x : out.coords) x *= k;
  return out;
}

CoweightVec zero_coweight(int rank) { return CoweightVec{std::vector<long>(rank, 0)}; }

std::vector<CoweightVec> inversion_coroots(const CartanData& c, const std::vector<int>& word) {
  std::vector<CoweightVec> out;
  out.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    CoweightVec v = c.simple_coroot(word[k]);
    for (std::size_t t = k + 1; t < word.size(); ++t) v = reflect_coweight(c, word[t], v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RootVec> inversion_roots(const CartanData& c, const std::vector<int>& word) {
  std::vector<RootVec> out;
  out.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVec v = c.simple_root(word[k]);
    for (std::size_t t = k + 1; t < word.size(); ++t) v = reflect_root(c, word[t], v);
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix slice_pairing_matrix(const CartanData& c, const std::vector<int>& word) {
  auto chis = inversion_coroots(c, word);
  auto alphas = inversion_roots(c, word);
  const std::size_t l = word.size();
  IntMatrix m(l, std::vector<long>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) m[i][k] = c.d(word[i]) * pair(c, alphas[i], chis[k]);
  return m;
}

std::string to_string(const CoweightVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.coords.size(); ++k) os << (k ? "," : "") << v.coords[k];
  os << ')';
  return os.str();
}

}  // namespace bvs
