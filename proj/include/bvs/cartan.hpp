#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bvs {

// Cartan data use the convention a[i][j] = <alpha_i, chi_j>.  Indices in the
// public API are 1-based to match the usual labelling of simple roots.

class CartanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CartanFamily { TypeA, Generic };

using IntMatrix = std::vector<std::vector<long>>;

struct CoweightVec {
  std::vector<long> coords;  // simple-coroot basis
  bool operator==(const CoweightVec&) const = default;
};

struct RootVec {
  std::vector<long> coords;  // simple-root basis
  bool operator==(const RootVec&) const = default;
};

struct WeightVec {
  std::vector<long> coords;  // fundamental-weight basis
  bool operator==(const WeightVec&) const = default;
};

class CartanData {
 public:
  CartanData(IntMatrix a, std::vector<long> d,
             CartanFamily family = CartanFamily::Generic);

  int rank() const { return static_cast<int>(a_.size()); }
  long a(int i, int j) const { return a_.at(i - 1).at(j - 1); }
  long d(int i) const { return d_.at(i - 1); }
  const IntMatrix& matrix() const { return a_; }
  const std::vector<long>& symmetrizers() const { return d_; }
  CartanFamily family() const { return family_; }
  bool is_type_a() const { return family_ == CartanFamily::TypeA; }

  // Order of s_i s_j in the Weyl group (2, 3, 4 or 6).
  int braid_order(int i, int j) const;

  CoweightVec simple_coroot(int i) const;
  RootVec simple_root(int i) const;

  void check_index(int i) const;

  bool operator==(const CartanData& o) const {
    return a_ == o.a_ && d_ == o.d_;
  }

 private:
  IntMatrix a_;
  std::vector<long> d_;
  CartanFamily family_;
  std::vector<int> star_;
  friend int star(const CartanData&, int);
};

CartanData type_a(int n_minus_1);

// Builds Cartan data from a matrix; recognises the type A pattern so that the
// geometric layer can be used with it.
CartanData cartan_from_matrix(IntMatrix a, std::vector<long> d);

// The involution i -> i* induced by conjugation with the longest element.
int star(const CartanData& c, int i);

CoweightVec reflect_coweight(const CartanData& c, int i, const CoweightVec& v);
RootVec reflect_root(const CartanData& c, int i, const RootVec& r);
long pair(const CartanData& c, const RootVec& r, const CoweightVec& v);

// <omega_i, v>: the i-th coordinate of a coweight in the coroot basis.
inline long omega_pair(int i, const CoweightVec& v) { return v.coords.at(i - 1); }

CoweightVec operator+(const CoweightVec& a, const CoweightVec& b);
CoweightVec operator*(long k, const CoweightVec& v);
CoweightVec zero_coweight(int rank);

// Inversion coroots chi^j_k = s_{j_l} ... s_{j_{k+1}} chi_{j_k} and inversion
// roots alpha^j_k defined the same way, for a word j (1-based letters).
std::vector<CoweightVec> inversion_coroots(const CartanData& c,
                                           const std::vector<int>& word);
std::vector<RootVec> inversion_roots(const CartanData& c,
                                     const std::vector<int>& word);

// m_ik = d_{j_i} (alpha^j_i, chi^j_k), the slice pairing matrix.
IntMatrix slice_pairing_matrix(const CartanData& c, const std::vector<int>& word);

std::string to_string(const CoweightVec& v);

}  // namespace bvs
