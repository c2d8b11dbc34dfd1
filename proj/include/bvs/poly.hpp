#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvs {

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVars = 40;

// Exponent vector of a monomial.  Variable k (0-based) is printed as
// <prefix><k+1>, so z1 is variable 0.
using Exponent = std::array<std::uint8_t, kMaxVars>;

struct Term {
  Exponent exp{};
  mpz_class coef;
};

// Sparse multivariate polynomial over Z.  Terms are kept sorted by
// decreasing lexicographic exponent with no zero coefficients, so two equal
// polynomials have identical term vectors.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly(const mpz_class& c);

  static Poly var(int k, unsigned power = 1);
  static Poly monomial(const Exponent& e, const mpz_class& c);
  static Poly parse(const std::string& text, const std::string& prefix = "z");

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class constant_value() const;  // requires is_constant()
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const;

  int degree_in(int k) const;
  int total_degree() const;
  // Largest variable index that occurs, or -1 for constants.
  int max_var() const;
  std::vector<int> variables() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned e) const;

  // Exact division; throws PolyError when b does not divide *this.
  Poly divide_exact(const Poly& b) const;
  bool divides_into(const Poly& a, Poly* quotient = nullptr) const;

  mpq_class eval(const std::vector<mpq_class>& point) const;
  // Simultaneous substitution of variable k by images[k] (missing entries
  // keep the variable).
  Poly substitute(const std::map<int, Poly>& images) const;
  // Rename variables: variable k becomes variable perm[k].
  Poly rename(const std::vector<int>& perm) const;

  // Coefficients with respect to variable k: result[d] is the coefficient of
  // z_k^d.
  std::vector<Poly> coefficients_in(int k) const;
  mpz_class integer_content() const;

  std::string to_string(const std::string& prefix = "z") const;

  // Total order used only for canonical sorting of polynomial sets.
  static bool less(const Poly& a, const Poly& b);

 private:
  std::vector<Term> terms_;
  void normalize();
};

Poly gcd(const Poly& a, const Poly& b);
bool is_unit(const Poly& p);
// Irreducibility over Z, decided only when p has degree one in some
// variable; returns -1 when the case is not covered.
int irreducible_if_linear(const Poly& p);

// p / q with gcd(p, q) removed and the denominator made to have a positive
// leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& n, const Poly& d);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_constant() && den_.constant_value() == 1; }
  Poly as_poly() const;  // throws unless is_polynomial()

  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;
  bool operator==(const RatFunc& o) const;
  mpq_class eval(const std::vector<mpq_class>& point) const;
  std::string to_string(const std::string& prefix = "z") const;

 private:
  Poly num_, den_;
};

// Dense square or rectangular matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int r, int c) { return data_.at(static_cast<std::size_t>(r * cols_ + c)); }
  const Poly& at(int r, int c) const { return data_.at(static_cast<std::size_t>(r * cols_ + c)); }

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const = default;

  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  Poly det() const;
  Poly minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  std::vector<std::vector<mpq_class>> eval(const std::vector<mpq_class>& point) const;
  PolyMatrix substitute(const std::map<int, Poly>& images) const;
  std::string to_string(const std::string& prefix = "z") const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

using QMatrix = std::vector<std::vector<mpq_class>>;
QMatrix q_identity(int n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
mpq_class q_det(QMatrix m);
int q_rank(QMatrix m);

}  // namespace bvs
