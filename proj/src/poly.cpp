#include "bvs/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bvs {

namespace {

bool exp_greater(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int k = 0; k < kMaxVars; ++k) {
    unsigned s = unsigned(a[k]) + unsigned(b[k]);
    if (s > 255) throw PolyError("exponent overflow");
    r[k] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool exp_divides(const Exponent& small, const Exponent& big) {
  for (int k = 0; k < kMaxVars; ++k)
    if (small[k] > big[k]) return false;
  return true;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int k = 0; k < kMaxVars; ++k) r[k] = static_cast<std::uint8_t>(a[k] - b[k]);
  return r;
}

// Merge two sorted term lists computing a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && exp_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || exp_greater(b[j].exp, a[i].exp)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      mpz_class c = sign < 0 ? mpz_class(a[i].coef - b[j].coef) : mpz_class(a[i].coef + b[j].coef);
      if (c != 0) out.push_back(Term{a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back(Term{Exponent{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back(Term{Exponent{}, c});
}

Poly Poly::var(int k, unsigned power) {
  if (k < 0 || k >= kMaxVars) throw PolyError("variable index out of range");
  if (power > 255) throw PolyError("exponent overflow");
  Exponent e{};
  e[k] = static_cast<std::uint8_t>(power);
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponent& e, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return exp_greater(a.exp, b.exp); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

mpz_class Poly::constant_value() const {
  if (!is_constant()) throw PolyError("polynomial is not constant");
  return terms_.empty() ? mpz_class(0) : terms_[0].coef;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw PolyError("zero polynomial has no leading term");
  return terms_.front();
}

int Poly::degree_in(int k) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.exp[k]));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto x : t.exp) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::max_var() const {
  int m = -1;
  for (const auto& t : terms_)
    for (int k = kMaxVars - 1; k > m; --k)
      if (t.exp[k]) {
        m = k;
        break;
      }
  return m;
}

std::vector<int> Poly::variables() const {
  std::vector<int> out;
  for (int k = 0; k < kMaxVars; ++k)
    if (degree_in(k) > 0) out.push_back(k);
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back(Term{exp_add(s.exp, t.exp), s.coef * t.coef});
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool Poly::divides_into(const Poly& a, Poly* quotient) const {
  if (is_zero()) throw PolyError("division by zero polynomial");
  const Term& lb = leading();
  Poly q, r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!exp_divides(lb.exp, lr.exp) || !mpz_divisible_p(lr.coef.get_mpz_t(), lb.coef.get_mpz_t()))
      return false;
    Poly t = monomial(exp_sub(lr.exp, lb.exp), lr.coef / lb.coef);
    q.terms_.push_back(t.terms_[0]);  // quotient terms arrive in decreasing order
    r -= t * *this;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

Poly Poly::divide_exact(const Poly& b) const {
  Poly q;
  if (!b.divides_into(*this, &q))
    throw PolyError("inexact division: (" + to_string() + ") / (" + b.to_string() + ")");
  return q;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
  std::vector<std::vector<mpq_class>> powers(point.size());
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coef;
    for (int k = 0; k < kMaxVars; ++k) {
      if (!t.exp[k]) continue;
      if (k >= int(point.size())) throw PolyError("evaluation point too short");
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(1);
      while (int(pk.size()) <= t.exp[k]) pk.push_back(pk.back() * point[k]);
      v *= pk[t.exp[k]];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(const std::map<int, Poly>& images) const {
  std::map<int, std::vector<Poly>> powers;
  Poly out;
  for (const auto& t : terms_) {
    Exponent kept = t.exp;
    Poly v = monomial(Exponent{}, t.coef);
    for (const auto& [k, img] : images) {
      if (!t.exp[k]) continue;
      kept[k] = 0;
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(Poly(1));
      while (int(pk.size()) <= t.exp[k]) pk.push_back(pk.back() * img);
      v *= pk[t.exp[k]];
    }
    out += v * monomial(kept, 1);
  }
  return out;
}

Poly Poly::rename(const std::vector<int>& perm) const {
  Poly out;
  for (const auto& t : terms_) {
    Exponent e{};
    for (int k = 0; k < kMaxVars; ++k) {
      if (!t.exp[k]) continue;
      if (k >= int(perm.size())) throw PolyError("rename map too short");
      e[perm[k]] = t.exp[k];
    }
    out.terms_.push_back(Term{e, t.coef});
  }
  out.normalize();
  return out;
}

std::vector<Poly> Poly::coefficients_in(int k) const {
  std::vector<Poly> out(static_cast<std::size_t>(degree_in(k)) + 1);
  for (const auto& t : terms_) {
    Exponent e = t.exp;
    e[k] = 0;
    out[t.exp[k]].terms_.push_back(Term{e, t.coef});
  }
  for (auto& p : out) p.normalize();
  return out;
}

mpz_class Poly::integer_content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) g = ::gcd(g, t.coef);
  return g;
}

std::string Poly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = t.exp != Exponent{};
    bool need_star = false;
    if (c != 1 || !has_var) {
      os << c.get_str();
      need_star = true;
    }
    for (int k = 0; k < kMaxVars; ++k) {
      if (!t.exp[k]) continue;
      if (need_star) os << '*';
      os << prefix << (k + 1);
      if (t.exp[k] > 1) os << '^' << int(t.exp[k]);
      need_star = true;
    }
  }
  return os.str();
}

bool Poly::less(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp) return exp_greater(b.terms_[i].exp, a.terms_[i].exp);
    if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef < b.terms_[i].coef;
  }
  return a.terms_.size() < b.terms_.size();
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::string& prefix) : s_(s), prefix_(prefix) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  const std::string& s_;
  const std::string& prefix_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw PolyError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(s_.substr(start, pos_ - start));
  }
  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Poly term() {
    Poly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }
  Poly factor() {
    if (eat('-')) return -factor();
    Poly b = base();
    if (eat('^')) b = b.pow(static_cast<unsigned>(number()));
    return b;
  }
  Poly base() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (s_.compare(pos_, prefix_.size(), prefix_) == 0) {
      pos_ += prefix_.size();
      unsigned long k = number();
      if (k < 1 || k > static_cast<unsigned long>(kMaxVars)) fail("variable index out of range");
      return Poly::var(static_cast<int>(k) - 1);
    }
    fail("expected a term");
  }
};

Poly content_in(const Poly& p, int v);

Poly normalize_sign(const Poly& p) {
  if (!p.is_zero() && p.leading().coef < 0) return -p;
  return p;
}

Poly prem(const Poly& f, const Poly& g, int v) {
  int dg = g.degree_in(v);
  Poly lg = g.coefficients_in(v).back();
  Poly r = f;
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    int dr = r.degree_in(v);
    Poly lr = r.coefficients_in(v).back();
    r = lg * r - lr * Poly::var(v, static_cast<unsigned>(dr - dg)) * g;
  }
  return r;
}

Poly content_in(const Poly& p, int v) {
  Poly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (is_unit(g)) break;
  }
  return g;
}

}  // namespace

Poly Poly::parse(const std::string& text, const std::string& prefix) {
  return Parser(text, prefix).run();
}

bool is_unit(const Poly& p) {
  if (!p.is_constant() || p.is_zero()) return false;
  mpz_class c = p.constant_value();
  return c == 1 || c == -1;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) return Poly(::gcd(a.integer_content(), b.integer_content()));
  int v = std::max(a.max_var(), b.max_var());
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(b, content_in(a, v));
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = a.divide_exact(ca), pb = b.divide_exact(cb);
  Poly c = gcd(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pa = Poly(1);
      break;
    }
    pb = r.divide_exact(content_in(r, v));
  }
  if (pa.degree_in(v) > 0) pa = pa.divide_exact(content_in(pa, v));
  return normalize_sign(c * pa);
}

int irreducible_if_linear(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return 0;
  for (int k : p.variables()) {
    if (p.degree_in(k) != 1) continue;
    auto cs = p.coefficients_in(k);
    return is_unit(gcd(cs[1], cs[0])) ? 1 : 0;
  }
  return -1;
}

RatFunc::RatFunc(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw PolyError("rational function with zero denominator");
  Poly q;
  if (d.divides_into(n, &q)) {
    num_ = std::move(q);
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(n, d);
  num_ = n.divide_exact(g);
  den_ = d.divide_exact(g);
  if (den_.leading().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Poly RatFunc::as_poly() const {
  if (!is_polynomial()) throw PolyError("rational function is not a polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const { return RatFunc(num_ * o.den_, den_ * o.num_); }
RatFunc RatFunc::inverse() const { return RatFunc(den_, num_); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

mpq_class RatFunc::eval(const std::vector<mpq_class>& point) const {
  mpq_class d = den_.eval(point);
  if (d == 0) throw PolyError("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

std::string RatFunc::to_string(const std::string& prefix) const {
  if (is_polynomial()) return num_.to_string(prefix);
  return "(" + num_.to_string(prefix) + ")/(" + den_.to_string(prefix) + ")";
}

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly(1);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw PolyError("matrix size mismatch");
  PolyMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(int(i), int(j)) = at(rows[i], cols[j]);
  return m;
}

Poly PolyMatrix::det() const {
  if (rows_ != cols_) throw PolyError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return Poly(1);
  if (n == 1) return at(0, 0);
  if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n == 3) {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }
  // Fraction-free elimination; every division below is exact.
  PolyMatrix m = *this;
  Poly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int r = k + 1;
      while (r < n && m.at(r, k).is_zero()) ++r;
      if (r == n) return Poly(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)).divide_exact(prev);
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

Poly PolyMatrix::minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  return submatrix(rows, cols).det();
}

std::vector<std::vector<mpq_class>> PolyMatrix::eval(const std::vector<mpq_class>& point) const {
  QMatrix q(static_cast<std::size_t>(rows_), std::vector<mpq_class>(static_cast<std::size_t>(cols_)));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) q[i][j] = at(i, j).eval(point);
  return q;
}

PolyMatrix PolyMatrix::substitute(const std::map<int, Poly>& images) const {
  PolyMatrix r = *this;
  for (auto& p : r.data_) p = p.substitute(images);
  return r;
}

std::string PolyMatrix::to_string(const std::string& prefix) const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string(prefix);
    os << ']';
  }
  os << ']';
  return os.str();
}

QMatrix q_identity(int n) {
  QMatrix m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size(), m = b.size(), p = b.empty() ? 0 : b[0].size();
  QMatrix r(n, std::vector<mpq_class>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

mpq_class q_det(QMatrix m) {
  const std::size_t n = m.size();
  mpq_class d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      std::swap(m[r], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      mpq_class f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return d;
}

int q_rank(QMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && m[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace bvs
