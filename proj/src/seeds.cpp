#include "bvs/seeds.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace bvs {

namespace {

RationalMatrix zeros(std::size_t k) { return RationalMatrix(k, std::vector<Rational>(k, Rational(0))); }

void wedge(RationalMatrix& m, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] += a[i] * b[j] - a[j] * b[i];
}

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& s) {
  std::vector<Rational> out = v;
  for (auto& x : out) x *= s;
  return out;
}

// Pulls a local form on edges back to the cluster variables.
void add_local(RationalMatrix& m, const RationalMatrix& local, const std::vector<std::vector<Rational>>& dl) {
  for (std::size_t a = 0; a < local.size(); ++a)
    for (std::size_t b = a + 1; b < local.size(); ++b)
      if (local[a][b].numerator() != 0) wedge(m, scaled(dl[a], local[a][b]), dl[b]);
}

void add_cycle(RationalMatrix& m, const std::vector<int>& idx, const Rational& coef) {
  for (std::size_t t = 0; t < idx.size(); ++t) {
    int a = idx[t], b = idx[(t + 1) % idx.size()];
    m[a][b] += coef;
    m[b][a] -= coef;
  }
}

CoweightVec act(const CartanData& c, const Word& u, CoweightVec v) {
  for (auto it = u.rbegin(); it != u.rend(); ++it) v = reflect_coweight(c, *it, v);
  return v;
}

// Inverse of an integer matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t k = a.size();
  QMatrix m(k, std::vector<mpq_class>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    m[i][k + i] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) throw SeedError("exponent matrix is singular");
    std::swap(m[piv], m[col]);
    mpq_class p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (std::size_t j = 0; j < 2 * k; ++j) m[r][j] -= f * m[col][j];
    }
  }
  IntMatrix out(k, std::vector<long>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][k + j].get_den() != 1) throw SeedError("exponent matrix is not unimodular");
      out[i][j] = m[i][k + j].get_num().get_si();
    }
  return out;
}

long int_det(const IntMatrix& a) {
  QMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (long x : a[i]) m[i].emplace_back(x);
  return q_det(m).get_num().get_si();
}

// prod x_r^{e_r} split into numerator and denominator.
std::pair<Poly, Poly> monomial(const std::vector<Poly>& x, const std::vector<long>& e) {
  Poly num(1), den(1);
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (e[r] > 0) num *= x[r].pow(static_cast<unsigned>(e[r]));
    if (e[r] < 0) den *= x[r].pow(static_cast<unsigned>(-e[r]));
  }
  return {num, den};
}

}  // namespace

int SeedPipeline::row_of(int e) const {
  auto it = std::find(solid.begin(), solid.end(), e);
  if (it == solid.end()) throw SeedError("crossing " + std::to_string(e) + " is not solid");
  return static_cast<int>(it - solid.begin());
}

long SeedPipeline::ord(int c, int k, int r) const {
  const CoweightVec& g = gamma.at(c).at(r);
  if (k > 0) return g.coords.at(k - 1);
  Word u = lex_reduced_word(Perm::longest(n) * ws.at(c));
  return act(cartan, u, g).coords.at(-k - 1);
}

std::vector<std::vector<CoweightVec>> cochar_table(const CartanData& c, const DoubleBraidWord& b, const Weave& w) {
  const int L = static_cast<int>(b.size());
  auto solid = solid_indices(c, b);
  std::vector<Cycle> cycles;
  for (int e : solid) cycles.push_back(vertex_cycle(w, L - e));
  std::vector<std::vector<CoweightVec>> out(static_cast<std::size_t>(L) + 1);
  for (int C = 0; C <= L; ++C) {
    const int depth = L - C;
    for (std::size_t r = 0; r < solid.size(); ++r) {
      if (depth <= L - solid[r]) {
        out[C].push_back(zero_coweight(c.rank()));
        continue;
      }
      out[C].push_back(coweight(c, {w.slice_word(depth), cycles[r].on_slice(w, depth)}));
    }
  }
  return out;
}

SeedPipeline build_pipeline(const CartanData& c, const DoubleBraidWord& b, const Weave* weave) {
  validate_word(c, b);
  SeedPipeline p(c, b);
  p.n = sl_rank(c);
  p.length = static_cast<int>(b.size());
  p.ws = w_sequence(c, b);
  if (!(p.ws.at(0) == Perm::longest(p.n)))
    throw SeedError("Demazure product of the word is " + p.ws.at(0).to_string() + ", not the longest element");
  p.solid = solid_indices(c, b);
  p.weave = weave ? *weave : build_double_inductive(c, double_string_of(c, b));
  p.gamma = cochar_table(c, b, p.weave);
  p.minors = grid_minors(c, b);
  const std::size_t k = p.solid.size();
  p.exponents.assign(k, std::vector<long>(k));
  for (std::size_t r = 0; r < k; ++r) {
    int C = p.solid[r];
    for (std::size_t s = 0; s < k; ++s) p.exponents[r][s] = p.ord(C - 1, b[C - 1], static_cast<int>(s));
    p.chamber.push_back(chamber_minor(p.minors, b, C));
  }
  if (k) {
    long det = int_det(p.exponents);
    if (det != 1 && det != -1) throw SeedError("exponent matrix has determinant " + std::to_string(det));
  }
  p.exponents_inverse = unimodular_inverse(p.exponents);
  for (std::size_t s = 0; s < k; ++s) {
    auto [num, den] = monomial(p.chamber, p.exponents_inverse[s]);
    Poly q;
    if (!den.divides_into(num, &q))
      throw SeedError("cluster variable of crossing " + std::to_string(p.solid[s]) + " is not a polynomial");
    p.variables.push_back(q);
    p.frozen.push_back(!is_mutable(c, b, p.solid[s]));
  }
  return p;
}

// ---------------------------------------------------------------------------
// 2-forms.

RationalMatrix deodhar_exchange(const SeedPipeline& p, DeodharOrientation o) {
  const std::size_t k = p.solid.size();
  auto lform = [&](int c, int i) {
    std::vector<Rational> v(k, Rational(0));
    const int sign = i > 0 ? 1 : -1;
    for (int kk = 1; kk < p.n; ++kk) {
      long coef = p.cartan.a(std::abs(i), kk);
      if (!coef) continue;
      for (std::size_t r = 0; r < k; ++r) v[r] += Rational(coef, 2) * p.ord(c, sign * kk, static_cast<int>(r));
    }
    return v;
  };
  RationalMatrix m = zeros(k);
  for (int C : p.solid) {
    int i = p.word[C - 1];
    Rational coef(2 * (i > 0 ? 1 : -1) * p.cartan.d(std::abs(i)));
    auto before = lform(C - 1, i), after = lform(C, i);
    if (o == DeodharOrientation::CurrentFirst) wedge(m, scaled(after, coef), before);
    else wedge(m, scaled(before, coef), after);
  }
  return m;
}

RationalMatrix slice_form(const CartanData& c, const Word& slice) {
  IntMatrix mm = slice_pairing_matrix(c, slice);
  RationalMatrix out = zeros(slice.size());
  for (std::size_t i = 0; i < slice.size(); ++i)
    for (std::size_t k = i + 1; k < slice.size(); ++k) {
      out[i][k] = mm[i][k];
      out[k][i] = -mm[i][k];
    }
  return out;
}

RationalMatrix trivalent_form(long d, Side side) {
  RationalMatrix m = zeros(3);
  // old = 0, top = 1, south = 2
  if (side == Side::Right) add_cycle(m, {0, 2, 1}, Rational(2 * d));
  else add_cycle(m, {1, 2, 0}, Rational(2 * d));
  return m;
}

RationalMatrix hexavalent_form(long d) {
  RationalMatrix m = zeros(6);
  add_cycle(m, {0, 1, 2}, Rational(d));
  add_cycle(m, {3, 4, 5}, Rational(-d));
  return m;
}

RationalMatrix octavalent_form() {
  RationalMatrix m = zeros(8);
  add_cycle(m, {0, 1, 2, 3}, Rational(2));
  add_cycle(m, {4, 5, 6, 7}, Rational(-2));
  return m;
}

RationalMatrix dodecavalent_form(const CartanData& g2) {
  if (g2.rank() != 2 || g2.braid_order(1, 2) != 6) throw SeedError("12-valent vertices need G2 Cartan data");
  IntMatrix mm = slice_pairing_matrix(g2, {2, 1, 2, 1, 2, 1});
  RationalMatrix m = zeros(12);
  for (int i = 1; i <= 6; ++i)
    for (int k = i + 1; k <= 6; ++k) {
      Rational v(mm[i - 1][k - 1]);
      m[i - 1][k - 1] += v;
      m[k - 1][i - 1] -= v;
      int a = 6 + (7 - k) - 1, b = 6 + (7 - i) - 1;
      m[a][b] -= v;
      m[b][a] += v;
    }
  return m;
}

RationalMatrix weave_exchange(const SeedPipeline& p) {
  const Weave& w = p.weave;
  const std::size_t k = p.solid.size();
  std::vector<Cycle> cycles;
  for (int e : p.solid) cycles.push_back(vertex_cycle(w, p.length - e));
  auto dl = [&](int edge) {
    std::vector<Rational> v(k, Rational(0));
    for (std::size_t r = 0; r < k; ++r) v[r] = cycles[r].at(edge);
    return v;
  };
  auto dls = [&](const std::vector<int>& edges) {
    std::vector<std::vector<Rational>> out;
    for (int e : edges) out.push_back(dl(e));
    return out;
  };
  RationalMatrix m = zeros(k);
  for (const auto& strip : w.strips)
    for (const auto& ev : strip) {
      long d = p.cartan.d(w.color(ev.ins.empty() ? ev.outs[0] : ev.ins[0]));
      if (ev.kind == EventKind::Braid) {
        std::vector<int> edges = ev.ins;
        edges.insert(edges.end(), ev.outs.begin(), ev.outs.end());
        add_local(m, hexavalent_form(d), dls(edges));
      } else if (ev.kind == EventKind::Trivalent) {
        add_local(m, trivalent_form(d, ev.side), dls({ev.ins[0], ev.ins[1], ev.outs[0]}));
      }
    }
  add_local(m, slice_form(p.cartan, w.slice_word(w.depth())), dls(w.slices.back()));
  return m;
}

// ---------------------------------------------------------------------------
// Seeds.

int Seed::position(int e) const {
  auto it = std::find(indices.begin(), indices.end(), e);
  if (it == indices.end()) throw SeedError("index " + std::to_string(e) + " is not in the seed");
  return static_cast<int>(it - indices.begin());
}

RationalMatrix extract_epsilon(const RationalMatrix& omega, const std::vector<long>& d, const std::vector<bool>& frozen) {
  RationalMatrix eps = omega;
  for (std::size_t e = 0; e < omega.size(); ++e)
    for (std::size_t f = 0; f < omega.size(); ++f) {
      eps[e][f] = omega[e][f] / (2 * d[e]);
      if (!frozen[e] && eps[e][f].denominator() != 1) throw SeedError("exchange matrix entry is not an integer");
    }
  return eps;
}

Seed make_seed(const SeedPipeline& p) {
  Seed s;
  s.indices = p.solid;
  s.length = p.length;
  s.variables = p.variables;
  s.frozen = p.frozen;
  for (int e : p.solid) s.d.push_back(p.cartan.d(std::abs(p.word[e - 1])));
  s.epsilon = extract_epsilon(weave_exchange(p), s.d, s.frozen);
  return s;
}

Seed make_seed(const CartanData& c, const DoubleBraidWord& b) { return make_seed(build_pipeline(c, b)); }

Seed mutate(const Seed& s, int e) {
  const int k = s.position(e);
  if (s.frozen[k]) throw SeedError("cannot mutate at frozen index " + std::to_string(e));
  const std::size_t n = s.indices.size();
  Poly pos(1), neg(1);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = s.epsilon[j][k];
    if (x.denominator() != 1) throw SeedError("non-integral exchange exponent");
    if (x.numerator() > 0) pos *= s.variables[j].pow(static_cast<unsigned>(x.numerator()));
    if (x.numerator() < 0) neg *= s.variables[j].pow(static_cast<unsigned>(-x.numerator()));
  }
  Seed t = s;
  Poly q;
  if (!s.variables[k].divides_into(pos + neg, &q)) throw SeedError("exchange relation is not polynomial");
  t.variables[k] = q;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& ak = s.epsilon[a][k];
      const Rational& kc = s.epsilon[k][c];
      if (static_cast<int>(a) == k || static_cast<int>(c) == k) t.epsilon[a][c] = -s.epsilon[a][c];
      else t.epsilon[a][c] = s.epsilon[a][c] + (boost::abs(ak) * kc + ak * boost::abs(kc)) / 2L;
    }
  return t;
}

bool SeedComparison::identity() const {
  return std::all_of(relabel.begin(), relabel.end(), [](const auto& kv) { return kv.first == kv.second; });
}

SeedComparison compare_seeds(const Seed& s, const Seed& t, const std::map<int, Poly>& t_to_s) {
  SeedComparison out;
  if (s.indices.size() != t.indices.size()) {
    out.detail = "different numbers of cluster variables";
    return out;
  }
  std::map<int, int> pos;  // position in t -> position in s
  for (std::size_t a = 0; a < t.indices.size(); ++a) {
    Poly v = t.variables[a].substitute(t_to_s);
    int hit = -1;
    for (std::size_t b = 0; b < s.indices.size(); ++b)
      if (s.variables[b] == v || s.variables[b] == -v) {
        if (hit >= 0) {
          out.detail = "ambiguous match for variable " + std::to_string(t.indices[a]);
          return out;
        }
        hit = static_cast<int>(b);
      }
    if (hit < 0) {
      out.detail = "variable " + std::to_string(t.indices[a]) + " (" + v.to_string() + ") has no match";
      return out;
    }
    pos[static_cast<int>(a)] = hit;
    out.relabel[t.indices[a]] = s.indices[hit];
  }
  for (const auto& [a, b] : pos)
    if (t.frozen[a] != s.frozen[b]) {
      out.detail = "frozen flags differ at " + std::to_string(t.indices[a]);
      return out;
    }
  for (const auto& [a, b] : pos)
    for (const auto& [c, d] : pos)
      if (t.epsilon[a][c] != s.epsilon[b][d]) {
        out.detail = "exchange matrices differ at (" + std::to_string(t.indices[a]) + "," + std::to_string(t.indices[c]) + ")";
        return out;
      }
  out.matched = true;
  return out;
}

std::map<int, Poly> move_coordinate_change(const MoveResult& m) {
  const int p = m.position - 1;
  switch (m.kind) {
    case MoveKind::B1:
    case MoveKind::B2: return {{p, Poly::var(p + 1)}, {p + 1, Poly::var(p)}};
    case MoveKind::B3:
      return {{p, Poly::var(p + 2)}, {p + 1, Poly::var(p) * Poly::var(p + 2) - Poly::var(p + 1)}, {p + 2, Poly::var(p)}};
    case MoveKind::B4: return {};
    default: throw SeedError("no coordinate change is implemented for " + to_string(m.kind));
  }
}

MoveReport check_move(const CartanData& c, const DoubleBraidWord& b, MoveKind kind, int position) {
  MoveReport r;
  r.move = apply_move(c, b, kind, position);
  Seed s = make_seed(c, b);
  Seed t = make_seed(c, r.move.word);
  auto change = move_coordinate_change(r.move);
  if (kind == MoveKind::B4) r.expected = "equal";
  else if ((kind == MoveKind::B3 && r.move.all_solid) || (kind == MoveKind::B1 && r.move.special)) r.expected = "mutation";
  else r.expected = "relabel";
  if (r.expected == "mutation") {
    r.mutation_index = r.move.c;
    s = mutate(s, r.mutation_index);
  }
  r.comparison = compare_seeds(s, t, change);
  r.verified = r.comparison.matched && (r.expected != "equal" || r.comparison.identity());
  return r;
}

// ---------------------------------------------------------------------------
// Verification.

VerifyReport verify_main_theorem(const SeedPipeline& p, std::mt19937_64& rng, const VerifyOptions& opt) {
  VerifyReport rep;
  const std::size_t k = p.solid.size();
  const int L = p.length;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    rep.failures.push_back(msg);
  };

  if (opt.vars) {
    if (static_cast<int>(k) != L - Perm::longest(p.n).length()) fail(rep.vars, "wrong number of cluster variables");
    for (std::size_t a = 0; a < k; ++a) {
      if (is_unit(p.variables[a])) fail(rep.vars, "variable " + std::to_string(p.solid[a]) + " is a unit");
      int irr = irreducible_if_linear(p.variables[a]);
      if (irr == 0) fail(rep.vars, "variable " + std::to_string(p.solid[a]) + " is reducible");
      if (irr < 0) ++rep.undecided_irreducibility;
      for (std::size_t b = a + 1; b < k; ++b)
        if (!gcd(p.variables[a], p.variables[b]).is_constant())
          fail(rep.vars, "variables " + std::to_string(p.solid[a]) + " and " + std::to_string(p.solid[b]) +
                             " share a factor");
    }
    // Positive grid minors through u-variables on the weave slices, negative
    // ones through the calibrated coweight action.
    for (int C = 0; C <= L; ++C) {
      const int depth = L - C;
      const auto& slice = p.weave.slices[depth];
      auto chis = inversion_coroots(p.cartan, p.weave.slice_word(depth));
      std::vector<Cycle> cycles;
      for (int e : p.solid) cycles.push_back(vertex_cycle(p.weave, L - e));
      for (int i = 1; i < p.n; ++i) {
        std::vector<long> expo(k, 0);
        for (std::size_t edge = 0; edge < slice.size(); ++edge)
          for (std::size_t r = 0; r < k; ++r) expo[r] += cycles[r].at(slice[edge]) * chis[edge].coords[i - 1];
        auto [num, den] = monomial(p.variables, expo);
        if (!(num == p.minors.positive[C][i - 1] * den))
          fail(rep.cross_route, "positive grid minor (" + std::to_string(C) + "," + std::to_string(i) + ") mismatch");
        std::vector<long> nexpo(k);
        for (std::size_t r = 0; r < k; ++r) nexpo[r] = p.ord(C, -i, static_cast<int>(r));
        auto [nn, nd] = monomial(p.variables, nexpo);
        const RatFunc& neg = p.minors.negative[C][i - 1];
        if (!(neg.num() * nd == neg.den() * nn))
          fail(rep.cross_route, "negative grid minor (" + std::to_string(C) + ",-" + std::to_string(i) + ") mismatch");
      }
    }
  }

  if (opt.forms) {
    if (deodhar_exchange(p) != weave_exchange(p)) fail(rep.forms, "Deodhar and weave 2-forms differ");
  }

  if (opt.tori) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<long> small(-2, 2), large(-50, 50);
    const Perm w0 = Perm::longest(p.n);
    for (int attempt = 0; rep.torus_points < opt.points && attempt < 50 * opt.points; ++attempt) {
      std::vector<mpq_class> pt;
      for (int v = 0; v < L; ++v) pt.emplace_back(coin(rng) ? small(rng) : large(rng));
      if (!(bruhat_position(p.minors.Z[0].eval(pt)).w == w0)) continue;
      ++rep.torus_points;
      bool positions = true;
      for (int C = 0; C <= L && positions; ++C)
        positions = bruhat_position(p.minors.Z[C].eval(pt)).w == p.ws.at(C);
      bool chambers = std::all_of(p.chamber.begin(), p.chamber.end(), [&](const Poly& x) { return x.eval(pt) != 0; });
      bool vars = std::all_of(p.variables.begin(), p.variables.end(), [&](const Poly& x) { return x.eval(pt) != 0; });
      if (!positions) ++rep.off_torus_points;
      if (positions != chambers || chambers != vars) {
        std::ostringstream os;
        os << "torus membership disagrees at (";
        for (std::size_t v = 0; v < pt.size(); ++v) os << (v ? "," : "") << pt[v];
        os << ")";
        fail(rep.tori, os.str());
      }
    }
    if (rep.torus_points < opt.points) fail(rep.tori, "too few sample points in the open cell");
  }
  return rep;
}

VerifyReport verify_main_theorem(const CartanData& c, const DoubleBraidWord& b, std::mt19937_64& rng,
                                 const VerifyOptions& opt) {
  return verify_main_theorem(build_pipeline(c, b), rng, opt);
}

// ---------------------------------------------------------------------------
// Output.

std::string seed_json(const Seed& s, bool opposite) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json vars = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < s.indices.size(); ++a)
    vars.push_back({{"index", s.indices[a]}, {"poly", s.variables[a].to_string()}, {"frozen", bool(s.frozen[a])}});
  j["variables"] = vars;
  std::vector<int> rows;
  nlohmann::ordered_json eps = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < s.indices.size(); ++a) {
    if (s.frozen[a]) continue;
    rows.push_back(s.indices[a]);
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : s.epsilon[a]) {
      Rational v = opposite ? -x : x;
      if (v.denominator() == 1) row.push_back(v.numerator());
      else row.push_back(std::to_string(v.numerator()) + "/" + std::to_string(v.denominator()));
    }
    eps.push_back(row);
  }
  j["epsilon_rows"] = rows;
  j["epsilon_columns"] = s.indices;
  j["epsilon"] = eps;
  j["d"] = s.d;
  nlohmann::ordered_json map = nlohmann::ordered_json::object();
  for (int e : s.indices) map[std::to_string(e)] = s.length - e;
  j["weave_index_map"] = map;
  return j.dump(1);
}

std::string seed_dot(const Seed& s, bool opposite) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (std::size_t a = 0; a < s.indices.size(); ++a)
    os << "  x" << s.indices[a] << " [label=\"x" << s.indices[a] << "\",shape=" << (s.frozen[a] ? "box" : "ellipse")
       << "];\n";
  for (std::size_t a = 0; a < s.indices.size(); ++a)
    for (std::size_t b = 0; b < s.indices.size(); ++b) {
      if (s.frozen[a] && s.frozen[b]) continue;
      // Arrows are read off a mutable row when one exists.
      Rational v = !s.frozen[a] ? s.epsilon[a][b] : -s.epsilon[b][a] * s.d[b] / s.d[a];
      if (opposite) v = -v;
      if (v.numerator() <= 0) continue;
      os << "  x" << s.indices[a] << " -> x" << s.indices[b];
      if (v != Rational(1)) {
        os << " [label=\"" << v.numerator();
        if (v.denominator() != 1) os << "/" << v.denominator();
        os << "\"]";
      }
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace bvs
