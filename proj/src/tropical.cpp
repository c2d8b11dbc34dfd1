#include "bvs/tropical.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <json.hpp>
#include <set>
#include <sstream>

namespace bvs {

std::vector<long> Cycle::on_slice(const Weave& w, int depth) const {
  std::vector<long> out;
  for (int e : w.slices.at(static_cast<std::size_t>(depth))) out.push_back(at(e));
  return out;
}

std::vector<long> tropical_braid(long a1, long a2, long a3) {
  long m = std::min(a1, a3);
  return {a2 + a3 - m, m, a2 + a1 - m};
}

namespace {

int source_strip(const Weave& w, int e) {
  if (!w.south_edge.count(e)) throw TropicalError("crossing " + std::to_string(e) + " is not a vertex crossing");
  return e + 1;
}

}  // namespace

Cycle vertex_cycle(const Weave& w, int e) {
  const int k0 = source_strip(w, e);
  Cycle cyc;
  cyc.values.assign(w.edges.size(), 0);
  cyc.values[static_cast<std::size_t>(w.south_edge.at(e))] = 1;
  for (int k = k0 + 1; k <= w.depth(); ++k) {
    for (const auto& ev : w.strips[k - 1]) {
      auto in = [&](int t) { return cyc.at(ev.ins[t]); };
      switch (ev.kind) {
        case EventKind::Grow: break;
        case EventKind::Commute:
          cyc.values[ev.outs[0]] = in(1);
          cyc.values[ev.outs[1]] = in(0);
          break;
        case EventKind::Braid: {
          auto out = tropical_braid(in(0), in(1), in(2));
          for (int t = 0; t < 3; ++t) cyc.values[ev.outs[t]] = out[t];
          break;
        }
        case EventKind::Trivalent: cyc.values[ev.outs[0]] = tropical_trivalent(in(0), in(1)); break;
        default:
          // Tetravalent braid vertices of B2/G2 type (8 and 12 edges) need
          // the tropicalized Berenstein-Zelevinsky maps, not implemented.
          throw TropicalError("unsupported vertex in tropical propagation");
      }
    }
  }
  return cyc;
}

bool satisfies_tropical_rules(const Weave& w, int e, const Cycle& cyc) {
  const int k0 = source_strip(w, e);
  if (cyc.values.size() != w.edges.size()) return false;
  for (long v : cyc.values)
    if (v < 0) return false;
  for (int edge : w.slices[k0]) {
    long expect = edge == w.south_edge.at(e) ? 1 : 0;
    if (cyc.at(edge) != expect) return false;
  }
  for (int k = k0 + 1; k <= w.depth(); ++k)
    for (const auto& ev : w.strips[k - 1]) {
      std::vector<long> in, out;
      for (int x : ev.ins) in.push_back(cyc.at(x));
      for (int x : ev.outs) out.push_back(cyc.at(x));
      switch (ev.kind) {
        case EventKind::Grow:
          if (out[0] != 0) return false;
          break;
        case EventKind::Commute:
          if (out[0] != in[1] || out[1] != in[0]) return false;
          break;
        case EventKind::Braid:
          if (out != tropical_braid(in[0], in[1], in[2])) return false;
          break;
        case EventKind::Trivalent:
          if (out[0] != std::min(in[0], in[1])) return false;
          break;
      }
    }
  return true;
}

LusztigDatum lusztig_datum(const Weave& w, int depth, int e) {
  LusztigDatum d;
  d.word = w.slice_word(depth);
  if (depth <= e) {
    source_strip(w, e);
    d.weights.assign(d.word.size(), 0);
  } else {
    d.weights = vertex_cycle(w, e).on_slice(w, depth);
  }
  return d;
}

bool is_reduced_word(const CartanData& c, const Word& word) {
  for (const auto& r : inversion_roots(c, word)) {
    bool nonneg = std::all_of(r.coords.begin(), r.coords.end(), [](long x) { return x >= 0; });
    bool nonzero = std::any_of(r.coords.begin(), r.coords.end(), [](long x) { return x != 0; });
    if (!nonneg || !nonzero) return false;
  }
  return true;
}

CoweightVec coweight(const CartanData& c, const LusztigDatum& d) {
  if (d.word.size() != d.weights.size()) throw TropicalError("word and weights have different lengths");
  for (int i : d.word) c.check_index(i);
  if (!is_reduced_word(c, d.word)) throw TropicalError("coweight of a non-reduced word " + word_to_string(d.word));
  auto chis = inversion_coroots(c, d.word);
  CoweightVec out = zero_coweight(c.rank());
  for (std::size_t r = 0; r < chis.size(); ++r)
    if (d.weights[r]) out = out + d.weights[r] * chis[r];
  return out;
}

CoweightVec weave_cocharacter(const CartanData& c, const Weave& w, int depth, int e) {
  if (depth <= e) return zero_coweight(c.rank());
  return coweight(c, lusztig_datum(w, depth, e));
}

CoweightVec weave_cocharacter(const CartanData& c, const DoubleBraidWord& b, int depth, int e) {
  return weave_cocharacter(c, build_double_inductive(c, double_string_of(c, b)), depth, e);
}

std::vector<Rational> dual_cycle(const CartanData& c, int color, const std::vector<long>& values, const Word& slice) {
  if (values.size() != slice.size()) throw TropicalError("cycle and slice have different lengths");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < slice.size(); ++i) out.emplace_back(values[i] * c.d(slice[i]), c.d(color));
  return out;
}

Rational slice_intersection(const CartanData& c, const Word& slice, int color_c, const std::vector<long>& nu_c,
                            const std::vector<long>& nu_d) {
  if (!is_reduced_word(c, slice)) throw TropicalError("slice intersection needs a reduced word");
  if (nu_d.size() != slice.size()) throw TropicalError("cycle and slice have different lengths");
  auto dual = dual_cycle(c, color_c, nu_c, slice);
  auto alphas = inversion_roots(c, slice);
  auto chis = inversion_coroots(c, slice);
  Rational sum = 0;
  for (std::size_t i = 0; i < slice.size(); ++i)
    for (std::size_t k = 0; k < slice.size(); ++k) {
      if (i == k || dual[i].numerator() == 0 || nu_d[k] == 0) continue;
      long sign = k > i ? 1 : -1;
      sum += sign * dual[i] * nu_d[k] * pair(c, alphas[i], chis[k]);
    }
  return sum / 2L;
}

LusztigDatum lusztig_move(const LusztigDatum& d, const WordMove& m) {
  LusztigDatum out;
  out.word = apply_word_move(d.word, m);
  out.weights = d.weights;
  auto p = static_cast<std::size_t>(m.pos);
  if (m.kind == 2) {
    std::swap(out.weights[p], out.weights[p + 1]);
  } else {
    auto t = tropical_braid(d.weights[p], d.weights[p + 1], d.weights[p + 2]);
    std::copy(t.begin(), t.end(), out.weights.begin() + m.pos);
  }
  return out;
}

LusztigDatum propagate(const LusztigDatum& d, const std::vector<WordMove>& chain) {
  LusztigDatum cur = d;
  for (const auto& m : chain) cur = lusztig_move(cur, m);
  return cur;
}

// ---------------------------------------------------------------------------
// Double Lusztig data.

namespace {

Word single_word(const CartanData& c, const std::vector<int>& word) {
  Word out;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (*it < 0) out.push_back(star(c, -*it));
  for (int x : word)
    if (x > 0) out.push_back(x);
  return out;
}

void check_signed(const CartanData& c, const std::vector<int>& word) {
  for (int x : word) {
    if (x == 0) throw TropicalError("letter 0 in a double word");
    c.check_index(std::abs(x));
  }
}

constexpr std::size_t kMaxDoubleLength = 10;

}  // namespace

Perm double_reduced_element(const CartanData& c, const std::vector<int>& word) {
  check_signed(c, word);
  return perm_of_word(sl_rank(c), single_word(c, word));
}

bool is_double_reduced(const CartanData& c, const std::vector<int>& word) {
  return double_reduced_element(c, word).length() == static_cast<int>(word.size());
}

bool double_move_applies(const CartanData& c, const std::vector<int>& word, MoveKind kind, int p) {
  const int L = static_cast<int>(word.size());
  if (kind == MoveKind::B4) return L > 0 && p == 1;
  if (p < 1) return false;
  switch (kind) {
    case MoveKind::B1:
      return p + 1 <= L && (word[p - 1] > 0) != (word[p] > 0);
    case MoveKind::B2:
      return p + 1 <= L && (word[p - 1] > 0) == (word[p] > 0) &&
             c.braid_order(std::abs(word[p - 1]), std::abs(word[p])) == 2;
    case MoveKind::B3:
      return p + 2 <= L && word[p - 1] == word[p + 1] && word[p - 1] != word[p] && (word[p - 1] > 0) == (word[p] > 0) &&
             c.braid_order(std::abs(word[p - 1]), std::abs(word[p])) == 3;
    default: return false;
  }
}

DoubleLusztigDatum double_lusztig_move(const CartanData& c, const DoubleLusztigDatum& d, MoveKind kind, int p) {
  check_signed(c, d.word);
  if (d.word.size() != d.weights.size()) throw TropicalError("word and weights have different lengths");
  if (!double_move_applies(c, d.word, kind, p))
    throw TropicalError(to_string(kind) + " does not apply at position " + std::to_string(p));
  DoubleLusztigDatum out = d;
  const std::size_t q = static_cast<std::size_t>(p - 1);
  switch (kind) {
    case MoveKind::B1:
    case MoveKind::B2:
      std::swap(out.word[q], out.word[q + 1]);
      std::swap(out.weights[q], out.weights[q + 1]);
      break;
    case MoveKind::B3: {
      std::swap(out.word[q], out.word[q + 1]);
      out.word[q + 2] = out.word[q];
      auto t = tropical_braid(d.weights[q], d.weights[q + 1], d.weights[q + 2]);
      std::copy(t.begin(), t.end(), out.weights.begin() + static_cast<long>(q));
      break;
    }
    case MoveKind::B4: {
      int x = d.word[0];
      out.word[0] = x > 0 ? -star(c, x) : star(c, -x);
      break;
    }
    default: throw TropicalError("move not defined on double Lusztig data");
  }
  return out;
}

std::vector<std::pair<MoveKind, int>> double_moves(const CartanData& c, const std::vector<int>& word) {
  std::vector<std::pair<MoveKind, int>> out;
  const int L = static_cast<int>(word.size());
  for (MoveKind k : {MoveKind::B1, MoveKind::B2, MoveKind::B3})
    for (int p = 1; p <= L; ++p)
      if (double_move_applies(c, word, k, p)) out.emplace_back(k, p);
  if (L > 0) out.emplace_back(MoveKind::B4, 1);
  return out;
}

std::vector<DoubleLusztigDatum> double_class(const CartanData& c, const DoubleLusztigDatum& d) {
  if (d.word.size() > kMaxDoubleLength) throw TropicalError("double word too long for exhaustive search");
  if (!is_double_reduced(c, d.word)) throw TropicalError("not a double reduced word");
  std::map<std::vector<int>, std::vector<long>> seen{{d.word, d.weights}};
  std::deque<DoubleLusztigDatum> queue{d};
  while (!queue.empty()) {
    DoubleLusztigDatum cur = queue.front();
    queue.pop_front();
    for (const auto& [k, p] : double_moves(c, cur.word)) {
      DoubleLusztigDatum nxt = double_lusztig_move(c, cur, k, p);
      auto it = seen.find(nxt.word);
      if (it == seen.end()) {
        seen.emplace(nxt.word, nxt.weights);
        queue.push_back(nxt);
      } else if (it->second != nxt.weights) {
        throw TropicalError("weights depend on the move chain at word " + word_to_string(nxt.word));
      }
    }
  }
  std::vector<DoubleLusztigDatum> out;
  for (auto& [word, weights] : seen) out.push_back({word, weights});
  return out;
}

DoubleLusztigDatum canonical_form(const CartanData& c, const DoubleLusztigDatum& d) {
  return double_class(c, d).front();
}

bool etop_applies(const CartanData& c, const std::vector<int>& word, int i) {
  if (i == 0 || std::abs(i) > c.rank()) return false;
  Perm w = double_reduced_element(c, word);
  return i > 0 ? w.has_right_descent(i) : w.has_left_descent(star(c, -i));
}

DoubleLusztigDatum etop(const CartanData& c, const DoubleLusztigDatum& d, int i) {
  if (!is_double_reduced(c, d.word)) throw TropicalError("not a double reduced word");
  if (!etop_applies(c, d.word, i)) throw TropicalError("letter " + std::to_string(i) + " cannot end this word");
  if (d.word.size() > kMaxDoubleLength) throw TropicalError("double word too long for exhaustive search");
  // Layered BFS; the lexicographically smallest word in the first layer that
  // ends with i is normalized.
  std::set<std::vector<int>> seen{d.word};
  std::vector<DoubleLusztigDatum> layer{d};
  while (!layer.empty()) {
    std::vector<DoubleLusztigDatum> hits;
    for (const auto& x : layer)
      if (x.word.back() == i) hits.push_back(x);
    if (!hits.empty()) {
      DoubleLusztigDatum best = *std::min_element(hits.begin(), hits.end());
      best.weights.back() = 0;
      return best;
    }
    std::vector<DoubleLusztigDatum> next;
    for (const auto& x : layer)
      for (const auto& [k, p] : double_moves(c, x.word)) {
        DoubleLusztigDatum y = double_lusztig_move(c, x, k, p);
        if (seen.insert(y.word).second) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
  throw TropicalError("no double word ending with " + std::to_string(i) + " was reached");
}

LusztigDatum datum_to_single(const CartanData& c, const DoubleLusztigDatum& d) {
  check_signed(c, d.word);
  if (d.word.size() != d.weights.size()) throw TropicalError("word and weights have different lengths");
  LusztigDatum out;
  for (std::size_t k = d.word.size(); k-- > 0;)
    if (d.word[k] < 0) {
      out.word.push_back(star(c, -d.word[k]));
      out.weights.push_back(d.weights[k]);
    }
  for (std::size_t k = 0; k < d.word.size(); ++k)
    if (d.word[k] > 0) {
      out.word.push_back(d.word[k]);
      out.weights.push_back(d.weights[k]);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering.

std::string coweight_expression(const LusztigDatum& d) {
  std::string out;
  for (std::size_t r = 0; r < d.word.size(); ++r) {
    if (!d.weights[r]) continue;
    if (!out.empty()) out += " + ";
    if (d.weights[r] != 1) out += std::to_string(d.weights[r]) + "·";
    std::string prefix;
    for (std::size_t t = d.word.size(); t-- > r + 1;) prefix += "s" + std::to_string(d.word[t]);
    if (!prefix.empty()) out += prefix + "·";
    out += "χ" + std::to_string(d.word[r]);
  }
  return out.empty() ? "0" : out;
}

LusztigTable lusztig_table(const CartanData& c, const Weave& w) {
  LusztigTable t;
  t.vertices = w.vertex_crossings();
  std::vector<Cycle> cycles;
  for (int e : t.vertices) cycles.push_back(vertex_cycle(w, e));
  for (int depth = 1; depth <= w.depth(); ++depth) {
    t.words.push_back(w.slice_word(depth));
    std::vector<LusztigDatum> row;
    std::vector<CoweightVec> cw;
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
      LusztigDatum d{t.words.back(), {}};
      if (depth <= t.vertices[k]) d.weights.assign(d.word.size(), 0);
      else d.weights = cycles[k].on_slice(w, depth);
      cw.push_back(coweight(c, d));
      row.push_back(std::move(d));
    }
    t.data.push_back(std::move(row));
    t.coweights.push_back(std::move(cw));
  }
  return t;
}

namespace {

std::string digits(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (x < 10 ? std::to_string(x) : "(" + std::to_string(x) + ")");
  return s;
}

// Display width of a UTF-8 string.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

std::string render_table_text(const LusztigTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"depth", "word"};
  for (int e : t.vertices) {
    header.push_back("ν" + std::to_string(e));
    header.push_back("χ[ν" + std::to_string(e) + "]");
    header.push_back("coords");
  }
  cells.push_back(header);
  for (std::size_t r = 0; r < t.words.size(); ++r) {
    std::vector<std::string> row{std::to_string(r + 1), word_to_string(t.words[r])};
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
      row.push_back(digits(t.data[r][k].weights));
      row.push_back(coweight_expression(t.data[r][k]));
      row.push_back(to_string(t.coweights[r][k]));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], width(row[j]));
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << row[j];
      if (j + 1 < row.size()) os << std::string(widths[j] - width(row[j]) + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

std::string render_table_json(const LusztigTable& t) {
  nlohmann::ordered_json j;
  j["vertices"] = t.vertices;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < t.words.size(); ++r) {
    nlohmann::ordered_json row;
    row["depth"] = r + 1;
    row["word"] = t.words[r];
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < t.vertices.size(); ++k)
      data.push_back({{"vertex", t.vertices[k]},
                      {"weights", t.data[r][k].weights},
                      {"expression", coweight_expression(t.data[r][k])},
                      {"coweight", t.coweights[r][k].coords}});
    row["data"] = data;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(1);
}

}  // namespace bvs
