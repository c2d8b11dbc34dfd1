#include "bvs/braid.hpp"

#include <algorithm>
#include <sstream>

namespace bvs {

int sl_rank(const CartanData& c) {
  if (!c.is_type_a()) throw BraidError("this operation is implemented for type A only");
  return c.rank() + 1;
}

void validate_word(const CartanData& c, const DoubleBraidWord& b) {
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] == 0 || std::abs(b[k]) > c.rank())
      throw BraidError("invalid letter " + std::to_string(b[k]) + " at position " + std::to_string(k + 1));
}

Word to_single(const CartanData& c, const DoubleBraidWord& b) {
  validate_word(c, b);
  Word out;
  for (int x : b)
    if (x < 0) out.push_back(star(c, -x));
  for (auto it = b.rbegin(); it != b.rend(); ++it)
    if (*it > 0) out.push_back(*it);
  return out;
}

Perm demazure_of_double(const CartanData& c, const DoubleBraidWord& b) {
  return w_sequence(c, b).at(0);
}

WSequence w_sequence(const CartanData& c, const DoubleBraidWord& b) {
  validate_word(c, b);
  const int n = sl_rank(c);
  const int L = static_cast<int>(b.size());
  WSequence s;
  s.w.assign(static_cast<std::size_t>(L) + 1, Perm::identity(n));
  for (int k = L; k >= 1; --k) {
    int i = b[k - 1];
    s.w[k - 1] = i < 0 ? demazure_step(s.w[k], star(c, -i), Side::Left)
                       : demazure_step(s.w[k], i, Side::Right);
  }
  return s;
}

std::vector<int> solid_indices(const CartanData& c, const DoubleBraidWord& b) {
  WSequence s = w_sequence(c, b);
  std::vector<int> out;
  for (int e = s.length(); e >= 1; --e)
    if (s.at(e - 1) == s.at(e)) out.push_back(e);
  return out;
}

DoubleString double_string_of(const CartanData& c, const DoubleBraidWord& b) {
  validate_word(c, b);
  DoubleString s;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    if (*it > 0) s.push_back({*it, Side::Right});
    else s.push_back({star(c, -*it), Side::Left});
  }
  return s;
}

DoubleBraidWord double_word_of(const CartanData& c, const DoubleString& s) {
  DoubleBraidWord b;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    c.check_index(it->index);
    b.push_back(it->side == Side::Right ? it->index : -star(c, it->index));
  }
  return b;
}

std::vector<Perm> w_sequence_of_string(const CartanData& c, const DoubleString& s) {
  const int n = sl_rank(c);
  std::vector<Perm> out{Perm::identity(n)};
  for (const auto& e : s) out.push_back(demazure_step(out.back(), e.index, e.side));
  return out;
}

std::vector<Perm> v_sequence(const CartanData& c, const DoubleBraidWord& b, int e) {
  WSequence s = w_sequence(c, b);
  const int n = sl_rank(c);
  if (e < 1 || e > s.length() || !(s.at(e - 1) == s.at(e)))
    throw BraidError("index " + std::to_string(e) + " is not a solid crossing");
  std::vector<Perm> v = s.w;
  int i = b[e - 1];
  v[e - 1] = i < 0 ? Perm::simple(n, star(c, -i)) * s.at(e) : s.at(e) * Perm::simple(n, i);
  for (int k = e - 1; k >= 1; --k) {
    int x = b[k - 1];
    v[k - 1] = x < 0 ? demazure_step(v[k], star(c, -x), Side::Left) : demazure_step(v[k], x, Side::Right);
  }
  return v;
}

bool is_mutable(const CartanData& c, const DoubleBraidWord& b, int e) {
  return v_sequence(c, b, e).front() == Perm::longest(sl_rank(c));
}

namespace {

int window_width(MoveKind k) {
  switch (k) {
    case MoveKind::B1:
    case MoveKind::B2: return 2;
    case MoveKind::B3: return 3;
    default: return 1;
  }
}

}  // namespace

bool move_applies(const CartanData& c, const DoubleBraidWord& b, MoveKind kind, int p) {
  const int L = static_cast<int>(b.size());
  if (L == 0) return false;
  if (kind == MoveKind::B4 || kind == MoveKind::B5) return true;
  if (p < 1 || p + window_width(kind) - 1 > L) return false;
  int x = b[p - 1], y = b[p];
  switch (kind) {
    case MoveKind::B1: return (x > 0) != (y > 0);
    case MoveKind::B2: return (x > 0) == (y > 0) && c.braid_order(std::abs(x), std::abs(y)) == 2;
    case MoveKind::B3: {
      int z = b[p + 1];
      return (x > 0) == (y > 0) && (y > 0) == (z > 0) && z == x && x != y &&
             c.braid_order(std::abs(x), std::abs(y)) == 3;
    }
    default: return false;
  }
}

MoveResult apply_move(const CartanData& c, const DoubleBraidWord& b, MoveKind kind, int position) {
  validate_word(c, b);
  const int L = static_cast<int>(b.size());
  if (kind == MoveKind::B4) position = L;
  if (kind == MoveKind::B5) position = 1;
  if (!move_applies(c, b, kind, position))
    throw BraidError(to_string(kind) + " does not apply at position " + std::to_string(position));
  MoveResult r;
  r.kind = kind;
  r.position = position;
  r.c = position + window_width(kind) - 1;
  r.word = b;
  auto solid = solid_indices(c, b);
  r.all_solid = true;
  for (int q = position; q <= r.c; ++q)
    if (std::find(solid.begin(), solid.end(), q) == solid.end()) r.all_solid = false;
  const int p = position - 1;
  switch (kind) {
    case MoveKind::B1: {
      int pos_letter = b[p] > 0 ? b[p] : b[p + 1];
      int neg_letter = b[p] > 0 ? -b[p + 1] : -b[p];
      if (r.all_solid) {
        const int n = sl_rank(c);
        const Perm wc = w_sequence(c, b).at(r.c);
        r.special = wc * Perm::simple(n, pos_letter) == Perm::simple(n, star(c, neg_letter)) * wc;
      }
      std::swap(r.word[p], r.word[p + 1]);
      break;
    }
    case MoveKind::B2: std::swap(r.word[p], r.word[p + 1]); break;
    case MoveKind::B3: {
      int x = b[p], y = b[p + 1];
      r.word[p] = y;
      r.word[p + 1] = x;
      r.word[p + 2] = y;
      break;
    }
    case MoveKind::B4: {
      int i = b[L - 1];
      r.word[L - 1] = i > 0 ? -star(c, i) : star(c, -i);
      break;
    }
    case MoveKind::B5: r.word[0] = -b[0]; break;
  }
  return r;
}

MoveKind parse_move_kind(const std::string& s) {
  if (s == "B1") return MoveKind::B1;
  if (s == "B2") return MoveKind::B2;
  if (s == "B3") return MoveKind::B3;
  if (s == "B4") return MoveKind::B4;
  if (s == "B5") return MoveKind::B5;
  throw BraidError("unknown move '" + s + "'");
}

std::string to_string(MoveKind k) {
  static const char* names[] = {"B1", "B2", "B3", "B4", "B5"};
  return names[static_cast<int>(k)];
}

Word richardson_to_braid(const CartanData& c, const Word& v_word, const Word& w_word) {
  const int n = sl_rank(c);
  if (!is_reduced(n, v_word) || !is_reduced(n, w_word)) throw BraidError("richardson_to_braid needs reduced words");
  Word out = v_word;
  out.insert(out.end(), w_word.rbegin(), w_word.rend());
  return out;
}

std::string to_string(const DoubleString& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.size(); ++k) {
    os << (k ? " " : "") << s[k].index << (s[k].side == Side::Right ? "R" : "L");
  }
  return os.str();
}

DoubleString parse_double_string(const CartanData& c, const std::string& text) {
  DoubleString out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (!tok.empty() && tok.back() == ',') tok.pop_back();
    std::size_t k = 0;
    while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) ++k;
    if (k == 0 || k + 1 > tok.size()) throw BraidError("bad double string entry '" + tok + "'");
    int idx = std::stoi(tok.substr(0, k));
    c.check_index(idx);
    bool starred = tok[k] == '*';
    if (starred) ++k;
    if (k + 1 != tok.size() || (tok[k] != 'L' && tok[k] != 'R'))
      throw BraidError("bad double string entry '" + tok + "'");
    out.push_back({starred ? star(c, idx) : idx, tok[k] == 'L' ? Side::Left : Side::Right});
  }
  return out;
}

}  // namespace bvs
