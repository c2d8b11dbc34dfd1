#include "bvs/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace bvs {

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > n() || seen[x]) throw WeylError("not a permutation: " + to_string());
    seen[x] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[j] = j + 1;
  return Perm(std::move(w));
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw WeylError("simple reflection index out of range");
  Perm p = identity(n);
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

Perm Perm::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[j] = n - j;
  return Perm(std::move(w));
}

int Perm::length() const {
  int inv = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      if (w_[a] > w_[b]) ++inv;
  return inv;
}

Perm Perm::inverse() const {
  std::vector<int> v(w_.size());
  for (int j = 0; j < n(); ++j) v[w_[j] - 1] = j + 1;
  return Perm(std::move(v));
}

Perm Perm::operator*(const Perm& o) const {
  if (n() != o.n()) throw WeylError("permutation size mismatch");
  std::vector<int> r(w_.size());
  for (int j = 0; j < n(); ++j) r[j] = w_[o.w_[j] - 1];
  Perm p;
  p.w_ = std::move(r);
  return p;
}

bool Perm::has_left_descent(int i) const {
  Perm inv = inverse();
  return inv(i) > inv(i + 1);
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < w_.size(); ++j) os << (j ? "," : "") << w_[j];
  os << ']';
  return os.str();
}

Perm demazure_step(const Perm& w, int i, Side side) {
  if (i < 1 || i >= w.n()) throw WeylError("letter " + std::to_string(i) + " out of range");
  if (side == Side::Right) return w.has_right_descent(i) ? w : w * Perm::simple(w.n(), i);
  return w.has_left_descent(i) ? w : Perm::simple(w.n(), i) * w;
}

Perm demazure_product(int n, const Word& word) {
  Perm w = Perm::identity(n);
  for (int i : word) w = demazure_step(w, i, Side::Right);
  return w;
}

Perm perm_of_word(int n, const Word& word) {
  Perm w = Perm::identity(n);
  for (int i : word) w = w * Perm::simple(n, i);
  return w;
}

bool is_reduced(int n, const Word& word) {
  return perm_of_word(n, word).length() == static_cast<int>(word.size());
}

Word lex_reduced_word(const Perm& w) {
  Word out;
  Perm x = w;
  while (x.length() > 0) {
    for (int i = 1; i < x.n(); ++i) {
      if (x.has_left_descent(i)) {
        out.push_back(i);
        x = Perm::simple(x.n(), i) * x;
        break;
      }
    }
  }
  return out;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
  if (u.n() != w.n()) throw WeylError("Bruhat comparison of different sizes");
  const int n = u.n();
  // u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cw = 0;
      for (int a = 1; a <= i; ++a) {
        if (u(a) >= j) ++cu;
        if (w(a) >= j) ++cw;
      }
      if (cu > cw) return false;
    }
  return true;
}

std::vector<WordMove> available_moves(const Word& word) {
  std::vector<WordMove> out;
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    int a = word[p], b = word[p + 1];
    if (std::abs(a - b) > 1) out.push_back({static_cast<int>(p), 2});
    if (p + 2 < word.size() && std::abs(a - b) == 1 && word[p + 2] == a)
      out.push_back({static_cast<int>(p), 3});
  }
  return out;
}

Word apply_word_move(const Word& word, const WordMove& m) {
  Word w = word;
  const std::size_t p = static_cast<std::size_t>(m.pos);
  if (m.kind == 2) {
    if (p + 1 >= w.size() || std::abs(w[p] - w[p + 1]) <= 1) throw WeylError("invalid commutation");
    std::swap(w[p], w[p + 1]);
  } else if (m.kind == 3) {
    if (p + 2 >= w.size() || std::abs(w[p] - w[p + 1]) != 1 || w[p + 2] != w[p])
      throw WeylError("invalid braid move");
    int a = w[p], b = w[p + 1];
    w[p] = b;
    w[p + 1] = a;
    w[p + 2] = b;
  } else {
    throw WeylError("unsupported move kind " + std::to_string(m.kind));
  }
  return w;
}

std::vector<WordMove> bfs_moves(const Word& word, const std::function<bool(const Word&)>& accept,
                                MoveOrder order, const std::function<Word(const Word&)>& key) {
  if (accept(word)) return {};
  struct Back {
    Word prev;
    WordMove move;
  };
  std::map<Word, Back> parent;
  std::set<Word> seen{word};
  std::vector<Word> layer{word};
  while (!layer.empty()) {
    std::vector<Word> next;
    std::vector<Word> hits;
    for (const Word& x : layer) {
      auto moves = available_moves(x);
      if (order == MoveOrder::RightmostFirst) std::reverse(moves.begin(), moves.end());
      for (const auto& m : moves) {
        Word y = apply_word_move(x, m);
        if (!seen.insert(y).second) continue;
        parent.emplace(y, Back{x, m});
        next.push_back(y);
        if (accept(y)) hits.push_back(y);
      }
    }
    if (!hits.empty()) {
      auto keyed = [&](const Word& w) { return key ? key(w) : w; };
      Word best = *std::min_element(hits.begin(), hits.end(),
                                    [&](const Word& a, const Word& b) { return keyed(a) < keyed(b); });
      std::vector<WordMove> chain;
      for (Word cur = best; cur != word;) {
        const Back& bk = parent.at(cur);
        chain.push_back(bk.move);
        cur = bk.prev;
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    layer = std::move(next);
  }
  throw WeylError("no move chain reaches an accepted word from " + word_to_string(word));
}

std::vector<WordMove> move_chain(int n, const Word& source, const Word& target, MoveOrder order) {
  if (!is_reduced(n, source) || !is_reduced(n, target)) throw WeylError("move_chain needs reduced words");
  if (!(perm_of_word(n, source) == perm_of_word(n, target)))
    throw WeylError("move_chain words represent different elements");
  return bfs_moves(source, [&](const Word& w) { return w == target; }, order);
}

std::vector<Word> reduced_words(const Perm& w) {
  if (w.n() > kMaxEnumerationN) throw WeylError("reduced word enumeration limited to n <= 8");
  std::vector<Word> out;
  std::function<void(const Perm&, Word&)> rec = [&](const Perm& x, Word& suffix) {
    if (x.length() == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int i = 1; i < x.n(); ++i) {
      if (!x.has_right_descent(i)) continue;
      suffix.push_back(i);
      rec(x * Perm::simple(x.n(), i), suffix);
      suffix.pop_back();
    }
  };
  Word suffix;
  rec(w, suffix);
  std::sort(out.begin(), out.end());
  return out;
}

ReducedWordGraph reduced_word_graph(const Perm& w) {
  ReducedWordGraph g;
  g.vertices = reduced_words(w);
  std::map<Word, int> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) index[g.vertices[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    for (const auto& m : available_moves(g.vertices[k])) {
      int to = index.at(apply_word_move(g.vertices[k], m));
      // Each move is an involution; record every undirected edge once.
      if (static_cast<int>(k) < to) g.edges.push_back({static_cast<int>(k), to, m});
    }
  return g;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

}  // namespace bvs
