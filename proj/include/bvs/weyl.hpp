#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvs {

class WeylError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Word = std::vector<int>;

enum class Side { Left, Right };

// A permutation of 1..n in one-line notation.  Products compose as functions:
// (u * v)(j) = u(v(j)), so w * s_i swaps positions i, i+1 and s_i * w swaps
// the values i, i+1.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);

  static Perm identity(int n);
  static Perm simple(int n, int i);
  static Perm longest(int n);

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int j) const { return w_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& one_line() const { return w_; }

  int length() const;
  Perm inverse() const;
  Perm operator*(const Perm& o) const;
  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return w_ < o.w_; }

  bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool has_left_descent(int i) const;

  std::string to_string() const;

 private:
  std::vector<int> w_;
};

Perm demazure_step(const Perm& w, int i, Side side);
Perm demazure_product(int n, const Word& word);
Perm perm_of_word(int n, const Word& word);
bool is_reduced(int n, const Word& word);

// Lexicographically smallest reduced word of w.
Word lex_reduced_word(const Perm& w);

bool bruhat_leq(const Perm& u, const Perm& w);

// A commutation (kind 2) or braid move (kind 3) on a word, acting on the
// letters starting at 0-based position pos.
struct WordMove {
  int pos = 0;
  int kind = 2;
  bool operator==(const WordMove&) const = default;
};

std::vector<WordMove> available_moves(const Word& word);
Word apply_word_move(const Word& word, const WordMove& m);

enum class MoveOrder { LeftmostFirst, RightmostFirst };

// Shortest chain of moves from word to some word satisfying accept.  Among
// the accepted words at minimal distance the lexicographically smallest one
// is chosen (after applying key, when given), so the target does not depend
// on the exploration order; the order only decides which chain reaches it.
std::vector<WordMove> bfs_moves(const Word& word, const std::function<bool(const Word&)>& accept,
                                MoveOrder order = MoveOrder::LeftmostFirst,
                                const std::function<Word(const Word&)>& key = {});

std::vector<WordMove> move_chain(int n, const Word& source, const Word& target,
                                 MoveOrder order = MoveOrder::LeftmostFirst);

inline constexpr int kMaxEnumerationN = 8;

std::vector<Word> reduced_words(const Perm& w);

struct ReducedWordGraph {
  struct Edge {
    int from, to;
    WordMove move;
  };
  std::vector<Word> vertices;
  std::vector<Edge> edges;
};

ReducedWordGraph reduced_word_graph(const Perm& w);

std::string word_to_string(const Word& w);

}  // namespace bvs
