#pragma once

#include <map>
#include <string>
#include <vector>

#include "bvs/braid.hpp"

namespace bvs {

class WeaveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeaveEdge {
  int id = 0;
  int color = 1;
  int born = 0;   // depth of the strip that creates it (0 for lines entering at the top)
  int died = -1;  // depth of the strip that consumes it, -1 if it reaches the bottom
  bool operator==(const WeaveEdge&) const = default;
};

enum class EventKind { Grow, Commute, Braid, Trivalent };

// One event inside the strip between depths k-1 and k.  Grow: outs = {new
// line}.  Commute/Braid: ins and outs in slice order starting at pos.
// Trivalent: ins = {old, top}, outs = {south}, pos is the slice position of
// the old edge.
struct WeaveEvent {
  EventKind kind = EventKind::Grow;
  Side side = Side::Right;
  int pos = 0;
  std::vector<int> ins;
  std::vector<int> outs;
  bool operator==(const WeaveEvent&) const = default;
};

class Weave {
 public:
  int n = 0;  // SL_n
  DoubleString recipe;
  std::vector<WeaveEdge> edges;                 // indexed by id
  std::vector<std::vector<int>> slices;         // depth 0..L, edge ids left to right
  std::vector<std::vector<WeaveEvent>> strips;  // strips[k-1] sits between depth k-1 and k
  std::map<int, int> south_edge;                // vertex crossing e -> edge below its trivalent vertex

  int depth() const { return static_cast<int>(strips.size()); }
  Word slice_word(int depth) const;
  std::vector<int> vertex_crossings() const;
  int color(int edge) const { return edges.at(static_cast<std::size_t>(edge)).color; }
  bool operator==(const Weave&) const = default;
};

Weave build_double_inductive(const CartanData& c, const DoubleString& s,
                             MoveOrder order = MoveOrder::LeftmostFirst);
Weave right_inductive(const CartanData& c, const Word& beta);
Weave left_inductive(const CartanData& c, const Word& beta);

Word slice_word(const Weave& w, int depth);
Weave truncate(const Weave& w, int depth);
std::vector<int> vertex_crossings(const Weave& w);

// Consistency check: replaying every strip reproduces each stored slice.
void check_weave(const Weave& w);

std::string serialize_dot(const Weave& w);
std::string serialize_json(const Weave& w);
Weave parse_weave_json(const std::string& text);

struct VertexCounts {
  int trivalent = 0, four_valent = 0, six_valent = 0;
};
VertexCounts count_vertices(const Weave& w);

}  // namespace bvs
