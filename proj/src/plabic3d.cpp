#include "bvs/plabic3d.hpp"

#include <algorithm>
#include <json.hpp>

namespace bvs {

namespace {

void validate(const PlabicGraph3D& g) {
  if (g.rank < 1) throw PlabicError("plabic graph rank must be positive");
  bool pos = false, neg = false;
  for (int i : g.word) {
    if (i == 0 || std::abs(i) > g.rank)
      throw PlabicError("letter " + std::to_string(i) + " out of range for rank " + std::to_string(g.rank));
    (i > 0 ? pos : neg) = true;
  }
  if (pos && neg) throw PlabicError("plabic words must be all positive or all negative");
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace

std::vector<bool> scan_solidity(const PlabicGraph3D& g) {
  validate(g);
  const int n = g.rank + 1;
  std::vector<bool> solid(g.word.size(), false);
  Perm delta = Perm::identity(n);
  for (std::size_t p = g.word.size(); p-- > 0;) {
    const int i = std::abs(g.word[p]);
    if (delta.has_left_descent(i)) solid[p] = true;
    else delta = Perm::simple(n, i) * delta;
  }
  return solid;
}

Weave compile_weave(const PlabicGraph3D& g) {
  validate(g);
  CartanData c = type_a(g.rank);
  if (!g.word.empty() && g.word.front() < 0) {
    Word single = to_single(c, g.word);
    return left_inductive(c, single);
  }
  const int n = g.rank + 1;
  const int L = static_cast<int>(g.word.size());
  const std::vector<bool> solid = scan_solidity(g);

  Weave w;
  w.n = n;
  w.slices.emplace_back();
  auto new_edge = [&](int color, int depth) {
    int id = static_cast<int>(w.edges.size());
    w.edges.push_back({id, color, depth, -1});
    return id;
  };

  // The running slice in plabic orientation: its leftmost line is the most
  // recent one.  Reversing it gives the slice of the weave.
  std::vector<int> lines;
  auto colors = [&] {
    Word out;
    for (int e : lines) out.push_back(w.edges[e].color);
    return out;
  };
  for (int k = 1; k <= L; ++k) {
    const int i = g.word[L - k];
    std::vector<WeaveEvent> events;
    const int len = static_cast<int>(lines.size());
    if (!solid[L - k]) {
      int e = new_edge(i, k);
      lines.insert(lines.begin(), e);
      events.push_back({EventKind::Grow, Side::Right, len, {}, {e}});
    } else {
      // Reach a word starting with i.  Exploring from the right and keying on
      // the reversal picks the same chain the weave side picks from the left.
      auto chain = bfs_moves(colors(), [i](const Word& x) { return x.front() == i; }, MoveOrder::RightmostFirst,
                             reversed);
      for (const auto& m : chain) {
        WeaveEvent ev;
        ev.kind = m.kind == 2 ? EventKind::Commute : EventKind::Braid;
        ev.pos = len - m.pos - m.kind;
        for (int t = m.pos + m.kind; t-- > m.pos;) ev.ins.push_back(lines[t]);
        int a = w.edges[ev.ins[0]].color, b = w.edges[ev.ins[1]].color;
        std::vector<int> cols = m.kind == 2 ? std::vector<int>{b, a} : std::vector<int>{b, a, b};
        for (int col : cols) ev.outs.push_back(new_edge(col, k));
        for (int e : ev.ins) w.edges[e].died = k;
        for (int t = 0; t < m.kind; ++t) lines[m.pos + m.kind - 1 - t] = ev.outs[t];
        events.push_back(std::move(ev));
      }
      int old = lines.front();
      int top = new_edge(i, k);
      int south = new_edge(i, k);
      w.edges[old].died = k;
      w.edges[top].died = k;
      lines.front() = south;
      events.push_back({EventKind::Trivalent, Side::Right, len - 1, {old, top}, {south}});
      w.south_edge[k - 1] = south;
    }
    w.slices.emplace_back(lines.rbegin(), lines.rend());
    w.strips.push_back(std::move(events));
    w.recipe.push_back({i, Side::Right});
  }
  return w;
}

PlabicGraph3D parse_plabic_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PlabicError(std::string("malformed plabic JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("word"))
    throw PlabicError("plabic JSON needs \"rank\" and \"word\"");
  PlabicGraph3D g;
  try {
    g.rank = j.at("rank").get<int>();
    g.word = j.at("word").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw PlabicError(std::string("bad plabic JSON field: ") + e.what());
  }
  validate(g);
  return g;
}

std::string plabic_json(const PlabicGraph3D& g) {
  nlohmann::json j;
  j["rank"] = g.rank;
  j["word"] = g.word;
  j["solid"] = scan_solidity(g);
  return j.dump();
}

}  // namespace bvs
