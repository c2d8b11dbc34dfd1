#include "bvs/weave.hpp"

#include <json.hpp>
#include <sstream>

namespace bvs {

Word Weave::slice_word(int d) const {
  if (d < 0 || d > depth()) throw WeaveError("depth " + std::to_string(d) + " out of range");
  Word out;
  for (int e : slices[d]) out.push_back(color(e));
  return out;
}

std::vector<int> Weave::vertex_crossings() const {
  std::vector<int> out;
  for (const auto& [e, edge] : south_edge) out.push_back(e);
  return out;
}

Word slice_word(const Weave& w, int depth) { return w.slice_word(depth); }
std::vector<int> vertex_crossings(const Weave& w) { return w.vertex_crossings(); }

namespace {

class Builder {
 public:
  Builder(int n, MoveOrder order) : order_(order) {
    w_.n = n;
    w_.slices.emplace_back();
  }

  int new_edge(int color, int depth) {
    int id = static_cast<int>(w_.edges.size());
    w_.edges.push_back({id, color, depth, -1});
    return id;
  }

  void consume(int id, int depth) { w_.edges[id].died = depth; }

  void step(int k, const DoubleStringEntry& entry, bool grows) {
    std::vector<WeaveEvent> events;
    std::vector<int> slice = w_.slices.back();
    const int i = entry.index;
    if (grows) {
      int e = new_edge(i, k);
      if (entry.side == Side::Right) slice.push_back(e);
      else slice.insert(slice.begin(), e);
      events.push_back({EventKind::Grow, entry.side, entry.side == Side::Right ? int(slice.size()) - 1 : 0, {}, {e}});
    } else {
      Word word;
      for (int e : slice) word.push_back(w_.edges[e].color);
      auto accept = entry.side == Side::Right ? std::function<bool(const Word&)>([i](const Word& x) { return x.back() == i; })
                                              : std::function<bool(const Word&)>([i](const Word& x) { return x.front() == i; });
      for (const auto& m : bfs_moves(word, accept, order_)) {
        WeaveEvent ev;
        ev.kind = m.kind == 2 ? EventKind::Commute : EventKind::Braid;
        ev.pos = m.pos;
        ev.ins.assign(slice.begin() + m.pos, slice.begin() + m.pos + m.kind);
        int a = w_.edges[ev.ins[0]].color, b = w_.edges[ev.ins[1]].color;
        std::vector<int> colors = m.kind == 2 ? std::vector<int>{b, a} : std::vector<int>{b, a, b};
        for (int col : colors) ev.outs.push_back(new_edge(col, k));
        for (int e : ev.ins) consume(e, k);
        std::copy(ev.outs.begin(), ev.outs.end(), slice.begin() + m.pos);
        events.push_back(std::move(ev));
      }
      int pos = entry.side == Side::Right ? int(slice.size()) - 1 : 0;
      int old = slice[pos];
      int top = new_edge(i, k);
      int south = new_edge(i, k);
      consume(old, k);
      consume(top, k);
      slice[pos] = south;
      events.push_back({EventKind::Trivalent, entry.side, pos, {old, top}, {south}});
      w_.south_edge[k - 1] = south;
    }
    w_.slices.push_back(std::move(slice));
    w_.strips.push_back(std::move(events));
  }

  Weave take() { return std::move(w_); }

 private:
  Weave w_;
  MoveOrder order_;
};

}  // namespace

Weave build_double_inductive(const CartanData& c, const DoubleString& s, MoveOrder order) {
  const int n = sl_rank(c);
  for (int i = 1; i <= c.rank(); ++i)
    for (int j = 1; j <= c.rank(); ++j)
      if (c.braid_order(i, j) > 3) throw WeaveError("weaves with m_ij > 3 are not supported");
  auto ws = w_sequence_of_string(c, s);
  Builder builder(n, order);
  for (std::size_t k = 1; k <= s.size(); ++k) builder.step(static_cast<int>(k), s[k - 1], !(ws[k] == ws[k - 1]));
  Weave w = builder.take();
  w.recipe = s;
  return w;
}

Weave right_inductive(const CartanData& c, const Word& beta) {
  DoubleString s;
  for (int i : beta) s.push_back({i, Side::Right});
  return build_double_inductive(c, s);
}

Weave left_inductive(const CartanData& c, const Word& beta) {
  DoubleString s;
  for (auto it = beta.rbegin(); it != beta.rend(); ++it) s.push_back({*it, Side::Left});
  return build_double_inductive(c, s);
}

Weave truncate(const Weave& w, int depth) {
  if (depth < 0 || depth > w.depth()) throw WeaveError("truncation depth out of range");
  Weave t;
  t.n = w.n;
  t.recipe.assign(w.recipe.begin(), w.recipe.begin() + depth);
  t.slices.assign(w.slices.begin(), w.slices.begin() + depth + 1);
  t.strips.assign(w.strips.begin(), w.strips.begin() + depth);
  for (const auto& e : w.edges) {
    if (e.born > depth) break;  // ids are assigned in depth order
    WeaveEdge copy = e;
    if (copy.died > depth) copy.died = -1;
    t.edges.push_back(copy);
  }
  for (const auto& [e, south] : w.south_edge)
    if (e + 1 <= depth) t.south_edge[e] = south;
  return t;
}

void check_weave(const Weave& w) {
  if (static_cast<int>(w.slices.size()) != w.depth() + 1) throw WeaveError("slice count mismatch");
  std::vector<int> slice = w.slices[0];
  for (int k = 1; k <= w.depth(); ++k) {
    for (const auto& ev : w.strips[k - 1]) {
      switch (ev.kind) {
        case EventKind::Grow:
          if (ev.side == Side::Right) slice.push_back(ev.outs[0]);
          else slice.insert(slice.begin(), ev.outs[0]);
          break;
        case EventKind::Commute:
        case EventKind::Braid:
          for (std::size_t t = 0; t < ev.ins.size(); ++t)
            if (slice.at(ev.pos + t) != ev.ins[t]) throw WeaveError("strip replay mismatch");
          std::copy(ev.outs.begin(), ev.outs.end(), slice.begin() + ev.pos);
          break;
        case EventKind::Trivalent:
          if (slice.at(ev.pos) != ev.ins[0]) throw WeaveError("trivalent replay mismatch");
          slice[ev.pos] = ev.outs[0];
          break;
      }
    }
    if (slice != w.slices[k]) throw WeaveError("slice " + std::to_string(k) + " does not match replay");
  }
}

VertexCounts count_vertices(const Weave& w) {
  VertexCounts v;
  for (const auto& strip : w.strips)
    for (const auto& ev : strip) {
      if (ev.kind == EventKind::Trivalent) ++v.trivalent;
      if (ev.kind == EventKind::Commute) ++v.four_valent;
      if (ev.kind == EventKind::Braid) ++v.six_valent;
    }
  return v;
}

std::string serialize_dot(const Weave& w) {
  // Vertices are named v<depth>_<event>; lines entering from the top start
  // at t<edge>, lines leaving at the bottom end at b<edge>.
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "black"};
  std::ostringstream os;
  os << "graph weave {\n";
  std::vector<std::string> head(w.edges.size()), tail(w.edges.size());
  std::vector<std::string> nodes;
  for (int k = 1; k <= w.depth(); ++k) {
    const auto& strip = w.strips[k - 1];
    for (std::size_t t = 0; t < strip.size(); ++t) {
      const auto& ev = strip[t];
      std::string name = "v" + std::to_string(k) + "_" + std::to_string(t);
      if (ev.kind == EventKind::Grow) {
        head[ev.outs[0]] = "t" + std::to_string(ev.outs[0]);
        nodes.push_back("  " + head[ev.outs[0]] + " [shape=point];");
        continue;
      }
      const char* shape = ev.kind == EventKind::Trivalent ? "circle" : (ev.kind == EventKind::Braid ? "hexagon" : "square");
      nodes.push_back("  " + name + " [shape=" + shape + ",label=\"\",width=0.15];");
      for (int e : ev.ins) tail[e] = name;
      for (int e : ev.outs) head[e] = name;
      if (ev.kind == EventKind::Trivalent) {
        int top = ev.ins[1];
        head[top] = "t" + std::to_string(top);
        nodes.push_back("  " + head[top] + " [shape=point];");
      }
    }
  }
  for (const auto& e : w.edges)
    if (e.died < 0) {
      tail[e.id] = "b" + std::to_string(e.id);
      nodes.push_back("  " + tail[e.id] + " [shape=point];");
    }
  for (const auto& line : nodes) os << line << '\n';
  for (const auto& e : w.edges)
    os << "  " << head[e.id] << " -- " << tail[e.id] << " [color=" << palette[(e.color - 1) % 7] << ",label=\"s"
       << e.color << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::Grow: return "grow";
    case EventKind::Commute: return "commute";
    case EventKind::Braid: return "braid";
    default: return "trivalent";
  }
}

EventKind kind_from(const std::string& s) {
  if (s == "grow") return EventKind::Grow;
  if (s == "commute") return EventKind::Commute;
  if (s == "braid") return EventKind::Braid;
  if (s == "trivalent") return EventKind::Trivalent;
  throw WeaveError("unknown event kind '" + s + "'");
}

}  // namespace

std::string serialize_json(const Weave& w) {
  nlohmann::ordered_json j;
  j["n"] = w.n;
  nlohmann::ordered_json recipe = nlohmann::ordered_json::array();
  for (const auto& e : w.recipe) recipe.push_back(std::to_string(e.index) + (e.side == Side::Right ? "R" : "L"));
  j["recipe"] = recipe;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : w.edges) edges.push_back({{"id", e.id}, {"color", e.color}, {"born", e.born}, {"died", e.died}});
  j["edges"] = edges;
  j["slices"] = w.slices;
  nlohmann::ordered_json strips = nlohmann::ordered_json::array();
  for (const auto& strip : w.strips) {
    nlohmann::ordered_json s = nlohmann::ordered_json::array();
    for (const auto& ev : strip)
      s.push_back({{"kind", kind_name(ev.kind)},
                   {"side", ev.side == Side::Right ? "R" : "L"},
                   {"pos", ev.pos},
                   {"ins", ev.ins},
                   {"outs", ev.outs}});
    strips.push_back(s);
  }
  j["strips"] = strips;
  nlohmann::ordered_json tri = nlohmann::ordered_json::array();
  for (const auto& [e, south] : w.south_edge) tri.push_back({e, south});
  j["vertex_crossings"] = tri;
  return j.dump(1);
}

Weave parse_weave_json(const std::string& text) {
  Weave w;
  try {
    auto j = nlohmann::json::parse(text);
    w.n = j.at("n").get<int>();
    for (const auto& r : j.at("recipe")) {
      std::string s = r.get<std::string>();
      if (s.size() < 2) throw WeaveError("bad recipe entry");
      w.recipe.push_back({std::stoi(s.substr(0, s.size() - 1)), s.back() == 'L' ? Side::Left : Side::Right});
    }
    for (const auto& e : j.at("edges"))
      w.edges.push_back({e.at("id").get<int>(), e.at("color").get<int>(), e.at("born").get<int>(), e.at("died").get<int>()});
    w.slices = j.at("slices").get<std::vector<std::vector<int>>>();
    for (const auto& strip : j.at("strips")) {
      std::vector<WeaveEvent> evs;
      for (const auto& ev : strip)
        evs.push_back({kind_from(ev.at("kind").get<std::string>()),
                       ev.at("side").get<std::string>() == "L" ? Side::Left : Side::Right, ev.at("pos").get<int>(),
                       ev.at("ins").get<std::vector<int>>(), ev.at("outs").get<std::vector<int>>()});
      w.strips.push_back(std::move(evs));
    }
    for (const auto& t : j.at("vertex_crossings")) w.south_edge[t.at(0).get<int>()] = t.at(1).get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw WeaveError(std::string("malformed weave JSON: ") + e.what());
  }
  check_weave(w);
  return w;
}

}  // namespace bvs
