#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bvs/plabic3d.hpp"
#include "bvs/seeds.hpp"
#include "bvs/tropical.hpp"
#include "bvs/weave.hpp"

namespace bvs::cli {

namespace {

using ojson = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string join(const DoubleBraidWord& b) {
  std::string s;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
  return s;
}

CartanData cartan_from_json(const nlohmann::json& j) {
  if (j.contains("matrix")) {
    IntMatrix a = j.at("matrix").get<IntMatrix>();
    std::vector<long> d = j.contains("d") ? j.at("d").get<std::vector<long>>() : std::vector<long>(a.size(), 1);
    return cartan_from_matrix(a, d);
  }
  std::string type = j.value("type", "A");
  int rank = j.at("rank").get<int>();
  if (type == "A") return type_a(rank);
  if (type == "G" && rank == 2) return cartan_from_matrix({{2, -3}, {-1, 2}}, {1, 3});
  if (type == "B" && rank == 2) return cartan_from_matrix({{2, -2}, {-1, 2}}, {1, 2});
  throw InputError("unsupported Cartan type " + type + std::to_string(rank));
}

struct Options {
  std::string cartan = "A2";
  std::string word;
  std::string input;
  std::string format;
  std::uint64_t seed = 1;
  std::vector<std::string> checks{"tori", "vars", "forms"};
  bool opposite = false;
  int points = 20;
  std::string move_kind;
  int pos = 1;
};

struct Problem {
  CartanData cartan;
  DoubleBraidWord word;
};

// --input takes JSON {"cartan": ..., "word": [...]} from a file or "-" for
// stdin; --cartan and --word fill in whatever it leaves out.
Problem load_problem(const Options& o, std::istream& in) {
  std::optional<CartanData> c;
  std::optional<DoubleBraidWord> b;
  if (!o.input.empty()) {
    std::string text = o.input == "-" ? std::string(std::istreambuf_iterator<char>(in), {}) : read_file(o.input);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      if (j.contains("cartan")) c = j.at("cartan").is_string() ? parse_cartan(j.at("cartan").get<std::string>())
                                                               : cartan_from_json(j.at("cartan"));
      if (j.contains("word")) b = j.at("word").get<DoubleBraidWord>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed input JSON: ") + e.what());
    }
  }
  if (!c) c = parse_cartan(o.cartan);
  if (!b) {
    if (o.word.empty()) throw InputError("no word given (use --word or --input)");
    b = parse_word(o.word);
  }
  for (std::size_t k = 0; k < b->size(); ++k) {
    int i = (*b)[k];
    if (i == 0 || std::abs(i) > c->rank())
      throw InputError("invalid letter " + std::to_string(i) + " at position " + std::to_string(k + 1));
  }
  return {*c, *b};
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw InputError("format " + f + " is not available for this command");
}

std::string seed_table(const Seed& s) {
  std::ostringstream os;
  os << "cluster variables (" << s.indices.size() << ")\n";
  for (std::size_t a = 0; a < s.indices.size(); ++a)
    os << "  x" << s.indices[a] << (s.frozen[a] ? " [frozen]  " : " [mutable] ") << s.variables[a].to_string() << "\n";
  os << "exchange matrix rows (mutable) by columns";
  for (int e : s.indices) os << " " << e;
  os << "\n";
  for (std::size_t a = 0; a < s.indices.size(); ++a) {
    if (s.frozen[a]) continue;
    os << "  " << s.indices[a] << ":";
    for (const auto& v : s.epsilon[a]) {
      os << " " << v.numerator();
      if (v.denominator() != 1) os << "/" << v.denominator();
    }
    os << "\n";
  }
  return os.str();
}

int cmd_seed(const Options& o, std::istream& in, std::ostream& out) {
  Problem p = load_problem(o, in);
  std::string f = format_or(o, "json", {"json", "dot", "table"});
  Seed s = make_seed(p.cartan, p.word);
  if (f == "json") out << seed_json(s, o.opposite) << "\n";
  else if (f == "dot") out << seed_dot(s, o.opposite);
  else out << seed_table(s);
  return kPass;
}

Weave word_weave(const Problem& p) { return build_double_inductive(p.cartan, double_string_of(p.cartan, p.word)); }

int cmd_lusztig(const Options& o, std::istream& in, std::ostream& out) {
  Problem p = load_problem(o, in);
  std::string f = format_or(o, "table", {"json", "table"});
  LusztigTable t = lusztig_table(p.cartan, word_weave(p));
  out << (f == "json" ? render_table_json(t) + "\n" : render_table_text(t));
  return kPass;
}

int cmd_weave(const Options& o, std::istream& in, std::ostream& out) {
  Problem p = load_problem(o, in);
  std::string f = format_or(o, "dot", {"json", "dot"});
  Weave w = word_weave(p);
  out << (f == "json" ? serialize_json(w) + "\n" : serialize_dot(w));
  return kPass;
}

struct MoveTally {
  int checked = 0;
  std::vector<std::string> failures;
};

MoveTally check_all_moves(const Problem& p) {
  MoveTally t;
  const int L = static_cast<int>(p.word.size());
  for (MoveKind k : {MoveKind::B1, MoveKind::B2, MoveKind::B3, MoveKind::B4})
    for (int pos = 1; pos <= L; ++pos) {
      if (!move_applies(p.cartan, p.word, k, pos)) continue;
      if (k == MoveKind::B4 && pos != L) continue;  // B4 ignores the position
      MoveReport r = check_move(p.cartan, p.word, k, pos);
      ++t.checked;
      if (!r.verified)
        t.failures.push_back(to_string(k) + " at " + std::to_string(pos) + ": " + r.comparison.detail);
    }
  return t;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  Problem p = load_problem(o, in);
  std::string f = format_or(o, "table", {"json", "table"});
  auto has = [&](const char* name) { return std::find(o.checks.begin(), o.checks.end(), name) != o.checks.end(); };
  for (const auto& c : o.checks)
    if (c != "tori" && c != "vars" && c != "forms" && c != "moves") throw InputError("unknown check " + c);
  VerifyOptions vo;
  vo.tori = has("tori");
  vo.vars = has("vars");
  vo.forms = has("forms");
  vo.points = o.points;
  std::mt19937_64 rng(o.seed);
  VerifyReport r = verify_main_theorem(p.cartan, p.word, rng, vo);
  MoveTally moves;
  if (has("moves")) moves = check_all_moves(p);
  bool ok = r.ok() && moves.failures.empty();

  if (f == "json") {
    ojson j;
    j["seed"] = o.seed;
    j["word"] = p.word;
    j["checks"] = o.checks;
    if (vo.vars) {
      j["vars"] = r.vars;
      j["cross_route"] = r.cross_route;
      j["undecided_irreducibility"] = r.undecided_irreducibility;
    }
    if (vo.forms) j["forms"] = r.forms;
    if (vo.tori) {
      j["tori"] = r.tori;
      j["torus_points"] = r.torus_points;
      j["off_torus_points"] = r.off_torus_points;
    }
    if (has("moves")) {
      j["moves_checked"] = moves.checked;
      j["move_failures"] = moves.failures;
    }
    j["failures"] = r.failures;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
    out << "seed " << o.seed << "\n";
    out << "word " << join(p.word) << "\n";
    if (vo.vars) {
      out << "vars         " << mark(r.vars) << "\n";
      out << "cross-route  " << mark(r.cross_route) << "\n";
    }
    if (vo.forms) out << "forms        " << mark(r.forms) << "\n";
    if (vo.tori)
      out << "tori         " << mark(r.tori) << " (" << r.torus_points << " torus points, " << r.off_torus_points
          << " off-torus points)\n";
    if (has("moves")) out << "moves        " << mark(moves.failures.empty()) << " (" << moves.checked << " checked)\n";
    for (const auto& s : r.failures) out << "  " << s << "\n";
    for (const auto& s : moves.failures) out << "  " << s << "\n";
    out << (ok ? "ok" : "failed") << "\n";
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_move(const Options& o, std::istream& in, std::ostream& out) {
  Problem p = load_problem(o, in);
  std::string f = format_or(o, "table", {"json", "table"});
  MoveKind kind;
  try {
    kind = parse_move_kind(o.move_kind);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  if (!move_applies(p.cartan, p.word, kind, o.pos))
    throw InputError("move " + o.move_kind + " does not apply at position " + std::to_string(o.pos));
  if (kind == MoveKind::B5) {
    // Seeds are not compared for B5; only the rewritten word is reported.
    MoveResult m = apply_move(p.cartan, p.word, kind, o.pos);
    if (f == "json") {
      ojson j;
      j["move"] = "B5";
      j["word"] = m.word;
      j["seed_comparison"] = nullptr;
      out << j.dump(2) << "\n";
    } else {
      out << "word " << join(m.word) << "\nseed comparison not available for B5\n";
    }
    return kPass;
  }
  MoveReport r = check_move(p.cartan, p.word, kind, o.pos);
  std::string summary = r.expected == "mutation" ? "mutation at " + std::to_string(r.mutation_index)
                                                 : std::string(r.expected == "equal" ? "equal seeds" : "relabeling");
  if (f == "json") {
    ojson j;
    j["move"] = to_string(kind);
    j["position"] = o.pos;
    j["word"] = r.move.word;
    j["expected"] = r.expected;
    if (r.expected == "mutation") j["mutation_index"] = r.mutation_index;
    ojson rel = ojson::object();
    for (const auto& [a, b] : r.comparison.relabel) rel[std::to_string(a)] = b;
    j["relabel"] = rel;
    j["verified"] = r.verified;
    if (!r.verified) j["detail"] = r.comparison.detail;
    out << j.dump(2) << "\n";
  } else {
    out << "word " << join(r.move.word) << "\n";
    out << summary << (r.verified ? " verified" : " NOT verified") << "\n";
    if (!r.verified) out << r.comparison.detail << "\n";
  }
  return r.verified ? kPass : kCheckFailed;
}

int cmd_plabic(const Options& o, std::istream& in, std::ostream& out) {
  PlabicGraph3D g;
  if (!o.input.empty()) {
    g = parse_plabic_json(o.input == "-" ? std::string(std::istreambuf_iterator<char>(in), {}) : read_file(o.input));
  } else {
    CartanData c = parse_cartan(o.cartan);
    if (!c.is_type_a()) throw InputError("plabic graphs need type A Cartan data");
    if (o.word.empty()) throw InputError("no word given (use --word or --input)");
    g = {c.rank(), parse_word(o.word)};
  }
  std::string f = format_or(o, "json", {"json", "dot"});
  Weave w = compile_weave(g);
  CartanData c = type_a(g.rank);
  Word single = to_single(c, g.word);
  Weave ref = g.word.empty() || g.word.front() > 0 ? right_inductive(c, single) : left_inductive(c, single);
  bool slices = w.depth() == ref.depth();
  for (int d = 0; slices && d <= w.depth(); ++d) slices = w.slice_word(d) == ref.slice_word(d);
  bool full = demazure_product(c.rank() + 1, single) == Perm::longest(c.rank() + 1);
  std::optional<bool> seeds;
  std::optional<Seed> seed;
  if (full) {
    SeedPipeline a = build_pipeline(c, g.word, &w);
    SeedPipeline b = build_pipeline(c, g.word, &ref);
    seeds = a.variables == b.variables && weave_exchange(a) == weave_exchange(b);
    seed = make_seed(a);
  }
  bool ok = slices && seeds.value_or(true);
  if (f == "dot") {
    out << serialize_dot(w);
  } else {
    ojson j;
    j["rank"] = g.rank;
    j["word"] = g.word;
    j["solid"] = scan_solidity(g);
    j["weave"] = ojson::parse(serialize_json(w));
    j["slice_identical"] = slices;
    j["seed_identical"] = seeds ? ojson(*seeds) : ojson(nullptr);
    if (seed) j["seed"] = ojson::parse(seed_json(*seed, o.opposite));
    out << j.dump(2) << "\n";
  }
  return ok ? kPass : kCheckFailed;
}

}  // namespace

CartanData parse_cartan(const std::string& text) {
  if (text.empty()) throw InputError("empty Cartan specification");
  if (text[0] == '@') return parse_cartan(read_file(text.substr(1)));
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return cartan_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed Cartan JSON: ") + e.what());
    }
  }
  if (text.size() >= 2 && std::isalpha(static_cast<unsigned char>(text[0]))) {
    try {
      std::size_t used = 0;
      int rank = std::stoi(text.substr(1), &used);
      if (used == text.size() - 1) return cartan_from_json({{"type", std::string(1, text[0])}, {"rank", rank}});
    } catch (const std::logic_error&) {
    }
  }
  throw InputError("cannot read Cartan specification '" + text + "'");
}

DoubleBraidWord parse_word(const std::string& text) {
  DoubleBraidWord b;
  std::string token;
  int position = 0;
  auto flush = [&] {
    if (token.empty()) return;
    ++position;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != token.size() || v == 0)
      throw InputError("invalid letter '" + token + "' at position " + std::to_string(position));
    b.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
    else token += ch;
  }
  flush();
  return b;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster structures on braid varieties: seeds, weaves and checks", "bvs"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--cartan", o.cartan, "Cartan data: A2, G2, JSON, or @file");
    sub->add_option("--word", o.word, "double braid word, e.g. -2,1,2,1,-1,1,2");
    sub->add_option("--input", o.input, "JSON input file, or - for stdin");
    sub->add_option("--format", o.format, "json, dot or table");
    sub->add_option("--seed", o.seed, "random seed for evaluation points");
    sub->add_flag("--opposite-quiver", o.opposite, "negate the exchange matrix on output");
  };
  auto* seed = app.add_subcommand("seed", "cluster seed of a double braid word");
  auto* table = app.add_subcommand("lusztig-table", "Lusztig data of the double inductive weave");
  auto* verify = app.add_subcommand("verify", "check the seed against the Deodhar side");
  auto* move = app.add_subcommand("move", "apply a double braid move and compare seeds");
  auto* plabic = app.add_subcommand("plabic", "compile a 3D plabic graph to a weave");
  auto* weave = app.add_subcommand("weave", "double inductive weave");
  for (auto* s : {seed, table, verify, move, plabic, weave}) common(s);
  verify->add_option("--checks", o.checks, "subset of tori,vars,forms,moves")->delimiter(',');
  verify->add_option("--points", o.points, "random points per torus check");
  move->add_option("kind", o.move_kind, "B1 .. B5")->required();
  move->add_option("--pos", o.pos, "leftmost letter of the move window");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  try {
    if (*seed) return cmd_seed(o, in, out);
    if (*table) return cmd_lusztig(o, in, out);
    if (*verify) return cmd_verify(o, in, out);
    if (*move) return cmd_move(o, in, out);
    if (*plabic) return cmd_plabic(o, in, out);
    return cmd_weave(o, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace bvs::cli
