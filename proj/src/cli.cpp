#include "hopfhg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "hopfhg/errors.hpp"
#include "hopfhg/invariant.hpp"
#include "hopfhg/json_io.hpp"
#include "hopfhg/submonoids.hpp"

namespace hopfhg {

namespace {

struct Options {
  std::string input;
  std::string format = "json";
  std::vector<long> at;
  bool list = false;
  bool strict = false;
  bool pairs = false;
  std::string text;
  std::vector<std::string> left;
  unsigned max_n = 4;
  std::uint64_t seed = 1;
  unsigned random = 10;
  unsigned vertices = 4;
};

// One parsed input object of any supported kind.
struct Loaded {
  std::string kind;
  Json json;
};

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(to_string(v));
}

Loaded load(const Options& o, std::istream& in) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (o.input.find_first_of("{[") != std::string::npos &&
             o.input.find_first_not_of(" \t\n") == o.input.find_first_of("{[")) {
    text = o.input;
  } else {
    std::ifstream file(o.input);
    if (!file) throw InvalidInput("cannot open '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  Json j = parse_json_text(text);
  return {object_kind(j), std::move(j)};
}

// Hypergraph through which chi of an object of any kind is computed.
Hypergraph as_hypergraph(const Loaded& l) {
  if (l.kind == "edges") {
    // Two-element edges only and no repeats: still a hypergraph, same chi.
    return hypergraph_from_json(l.json);
  }
  if (l.kind == "faces") return complex_from_json(l.json).as_hypergraph();
  if (l.kind == "sets") return building_set_from_json(l.json).as_hypergraph();
  if (l.kind == "parts") return cliquey_graph(partition_from_json(l.json)).as_hypergraph();
  return tubes(path_to_graph(path_family_from_json(l.json))).as_hypergraph();
}

Json canonical_input(const Loaded& l) {
  if (l.kind == "edges") return to_json(hypergraph_from_json(l.json));
  if (l.kind == "faces") return to_json(complex_from_json(l.json));
  if (l.kind == "sets") return to_json(building_set_from_json(l.json));
  if (l.kind == "parts") return to_json(partition_from_json(l.json));
  return to_json(path_family_from_json(l.json));
}

Polynomial invariant_of(const Loaded& l) {
  if (l.kind == "parts") return partition_invariant(partition_from_json(l.json));
  if (l.kind == "paths") return path_invariant(path_family_from_json(l.json));
  return chi_polynomial(as_hypergraph(l));
}

Json evaluations(const Polynomial& p, const std::vector<long>& points) {
  Json out = Json::array();
  for (long n : points) out.push_back(Json{{"n", n}, {"value", to_string(p(n))}});
  return out;
}

void print(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "text") out << text;
  else out << j.dump(2) << "\n";
}

std::string eval_text(const char* name, const Polynomial& p, const std::vector<long>& points) {
  std::string out;
  for (long n : points) out += std::string(name) + "(" + std::to_string(n) + ") = " + to_string(p(n)) + "\n";
  return out;
}

int cmd_chi(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  const Polynomial p = invariant_of(l);
  Json j{{"kind", l.kind}, {"input", canonical_input(l)}, {"chi", to_json(p)}, {"degree", p.degree()}};
  if (!o.at.empty()) j["evaluations"] = evaluations(p, o.at);
  print(out, o, j, "chi(n) = " + p.to_text() + "\n" + eval_text("chi", p, o.at));
  return kExitOk;
}

int cmd_eval(const Options& o, std::istream& in, std::ostream& out) {
  if (o.at.empty()) throw InvalidInput("eval needs at least one --at point");
  const Loaded l = load(o, in);
  if (!o.pairs) {
    const Polynomial p = invariant_of(l);
    print(out, o, Json{{"evaluations", evaluations(p, o.at)}}, eval_text("chi", p, o.at));
    return kExitOk;
  }
  const Hypergraph h = as_hypergraph(l);
  Json rows = Json::array();
  std::string text;
  for (long n : o.at) {
    if (n < 0) throw InvalidInput("--pairs needs nonnegative --at points");
    const Integer c = count_compatible_pairs(h, static_cast<unsigned>(n), o.strict);
    rows.push_back(Json{{"n", n}, {"pairs", integer_json(c)}});
    text += std::string(o.strict ? "strict" : "weak") + " pairs(" + std::to_string(n) + ") = " + to_string(c) + "\n";
  }
  print(out, o, Json{{"strict", o.strict}, {"pair_counts", rows}}, text);
  return kExitOk;
}

int cmd_orientations(const Options& o, std::istream& in, std::ostream& out) {
  const Hypergraph h = as_hypergraph(load(o, in));
  const auto acyclic = acyclic_orientations(h);
  Json j{{"total", integer_json(orientation_count(h))}, {"acyclic", acyclic.size()}};
  std::string text = "total " + to_string(orientation_count(h)) + "\nacyclic " + std::to_string(acyclic.size()) + "\n";
  if (o.list) {
    Json list = Json::array();
    for (const auto& f : acyclic) {
      list.push_back(orientation_to_json(h, f));
      std::string row;
      for (const auto& l : f.head_labels(h)) row += (row.empty() ? "" : " ") + l;
      text += row + "\n";
    }
    j["edges"] = Json::array();
    for (std::size_t i = 0; i < h.edge_count(); ++i) j["edges"].push_back(h.edge_labels(i));
    j["list"] = list;
  }
  print(out, o, j, text);
  return kExitOk;
}

constexpr std::size_t kAntipodeMaxVertices = 7;

int cmd_antipode(const Options& o, std::istream& in, std::ostream& out) {
  const Hypergraph h = as_hypergraph(load(o, in));
  if (h.vertex_count() > kAntipodeMaxVertices) {
    throw InvalidInput("antipode is limited to " + std::to_string(kAntipodeMaxVertices) + " vertices");
  }
  const FormalSum s = antipode_takeuchi(h);
  std::string text;
  for (const auto& [g, c] : s.terms()) text += to_string(c) + " " + g.to_string() + "\n";
  print(out, o, Json{{"terms", to_json(s)}}, text);
  return kExitOk;
}

int cmd_chromatic(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  if (l.kind != "edges") throw InvalidInput("chromatic expects a graph");
  const SimpleGraph g = graph_from_json(l.json);
  const Polynomial p = chromatic_polynomial(g);
  Json j{{"graph", to_json(g)}, {"chromatic", to_json(p)}};
  if (!o.at.empty()) j["evaluations"] = evaluations(p, o.at);
  print(out, o, j, "P(n) = " + p.to_text() + "\n" + eval_text("P", p, o.at));
  return kExitOk;
}

int cmd_skeletons(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  BuildingSet b;
  if (l.kind == "sets") b = building_set_from_json(l.json);
  else if (l.kind == "edges") b = tubes(graph_from_json(l.json));
  else throw InvalidInput("skeletons expects a building set or a graph");
  const Hypergraph h = b.as_hypergraph();
  Json list = Json::array();
  std::string text;
  for (const auto& [forest, f] : skeleton_orientation_bijection(b)) {
    Json row = to_json(forest);
    row["orientation"] = orientation_to_json(h, f);
    list.push_back(row);
    text += forest.to_string() + "\n";
  }
  print(out, o, Json{{"building_set", to_json(b)}, {"count", list.size()}, {"skeletons", list}},
        text + "count " + std::to_string(list.size()) + "\n");
  return kExitOk;
}

int cmd_partition(const Options& o, std::istream& in, std::ostream& out) {
  const Loaded l = load(o, in);
  if (l.kind != "parts") throw InvalidInput("partition expects a set partition");
  const SetPartition pi = partition_from_json(l.json);
  const Polynomial p = partition_invariant(pi);
  Json j{{"partition", to_json(pi)}, {"chi", to_json(p)}};
  if (!o.at.empty()) j["evaluations"] = evaluations(p, o.at);
  print(out, o, j, "chi(n) = " + p.to_text() + "\n" + eval_text("chi", p, o.at));
  return kExitOk;
}

int cmd_path(const Options& o, std::istream& in, std::ostream& out) {
  const PathFamily alpha = o.text.empty() ? path_family_from_json(load(o, in).json) : PathFamily::parse(o.text);
  const Polynomial p = path_invariant(alpha);
  Json j{{"family", alpha.to_text()}, {"chi", to_json(p)}};
  std::string text = alpha.to_text() + "\nchi(n) = " + p.to_text() + "\n";
  if (!o.left.empty()) {
    const VertexSet s(o.left);
    std::vector<Label> rest;
    for (const auto& v : alpha.vertices()) {
      if (!s.contains(v)) rest.push_back(v);
    }
    const auto parts = path_coproduct(alpha, s, VertexSet(rest));
    j["coproduct"] = Json{{"left", parts.first.to_text()}, {"right", parts.second.to_text()},
                          {"text", format_coproduct(parts)}};
    text += format_coproduct(parts) + "\n";
  }
  print(out, o, j, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

// One row per identity, aggregated over all instances checked.
class CheckLog {
 public:
  void begin_instance(std::string name) { instance_ = std::move(name); }

  void record(const std::string& name, bool pass, const std::string& detail = "") {
    Row& row = row_for(name);
    if (pass) {
      ++row.passed;
      return;
    }
    ++row.failed;
    ok_ = false;
    if (row.failures.size() < 5) row.failures.push_back(instance_ + (detail.empty() ? "" : ":" + detail));
  }
  void skip(const std::string& name) { ++row_for(name).skipped; }

  bool ok() const { return ok_; }

  Json to_json() const {
    Json out = Json::array();
    for (const auto& row : rows_) {
      Json j{{"name", row.name}, {"status", status(row)}, {"passed", row.passed}, {"failed", row.failed},
             {"skipped", row.skipped}};
      if (!row.failures.empty()) j["failures"] = row.failures;
      out.push_back(j);
    }
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& row : rows_) {
      std::string status_text = status(row);
      std::transform(status_text.begin(), status_text.end(), status_text.begin(),
                     [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      out += status_text + " " + row.name + " (" + std::to_string(row.passed) + " passed";
      if (row.failed) out += ", " + std::to_string(row.failed) + " failed";
      if (row.skipped) out += ", " + std::to_string(row.skipped) + " skipped";
      out += ")\n";
      for (const auto& f : row.failures) out += "  " + f + "\n";
    }
    return out;
  }

 private:
  struct Row {
    std::string name;
    unsigned passed = 0;
    unsigned failed = 0;
    unsigned skipped = 0;
    std::vector<std::string> failures;
  };

  static std::string status(const Row& row) {
    if (row.failed) return "fail";
    return row.passed ? "pass" : "skipped";
  }

  Row& row_for(const std::string& name) {
    for (auto& row : rows_) {
      if (row.name == name) return row;
    }
    rows_.push_back(Row{name, 0, 0, 0, {}});
    return rows_.back();
  }

  std::vector<Row> rows_;
  std::string instance_;
  bool ok_ = true;
};

constexpr std::size_t kDefinitionBudget = 2'000'000;
constexpr std::size_t kVerifyAntipodeMaxVertices = 6;

void verify_hypergraph(const Hypergraph& h, unsigned max_n, CheckLog& log) {
  const Polynomial chi = chi_polynomial(h);
  const Polynomial neg = chi_negative_polynomial(h);
  const std::size_t v = h.vertex_count();
  std::string bad;

  for (unsigned n = 0; n <= max_n; ++n) {
    const Integer c = chi_eval_colorings(h, n, kernels::Backend::Scalar);
    if (Rational(c) != chi(static_cast<long>(n))) bad += " n=" + std::to_string(n);
  }
  log.record("colorings = polynomial", bad.empty(), bad);

  double work = 1;
  for (std::size_t i = 0; i < v; ++i) work *= max_n;
  if (work <= kDefinitionBudget) {
    bad.clear();
    for (unsigned n = 0; n <= max_n; ++n) {
      if (Rational(chi_eval_definition(h, n)) != chi(static_cast<long>(n))) bad += " n=" + std::to_string(n);
    }
    log.record("definition = polynomial", bad.empty(), bad);
  } else {
    log.skip("definition = polynomial");
  }

  const kernels::Backend best = kernels::best_backend();
  if (best != kernels::Backend::Scalar) {
    bad.clear();
    for (unsigned n = 0; n <= max_n; ++n) {
      if (chi_eval_colorings(h, n, best) != chi_eval_colorings(h, n, kernels::Backend::Scalar)) {
        bad += " n=" + std::to_string(n);
      }
    }
    log.record(std::string(kernels::backend_name(best)) + " kernel = scalar kernel", bad.empty(), bad);
  }

  bad.clear();
  for (unsigned n = 0; n <= max_n; ++n) {
    if (Rational(count_compatible_pairs(h, n, true)) != chi(static_cast<long>(n))) bad += " n=" + std::to_string(n);
  }
  log.record("strict pairs = chi(n)", bad.empty(), bad);

  bad.clear();
  for (unsigned n = 0; n <= max_n; ++n) {
    if (Rational(count_compatible_pairs(h, n, false)) != neg(static_cast<long>(n))) bad += " n=" + std::to_string(n);
  }
  log.record("weak pairs = (-1)^|I| chi(-n)", bad.empty(), bad);

  log.record("acyclic orientations = (-1)^|I| chi(-1)",
             Rational(static_cast<long>(acyclic_orientations(h).size())) == neg(1L));

  if (v <= kVerifyAntipodeMaxVertices) {
    const Polynomial via = chi_on_formal_sum(antipode_takeuchi(h));
    log.record("chi(antipode) = chi(-n)", via == chi.reflected());
  } else {
    log.skip("chi(antipode) = chi(-n)");
  }
}

Integer proper_colorings(const SimpleGraph& g, unsigned n) {
  const std::size_t m = g.vertices().size();
  if (m == 0) return 1;
  if (n == 0) return 0;
  std::vector<unsigned> color(m, 0);
  Integer total = 0;
  while (true) {
    bool ok = true;
    for (VertexMask e : g.edges()) {
      const unsigned a = lowest_index(e);
      const unsigned b = lowest_index(e & (e - 1));
      if (color[a] == color[b]) ok = false;
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < m && ++color[i] == n) color[i++] = 0;
    if (i == m) return total;
  }
}

void verify_kind(const Loaded& l, unsigned max_n, CheckLog& log) {
  if (l.kind == "edges") {
    const Json& edges = l.json.at("edges");
    const bool graph_like = std::all_of(edges.begin(), edges.end(), [](const Json& e) { return e.size() == 2; });
    if (!graph_like) return;
    SimpleGraph g;
    try {
      g = graph_from_json(l.json);
    } catch (const InvalidInput&) {
      return;  // repeated edges: not a simple graph
    }
    const Polynomial p = chromatic_polynomial(g);
    std::string bad;
    for (unsigned n = 0; n <= max_n; ++n) {
      if (Rational(proper_colorings(g, n)) != p(static_cast<long>(n))) bad += " n=" + std::to_string(n);
    }
    log.record("graph: chromatic = proper colorings", bad.empty(), bad);
  } else if (l.kind == "faces") {
    const SimplicialComplex c = complex_from_json(l.json);
    log.record("complex: chi = chromatic of 1-skeleton",
               chi_polynomial(c.as_hypergraph()) == chromatic_polynomial(skeleton_1(c)));
  } else if (l.kind == "sets") {
    const BuildingSet b = building_set_from_json(l.json);
    const Hypergraph h = b.as_hypergraph();
    const auto bij = skeleton_orientation_bijection(b);
    std::vector<Orientation> image;
    for (const auto& [forest, f] : bij) image.push_back(f);
    std::sort(image.begin(), image.end());
    const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    log.record("building set: skeletons -> acyclic orientations is a bijection",
               injective && image == acyclic_orientations(h));
    log.record("building set: skeleton count = (-1)^|I| chi(-1)",
               Rational(static_cast<long>(bij.size())) == chi_negative_polynomial(h)(1L));
  } else if (l.kind == "parts") {
    const SetPartition pi = partition_from_json(l.json);
    log.record("partition: closed form = chi of cliquey graph",
               partition_invariant(pi) == chi_polynomial(cliquey_graph(pi).as_hypergraph()));
  } else {
    const PathFamily alpha = path_family_from_json(l.json);
    const SimpleGraph w = path_to_graph(alpha);
    log.record("paths: partitioning forests = skeletons of tubes", partitioning_forests(w) == skeletons(tubes(w)));
    const Polynomial p = path_invariant(alpha);
    std::string bad;
    for (unsigned n = 0; n <= max_n; ++n) {
      if (Rational(count_path_condition_colorings(w, n)) != p(static_cast<long>(n))) bad += " n=" + std::to_string(n);
    }
    log.record("paths: path-condition colorings = chi", bad.empty(), bad);
    if (alpha.paths().size() == 1) {
      const auto k = static_cast<unsigned>(alpha.vertices().size());
      Rational at = p(-1L);
      if (k % 2) at = -at;
      log.record("paths: (-1)^k chi(-1) = Catalan(k)", at == Rational(catalan(k)));
    }
  }
}

Hypergraph random_hypergraph(std::mt19937_64& rng, unsigned vertices) {
  std::vector<Label> labels;
  for (unsigned i = 1; i <= vertices; ++i) labels.push_back(std::to_string(i));
  VertexSet vs(labels);
  const VertexMask full = vs.full_mask();
  const unsigned edges = static_cast<unsigned>(rng() % 5);
  std::vector<VertexMask> masks;
  for (unsigned e = 0; e < edges && full; ++e) {
    VertexMask m = 0;
    while (m == 0) m = rng() & full;
    masks.push_back(m);
  }
  return Hypergraph(std::move(vs), std::move(masks));
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  CheckLog log;
  unsigned vertices = o.vertices;
  Json summary = Json::object();
  if (!o.input.empty()) {
    const Loaded l = load(o, in);
    const Hypergraph h = as_hypergraph(l);
    summary["input"] = canonical_input(l);
    log.begin_instance("input");
    verify_hypergraph(h, o.max_n, log);
    verify_kind(l, o.max_n, log);
    vertices = static_cast<unsigned>(h.vertex_count());
  }
  if (vertices > 8 && o.random > 0) throw InvalidInput("random instances are limited to 8 vertices");
  std::mt19937_64 rng(o.seed);
  for (unsigned r = 0; r < o.random; ++r) {
    const Hypergraph h = random_hypergraph(rng, vertices);
    log.begin_instance(h.to_string());
    verify_hypergraph(h, o.max_n, log);
  }
  summary["seed"] = o.seed;
  summary["max_n"] = o.max_n;
  summary["random_instances"] = o.random;
  summary["checks"] = log.to_json();
  summary["ok"] = log.ok();
  const std::string text = log.to_text() + (log.ok() ? "all checks passed\n" : "DISAGREEMENT detected\n");
  print(out, o, summary, text);
  return log.ok() ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergraph Hopf monoid invariants with exact arithmetic", "hopfhg"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "JSON file, inline JSON, or - for stdin (default)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_at = [&](CLI::App* sub) {
    sub->add_option("--at", o.at, "Evaluation point (repeatable, negatives allowed)")->allow_extra_args(false);
  };

  auto* chi = app.add_subcommand("chi", "Invariant as an exact polynomial");
  add_common(chi);
  add_at(chi);
  auto* eval = app.add_subcommand("eval", "Evaluate the invariant at integer points");
  add_common(eval);
  add_at(eval);
  eval->add_flag("--pairs", o.pairs, "Count compatible (orientation, coloring) pairs instead");
  eval->add_flag("--strict", o.strict, "With --pairs: strictly compatible pairs");
  auto* orient = app.add_subcommand("orientations", "Count (and list) acyclic orientations");
  add_common(orient);
  orient->add_flag("--list", o.list, "List the acyclic orientations as head labels per edge");
  auto* anti = app.add_subcommand("antipode", "Takeuchi antipode as a formal sum");
  add_common(anti);
  auto* chrom = app.add_subcommand("chromatic", "Chromatic polynomial of a simple graph");
  add_common(chrom);
  add_at(chrom);
  auto* skel = app.add_subcommand("skeletons", "Skeletons of a building set (or of the tubes of a graph)");
  add_common(skel);
  auto* part = app.add_subcommand("partition", "Closed-form invariant of a set partition");
  add_common(part);
  add_at(part);
  auto* path = app.add_subcommand("path", "Invariant and coproduct of a path family");
  add_common(path);
  path->add_option("--text", o.text, "Path family as text, e.g. bfcg|aed");
  path->add_option("--left", o.left, "Labels of the left block S for the coproduct")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "Cross-check all methods on the input and random instances");
  add_common(verify);
  verify->add_option("--max-n", o.max_n, "Largest evaluation point")->check(CLI::Range(0U, 8U));
  verify->add_option("--seed", o.seed, "Seed for random instances");
  verify->add_option("--random", o.random, "Number of random hypergraphs")->check(CLI::Range(0U, 10000U));
  verify->add_option("--vertices", o.vertices, "Vertices per random hypergraph when no input is given")
      ->check(CLI::Range(0U, 8U));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (chi->parsed()) return cmd_chi(o, in, out);
    if (eval->parsed()) return cmd_eval(o, in, out);
    if (orient->parsed()) return cmd_orientations(o, in, out);
    if (anti->parsed()) return cmd_antipode(o, in, out);
    if (chrom->parsed()) return cmd_chromatic(o, in, out);
    if (skel->parsed()) return cmd_skeletons(o, in, out);
    if (part->parsed()) return cmd_partition(o, in, out);
    if (path->parsed()) return cmd_path(o, in, out);
    return cmd_verify(o, in, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace hopfhg
