#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hopfhg/cli.hpp"
#include "hopfhg/errors.hpp"
#include "hopfhg/json_io.hpp"
#include "oracles.hpp"

using namespace hopfhg;

namespace {

const char* kTwoTriplesJson = R"({"vertices":[1,2,3,4],"edges":[[1,2,3],[2,3,4]]})";

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, HypergraphCanonicalForm) {
  const Json j = parse_json_text(R"({"vertices":["c","a","b"],"edges":[["c","a"],["b"],["a","c"],["a","b","c"]]})");
  EXPECT_EQ(to_json(hypergraph_from_json(j)).dump(),
            R"({"edges":[["b"],["a","c"],["a","c"],["a","b","c"]],"vertices":["a","b","c"]})");
}

TEST(Json, HypergraphErrorsNamePaths) {
  auto message = [](const char* text) {
    try {
      hypergraph_from_json(parse_json_text(text));
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message(R"({"vertices":["a","b"],"edges":[[]]})"), "edges[0]: empty edge");
  EXPECT_EQ(message(R"({"vertices":["a"],"edges":[["a"],["a","x"]]})"), "edges[1][1]: unknown vertex 'x'");
  EXPECT_EQ(message(R"({"vertices":["a","a"],"edges":[]})"), "vertices: duplicate vertex 'a'");
  EXPECT_EQ(message(R"({"vertices":["a"],"edges":[["a","a"]]})"), "edges[0][1]: vertex 'a' repeated");
  EXPECT_EQ(message(R"({"vertices":[true],"edges":[]})"),
            "vertices[0]: a vertex label must be a string or a nonnegative integer");
  EXPECT_EQ(message(R"({"vertices":["a"]})"), "missing \"edges\"");
  EXPECT_NE(message("{"), "no error");
}

TEST(Json, RoundTrips) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, static_cast<unsigned>(rng() % 6), 5);
    const Json j = to_json(h);
    EXPECT_EQ(hypergraph_from_json(j), h);
    EXPECT_EQ(to_json(hypergraph_from_json(parse_json_text(j.dump()))), j);
  }
  const Polynomial p{0, make_rational(-5, 6), make_rational(5, 2)};
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);

  const auto g = graph_from_json(parse_json_text(R"({"vertices":["a","b","c"],"edges":[["b","a"],["c","b"]]})"));
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  const auto pi = partition_from_json(parse_json_text(R"({"vertices":["a","b","c"],"parts":[["c"],["b","a"]]})"));
  EXPECT_EQ(partition_from_json(to_json(pi)), pi);
  const auto alpha = path_family_from_json(parse_json_text(R"({"paths":[["b","f","c","g"],["a","e","d"]]})"));
  EXPECT_EQ(path_family_from_json(to_json(alpha)), alpha);
  const auto b = building_set_from_json(parse_json_text(R"({"vertices":["a","b"],"sets":[["a"],["b"],["a","b"]]})"));
  EXPECT_EQ(to_json(building_set_from_json(to_json(b))), to_json(b));
  const auto c = complex_from_json(parse_json_text(R"({"vertices":["a","b"],"faces":[["a"],["b"],["a","b"]]})"));
  EXPECT_EQ(to_json(complex_from_json(to_json(c))), to_json(c));
}

TEST(Json, SubmonoidSchemaErrors) {
  EXPECT_THROW(graph_from_json(parse_json_text(R"({"vertices":["a","b","c"],"edges":[["a","b","c"]]})")),
               InvalidInput);
  EXPECT_THROW(building_set_from_json(parse_json_text(R"({"vertices":["a","b"],"sets":[["a"],["a","b"]]})")),
               InvalidInput);
  EXPECT_THROW(path_family_from_json(parse_json_text(R"({"paths":[["a","b"],["b"]]})")), InvalidInput);
  EXPECT_THROW(object_kind(parse_json_text(R"({"vertices":[],"edges":[],"parts":[]})")), InvalidInput);
  EXPECT_THROW(object_kind(parse_json_text(R"({"vertices":[]})")), InvalidInput);
}

TEST(Cli, ChiOnTwoTriples) {
  const CliResult r = cli({"chi", kTwoTriplesJson});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_json_text(r.out)["chi"], Json::parse(R"(["0","-5/6","5/2","-8/3","1"])"));
  EXPECT_EQ(cli({"chi", kTwoTriplesJson, "--format", "text"}).out, "chi(n) = n^4 - 8/3 n^3 + 5/2 n^2 - 5/6 n\n");
}

TEST(Cli, EvalAtNegativePoints) {
  const CliResult r = cli({"eval", "--at", "-1", kTwoTriplesJson, "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "chi(-1) = 7\n");
  EXPECT_EQ(cli({"eval", "--at=2", kTwoTriplesJson, "--format", "text"}).out, "chi(2) = 3\n");
  EXPECT_EQ(cli({"eval", "--at", "3", "--pairs", "--strict", kTwoTriplesJson, "--format", "text"}).out,
            "strict pairs(3) = 29\n");
  EXPECT_EQ(cli({"eval", kTwoTriplesJson}).code, kExitInvalidInput);
}

TEST(Cli, EdgelessAndStdin) {
  const CliResult r = cli({"chi"}, R"({"vertices":["a","b","c"],"edges":[]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_json_text(r.out)["chi"], Json::parse(R"(["0","0","0","1"])"));
}

TEST(Cli, InvalidInputExitsOne) {
  const CliResult r = cli({"chi", R"({"vertices":["a","b"],"edges":[[]]})"});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("empty edge"), std::string::npos);
  EXPECT_EQ(cli({"chi", "/nonexistent/file.json"}).code, kExitInvalidInput);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitInvalidInput);
  EXPECT_EQ(cli({}).code, kExitInvalidInput);
}

TEST(Cli, Orientations) {
  const CliResult r = cli({"orientations", "--list", kTwoTriplesJson});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json_text(r.out);
  EXPECT_EQ(j["total"], 9);
  EXPECT_EQ(j["acyclic"], 7);
  EXPECT_EQ(j["list"].size(), 7U);
}

TEST(Cli, AntipodeAndSubmonoidVerbs) {
  EXPECT_EQ(cli({"antipode", R"({"vertices":["a","b"],"edges":[["a","b"]]})", "--format", "text"}).out,
            "1 {{a}} on {a,b}\n1 {{b}} on {a,b}\n-1 {{a,b}} on {a,b}\n");
  EXPECT_EQ(cli({"chromatic", R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]})", "--format",
                 "text"})
                .out,
            "P(n) = n^3 - 3 n^2 + 2 n\n");
  EXPECT_EQ(cli({"skeletons", R"({"vertices":["a","b"],"sets":[["a"],["b"],["a","b"]]})", "--format", "text"}).out,
            "a(b)\nb(a)\ncount 2\n");
  EXPECT_EQ(cli({"partition", R"({"vertices":["a","b","c"],"parts":[["a","b"],["c"]]})", "--format", "text"}).out,
            "chi(n) = n^3 - n^2\n");
  const CliResult p = cli({"path", "--text", "bfcg|aed", "--left", "b,c,e"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(parse_json_text(p.out)["coproduct"]["text"], "bc|e ⊗ f|g|a|d");
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  const CliResult a = cli({"verify", kTwoTriplesJson, "--max-n", "3", "--seed", "5", "--random", "5"});
  ASSERT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_TRUE(parse_json_text(a.out)["ok"].get<bool>());
  const CliResult b = cli({"verify", kTwoTriplesJson, "--max-n", "3", "--seed", "5", "--random", "5"});
  EXPECT_EQ(a.out, b.out);
  const CliResult c = cli({"verify", "--random", "3", "--vertices", "5", "--format", "text"});
  EXPECT_EQ(c.code, 0) << c.out;
}

TEST(Cli, OutputIsByteDeterministic) {
  for (const char* verb : {"chi", "orientations", "antipode"}) {
    EXPECT_EQ(cli({verb, kTwoTriplesJson}).out, cli({verb, kTwoTriplesJson}).out) << verb;
  }
}
