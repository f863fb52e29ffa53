#include <gtest/gtest.h>

#include <random>

#include "hopfhg/errors.hpp"
#include "hopfhg/invariant.hpp"
#include "hopfhg/orientation.hpp"
#include "oracles.hpp"

using namespace hopfhg;

namespace {

const Hypergraph kTwoTriples = Hypergraph::from_labels({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"2", "3", "4"}});

Hypergraph on(std::vector<Label> vs, std::vector<std::vector<Label>> edges) {
  return Hypergraph::from_labels(std::move(vs), edges);
}

std::vector<std::vector<unsigned>> heads_of(const std::vector<Orientation>& fs) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& f : fs) out.push_back(f.heads());
  return out;
}

}  // namespace

TEST(Orientation, Validation) {
  EXPECT_NO_THROW(Orientation::from_labels(kTwoTriples, {"1", "4"}));
  EXPECT_THROW(Orientation::from_labels(kTwoTriples, {"4", "4"}), InvalidInput);
  EXPECT_THROW(Orientation::from_labels(kTwoTriples, {"1"}), InvalidInput);
}

TEST(Orientation, Acyclicity) {
  // Heads 2 and 3 point into each other's edges.
  EXPECT_FALSE(is_acyclic(kTwoTriples, Orientation::from_labels(kTwoTriples, {"2", "3"})));
  EXPECT_TRUE(is_acyclic(kTwoTriples, Orientation::from_labels(kTwoTriples, {"2", "2"})));
  EXPECT_TRUE(is_acyclic(kTwoTriples, Orientation::from_labels(kTwoTriples, {"1", "4"})));
  const Hypergraph twins = on({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  EXPECT_FALSE(is_acyclic(twins, Orientation::from_labels(twins, {"a", "b"})));
  EXPECT_TRUE(is_acyclic(twins, Orientation::from_labels(twins, {"b", "b"})));
}

TEST(Orientation, TwoTriplesCounts) {
  EXPECT_EQ(orientation_count(kTwoTriples), 9);
  EXPECT_EQ(acyclic_orientations(kTwoTriples).size(), 7U);
}

TEST(Orientation, EnumerationMatchesOracle) {
  for (const Hypergraph& h : oracle::all_small_hypergraphs(4, 3)) {
    EXPECT_EQ(heads_of(acyclic_orientations(h)), oracle::acyclic_head_vectors(h)) << h.to_string();
  }
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 5, 5);
    EXPECT_EQ(heads_of(acyclic_orientations(h)), oracle::acyclic_head_vectors(h)) << h.to_string();
  }
}

TEST(Orientation, TriangleGraph) {
  const Hypergraph triangle = on({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(acyclic_orientations(triangle).size(), 6U);
}

TEST(Coloring, DecompositionRoundTrip) {
  const Coloring s({2, 0, 2}, 3);
  const auto d = s.to_decomposition(VertexSet{"a", "b", "c"});
  EXPECT_EQ(d.length(), 3U);
  EXPECT_EQ(Coloring::from_decomposition(d).colors(), s.colors());
  EXPECT_THROW(Coloring({3}, 3), InvalidInput);
}

TEST(Coloring, Compatibility) {
  const Orientation f = Orientation::from_labels(kTwoTriples, {"3", "3"});
  EXPECT_TRUE(is_compatible(kTwoTriples, f, Coloring({0, 1, 1, 0}, 2)));
  EXPECT_FALSE(is_strictly_compatible(kTwoTriples, f, Coloring({0, 1, 1, 0}, 2)));
  EXPECT_TRUE(is_strictly_compatible(kTwoTriples, f, Coloring({0, 0, 1, 0}, 2)));
}

TEST(ConstraintSystem, FromOrientation) {
  // Heads 1 and 4: 1 heads {1,2,3}, 4 heads {2,3,4}; neither head lies in
  // the other's edge, so no constraints.
  auto c = OrientationConstraintSystem::from_orientation(kTwoTriples,
                                                         Orientation::from_labels(kTwoTriples, {"1", "4"}));
  EXPECT_TRUE(c.arcs().empty());
  EXPECT_EQ(constrained_compositions(c, true).size(), 3U);
  c = OrientationConstraintSystem::from_orientation(kTwoTriples, Orientation::from_labels(kTwoTriples, {"2", "4"}));
  EXPECT_EQ(c.arcs(), (std::vector<Arc>{{"2", "4"}}));
  EXPECT_EQ(constrained_compositions(c, true).size(), 1U);
  EXPECT_EQ(constrained_compositions(c, false).size(), 2U);
}

TEST(ConstraintSystem, RejectsUnknownLabelsAndCycles) {
  const std::vector<Arc> stray{{"a", "z"}};
  EXPECT_THROW(OrientationConstraintSystem::from_arcs(VertexSet{"a"}, stray), InvalidInput);
  const std::vector<Arc> cycle{{"a", "b"}, {"b", "a"}};
  const auto c = OrientationConstraintSystem::from_arcs(VertexSet{"a", "b"}, cycle);
  EXPECT_THROW(constrained_compositions(c, true), InvalidInput);
}

TEST(Chi, TwoTriples) {
  const Polynomial chi = chi_polynomial(kTwoTriples);
  EXPECT_EQ(chi, (Polynomial{0, make_rational(-5, 6), make_rational(5, 2), make_rational(-8, 3), 1}));
  EXPECT_EQ(chi(2L), 3);
  EXPECT_EQ(chi(-1L), 7);
  EXPECT_EQ(chi_negative_polynomial(kTwoTriples),
            (Polynomial{0, make_rational(5, 6), make_rational(5, 2), make_rational(8, 3), 1}));
}

TEST(Chi, SmallCases) {
  EXPECT_EQ(chi_polynomial(on({"a", "b", "c"}, {})), Polynomial::monomial(1, 3));
  EXPECT_EQ(chi_polynomial(Hypergraph{}), Polynomial::constant(1));
  EXPECT_EQ(chi_polynomial(on({"a"}, {{"a"}})), Polynomial::monomial(1, 1));
  EXPECT_EQ(chi_polynomial(on({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})), (Polynomial{0, 2, -3, 1}));
  // A repeated edge does not change the coloring condition.
  EXPECT_EQ(chi_polynomial(on({"a", "b"}, {{"a", "b"}, {"a", "b"}})), chi_polynomial(on({"a", "b"}, {{"a", "b"}})));
}

TEST(Chi, ThreeMethodsAgreeExhaustively) {
  for (const Hypergraph& h : oracle::all_small_hypergraphs(4, 3)) {
    const Polynomial chi = chi_polynomial(h);
    for (unsigned n = 0; n <= 4; ++n) {
      const Integer want = oracle::unique_max_colorings(h, n);
      ASSERT_EQ(chi(static_cast<long>(n)), want) << h.to_string() << " n=" << n;
      ASSERT_EQ(chi_eval_definition(h, n), want) << h.to_string() << " n=" << n;
      ASSERT_EQ(chi_eval_colorings(h, n, kernels::Backend::Scalar), want) << h.to_string() << " n=" << n;
      ASSERT_EQ(chi_eval_colorings(h, n), want) << h.to_string() << " n=" << n;
    }
  }
}

TEST(Chi, DegreeAndLeadingCoefficient) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 1 + static_cast<unsigned>(rng() % 5), 4);
    const Polynomial chi = chi_polynomial(h);
    EXPECT_EQ(chi.degree(), static_cast<int>(h.vertex_count()));
    EXPECT_EQ(chi.leading_coefficient(), 1);
    EXPECT_EQ(chi.coefficient(0), 0);
  }
}

TEST(Reciprocity, PairCountsMatchOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 1 + static_cast<unsigned>(rng() % 4), 3);
    const Polynomial chi = chi_polynomial(h);
    for (unsigned n = 0; n <= 3; ++n) {
      const Integer strict = oracle::compatible_pairs(h, n, true);
      const Integer weak = oracle::compatible_pairs(h, n, false);
      EXPECT_EQ(count_compatible_pairs(h, n, true), strict);
      EXPECT_EQ(count_compatible_pairs(h, n, false), weak);
      EXPECT_EQ(chi(static_cast<long>(n)), strict) << h.to_string();
      EXPECT_EQ(chi_eval_negative(h, n), weak) << h.to_string();
    }
  }
}

TEST(Reciprocity, AcyclicOrientationsAtMinusOne) {
  for (const Hypergraph& h : oracle::all_small_hypergraphs(4, 3)) {
    EXPECT_EQ(chi_eval_negative(h, 1), Integer(acyclic_orientations(h).size())) << h.to_string();
  }
}
