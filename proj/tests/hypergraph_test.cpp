#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hopfhg/errors.hpp"
#include "hopfhg/hypergraph.hpp"
#include "hopfhg/invariant.hpp"
#include "oracles.hpp"

using namespace hopfhg;

namespace {

const Hypergraph kTwoTriples = Hypergraph::from_labels({"1", "2", "3", "4"}, {{"1", "2", "3"}, {"2", "3", "4"}});

Hypergraph on(std::vector<Label> vs, std::vector<std::vector<Label>> edges) {
  return Hypergraph::from_labels(std::move(vs), edges);
}

std::map<Label, Label> random_bijection(std::mt19937_64& rng, const VertexSet& vs) {
  std::vector<Label> targets;
  for (const auto& l : vs) targets.push_back("x" + l);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::map<Label, Label> sigma;
  for (std::size_t i = 0; i < vs.size(); ++i) sigma[vs[i]] = targets[i];
  return sigma;
}

VertexSet image(const VertexSet& s, const std::map<Label, Label>& sigma) {
  std::vector<Label> out;
  for (const auto& l : s) out.push_back(sigma.at(l));
  return VertexSet(out);
}

}  // namespace

TEST(Hypergraph, ConstructionErrors) {
  EXPECT_THROW(on({"a", "b"}, {{}}), InvalidInput);
  EXPECT_THROW(on({"a", "b"}, {{"c"}}), InvalidInput);
  EXPECT_THROW(on({"a", "a"}, {}), InvalidInput);
  EXPECT_THROW(on({"a", "b"}, {{"a", "a"}}), InvalidInput);
  try {
    on({"a", "b"}, {{"a"}, {"b", "z"}});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("'z'"), std::string::npos);
  }
}

TEST(Hypergraph, EqualityIgnoresEdgeOrder) {
  EXPECT_EQ(on({"a", "b"}, {{"a", "b"}, {"a"}}), on({"a", "b"}, {{"a"}, {"b", "a"}}));
  EXPECT_NE(on({"a", "b"}, {{"a"}, {"a"}}), on({"a", "b"}, {{"a"}}));
  EXPECT_EQ(kTwoTriples.to_string(), "{{1,2,3},{2,3,4}} on {1,2,3,4}");
}

TEST(Hypergraph, Restriction) {
  EXPECT_EQ(restriction(kTwoTriples, VertexSet{"2", "3", "4"}), on({"2", "3", "4"}, {{"2", "3", "4"}}));
  EXPECT_EQ(restriction(kTwoTriples, kTwoTriples.vertices()), kTwoTriples);
  EXPECT_THROW(restriction(kTwoTriples, VertexSet{"9"}), InvalidInput);
}

TEST(Hypergraph, Contraction) {
  EXPECT_EQ(contraction(kTwoTriples, VertexSet{"1"}), on({"2", "3", "4"}, {{"2", "3"}, {"2", "3", "4"}}));
  EXPECT_EQ(contraction(kTwoTriples, VertexSet{}), kTwoTriples);
  EXPECT_EQ(contraction(on({"a", "b"}, {{"a", "b"}, {"a", "b"}}), VertexSet{"a"}), on({"b"}, {{"b"}, {"b"}}));
}

TEST(Hypergraph, Product) {
  EXPECT_EQ(product(on({"a", "b"}, {{"a", "b"}}), on({"c", "d"}, {{"c"}})),
            on({"a", "b", "c", "d"}, {{"a", "b"}, {"c"}}));
  EXPECT_EQ(product(kTwoTriples, Hypergraph{}), kTwoTriples);
  EXPECT_THROW(product(on({"a"}, {{"a"}}), on({"a"}, {{"a"}})), InvalidInput);
}

TEST(Hypergraph, IteratedCoproduct) {
  const auto parts = iterated_coproduct(kTwoTriples, SetDecomposition::from_labels(kTwoTriples.vertices(),
                                                                                     {{"1"}, {"2", "3"}, {"4"}}));
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], on({"1"}, {}));
  EXPECT_EQ(parts[1], on({"2", "3"}, {{"2", "3"}}));
  // {2,3} lies inside the middle block, so only {2,3,4} reaches the last one.
  EXPECT_EQ(parts[2], on({"4"}, {{"4"}}));
  const auto whole = iterated_coproduct(kTwoTriples, SetDecomposition(kTwoTriples.vertices(), {0b1111}));
  ASSERT_EQ(whole.size(), 1U);
  EXPECT_EQ(whole[0], kTwoTriples);
}

TEST(Hypergraph, IsDiscrete) {
  EXPECT_TRUE(is_discrete(on({"a", "b", "c"}, {})));
  EXPECT_TRUE(is_discrete(on({"a", "b"}, {{"a"}, {"b"}, {"a"}})));
  EXPECT_FALSE(is_discrete(on({"a", "b"}, {{"a", "b"}})));
}

TEST(Hypergraph, Relabel) {
  std::map<Label, Label> shift{{"1", "11"}, {"2", "12"}, {"3", "13"}, {"4", "14"}};
  EXPECT_EQ(relabel(kTwoTriples, shift), on({"11", "12", "13", "14"}, {{"11", "12", "13"}, {"12", "13", "14"}}));
  EXPECT_EQ(relabel(on({"a", "b"}, {{"a", "b"}}), {{"a", "b"}, {"b", "a"}}), on({"a", "b"}, {{"a", "b"}}));
  EXPECT_THROW(relabel(kTwoTriples, {{"1", "x"}}), InvalidInput);
  EXPECT_THROW(relabel(on({"a", "b"}, {}), {{"a", "x"}, {"b", "x"}}), InvalidInput);
}

TEST(HopfLaws, CoAssociativity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned m = static_cast<unsigned>(rng() % 6);
    const Hypergraph h = oracle::random_hypergraph(rng, m, 4);
    // Random (S1, S2, S3), empty blocks allowed.
    std::vector<VertexMask> b(3, 0);
    for (unsigned v = 0; v < m; ++v) b[rng() % 3] |= VertexMask{1} << v;
    const VertexSet& vs = h.vertices();
    const auto flat = iterated_coproduct(h, SetDecomposition(vs, b));

    const auto left = iterated_coproduct(h, SetDecomposition(vs, {b[0] | b[1], b[2]}));
    const VertexSet& v01 = left[0].vertices();
    const auto left_inner = iterated_coproduct(
        left[0], SetDecomposition(v01, {v01.mask_of(vs.subset(b[0])), v01.mask_of(vs.subset(b[1]))}));
    EXPECT_EQ(flat[0], left_inner[0]);
    EXPECT_EQ(flat[1], left_inner[1]);
    EXPECT_EQ(flat[2], left[1]);

    const auto right = iterated_coproduct(h, SetDecomposition(vs, {b[0], b[1] | b[2]}));
    const VertexSet& v12 = right[1].vertices();
    const auto right_inner = iterated_coproduct(
        right[1], SetDecomposition(v12, {v12.mask_of(vs.subset(b[1])), v12.mask_of(vs.subset(b[2]))}));
    EXPECT_EQ(flat[0], right[0]);
    EXPECT_EQ(flat[1], right_inner[0]);
    EXPECT_EQ(flat[2], right_inner[1]);
  }
}

TEST(HopfLaws, Compatibility) {
  // Delta_{S',T'}(H1 H2) = (H1|_{A∩S'} H2|_{B∩S'}, H1/_{A∩S'} H2/_{B∩S'}).
  for (const Hypergraph& h : oracle::all_small_hypergraphs(4, 2)) {
    const VertexMask full = h.vertices().full_mask();
    for (VertexMask a = 0; a <= full; ++a) {
      if ((a & ~full) != 0) continue;
      const VertexMask bm = full & ~a;
      const Hypergraph h1 = restriction(h, a);
      const Hypergraph h2 = restriction(contraction(h, a), compress_mask(bm, bm));
      const Hypergraph joined = product(h1, h2);
      for (VertexMask s = 0; s <= full; ++s) {
        if ((s & ~full) != 0) continue;
        const auto split = iterated_coproduct(joined, SetDecomposition(joined.vertices(), {s, full & ~s}));
        const VertexMask s1 = compress_mask(s & a, a);
        const VertexMask s2 = compress_mask(s & bm, bm);
        EXPECT_EQ(split[0], product(restriction(h1, s1), restriction(h2, s2)));
        EXPECT_EQ(split[1], product(contraction(h1, s1), contraction(h2, s2)));
      }
    }
  }
}

TEST(HopfLaws, NaturalityUnderRelabel) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned m = static_cast<unsigned>(rng() % 5);
    const Hypergraph h = oracle::random_hypergraph(rng, m, 4);
    const auto sigma = random_bijection(rng, h.vertices());
    const Hypergraph g = relabel(h, sigma);
    const VertexSet s = h.vertices().subset(rng() & h.vertices().full_mask());
    EXPECT_EQ(relabel(restriction(h, s), sigma), restriction(g, image(s, sigma)));
    EXPECT_EQ(relabel(contraction(h, s), sigma), contraction(g, image(s, sigma)));
    EXPECT_EQ(is_discrete(h), is_discrete(g));
    EXPECT_EQ(chi_polynomial(h), chi_polynomial(g));
  }
}

TEST(HopfLaws, MultisetSemantics) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 5, 5);
    const VertexMask s = rng() & h.vertices().full_mask();
    EXPECT_EQ(restriction(h, s).edge_count() + contraction(h, s).edge_count(), h.edge_count());
  }
}

TEST(Antipode, Examples) {
  const Hypergraph a = on({"a"}, {{"a"}});
  FormalSum want_a(a.vertices());
  want_a.add(a, -1);
  EXPECT_EQ(antipode_takeuchi(a), want_a);

  const Hypergraph ab = on({"a", "b"}, {{"a", "b"}});
  FormalSum want_ab(ab.vertices());
  want_ab.add(ab, -1);
  want_ab.add(on({"a", "b"}, {{"a"}}), 1);
  want_ab.add(on({"a", "b"}, {{"b"}}), 1);
  EXPECT_EQ(antipode_takeuchi(ab), want_ab);

  const Hypergraph edgeless = on({"a", "b"}, {});
  FormalSum want_e(edgeless.vertices());
  want_e.add(edgeless, 1);
  EXPECT_EQ(antipode_takeuchi(edgeless), want_e);

  EXPECT_EQ(chi_on_formal_sum(antipode_takeuchi(ab)), (Polynomial{0, 1, 1}));
  EXPECT_TRUE(chi_on_formal_sum(FormalSum(ab.vertices())).is_zero());
  FormalSum single(kTwoTriples.vertices());
  single.add(kTwoTriples, 1);
  EXPECT_EQ(chi_on_formal_sum(single), chi_polynomial(kTwoTriples));
}

TEST(Antipode, AnnihilatesNonUnits) {
  // Sum over S of mu(S(H|_S) ⊗ H/_S) vanishes for nonempty I.
  for (const Hypergraph& h : oracle::all_small_hypergraphs(3, 3)) {
    if (h.vertex_count() == 0) continue;
    const VertexMask full = h.vertices().full_mask();
    FormalSum total(h.vertices());
    for (VertexMask s = 0; s <= full; ++s) {
      const Hypergraph quotient = contraction(h, s);
      const FormalSum left = antipode_takeuchi(restriction(h, s));
      for (const auto& [term, c] : left.terms()) total.add(product(term, quotient), c);
    }
    EXPECT_TRUE(total.is_zero()) << h.to_string();
  }
}

TEST(Antipode, EvaluatesChiAtNegativeArguments) {
  for (const Hypergraph& h : oracle::all_small_hypergraphs(3, 3)) {
    EXPECT_EQ(chi_on_formal_sum(antipode_takeuchi(h)), chi_polynomial(h).reflected()) << h.to_string();
  }
}

TEST(FormalSum, RejectsForeignTerms) {
  FormalSum f(VertexSet{"a"});
  EXPECT_THROW(f.add(on({"b"}, {}), 1), InvalidInput);
  f.add(on({"a"}, {}), 2);
  f.add(on({"a"}, {}), -2);
  EXPECT_TRUE(f.is_zero());
}
