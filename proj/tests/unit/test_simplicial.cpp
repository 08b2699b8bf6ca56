#include <catch_amalgamated.hpp>

#include <random>

#include "edgereg/error.hpp"
#include "edgereg/simplicial.hpp"
#include "oracles.hpp"

using namespace edgereg;

namespace {

SimplicialComplex make(int n, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<VertexSet> fs;
  for (auto f : facets) {
    VertexSet s;
    for (int v : f) s.insert(v - 1);
    fs.push_back(s);
  }
  return SimplicialComplex::from_facets(n, fs);
}

std::vector<std::size_t> dims(const HomologyDims& h, int top) {
  std::vector<std::size_t> out;
  for (int d = -1; d <= top; ++d) out.push_back(h.at(d));
  return out;
}

oracle::Complex to_oracle(const SimplicialComplex& c) {
  oracle::Complex out;
  out.n = static_cast<std::size_t>(c.ground_size());
  for (unsigned m = 0; m < (1U << out.n); ++m)
    if (!c.is_void() && c.contains(VertexSet(m))) out.faces.push_back(m);
  return out;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << n) - 1);
  std::vector<VertexSet> facets;
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < count; ++k) facets.emplace_back(mask(rng));
  return SimplicialComplex::from_facets(n, facets);
}

const SimplicialComplex rp2 = make(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                       {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});

}  // namespace

TEST_CASE("void and empty complexes stay distinct", "[simplicial]") {
  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::empty_complex(3);
  CHECK(v.is_void());
  CHECK(e.is_empty());
  CHECK(v != e);
  CHECK_FALSE(v.dimension().has_value());
  CHECK(e.dimension() == -1);
  CHECK(reduced_homology_dims(v, FieldSpec::rationals()).acyclic());
  CHECK(dims(reduced_homology_dims(e, FieldSpec::rationals()), 0) == std::vector<std::size_t>{1, 0});
  CHECK(SimplicialComplex::from_facets(3, {VertexSet()}).is_empty());
  CHECK(SimplicialComplex::from_facets(3, {}).is_void());
}

TEST_CASE("facets are kept as an antichain", "[simplicial]") {
  const auto c = make(4, {{1, 2}, {1}, {1, 2, 3}, {4}});
  CHECK(c.facets() == std::vector<VertexSet>{VertexSet{0, 1, 2}, VertexSet{3}});
  CHECK(c.dimension() == 2);
}

TEST_CASE("Stanley-Reisner examples", "[simplicial]") {
  CHECK(sr_complex(MonomialIdeal(2, {{1, 1}})) == make(2, {{1}, {2}}));
  CHECK(sr_complex(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).is_empty());
  CHECK(sr_complex(MonomialIdeal::unit(3)).is_void());
  CHECK(sr_complex(MonomialIdeal::zero(3)) == make(3, {{1, 2, 3}}));
  CHECK_THROWS_AS(sr_complex(MonomialIdeal(2, {{2, 0}})), InputError);
  // Maximal independent sets of C5 are its five "opposite" pairs.
  const auto c5 = sr_complex(edge_ideal(cycle_graph(5)));
  CHECK(c5.facets().size() == 5);
  for (VertexSet f : c5.facets()) CHECK(f.size() == 2);

  CHECK(sr_ideal(make(3, {{1, 2, 3}})).is_zero());
  CHECK(sr_ideal(SimplicialComplex::empty_complex(3)) == MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(sr_ideal(make(3, {{1, 2}, {1, 3}, {2, 3}})) == MonomialIdeal(3, {{1, 1, 1}}));
  CHECK_THROWS_AS(sr_ideal(SimplicialComplex::void_complex(2)), InputError);
}

TEST_CASE("Stanley-Reisner complexes by brute force and round trip", "[simplicial]") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 6;
    const MonomialIdeal j = oracle::random_squarefree(rng, n, 1 + t % 5);
    const SimplicialComplex d = sr_complex(j);
    std::set<unsigned> masks;
    for (const auto& g : j.generators()) masks.insert(static_cast<unsigned>(g.support().bits()));
    const auto expected = oracle::complex_from_nonfaces(n, masks);
    CHECK(to_oracle(d).faces == expected.faces);
    if (!d.is_void()) CHECK(sr_ideal(d) == j);
  }
}

TEST_CASE("Stanley-Reisner dictionary laws", "[simplicial]") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 150; ++t) {
    const MonomialIdeal i = oracle::random_squarefree(rng, 5, 1 + t % 4);
    const MonomialIdeal j = oracle::random_squarefree(rng, 5, 1 + (t / 4) % 4);
    const auto di = to_oracle(sr_complex(i)).faces, dj = to_oracle(sr_complex(j)).faces;
    auto subset = [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    CHECK(is_subideal(i, j) == subset(dj, di));
    std::vector<unsigned> meet, join;
    std::set_intersection(di.begin(), di.end(), dj.begin(), dj.end(), std::back_inserter(meet));
    std::set_union(di.begin(), di.end(), dj.begin(), dj.end(), std::back_inserter(join));
    CHECK(to_oracle(sr_complex(sum(i, j))).faces == meet);
    CHECK(to_oracle(sr_complex(intersection(i, j))).faces == join);
  }
}

TEST_CASE("links", "[simplicial]") {
  const auto hollow = make(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(link(hollow, VertexSet{0}) == make(3, {{2}, {3}}));
  CHECK(link(hollow, VertexSet()) == hollow);
  CHECK(link(hollow, VertexSet{0, 1}).is_empty());
  CHECK_THROWS_AS(link(hollow, VertexSet{0, 1, 2}), InputError);
  const auto sphere = make(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(link(sphere, VertexSet{0, 1}) == make(4, {{3}, {4}}));
  std::mt19937_64 rng(79);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_complex(rng, 5);
    const auto faces = to_oracle(c).faces;
    const unsigned f = faces[rng() % faces.size()];
    CHECK(to_oracle(link(c, VertexSet(f))).faces == oracle::link(to_oracle(c), f).faces);
  }
}

TEST_CASE("cones", "[simplicial]") {
  CHECK(is_cone(make(3, {{1, 2, 3}}), 1));
  CHECK_FALSE(is_cone(make(3, {{1, 2}, {1, 3}, {2, 3}}), 0));
  CHECK(is_cone(sr_complex(MonomialIdeal(3, {{1, 1, 0}})), 2));
  CHECK_THROWS_AS(is_cone(SimplicialComplex::void_complex(2), 0), InputError);
  CHECK(cone_acyclicity_check(make(3, {{1, 2, 3}}), 0, FieldSpec::rationals()));
  CHECK(cone_acyclicity_check(make(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 3, FieldSpec::prime(2)));
  CHECK(cone_acyclicity_check(sr_complex(MonomialIdeal(3, {{1, 1, 0}})), 2, FieldSpec::rationals()));
  CHECK_THROWS_AS(cone_acyclicity_check(make(3, {{1, 2}, {3}}), 0, FieldSpec::rationals()), InputError);
}

TEST_CASE("homology examples", "[simplicial]") {
  const auto hollow = make(3, {{1, 2}, {1, 3}, {2, 3}});
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)})
    CHECK(dims(reduced_homology_dims(hollow, f), 1) == std::vector<std::size_t>{0, 0, 1});
  CHECK(dims(reduced_homology_dims(rp2, FieldSpec::prime(2)), 2) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(reduced_homology_dims(rp2, FieldSpec::rationals()).acyclic());
  CHECK(reduced_homology_dims(rp2, FieldSpec::prime(3)).acyclic());
  CHECK(dims(reduced_homology_dims(make(2, {{1}, {2}}), FieldSpec::rationals()), 0) ==
        std::vector<std::size_t>{0, 1});
}

TEST_CASE("homology agrees with the dense oracle and the Euler identity", "[simplicial]") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_complex(rng, 3 + t % 4);
    for (unsigned p : {0U, 2U, 3U}) {
      const FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
      const HomologyDims h = reduced_homology_dims(c, f);
      const auto expected = oracle::homology(to_oracle(c), p);
      for (std::size_t k = 0; k < expected.size(); ++k) CHECK(h.at(static_cast<int>(k) - 1) == expected[k]);
      CHECK(euler_consistent(h, c.faces_by_size()));
    }
  }
  CHECK_FALSE(euler_consistent(HomologyDims({1}), make(2, {{1}, {2}}).faces_by_size()));
}

TEST_CASE("homology from non-faces, with and without join splitting", "[simplicial]") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 5;
    const MonomialIdeal j = oracle::random_squarefree(rng, n, 1 + t % 6);
    const SimplicialComplex d = sr_complex(j);
    if (d.is_void()) continue;
    for (unsigned p : {0U, 2U}) {
      const FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
      const HomologyDims direct = reduced_homology_dims(d, f);
      const auto nonfaces = j.supports();
      CHECK(sr_homology(VertexSet::range(static_cast<int>(n)), nonfaces, f, true) == direct);
      CHECK(sr_homology(VertexSet::range(static_cast<int>(n)), nonfaces, f, false) == direct);
    }
  }
  // Join of two 0-spheres is a circle.
  CHECK(join(HomologyDims({0, 1}), HomologyDims({0, 1})) == HomologyDims({0, 0, 1}));
  CHECK(join(HomologyDims({1}), HomologyDims({0, 2})) == HomologyDims({0, 2}));
  CHECK(join(HomologyDims(), HomologyDims({0, 1})).acyclic());
}

TEST_CASE("random cones are acyclic over every field", "[simplicial]") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 100; ++t) {
    auto c = random_complex(rng, 5);
    if (c.is_void()) continue;
    std::vector<VertexSet> facets;
    for (VertexSet f : c.facets()) facets.push_back(f | VertexSet::singleton(5));
    const auto cone = SimplicialComplex::from_facets(6, facets);
    for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)})
      CHECK(cone_acyclicity_check(cone, 5, f));
  }
}
