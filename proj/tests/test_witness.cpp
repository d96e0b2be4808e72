#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "relflow/witness.hpp"
#include "relflow/subnet.hpp"

using namespace relflow;

namespace {

std::set<PageId> witness_set(const WitnessList& l) {
  std::set<PageId> out;
  for (const auto& e : l.entries) out.insert(e.witness);
  return out;
}

}  // namespace

TEST_CASE("seek witnesses on the toy network") {
  Subnetwork net = relflow::testing::toy7_subnetwork();
  CHECK(make_seek_witness_list(net, 3, 0, 1).entries ==
        std::vector<WitnessEntry>{{3, 1, 2}, {6, 2, 2}, {4, 2, 3}});
  CHECK(make_seek_witness_list(net, 3, 0, 2).entries ==
        std::vector<WitnessEntry>{{5, 1, 1}, {3, 1, 2}, {6, 1, 2}, {4, 2, 3}});
}

TEST_CASE("fact witnesses on the toy network") {
  Subnetwork net = relflow::testing::toy7_subnetwork();
  CHECK(make_fact_witness_list(net, 3, 5, 6).entries == std::vector<WitnessEntry>{{2, 1, 1}, {0, 1, 2}});
  CHECK(make_fact_witness_list(net, 3, 0, 1).entries.empty());
  CHECK(make_fact_witness_list(net, 3, 2, 5).entries == std::vector<WitnessEntry>{{0, 1, 1}});
  CHECK(make_fact_witness_list(net, 3, 2, 5).kind == WitnessKind::fact);
}

TEST_CASE("disjoint components have no witnesses") {
  KeywordIndex kw;
  kw["w"] = KeywordEntry{{0, 1, 2, 3}, 1.0};
  WebGraph web(relflow::testing::numbered_urls(4), Digraph(4, {{0, 1}, {2, 3}}), kw);
  Subnetwork net = build_subnetwork(web, "w");
  CHECK(make_seek_witness_list(net, 3, 0, 2).entries.empty());
}

TEST_CASE("argument errors") {
  Subnetwork net = relflow::testing::toy7_subnetwork();
  CHECK_THROWS_AS(make_seek_witness_list(net, 3, 1, 1), DomainError);
  CHECK_THROWS_AS(make_seek_witness_list(net, 0, 0, 1), DomainError);
  CHECK_THROWS_AS(make_seek_witness_list(net, 3, 0, 42), DomainError);
}

TEST_CASE("depth limits the search") {
  Subnetwork net = relflow::testing::toy7_subnetwork();
  // From 0 at depth 1 only 2 and 5 are reached; 1 reaches 3.
  CHECK(make_seek_witness_list(net, 1, 0, 1).entries.empty());
  CHECK(make_seek_witness_list(net, 2, 0, 1).entries == std::vector<WitnessEntry>{{3, 1, 2}, {6, 2, 2}});
}

TEST_CASE("random graphs: symmetry, reachability, order, depth monotonicity") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + rng() % 49;
    WebGraph web = relflow::testing::random_web(rng, n, 0.08);
    Subnetwork net = build_subnetwork(web, "all");
    PageId u = rng() % n, v = (u + 1 + rng() % (n - 1)) % n;
    int d = 1 + rng() % 4;
    for (bool fact : {false, true}) {
      auto make = fact ? make_fact_witness_list : make_seek_witness_list;
      WitnessList uv = make(net, d, u, v);
      WitnessList vu = make(net, d, v, u);
      CHECK(uv.entries == vu.entries);

      auto hu = relflow::testing::reference_hops(n, web.links().edges(), u, fact);
      auto hv = relflow::testing::reference_hops(n, web.links().edges(), v, fact);
      std::set<PageId> expected;
      for (PageId x = 0; x < n; ++x) {
        if (x != u && x != v && hu[x] >= 0 && hu[x] <= d && hv[x] >= 0 && hv[x] <= d) expected.insert(x);
      }
      CHECK(witness_set(uv) == expected);
      for (const auto& e : uv.entries) {
        CHECK(e.min_hop == std::min(hu[e.witness], hv[e.witness]));
        CHECK(e.max_hop == std::max(hu[e.witness], hv[e.witness]));
        CHECK(e.min_hop <= d);
      }
      CHECK(std::is_sorted(uv.entries.begin(), uv.entries.end(), [](const WitnessEntry& a, const WitnessEntry& b) {
        return std::tie(a.min_hop, a.max_hop, a.witness) < std::tie(b.min_hop, b.max_hop, b.witness);
      }));

      auto deeper = witness_set(make(net, d + 1, u, v));
      auto shallow = witness_set(uv);
      CHECK(std::includes(deeper.begin(), deeper.end(), shallow.begin(), shallow.end()));
    }
  }
}

TEST_CASE("dump format") {
  Subnetwork net = relflow::testing::toy7_subnetwork();
  CHECK(dump_witnesses(make_fact_witness_list(net, 3, 5, 6)) == "2\t1\t1\n0\t1\t2\n");
}
