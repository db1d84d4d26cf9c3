#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <thread>
#include <variant>

#include "enumscheme/oracle.hpp"
#include "enumscheme/scheme.hpp"
#include "enumscheme/scheme_io.hpp"

using namespace enumscheme;

namespace {

Scheme must_build(const std::string& basis_text, int max_depth = 6,
                  BuildMode mode = BuildMode::EsPlus) {
  auto result = build_scheme(Basis::parse(basis_text), max_depth, mode);
  REQUIRE(std::holds_alternative<Scheme>(result));
  return std::get<Scheme>(std::move(result));
}

}  // namespace

TEST_CASE("scheme for Av(1342,1432)") {
  const Scheme s = must_build("1342,1432");
  REQUIRE(s.nodes().size() == 4);
  CHECK(s.node(Permutation()).kind == NodeKind::Expand);
  CHECK(s.node(Permutation::parse("1")).kind == NodeKind::Expand);
  const auto& twelve = s.node(Permutation::parse("12"));
  const auto& twentyone = s.node(Permutation::parse("21"));
  CHECK(twelve.kind == NodeKind::Reduce);
  CHECK(twentyone.kind == NodeKind::Reduce);
  CHECK(scheme_depth(s) == 2);
  CHECK(eval_sequence(s, 8) ==
        std::vector<BigNat>{1, 1, 2, 6, 22, 90, 394, 1806, 8558});
}

TEST_CASE("scheme for the full class Av()") {
  const Scheme s = must_build("");
  REQUIRE(s.nodes().size() == 2);
  CHECK(s.node(Permutation()).kind == NodeKind::Expand);
  const auto& one = s.node(Permutation::parse("1"));
  CHECK(one.kind == NodeKind::Reduce);
  CHECK(one.r == 1);
  CHECK(one.gaps == GapIdeal::full(2));
  CHECK(scheme_depth(s) == 1);
  CHECK(eval_sequence(s, 5) == std::vector<BigNat>{1, 1, 2, 6, 24, 120});
}

TEST_CASE("degenerate basis gives the empty-class scheme") {
  const Scheme s = must_build("1");
  REQUIRE(s.nodes().size() == 1);
  CHECK(s.node(Permutation()).avoiding_children.empty());
  CHECK(eval_sequence(s, 4) == std::vector<BigNat>{1, 0, 0, 0, 0});
}

TEST_CASE("catalan counts through the Av(132) scheme") {
  const Scheme s = must_build("132");
  CHECK(eval_sequence(s, 6) == std::vector<BigNat>{1, 1, 2, 5, 14, 42, 132});
}

TEST_CASE("frontier for the separable permutations") {
  auto result = build_scheme(Basis::parse("2413,3142"), 5);
  REQUIRE(std::holds_alternative<Frontier>(result));
  const auto& f = std::get<Frontier>(result);
  CHECK(f.depth == 5);
  // contains every layered-by-one permutation of length 5
  int hits = 0;
  for_each_avoider(Basis::parse("213,312"), 5, [&](const Permutation& p) {
    if (p.size() != 5) return;
    ++hits;
    CHECK(std::find(f.irreducible.begin(), f.irreducible.end(), p) != f.irreducible.end());
  });
  CHECK(hits == 16);
}

TEST_CASE("eval matches z-set counts on scheme nodes") {
  const Scheme s = must_build("1342,1432");
  ZsetCounter z(s.basis());
  CountCache cache;
  for (const auto& [pi, node] : s.nodes())
    for (const auto& g : bounded_gap_vectors(pi.size() + 1, 5))
      CHECK(eval_count(s, pi, g, &cache) == z.count(pi, g));
}

TEST_CASE("eval of Av(1342,1432) at the root counts length-4 avoiders") {
  const Scheme s = must_build("1342,1432");
  CHECK(eval_count(s, Permutation(), GapVector({4})) == 22);
}

TEST_CASE("memoization is transparent") {
  const Scheme s = must_build("1234,2143");
  CountCache cache;
  for (int n = 0; n <= 6; ++n) {
    const GapVector g({n});
    CHECK(eval_count(s, Permutation(), g, nullptr) ==
          eval_count(s, Permutation(), g, &cache));
  }
  CHECK(cache.size() > 0);
}

TEST_CASE("eval rejects foreign permutations") {
  const Scheme s = must_build("132");
  CHECK_THROWS_AS(eval_count(s, Permutation::parse("4321"), GapVector::zeros(5)),
                  std::logic_error);
}

TEST_CASE("classic build mode") {
  // Av(132) has a classic scheme; the extension is not needed there
  const Scheme s = must_build("132", 6, BuildMode::Classic);
  CHECK(eval_sequence(s, 7) == std::vector<BigNat>{1, 1, 2, 5, 14, 42, 132, 429});
  const auto& twelve = s.node(Permutation::parse("12"));
  CHECK(twelve.kind == NodeKind::Reduce);
  CHECK(twelve.gaps == GapIdeal(3, {GapVector({0, 1, 0})}));

  // the classic test cannot reduce 12 under {1342,1432}
  auto result = build_scheme(Basis::parse("1342,1432"), 4, BuildMode::Classic);
  REQUIRE(std::holds_alternative<Frontier>(result));
}

TEST_CASE("the Av(132) evaluation collapses to the single-entry recurrence") {
  // |Z(132; 1; (g1,g2))| = sum_{i=0}^{g1} |Z(132; 1; (i, g1+g2-i-1))| for g2 >= 1
  const Scheme s = must_build("132");
  CountCache cache;
  const Permutation one = Permutation::parse("1");
  for (int g1 = 0; g1 <= 4; ++g1) {
    for (int g2 = 1; g2 <= 4; ++g2) {
      BigNat rhs = 0;
      for (int i = 0; i <= g1; ++i)
        rhs += eval_count(s, one, GapVector({i, g1 + g2 - i - 1}), &cache);
      CHECK(eval_count(s, one, GapVector({g1, g2}), &cache) == rhs);
    }
  }
}

TEST_CASE("classes passing the generating-tree criterion have schemes") {
  for (const auto& text : {"132,231", "123,3214,2143,15432", "321,2341,3412,4123"}) {
    auto result = build_scheme(Basis::parse(text), 6);
    CHECK(std::holds_alternative<Scheme>(result));
  }
}

TEST_CASE("concurrent evaluation and counting are stable") {
  const Scheme s = must_build("1342,1432");
  ZsetCounter z(s.basis());
  CountCache cache;
  const auto expected = eval_sequence(s, 10);
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&]() {
      for (int n = 0; n <= 10; ++n) {
        if (eval_count(s, Permutation(), GapVector({n}), &cache) !=
            expected[static_cast<std::size_t>(n)])
          ok = false;
        if (z.count(Permutation::parse("12"), GapVector({n, 0, 0})) !=
            z.count(Permutation::parse("12"), GapVector({n, 0, 0})))
          ok = false;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok);
}

TEST_CASE("verify accepts built schemes and flags corruption") {
  const Scheme s = must_build("1342,1432");
  ZsetCounter z(s.basis());
  CHECK(verify_scheme(s, z).ok());

  SECTION("corrupted gap basis") {
    auto nodes = s.nodes();
    nodes[Permutation::parse("12")].gaps = GapIdeal(3, {GapVector({0, 1, 0})});
    const VerifyReport report = verify_scheme(Scheme(s.basis(), std::move(nodes)), z);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().where == Permutation::parse("12"));
  }

  SECTION("missing node breaks closure") {
    auto nodes = s.nodes();
    nodes.erase(Permutation::parse("21"));
    const VerifyReport report = verify_scheme(Scheme(s.basis(), std::move(nodes)), z);
    CHECK_FALSE(report.ok());
  }

  SECTION("wrong child list") {
    auto nodes = s.nodes();
    nodes[Permutation::parse("1")].avoiding_children.pop_back();
    CHECK_FALSE(verify_scheme(Scheme(s.basis(), std::move(nodes)), z).ok());
  }

  SECTION("irreducible entry poses as a reduce node") {
    ZsetCounter zsep(Basis::parse("2413,3142"));
    std::map<Permutation, SchemeNode> nodes;
    SchemeNode root{Permutation(), NodeKind::Expand, {{1, Permutation::parse("1")}}, 0, {}};
    SchemeNode one{Permutation::parse("1"), NodeKind::Reduce, {}, 1, GapIdeal::full(2)};
    nodes.emplace(root.perm, root);
    nodes.emplace(one.perm, one);
    const VerifyReport report = verify_scheme(Scheme(zsep.basis(), std::move(nodes)), zsep);
    CHECK_FALSE(report.ok());
  }
}

TEST_CASE("a hand-transcribed scheme verifies without re-searching") {
  // Same class as the built Av(1342,1432) scheme but with both length-2
  // nodes reducing at position 2, as a stored file might record it.
  const auto doc = nlohmann::json::parse(R"({
    "basis": [[1,3,4,2],[1,4,3,2]],
    "nodes": [
      {"perm": [], "kind": "expand", "children": [[1]]},
      {"perm": [1], "kind": "expand", "children": [[2,1],[1,2]]},
      {"perm": [1,2], "kind": "reduce", "r": 2, "gap_basis": [[0,2,0]]},
      {"perm": [2,1], "kind": "reduce", "r": 2, "gap_basis": []}
    ]
  })");
  const Scheme s = scheme_from_json(doc);
  CHECK(verify_scheme(s).ok());
  CHECK(eval_sequence(s, 7) == std::vector<BigNat>{1, 1, 2, 6, 22, 90, 394, 1806});
}

TEST_CASE("json round trip") {
  for (const auto& text : {"1234", "1342,1432", ""}) {
    const Scheme s = must_build(text);
    const auto doc = scheme_to_json(s);
    const Scheme back = scheme_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back == s);
    CHECK(scheme_to_json_text(back) == scheme_to_json_text(s));
  }
}

TEST_CASE("json shape") {
  const Scheme s = must_build("");
  const auto doc = scheme_to_json(s);
  CHECK(doc["basis"].empty());
  REQUIRE(doc["nodes"].size() == 2);
  CHECK(doc["nodes"][0]["perm"].empty());
  CHECK(doc["nodes"][0]["kind"] == "expand");
  CHECK(doc["nodes"][1]["kind"] == "reduce");
  CHECK(doc["nodes"][1]["r"] == 1);
}

TEST_CASE("json nodes are ordered by length then lexicographically") {
  const Scheme s = must_build("1234,2143");
  const auto doc = scheme_to_json(s);
  std::vector<std::vector<int>> perms;
  for (const auto& jn : doc["nodes"]) perms.push_back(jn["perm"].get<std::vector<int>>());
  for (std::size_t i = 1; i < perms.size(); ++i) {
    const bool ordered = perms[i - 1].size() != perms[i].size()
                             ? perms[i - 1].size() < perms[i].size()
                             : perms[i - 1] < perms[i];
    CHECK(ordered);
  }
}

TEST_CASE("dot output follows the figure conventions") {
  const Scheme s = must_build("1342,1432");
  const std::string dot = scheme_to_dot(s);
  const bool d1 = dot.find("\"12\" -> \"1\" [style=dashed, label=\"d_1\"]") != std::string::npos;
  const bool d2 = dot.find("\"12\" -> \"1\" [style=dashed, label=\"d_2\"]") != std::string::npos;
  CHECK((d1 || d2));
  CHECK(dot.find("\"1\" -> \"12\";") != std::string::npos);
  CHECK(dot.find("(0,2,0)") != std::string::npos);
  CHECK(dot.find("∅") != std::string::npos);
}

TEST_CASE("malformed scheme json is rejected") {
  CHECK_THROWS_AS(scheme_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(
      scheme_from_json(nlohmann::json::parse(
          R"({"basis": [], "nodes": [{"perm": [], "kind": "weird"}]})")),
      std::invalid_argument);
}
