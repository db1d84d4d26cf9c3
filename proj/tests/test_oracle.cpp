#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "enumscheme/oracle.hpp"

using namespace enumscheme;

namespace {

// Ground truth for the ground truth: filter all of S_n.
BigNat filter_count(const Basis& b, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  BigNat count = 0;
  do {
    if (avoids_all(Permutation(v), b)) ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

}  // namespace

TEST_CASE("brute counts") {
  CHECK(brute_avoiders(Basis::parse("132"), 5) == 42);
  CHECK(brute_avoiders(Basis(), 4) == 24);
  CHECK(brute_avoiders(Basis::parse("1234,2143"), 4) == 22);
  CHECK(brute_sequence(Basis::parse("123"), 6) ==
        std::vector<BigNat>{1, 1, 2, 5, 14, 42, 132});
}

TEST_CASE("tree traversal equals full filtering") {
  for (const auto& text : {"132", "1342,1432", "2413,3142", "321,2341,3412,4123"}) {
    const Basis b = Basis::parse(text);
    const auto seq = brute_sequence(b, 6);
    for (int n = 0; n <= 6; ++n)
      CHECK(seq[static_cast<std::size_t>(n)] == filter_count(b, n));
  }
}

TEST_CASE("the guard cap refuses oversized requests but can be raised") {
  CHECK_THROWS_AS(brute_avoiders(Basis::parse("132"), 11), resource_limit_error);
  CHECK(brute_avoiders(Basis::parse("123,321"), 11, 11) == 0);
}

TEST_CASE("refining a basis never increases counts") {
  const Basis coarse = Basis::parse("132");
  const Basis fine = Basis::parse("132,4321");
  const auto a = brute_sequence(coarse, 7);
  const auto b = brute_sequence(fine, 7);
  for (int n = 0; n <= 7; ++n)
    CHECK(b[static_cast<std::size_t>(n)] <= a[static_cast<std::size_t>(n)]);
}

TEST_CASE("counts are symmetry invariant") {
  for (const auto& text : {"132", "1342,1432", "1234,2143"}) {
    const Basis b = Basis::parse(text);
    const auto base = brute_sequence(b, 7);
    for (auto op : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse})
      CHECK(brute_sequence(apply_symmetry(b, op), 7) == base);
  }
}

TEST_CASE("oracle comparison report") {
  auto result = build_scheme(Basis::parse("1342,1432"), 6);
  const auto& s = std::get<Scheme>(result);
  const auto report = compare_with_oracle(Basis::parse("1342,1432"), 8, s);
  CHECK(report.all_match);
  REQUIRE(report.rows.size() == 9);
  CHECK(report.rows[8].brute == 8558);
}
