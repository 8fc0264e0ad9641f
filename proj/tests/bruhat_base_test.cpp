#include <doctest.h>

#include <algorithm>

#include "extcat/bruhat_base.hpp"
#include "test_util.hpp"

using namespace extcat;
using testutil::names;
using testutil::P;

TEST_SUITE("bruhat_base") {

TEST_CASE("bigrassmannian recognition") {
  CHECK(is_bigrassmannian(P("3,4,1,2")));
  CHECK(is_bigrassmannian(P("2,1,3")));
  CHECK_FALSE(is_bigrassmannian(P("1,2,3")));
  CHECK_FALSE(is_bigrassmannian(P("3,2,1")));
  CHECK_FALSE(is_bigrassmannian(P("4,2,3,1")));
}

TEST_CASE("base sizes are binomial(n+1, 3)") {
  const std::vector<std::size_t> expected{1, 4, 10, 20, 35, 56};
  for (int n = 2; n <= 7; ++n) CHECK(bigrassmannians(n).size() == expected[static_cast<std::size_t>(n - 2)]);
  CHECK_THROWS_AS(bigrassmannians(1), std::invalid_argument);
}

TEST_CASE("coordinates") {
  CHECK(coord_of(P("1,2,5,3,4,6,7")) == BigrassCoord{4, 3, 0});
  CHECK(coord_of(P("1,5,6,2,3,4,7")) == BigrassCoord{4, 3, 1});
  CHECK(coord_of(P("5,6,7,1,2,3,4")) == BigrassCoord{4, 3, 2});
  CHECK(coord_of(P("3,4,1,2")) == BigrassCoord{2, 2, 1});
  CHECK(coord_of(P("4,1,2,3")) == BigrassCoord{3, 1, 0});
  CHECK(element_of({2, 2, 1}, 4) == P("3,4,1,2"));
  CHECK_THROWS_AS(element_of({2, 2, 2}, 4), std::out_of_range);
  CHECK_THROWS_AS(coord_of(P("4,2,3,1")), std::invalid_argument);
}

TEST_CASE("chain 4B3 of S_7") {
  std::vector<std::string> expected{"1,2,5,3,4,6,7", "1,5,6,2,3,4,7", "5,6,7,1,2,3,4"};
  CHECK(names(chain(7, 4, 3)) == expected);
  CHECK(chain_size(7, 4, 3) == 3);
  CHECK(chain_size(7, 1, 6) == 1);
}

TEST_CASE("maximal bigrassmannians below w") {
  CHECK(names(bm(P("4,2,3,1"))) == std::vector<std::string>{"2,3,4,1", "4,1,2,3"});
  CHECK(names(bm(P("3,4,1,2"))) == std::vector<std::string>{"3,4,1,2"});
  CHECK(names(bm(P("2,4,1,3"))) == std::vector<std::string>{"1,4,2,3", "2,3,1,4"});
  CHECK(names(bm(P("3,1,4,2"))) == std::vector<std::string>{"1,3,4,2", "3,1,2,4"});
  CHECK(names(bm(P("4,3,2,1"))) == std::vector<std::string>{"2,3,4,1", "4,1,2,3", "3,4,1,2"});
  CHECK(bm(Permutation::identity(4)).empty());
  CHECK(names(bm_st(P("4,3,2,1"), {2}, {2})) == std::vector<std::string>{"3,4,1,2"});
  CHECK(bm_st(P("4,3,2,1"), {1}, {1}).empty());
}

TEST_CASE("join") {
  const std::vector<Permutation> st{P("2,1,3"), P("1,3,2")};
  // st and ts are both minimal upper bounds
  CHECK_FALSE(join(st, 3).has_value());
  const std::vector<Permutation> chain3{P("2,1,3"), P("2,3,1")};
  CHECK(join(chain3, 3) == P("2,3,1"));
  CHECK(join(std::vector<Permutation>{}, 4) == Permutation::identity(4));
  const auto top = bm(longest_element(4));
  CHECK(join(top, 4) == longest_element(4));
  CHECK_THROWS_AS(join(std::vector<Permutation>{}, 8), GuardExceeded);
}

TEST_CASE("join-irreducibles are the bigrassmannians") {
  for (int n = 2; n <= 5; ++n) CHECK(join_irreducibles(n) == bigrassmannians(n));
  CHECK_THROWS_AS(join_irreducibles(6), GuardExceeded);
}

TEST_CASE("join of BM recovers w on S_4") {
  for (const auto& w : all_permutations(4)) {
    const auto top = bm(w);
    REQUIRE(join(top, 4) == w);
  }
}

}
