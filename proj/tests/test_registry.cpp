#include "fic/registry.hpp"

#include "doctest.h"

using namespace fic;

TEST_CASE("builtin registry carries the full classification") {
  Registry reg = Registry::builtin();
  CHECK(reg.threefolds.size() == 17);

  const FanoData& P3 = reg.by_name("P3");
  CHECK(P3.index == 4);
  CHECK(P3.degree == 1);
  CHECK_FALSE(P3.genus.has_value());

  const FanoData& Q = reg.by_name("Q");
  CHECK(Q.index == 3);
  CHECK(Q.degree == 2);

  for (int d = 1; d <= 5; ++d) {
    const FanoData& Y = reg.by_name("Y" + std::to_string(d));
    CHECK(Y.index == 2);
    CHECK(Y.degree == d);
  }
  for (int g = 3; g <= 12; ++g) {
    const FanoData& X = reg.by_name("X" + std::to_string(g));
    CHECK(X.index == 1);
    CHECK(X.genus == g);
    CHECK(X.degree == 2 * g - 2);
  }
}

TEST_CASE("unknown names report the available registry") {
  Registry reg = Registry::builtin();
  CHECK(reg.has("Y3"));
  CHECK_FALSE(reg.has("Y6"));
  CHECK_THROWS_WITH_AS(reg.by_name("P2"),
                       doctest::Contains("registry has:"),
                       std::invalid_argument);
}

TEST_CASE("registry json parsing") {
  CHECK_THROWS_AS(Registry::from_json_text(R"({"schema":"other/1"})"),
                  std::invalid_argument);
  Registry one = Registry::from_json_text(
      R"({"schema":"fic-registry/1","threefolds":[{"name":"X9","index":1,"genus":9}]})");
  CHECK(one.threefolds.size() == 1);
  CHECK(one.by_name("X9").degree == 16);
  CHECK_THROWS_AS(
      Registry::from_json_text(
          R"({"schema":"fic-registry/1","threefolds":[{"name":"B","index":1,"degree":4}]})"),
      std::invalid_argument);
}

TEST_CASE("registry hash is stable") {
  Registry reg = Registry::builtin();
  std::string h = registry_hash(reg);
  CHECK(h.size() == 16);
  CHECK(h == registry_hash(Registry::builtin()));

  Registry edited = reg;
  edited.threefolds.pop_back();
  CHECK(h != registry_hash(edited));
}
