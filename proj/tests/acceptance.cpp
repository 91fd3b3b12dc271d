#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schemoid/acceptance.hpp"

#include <cstdio>

using namespace schemoid;

TEST_CASE("acceptance table") {
  auto rows = acceptance_table();
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) {
    std::printf("%s  %s\n", row.pass ? "PASS" : "FAIL", row.name.c_str());
    if (!row.pass) std::printf("      %s\n", row.detail.dump().c_str());
    CHECK_MESSAGE(row.pass, row.name);
  }
}
