#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polycode/enumerate.hpp"

namespace polycode {

struct FixtureCheck {
  std::string item;
  std::string expected;
  std::string actual;
  bool pass() const { return expected == actual; }
};

struct FixtureReport {
  std::string name;
  std::vector<FixtureCheck> checks;
  bool passed() const;
  int failures() const;
};

struct FixtureOptions {
  std::size_t oracle_cap = kDefaultEnumerationCap;
  unsigned workers = 0;
};

// table1 table3 table4 table5 table6 table7 ex1 .. ex6
const std::vector<std::string>& fixture_names();

// Recomputes every value of the named fixture and pairs it with the embedded
// expectation. Unknown names raise ValidationError.
FixtureReport run_fixture(const std::string& name, const FixtureOptions& opts = {});

// Embedded expectations as CSV (fixture,item,expected).
std::string fixtures_csv();

}  // namespace polycode
