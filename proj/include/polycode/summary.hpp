#pragma once

#include <optional>
#include <string>

#include "polycode/distance.hpp"

namespace polycode {

// One row of the CLI output: [n, k, d] of C_j and what is known about its dual.
struct CodeSummary {
  std::string poly;
  int L = 0;
  int j = 0;
  int n = 0;
  int k = 0;
  Interval d;
  std::optional<Interval> d_dual;
  std::optional<bool> lcd;
  bool reversible = false;

  bool operator==(const CodeSummary& o) const {
    auto same = [](const Interval& a, const Interval& b) { return a.lower == b.lower && a.upper == b.upper; };
    if (d_dual.has_value() != o.d_dual.has_value()) return false;
    if (d_dual && !same(*d_dual, *o.d_dual)) return false;
    return poly == o.poly && L == o.L && j == o.j && n == o.n && k == o.k && same(d, o.d) && lcd == o.lcd &&
           reversible == o.reversible;
  }
};

}  // namespace polycode
