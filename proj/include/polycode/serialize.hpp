#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "polycode/distance.hpp"
#include "polycode/duality.hpp"
#include "polycode/gf2poly.hpp"
#include "polycode/lcd.hpp"
#include "polycode/summary.hpp"

namespace polycode {

using json = nlohmann::json;

json to_json(const DistanceReport& r);
json to_json(const DualSummary& s);
json to_json(const LcdVerdict& v);
json to_json(const CodeSummary& s);
// {"n": n, "hex": ...}, big-endian hex with x^0 as the last bit.
json codeword_json(const Gf2Poly& w, std::size_t n);

DistanceReport distance_report_from_json(const json& j);
DualSummary dual_summary_from_json(const json& j);
LcdVerdict lcd_verdict_from_json(const json& j);
CodeSummary code_summary_from_json(const json& j);
Gf2Poly codeword_from_json(const json& j);

// "d" for exact values, "[lo,hi]" for intervals, ">=lo" when hi is the
// trivial bound n.
std::string display_interval(int lower, int upper, int n);

std::string csv_header();
std::string csv_row(const CodeSummary& s);

}  // namespace polycode
