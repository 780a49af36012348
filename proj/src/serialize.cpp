#include "polycode/serialize.hpp"

#include <sstream>

#include "polycode/errors.hpp"

namespace polycode {

namespace {

json interval_json(const Interval& i) { return json{{"lower", i.lower}, {"upper", i.upper}}; }

Interval interval_from(const json& j) { return Interval{j.at("lower").get<int>(), j.at("upper").get<int>()}; }

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

json to_json(const DistanceReport& r) {
  return json{{"j", r.j}, {"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}, {"provenance", r.provenance}};
}

json to_json(const DualSummary& s) {
  json out{{"j", s.j}, {"n", s.n}, {"k_dual", s.k_dual}, {"provenance", s.provenance}};
  out["d_dual"] = s.d_dual ? json(*s.d_dual) : json(nullptr);
  return out;
}

json to_json(const LcdVerdict& v) {
  return json{{"j", v.j}, {"is_lcd", v.is_lcd}, {"hull_dim", v.hull_dim}, {"methods", v.methods}};
}

json to_json(const CodeSummary& s) {
  json out{{"poly", s.poly}, {"L", s.L}, {"j", s.j}, {"n", s.n}, {"k", s.k}, {"d", interval_json(s.d)},
           {"reversible", s.reversible}};
  out["d_dual"] = s.d_dual ? interval_json(*s.d_dual) : json(nullptr);
  out["lcd"] = s.lcd ? json(*s.lcd) : json(nullptr);
  return out;
}

json codeword_json(const Gf2Poly& w, std::size_t n) { return json{{"n", n}, {"hex", to_hex(w, n)}}; }

DistanceReport distance_report_from_json(const json& j) {
  return guarded("distance report", [&] {
    DistanceReport r;
    r.j = j.at("j").get<int>();
    r.lower = j.at("lower").get<int>();
    r.upper = j.at("upper").get<int>();
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    if (r.lower > r.upper) throw ValidationError("distance interval out of order");
    return r;
  });
}

DualSummary dual_summary_from_json(const json& j) {
  return guarded("dual summary", [&] {
    DualSummary s;
    s.j = j.at("j").get<int>();
    s.n = j.at("n").get<int>();
    s.k_dual = j.at("k_dual").get<int>();
    if (!j.at("d_dual").is_null()) s.d_dual = j.at("d_dual").get<int>();
    s.provenance = j.at("provenance").get<std::vector<std::string>>();
    return s;
  });
}

LcdVerdict lcd_verdict_from_json(const json& j) {
  return guarded("LCD verdict", [&] {
    LcdVerdict v;
    v.j = j.at("j").get<int>();
    v.is_lcd = j.at("is_lcd").get<bool>();
    v.hull_dim = j.at("hull_dim").get<int>();
    v.methods = j.at("methods").get<std::vector<std::string>>();
    if (v.is_lcd != (v.hull_dim == 0)) throw ValidationError("is_lcd disagrees with hull_dim");
    return v;
  });
}

CodeSummary code_summary_from_json(const json& j) {
  return guarded("code summary", [&] {
    CodeSummary s;
    s.poly = j.at("poly").get<std::string>();
    s.L = j.at("L").get<int>();
    s.j = j.at("j").get<int>();
    s.n = j.at("n").get<int>();
    s.k = j.at("k").get<int>();
    s.d = interval_from(j.at("d"));
    if (!j.at("d_dual").is_null()) s.d_dual = interval_from(j.at("d_dual"));
    if (!j.at("lcd").is_null()) s.lcd = j.at("lcd").get<bool>();
    s.reversible = j.at("reversible").get<bool>();
    return s;
  });
}

Gf2Poly codeword_from_json(const json& j) {
  return guarded("codeword", [&] {
    const auto n = j.at("n").get<std::size_t>();
    Gf2Poly w = from_hex(j.at("hex").get<std::string>());
    if (w.degree() >= static_cast<int>(n)) throw ValidationError("codeword longer than n");
    return w;
  });
}

std::string display_interval(int lower, int upper, int n) {
  if (lower == upper) return std::to_string(lower);
  if (upper == n) return ">=" + std::to_string(lower);
  return "[" + std::to_string(lower) + "," + std::to_string(upper) + "]";
}

std::string csv_header() { return "poly,L,j,n,k,d,d_dual,lcd,reversible"; }

std::string csv_row(const CodeSummary& s) {
  std::ostringstream os;
  os << s.poly << ',' << s.L << ',' << s.j << ',' << s.n << ',' << s.k << ','
     << display_interval(s.d.lower, s.d.upper, s.n) << ','
     << (s.d_dual ? display_interval(s.d_dual->lower, s.d_dual->upper, s.n) : "unknown") << ','
     << (s.lcd ? (*s.lcd ? "true" : "false") : "unknown") << ',' << (s.reversible ? "true" : "false");
  return os.str();
}

}  // namespace polycode
