#pragma once

#include <string>
#include <vector>

#include "polycode/codes.hpp"
#include "polycode/summary.hpp"

namespace polycode {

struct LcdVerdict {
  int j = 0;
  bool is_lcd = false;
  int hull_dim = 0;
  std::vector<std::string> methods;  // methods that reached this verdict
};

namespace tag {
inline constexpr const char* kLcdOracle = "oracle";
inline constexpr const char* kLcdLowIndex = "low-index-criterion";
inline constexpr const char* kLcdHighIndex = "high-index-criterion";
inline constexpr const char* kLcdFamily = "family";
}  // namespace tag

// Hull dimension k - rank(G G^T), cross-checked against n - rank of the
// stacked code and dual bases.
LcdVerdict is_lcd_oracle(const PolycyclicCode& code);

// For 1 <= j <= 2^(T-1): the map delta -> top mj coefficients of
// (x^e+1)^(2^T-2j) (U U*)^j delta mod x^n is injective.
bool is_lcd_low_index(const PolycyclicCode& code);

// Same criterion decided by sweeping every nonzero delta (mj <= 20).
bool is_lcd_low_index_sweep(const PolycyclicCode& code);

enum class Decision { Lcd, NotLcd, Inconclusive };

// For 2^(T-1) < j <= L-1: no (gamma, delta), both nonzero, with
// P^(2j-2^T) gamma = U^(2^T-j) U*^j delta mod x^n.
Decision is_lcd_high_index(const PolycyclicCode& code);

enum class LcdMethods { All, Oracle, Theorem };

// Runs the selected methods and requires them to agree (ConsistencyError otherwise).
LcdVerdict lcd_verdict(const PolycyclicCode& code, LcdMethods methods = LcdMethods::All);

// Known trinomial LCD families; each builds the code over
// (x^(2*3^v)+x^(3^v)+1)^(2^T) and throws ConsistencyError unless the oracle
// finds it LCD.
LcdVerdict lcd_family_power_of_two(int v, int T, int r);  // j = 2^r, 0 <= r <= T-1
LcdVerdict lcd_family_complement(int v, int T, int r);    // j = 2^T - 2^(T-r), 2 <= r <= T
LcdVerdict lcd_family_three(int v, int T);                // j = 3, T >= 3

// True when (v, T, j) belongs to one of the families above.
bool in_lcd_family(int T, int j);

struct ConjectureRow {
  int v = 0;
  int T = 0;
  int j = 0;
  int n = 0;
  int k = 0;
  bool is_lcd = false;
  int hull_dim = 0;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;  // sorted by (v, T, j)
  int counterexamples = 0;
  int skipped = 0;  // instances with n above dim_cap
  int vmax = 0;
  int tmax = 0;
};

// Oracle verdicts for all 1 <= j <= 2^T - 1, v <= vmax, T <= tmax with n <= dim_cap.
ConjectureReport conjecture_scan(int vmax, int tmax, int dim_cap, unsigned workers = 0);

std::string conjecture_csv(const ConjectureReport& report);

enum class FamilyKind {
  PowerOfTwo,  // C_{2^r}, 0 <= r <= T-1
  Complement,  // C_{2^T - 2^(T-r)}, 2 <= r <= T
  FirstIdeal,  // C_1 with the closed-form dual distance
};

// Closed-form parameters, cross-validated against the constructed code and dual.
CodeSummary family_parameters(int v, int T, int r, FamilyKind which);

}  // namespace polycode
