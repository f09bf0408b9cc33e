// Plot-ready data files: operator matrices, kernel grids, lower-symbol scans
// and spectrum tables, as CSV or JSON.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hermquant/operators.hpp"
#include "hermquant/physics.hpp"
#include "hermquant/report.hpp"

namespace hermq {

enum class Format { Json, Csv };

using Cell = std::variant<long long, double, Complex, bool, std::string>;

/// Named columns; a complex column becomes "name_re,name_im" in CSV and
/// {"re": .., "im": ..} in JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// "a+bi" with optional signs and no spaces: "1", "-2.5i", "1+1i", "3-i", "1e-3+2e1i".
std::optional<Complex> parse_complex(const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

void write_table(std::ostream& os, const Table& t, Format f);

/// Row-major matrix.  CSV: one line per row; complex entries as adjacent
/// "re,im" cells unless every imaginary part is exactly zero, in which case
/// one real cell per entry.  JSON: metadata plus nested arrays of {"re","im"}.
void write_operator(std::ostream& os, const TruncatedOperator& op, Format f);

struct GridSpec {
  double lo = -2.0;
  double hi = 2.0;
  unsigned points = 21;  // per axis

  double at(unsigned i) const { return points == 1 ? lo : lo + (hi - lo) * i / (points - 1); }
};

/// K^e_s(z, zbar') over z' on the grid, z fixed; closed-form columns for s <= 1.
Table kernel_grid(unsigned s, Complex z, const GridSpec& g, Sector e = Sector::L);

/// <z|A|z> over z on the grid.
Table lower_symbol_scan(const TruncatedOperator& op, const GridSpec& g, double tol = 1e-14);

Table spectrum_table(const std::vector<SpectrumRow>& rows);

/// Verification report.  JSON: {"all_pass", "max_residual", "checks": [...]};
/// CSV: one line per identity.  Infinite residuals become null / "inf".
void write_report(std::ostream& os, const Report& rep, Format f);

}  // namespace hermq
