#include "hermquant/export.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "json.hpp"

#include "hermquant/basis.hpp"
#include "hermquant/quantize.hpp"

namespace hermq {

namespace {

using json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json complex_json(Complex z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return complex_json(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return number(v);
        } else {
          return v;
        }
      },
      c);
}

std::string cell_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Complex>) {
          return format_double(v.real()) + "," + format_double(v.imag());
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return csv_escape(v);
        }
      },
      c);
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
  // Whole-string real number; "+"/"-"/"" stand for a unit coefficient.
  auto real = [](std::string t, bool unit_ok) -> std::optional<double> {
    if (unit_ok && (t.empty() || t == "+" || t == "-")) return t == "-" ? -1.0 : 1.0;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || t[0] == '+') return std::nullopt;
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto v = real(text, false);
    return v ? std::optional<Complex>(Complex(*v, 0.0)) : std::nullopt;
  }
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    const auto im = real(body, true);
    return im ? std::optional<Complex>(Complex(0.0, *im)) : std::nullopt;
  }
  const auto re = real(body.substr(0, split), false);
  const auto im = real(body.substr(split), true);
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Json) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i) obj[t.columns[i]] = cell_json(r[i]);
      rows.push_back(std::move(obj));
    }
    os << json{{"columns", t.columns}, {"rows", rows}}.dump(2) << "\n";
    return;
  }
  // Header: complex columns are split, detected from the first row.
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ",";
    const bool cplx = !t.rows.empty() && std::holds_alternative<Complex>(t.rows.front()[i]);
    os << (cplx ? csv_escape(t.columns[i] + "_re") + "," + csv_escape(t.columns[i] + "_im") : csv_escape(t.columns[i]));
  }
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ",";
      os << cell_csv(r[i]);
    }
    os << "\n";
  }
}

void write_operator(std::ostream& os, const TruncatedOperator& op, Format f) {
  const std::size_t n = op.dim();
  if (f == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(complex_json(op.at(i, j)));
      rows.push_back(std::move(row));
    }
    json doc{{"name", op.name},
             {"s", op.s},
             {"epsilon", sector_name(op.epsilon)},
             {"dim", n},
             {"band_low", op.band_low()},
             {"band_high", op.band_high()},
             {"entries", rows}};
    os << doc.dump(2) << "\n";
    return;
  }
  bool real = true;
  for (const auto& [k, d] : op.values.diagonals()) {
    for (const auto& v : d) real = real && v.imag() == 0.0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ",";
      const Complex v = op.at(i, j);
      os << (real ? format_double(v.real()) : format_double(v.real()) + "," + format_double(v.imag()));
    }
    os << "\n";
  }
}

Table kernel_grid(unsigned s, Complex z, const GridSpec& g, Sector e) {
  Table t;
  t.columns = {"x", "y", "kernel", "truncation_n", "est_tail"};
  const bool closed = s <= 1 && e == Sector::L;
  if (closed) t.columns.push_back("closed_form");
  for (unsigned i = 0; i < g.points; ++i) {
    for (unsigned j = 0; j < g.points; ++j) {
      const Complex zp(g.at(i), g.at(j));
      const KernelValue k = kernel(s, z, zp, e);
      std::vector<Cell> row{zp.real(), zp.imag(), k.value, static_cast<long long>(k.truncation_n), k.est_tail};
      if (closed) row.emplace_back(s == 0 ? kernel_closed_s0(z, zp) : kernel_closed_s1(z, zp));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table lower_symbol_scan(const TruncatedOperator& op, const GridSpec& g, double tol) {
  Table t;
  t.columns = {"x", "y", "lower_symbol", "status"};
  for (unsigned i = 0; i < g.points; ++i) {
    for (unsigned j = 0; j < g.points; ++j) {
      const Complex z(g.at(i), g.at(j));
      try {
        t.rows.push_back({z.real(), z.imag(), lower_symbol(op, z, op.s, op.epsilon, tol), std::string("ok")});
      } catch (const TailError&) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        t.rows.push_back({z.real(), z.imag(), Complex(nan, nan), std::string("tail")});
      }
    }
  }
  return t;
}

Table spectrum_table(const std::vector<SpectrumRow>& rows) {
  Table t;
  t.columns = {"s",
               "A_H_ground",
               "H_hat_ground",
               "A_H_first_gap",
               "H_hat_first_gap",
               "H_hat_upper_gap",
               "ground_shift",
               "zero_point_cs",
               "zero_point_canonical",
               "constant_shift",
               "equivalent",
               "infimum_Aq2"};
  for (const auto& r : rows) {
    t.rows.push_back({static_cast<long long>(r.s), r.ah_ground, r.hhat_ground, r.ah_first_gap, r.hhat_first_gap,
                      r.hhat_upper_gap, r.ground_shift, r.zero_point_cs, r.zero_point_canonical, r.constant_shift,
                      r.equivalent, r.infimum});
  }
  return t;
}

void write_report(std::ostream& os, const Report& rep, Format f) {
  Table t;
  t.columns = {"suite", "identity", "relation", "max_residual", "tolerance", "pass", "witness"};
  for (const auto& c : rep.checks) {
    t.rows.push_back({c.suite, c.identity, c.relation, c.max_residual, c.tolerance, c.pass, c.witness});
  }
  if (f == Format::Csv) {
    write_table(os, t, f);
    return;
  }
  json checks = json::array();
  for (const auto& r : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(r[i]);
    checks.push_back(std::move(obj));
  }
  json doc{{"all_pass", rep.all_pass()}, {"max_residual", number(rep.max_residual())}, {"checks", checks}};
  os << doc.dump(2) << "\n";
}

}  // namespace hermq
