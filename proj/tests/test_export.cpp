#include "doctest.h"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "hermquant/export.hpp"
#include "hermquant/operators.hpp"

using namespace hermq;

TEST_CASE("parse_complex") {
  CHECK(*parse_complex("1+1i") == Complex(1, 1));
  CHECK(*parse_complex("-2.5i") == Complex(0, -2.5));
  CHECK(*parse_complex("3-i") == Complex(3, -1));
  CHECK(*parse_complex("i") == Complex(0, 1));
  CHECK(*parse_complex("1e-3+2e1i") == Complex(1e-3, 20));
  CHECK(*parse_complex("+4") == Complex(4, 0));
  for (const char* bad : {"", "1+", "1 +2i", "abc", "1++2i", "--1", "inf", "1+2j"}) {
    CHECK_FALSE(parse_complex(bad).has_value());
  }
}

TEST_CASE("format_double round trips") {
  for (double v : {0.1, -2.0, 1e-300, 123456.789, M_PI}) CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(NAN) == "nan");
}

TEST_CASE("operator CSV: real matrix, one cell per entry") {
  const auto q = build_Q(2, 10, Sector::L);
  std::ostringstream os;
  write_operator(os, q, Format::Csv);
  std::istringstream in(os.str());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::size_t cells = 1;
    for (char c : line) cells += c == ',';
    CHECK(cells == 10);
    std::istringstream ls(line);
    std::string cell;
    for (std::size_t j = 0; std::getline(ls, cell, ','); ++j) CHECK(std::stod(cell) == q.at(rows, j).real());
    ++rows;
  }
  CHECK(rows == 10);
}

TEST_CASE("operator CSV: complex matrix uses re,im pairs; JSON uses re/im objects") {
  const auto p = build_P(1, 4, Sector::L);
  std::ostringstream csv;
  write_operator(csv, p, Format::Csv);
  std::string first = csv.str().substr(0, csv.str().find('\n'));
  std::size_t cells = 1;
  for (char c : first) cells += c == ',';
  CHECK(cells == 8);

  std::ostringstream js;
  write_operator(js, p, Format::Json);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["dim"] == 4);
  CHECK(doc["entries"][0][1]["im"].get<double>() == doctest::Approx(p.at(0, 1).imag()));
  CHECK(doc["entries"][0][1]["re"].get<double>() == 0.0);
}

TEST_CASE("kernel grid matches the s = 1 closed form") {
  GridSpec g;
  g.points = 5;
  const Table t = kernel_grid(1, Complex(0.3, -0.2), g);
  REQUIRE(t.columns.back() == "closed_form");
  for (const auto& row : t.rows) {
    const Complex k = std::get<Complex>(row[2]);
    const Complex c = std::get<Complex>(row.back());
    CHECK(std::abs(k - c) < 1e-8 * std::abs(c));
  }
  std::ostringstream a, b;
  write_table(a, t, Format::Csv);
  write_table(b, kernel_grid(1, Complex(0.3, -0.2), g), Format::Csv);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, a.str().find('\n')) == "x,y,kernel_re,kernel_im,truncation_n,est_tail,closed_form_re,closed_form_im");
}

TEST_CASE("lower-symbol scan marks truncation failures") {
  GridSpec g;
  g.lo = -6;
  g.hi = 0;
  g.points = 2;
  const Table t = lower_symbol_scan(build_AH(0, 10), g);
  bool any_tail = false, any_ok = false;
  for (const auto& row : t.rows) {
    any_tail |= std::get<std::string>(row[3]) == "tail";
    any_ok |= std::get<std::string>(row[3]) == "ok";
  }
  CHECK(any_tail);
  CHECK(any_ok);
}
