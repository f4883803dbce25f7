#include "hublat/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace hublat {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& columns)
    : os_(os), n_cols_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("csv needs at least one column");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os_ << ',';
    os_ << columns[i];
  }
  os_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != n_cols_)
    throw std::invalid_argument("csv row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os_ << ',';
    os_ << format_g17(values[i]);
  }
  os_ << '\n';
}

}  // namespace hublat
