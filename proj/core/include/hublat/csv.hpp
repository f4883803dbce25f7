#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hublat {

/// Shortest round-trip decimal form at 17 significant digits.
std::string format_g17(double x);

/// Minimal CSV emitter with a fixed numeric format so identical data
/// yields byte-identical files.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& columns);
  void row(std::span<const double> values);

 private:
  std::ostream& os_;
  std::size_t n_cols_;
};

}  // namespace hublat
