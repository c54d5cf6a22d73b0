#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "multiswap/estimation.hpp"

namespace multiswap {

// Average samples per pair for N runs over n inputs. Both schemes pad to a
// power of two, so the formulas use padded_n and the ratio grows stepwise.
//   m1 = 2N / (n (n-1))   one tested pair per run
//   m2 = N / (n-1)        n/2 tested pairs per run
struct PrecisionModel {
  std::size_t requested_n = 0;
  std::size_t n = 0;  // padded
  std::uint64_t shots = 0;
  double m1 = 0.0;
  double m2 = 0.0;
  double ratio = 0.0;
};

// Throws ConfigError for n < 2 or shots == 0.
PrecisionModel precision(std::size_t n, std::uint64_t shots);

struct ResourceRow {
  std::size_t n = 0;
  std::size_t k = 0;

  std::size_t new_cswap = 0;  // (k-1) 2^(k-1)
  std::size_t new_ancilla = 0;  // 2(k-1)
  std::size_t san_cswap = 0;  // 3(2^(k-1) - 1)
  std::size_t san_ancilla = 0;  // 3(k-1)

  // From constructed circuits (w = 1) when n is within the build limit.
  std::optional<std::size_t> new_cswap_measured;
  std::optional<std::size_t> new_ancilla_measured;
  std::optional<std::size_t> new_cswap_with_tests_measured;
  std::optional<std::size_t> san_cswap_measured;
  std::optional<std::size_t> san_ancilla_measured;

  // Closed forms as printed in the complexity analysis.
  std::size_t printed_new_cswap = 0;             // n k
  double printed_new_cswap_with_tests = 0.0;     // n (k + 1/2)
  std::size_t printed_san_cswap = 0;             // 3(n-1)
  std::size_t printed_new_ancilla = 0;           // d(2^k) = d(2^(k-1)) + 2, d(4) = 2
  bool printed_formula_mismatch = false;

  double precision_ratio = 0.0;  // n / 2

  bool measured_matches_closed_form() const;
};

// Rows for n = 4, 8, ..., 2^max_k. Circuits are built for n <= measure_limit.
std::vector<ResourceRow> resource_report(std::size_t max_k, std::size_t measure_limit = 4096);

struct ScatterRow {
  LabelPair pair;
  double estimate = 0.0;  // x
  double exact = 0.0;     // y
  std::uint64_t samples = 0;
};

struct ScatterData {
  std::vector<ScatterRow> rows;
  std::size_t unsampled = 0;
  double max_abs_error = 0.0;
  double rmse = 0.0;
};

// Unsampled pairs are counted but produce no row.
ScatterData scatter_data(const std::vector<OverlapEstimate>& estimates);

}  // namespace multiswap
