#include "multiswap/analytics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "multiswap/errors.hpp"
#include "multiswap/multiswap.hpp"
#include "multiswap/san.hpp"

namespace multiswap {

PrecisionModel precision(std::size_t n, std::uint64_t shots) {
  if (n < 2) throw ConfigError("precision model needs at least two inputs");
  if (shots == 0) throw ConfigError("shot count must be at least 1");
  PrecisionModel p;
  p.requested_n = n;
  p.n = std::bit_ceil(n);
  p.shots = shots;
  const double nn = static_cast<double>(p.n);
  const double total = static_cast<double>(shots);
  p.m1 = 2.0 * total / (nn * (nn - 1.0));
  p.m2 = total / (nn - 1.0);
  p.ratio = p.m2 / p.m1;
  return p;
}

bool ResourceRow::measured_matches_closed_form() const {
  const auto same = [](const std::optional<std::size_t>& m, std::size_t c) { return !m || *m == c; };
  return same(new_cswap_measured, new_cswap) && same(new_ancilla_measured, new_ancilla) &&
         same(san_cswap_measured, san_cswap) && same(san_ancilla_measured, san_ancilla);
}

std::vector<ResourceRow> resource_report(std::size_t max_k, std::size_t measure_limit) {
  if (max_k < 2) throw ConfigError("resource report needs k >= 2");
  if (max_k > 40) throw ConfigError("resource report limited to k <= 40");
  std::vector<ResourceRow> rows;
  std::size_t printed_d = 2;
  for (std::size_t k = 2; k <= max_k; ++k) {
    ResourceRow r;
    r.n = std::size_t{1} << k;
    r.k = k;
    r.new_cswap = new_scheme_cswaps(r.n);
    r.new_ancilla = new_scheme_ancillas(r.n);
    r.san_cswap = san_cswaps(r.n);
    r.san_ancilla = san_ancillas(r.n);

    if (r.n <= measure_limit) {
      const auto ours = build_un(r.n, 1);
      const auto network = count_resources(ours.network);
      r.new_cswap_measured = network.cswap_count;
      r.new_ancilla_measured = network.ancilla_count;
      r.new_cswap_with_tests_measured = count_resources(ours.circuit).cswap_count;
      const auto san = count_resources(build_san_un(r.n).network);
      r.san_cswap_measured = san.cswap_count;
      r.san_ancilla_measured = san.ancilla_count;
    }

    r.printed_new_cswap = r.n * k;
    r.printed_new_cswap_with_tests = static_cast<double>(r.n) * (static_cast<double>(k) + 0.5);
    r.printed_san_cswap = 3 * (r.n - 1);
    if (k > 2) printed_d += 2;
    r.printed_new_ancilla = printed_d;
    r.printed_formula_mismatch = r.printed_new_cswap != r.new_cswap ||
                               r.printed_san_cswap != r.san_cswap ||
                               r.printed_new_ancilla != r.new_ancilla;
    r.precision_ratio = static_cast<double>(r.n) / 2.0;
    rows.push_back(r);
  }
  return rows;
}

ScatterData scatter_data(const std::vector<OverlapEstimate>& estimates) {
  ScatterData out;
  double sq = 0.0;
  for (const auto& e : estimates) {
    if (!e.estimate) {
      ++out.unsampled;
      continue;
    }
    out.rows.push_back({e.pair, *e.estimate, e.exact, e.samples});
    const double err = std::abs(*e.estimate - e.exact);
    out.max_abs_error = std::max(out.max_abs_error, err);
    sq += err * err;
  }
  if (!out.rows.empty()) out.rmse = std::sqrt(sq / static_cast<double>(out.rows.size()));
  return out;
}

}  // namespace multiswap
