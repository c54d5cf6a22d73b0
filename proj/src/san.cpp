#include "multiswap/san.hpp"

#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiswap {

namespace {

std::size_t log2_exact(std::size_t n) {
  if (n < 4 || !std::has_single_bit(n)) {
    throw std::invalid_argument("SAN register count " + std::to_string(n) +
                                " is not a power of two >= 4");
  }
  return static_cast<std::size_t>(std::countr_zero(n));
}

void add_u4(SchemeLayout& layout, const std::array<std::size_t, 4>& r, std::size_t first_control) {
  layout.network.push_back({first_control, r[0], r[2]});
  layout.network.push_back({first_control + 1, r[0], r[3]});
  layout.network.push_back({first_control + 2, r[1], r[2]});
}

// Returns the two lead registers of the block after it has been wired.
std::array<std::size_t, 2> add_block(SchemeLayout& layout, std::span<const std::size_t> regs) {
  const auto depth = static_cast<std::size_t>(std::countr_zero(regs.size())) - 2;
  const std::size_t controls = 3 * depth;
  if (regs.size() == 4) {
    add_u4(layout, {regs[0], regs[1], regs[2], regs[3]}, controls);
    return {regs[0], regs[1]};
  }
  const std::size_t half = regs.size() / 2;
  const auto lo = add_block(layout, regs.first(half));
  const auto hi = add_block(layout, regs.subspan(half));
  add_u4(layout, {lo[0], lo[1], hi[0], hi[1]}, controls);
  return lo;
}

}  // namespace

SchemeLayout san_layout(std::size_t n, std::size_t width, SwapTestVariant final_variant,
                        std::size_t real_count) {
  const std::size_t k = log2_exact(n);
  if (width == 0) throw std::invalid_argument("register width must be at least 1");
  if (real_count < 2 || real_count > n) throw std::invalid_argument("real input count out of range");

  SchemeLayout layout;
  layout.scheme = Scheme::San;
  layout.n = n;
  layout.width = width;
  layout.real_count = real_count;
  layout.final_variant = final_variant;
  for (std::size_t level = 0; level + 1 < k; ++level) {
    static constexpr const char* kTargets[] = {"(r1,r3)", "(r1,r4)", "(r2,r3)"};
    for (std::size_t j = 0; j < 3; ++j) {
      layout.ancilla_labels.push_back("s" + std::to_string(3 * level + j + 1));
      layout.ancilla_roles.push_back("U" + std::to_string(std::size_t{4} << level) +
                                     " combine swap " + kTargets[j]);
    }
  }
  std::vector<std::size_t> registers(n);
  std::iota(registers.begin(), registers.end(), std::size_t{0});
  add_block(layout, registers);
  layout.slots.push_back({0, 1, {}});
  return layout;
}

BuiltScheme build_san_un(std::size_t n, std::size_t width, SwapTestVariant final_variant) {
  return wire_scheme(san_layout(n, width, final_variant, n));
}

BuiltScheme build_san_u4(std::size_t width, SwapTestVariant final_variant) {
  return build_san_un(4, width, final_variant);
}

std::size_t san_cswaps(std::size_t n) {
  const std::size_t k = log2_exact(n);
  return 3 * ((std::size_t{1} << (k - 1)) - 1);
}

std::size_t san_ancillas(std::size_t n) { return 3 * (log2_exact(n) - 1); }

CoverageMap san_pair_coverage(std::size_t n) {
  const auto built = build_san_un(n);
  return pair_coverage_map(derive_permutation_table(built), built.layout);
}

}  // namespace multiswap
