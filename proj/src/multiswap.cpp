#include "multiswap/multiswap.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "multiswap/san.hpp"

namespace multiswap {

namespace {

std::size_t log2_exact(std::size_t n) {
  if (n < 4 || !std::has_single_bit(n)) {
    throw std::invalid_argument("register count " + std::to_string(n) +
                                " is not a power of two >= 4; pad the inputs first");
  }
  return static_cast<std::size_t>(std::countr_zero(n));
}

void add_level(SchemeLayout& layout, std::span<const std::size_t> registers, std::size_t level) {
  const std::size_t rule2_control = 2 * level;
  const std::size_t rule1_control = 2 * level + 1;
  const auto partition = partition_groups(registers);
  for (const auto& [a, b] : rule_pairs(partition, SwapRule::Rule1)) {
    layout.network.push_back({rule1_control, a, b});
  }
  for (const auto& [a, b] : rule_pairs(partition, SwapRule::Rule2)) {
    layout.network.push_back({rule2_control, a, b});
  }
  if (registers.size() == 4) return;
  const std::size_t half = registers.size() / 2;
  add_level(layout, registers.first(half), level + 1);
  add_level(layout, registers.subspan(half), level + 1);
}

}  // namespace

std::size_t padded_size(std::size_t m) { return std::bit_ceil(std::max<std::size_t>(m, 4)); }

std::vector<std::size_t> PaddedEnsemble::padded_labels() const {
  std::vector<std::size_t> out;
  for (std::size_t label = original_count + 1; label <= ensemble.size(); ++label) {
    out.push_back(label);
  }
  return out;
}

PaddedEnsemble pad_inputs(const StateEnsemble& ensemble) {
  const std::size_t m = ensemble.size();
  const std::size_t n = padded_size(m);
  std::vector<PureState> states(ensemble.states().begin(), ensemble.states().end());
  while (states.size() < n) states.push_back(PureState::basis(ensemble.width()));
  return PaddedEnsemble{StateEnsemble(std::move(states)), m};
}

GroupPartition partition_groups(std::span<const std::size_t> registers) {
  if (registers.empty() || registers.size() % 4 != 0) {
    throw std::invalid_argument("four-group partition needs a multiple of four registers");
  }
  const std::size_t q = registers.size() / 4;
  GroupPartition p;
  for (std::size_t g = 0; g < 4; ++g) {
    p.groups[g].assign(registers.begin() + static_cast<std::ptrdiff_t>(g * q),
                       registers.begin() + static_cast<std::ptrdiff_t>((g + 1) * q));
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> rule_pairs(const GroupPartition& partition,
                                                            SwapRule rule) {
  const auto& second = partition.groups[1];
  const auto& other = partition.groups[rule == SwapRule::Rule1 ? 2 : 3];
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < second.size(); ++i) pairs.emplace_back(second[i], other[i]);
  return pairs;
}

std::vector<std::size_t> apply_rule(std::vector<std::size_t> labels, SwapRule rule) {
  std::vector<std::size_t> positions(labels.size());
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  for (const auto& [a, b] : rule_pairs(partition_groups(positions), rule)) {
    std::swap(labels[a], labels[b]);
  }
  return labels;
}

SchemeLayout new_scheme_layout(std::size_t n, std::size_t width, SwapTestVariant final_variant,
                               std::size_t real_count) {
  const std::size_t k = log2_exact(n);
  if (width == 0) throw std::invalid_argument("register width must be at least 1");
  if (real_count < 2 || real_count > n) throw std::invalid_argument("real input count out of range");

  SchemeLayout layout;
  layout.scheme = Scheme::New;
  layout.n = n;
  layout.width = width;
  layout.real_count = real_count;
  layout.final_variant = final_variant;
  for (std::size_t level = 0; level + 1 < k; ++level) {
    layout.ancilla_labels.push_back("s" + std::to_string(2 * level + 1));
    layout.ancilla_roles.push_back("level " + std::to_string(level + 1) + " rule 2 (G2<->G4)");
    layout.ancilla_labels.push_back("s" + std::to_string(2 * level + 2));
    layout.ancilla_roles.push_back("level " + std::to_string(level + 1) + " rule 1 (G2<->G3)");
  }
  std::vector<std::size_t> registers(n);
  std::iota(registers.begin(), registers.end(), std::size_t{0});
  add_level(layout, registers, 0);
  for (std::size_t i = 0; i < n / 2; ++i) layout.slots.push_back({2 * i, 2 * i + 1, {}});
  return layout;
}

BuiltScheme build_un(std::size_t n, std::size_t width, SwapTestVariant final_variant) {
  return wire_scheme(new_scheme_layout(n, width, final_variant, n));
}

BuiltScheme build_u4(std::size_t width, SwapTestVariant final_variant) {
  return build_un(4, width, final_variant);
}

std::size_t new_scheme_cswaps(std::size_t n) {
  const std::size_t k = log2_exact(n);
  return (k - 1) * (n / 2);
}

std::size_t new_scheme_ancillas(std::size_t n) { return 2 * (log2_exact(n) - 1); }

BuiltScheme build_scheme(Scheme scheme, std::size_t n, std::size_t width,
                         SwapTestVariant final_variant, std::size_t real_count) {
  if (scheme == Scheme::New) {
    return wire_scheme(new_scheme_layout(n, width, final_variant, real_count));
  }
  return wire_scheme(san_layout(n, width, final_variant, real_count));
}

}  // namespace multiswap
