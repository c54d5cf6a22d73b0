#include "multiswap/state.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "multiswap/errors.hpp"

namespace multiswap {

namespace {

std::size_t width_for_length(std::size_t length) {
  if (length < 2 || !std::has_single_bit(length)) {
    throw DataError("amplitude vector length " + std::to_string(length) +
                    " is not a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(length));
}

void require_finite(std::span<const Amplitude> amps) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag())) {
      throw DataError("amplitude " + std::to_string(i) + " is not finite");
    }
  }
}

double sum_norm(std::span<const Amplitude> amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

PureState::PureState(Unchecked, std::vector<Amplitude> amplitudes)
    : width_(width_for_length(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  require_finite(amplitudes_);
}

PureState::PureState(std::vector<Amplitude> amplitudes)
    : PureState(Unchecked{}, std::move(amplitudes)) {
  const double n2 = sum_norm(amplitudes_);
  if (std::abs(std::sqrt(n2) - 1.0) > kNormAcceptTolerance) {
    throw DataError("state norm " + std::to_string(std::sqrt(n2)) +
                    " deviates from 1 by more than 1e-4 (use normalize)");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : amplitudes_) a *= scale;
}

PureState PureState::basis(std::size_t width, std::size_t index) {
  if (width == 0 || width >= 64) throw DataError("basis state width out of range");
  std::vector<Amplitude> amps(std::size_t{1} << width);
  if (index >= amps.size()) throw DataError("basis index out of range");
  amps[index] = 1.0;
  return PureState(Unchecked{}, std::move(amps));
}

PureState PureState::adopt(std::vector<Amplitude> amplitudes) {
  return PureState(Unchecked{}, std::move(amplitudes));
}

double PureState::norm_squared() const { return sum_norm(amplitudes_); }

PureState normalize(std::vector<Amplitude> raw) {
  width_for_length(raw.size());
  require_finite(raw);
  const double n2 = sum_norm(raw);
  if (!(n2 > 0.0)) throw DataError("unnormalizable: zero vector");
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& a : raw) a *= scale;
  return PureState::adopt(std::move(raw));
}

Amplitude inner_product(const PureState& a, const PureState& b) {
  if (a.width() != b.width()) {
    throw DataError("width mismatch: " + std::to_string(a.width()) + " vs " +
                    std::to_string(b.width()));
  }
  Amplitude acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double exact_overlap(const PureState& a, const PureState& b) {
  return std::norm(inner_product(a, b));
}

PureState tensor_product(std::span<const PureState> states) {
  if (states.empty()) throw DataError("tensor_product of an empty sequence");
  std::vector<Amplitude> acc(states.front().amplitudes().begin(),
                             states.front().amplitudes().end());
  for (std::size_t s = 1; s < states.size(); ++s) {
    const auto rhs = states[s].amplitudes();
    std::vector<Amplitude> next(acc.size() * rhs.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < rhs.size(); ++j) next[i * rhs.size() + j] = acc[i] * rhs[j];
    }
    acc = std::move(next);
  }
  return PureState::adopt(std::move(acc));
}

StateEnsemble::StateEnsemble(std::vector<PureState> states) : states_(std::move(states)) {
  if (states_.size() < 2) throw DataError("an ensemble needs at least two states");
  for (std::size_t i = 1; i < states_.size(); ++i) {
    if (states_[i].width() != states_.front().width()) {
      throw DataError("state " + std::to_string(i + 1) + " has width " +
                      std::to_string(states_[i].width()) + ", expected " +
                      std::to_string(states_.front().width()));
    }
  }
}

const PureState& StateEnsemble::at_label(std::size_t label) const {
  if (label == 0 || label > states_.size()) throw DataError("state label out of range");
  return states_[label - 1];
}

}  // namespace multiswap
