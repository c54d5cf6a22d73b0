#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace multiswap {

using Amplitude = std::complex<double>;

// Largest norm deviation accepted without an explicit normalize request.
inline constexpr double kNormAcceptTolerance = 1e-4;

// A normalized pure state over `width` qubits.
//
// Amplitudes are stored big-endian: qubit 0 is the most significant bit of the
// amplitude index, so tensor_product({a, b}) is the ordinary Kronecker product
// a (x) b and a register listed first occupies the lower qubit indices.
class PureState {
 public:
  // Validates length (power of two, >= 2), finiteness and norm. Vectors whose
  // norm deviates from one by at most kNormAcceptTolerance are rescaled to
  // unit norm; larger deviations throw DataError.
  explicit PureState(std::vector<Amplitude> amplitudes);

  // |index> over `width` qubits.
  static PureState basis(std::size_t width, std::size_t index = 0);

  // Wraps simulator output without rescaling. Only length and finiteness are
  // checked; the caller vouches for the norm.
  static PureState adopt(std::vector<Amplitude> amplitudes);

  std::size_t width() const { return width_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  struct Unchecked {};
  PureState(Unchecked, std::vector<Amplitude> amplitudes);

  std::size_t width_ = 0;
  std::vector<Amplitude> amplitudes_;
};

// Scales a raw amplitude vector to unit norm. Throws DataError on a zero vector
// ("unnormalizable") or a length that is not a power of two.
PureState normalize(std::vector<Amplitude> raw);

// <a|b>.
Amplitude inner_product(const PureState& a, const PureState& b);

// |<a|b>|^2. Throws DataError on width mismatch.
double exact_overlap(const PureState& a, const PureState& b);

// Kronecker product, first state most significant. Throws on an empty list.
PureState tensor_product(std::span<const PureState> states);

// n >= 2 states of a common width, labelled 1..n.
class StateEnsemble {
 public:
  explicit StateEnsemble(std::vector<PureState> states);

  std::size_t size() const { return states_.size(); }
  std::size_t width() const { return states_.front().width(); }
  std::span<const PureState> states() const { return states_; }
  // 1-based, matching the register labels used in permutation tables.
  const PureState& at_label(std::size_t label) const;

 private:
  std::vector<PureState> states_;
};

}  // namespace multiswap
