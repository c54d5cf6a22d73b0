#pragma once

#include <array>
#include <cstdint>

namespace multiswap {

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
// Pure function of (counter, key); no internal state.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Independent uniform stream identified by (seed, stream index). Shot sampling
// uses the shot index as the stream index, so draws do not depend on how shots
// are partitioned across workers.
class ShotStream {
 public:
  ShotStream(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform();

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned used_ = 4;
};

}  // namespace multiswap
