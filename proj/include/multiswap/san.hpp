#pragma once

#include <cstddef>

#include "multiswap/layout.hpp"
#include "multiswap/permutation.hpp"

namespace multiswap {

// Baseline scheme with three ancillas per level and a single measured slot.
//
// U4 on registers (r1, r2, r3, r4) with ancillas (c1, c2, c3), in gate order:
//   CSWAP(c1; r1, r3), CSWAP(c2; r1, r4), CSWAP(c3; r2, r3)
// Each ancilla controls exactly once, and every one of the six pairs reaches
// (r1, r2) under some outcome. U_n runs U_{n/2} on both halves (sharing that
// level's ancillas), then a U4 on the two halves' lead registers
// (q1, q2, q_{n/2+1}, q_{n/2+2}). Ancillas are numbered innermost level first.
SchemeLayout san_layout(std::size_t n, std::size_t width, SwapTestVariant final_variant,
                        std::size_t real_count);

BuiltScheme build_san_un(std::size_t n, std::size_t width = 1,
                         SwapTestVariant final_variant = SwapTestVariant::Standard);
BuiltScheme build_san_u4(std::size_t width = 1,
                         SwapTestVariant final_variant = SwapTestVariant::Standard);

// 3(2^(k-1) - 1) and 3(k-1) for n = 2^k.
std::size_t san_cswaps(std::size_t n);
std::size_t san_ancillas(std::size_t n);

// Pair -> outcomes placing it in the single slot (q1, q2). Throws
// std::logic_error if a pair is unreachable.
CoverageMap san_pair_coverage(std::size_t n);

}  // namespace multiswap
