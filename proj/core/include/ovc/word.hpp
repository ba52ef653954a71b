//
// Copyright 2026 The ovc authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>

namespace ovc {

// All kernel arithmetic is two's-complement at a configurable word width.
// Values are carried in int64_t and re-wrapped after every operation so the
// interpreter, the graph evaluators and the simulator agree bit for bit.
inline std::int64_t wrap_word(std::int64_t v, int data_width) {
  if (data_width >= 64)
    return v;
  const std::uint64_t mask = (std::uint64_t{1} << data_width) - 1;
  std::uint64_t u = static_cast<std::uint64_t>(v) & mask;
  if (u >> (data_width - 1))
    u |= ~mask; // sign extend
  return static_cast<std::int64_t>(u);
}

// Overflow-safe primitive ops (performed in unsigned arithmetic, then
// wrapped back to the configured width).
inline std::int64_t wrap_add(std::int64_t a, std::int64_t b, int w) {
  return wrap_word(static_cast<std::int64_t>(static_cast<std::uint64_t>(a) +
                                             static_cast<std::uint64_t>(b)),
                   w);
}
inline std::int64_t wrap_sub(std::int64_t a, std::int64_t b, int w) {
  return wrap_word(static_cast<std::int64_t>(static_cast<std::uint64_t>(a) -
                                             static_cast<std::uint64_t>(b)),
                   w);
}
inline std::int64_t wrap_mul(std::int64_t a, std::int64_t b, int w) {
  return wrap_word(static_cast<std::int64_t>(static_cast<std::uint64_t>(a) *
                                             static_cast<std::uint64_t>(b)),
                   w);
}

} // namespace ovc
