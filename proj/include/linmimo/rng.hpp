// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace linmimo {

/// Philox4x32-10 counter-based block function.
///
/// Maps a 128-bit counter and a 64-bit key to 128 pseudo-random bits with no
/// internal state, so any position of any stream can be generated directly.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

/// Random stream keyed by (master_seed, trial_index).
///
/// The value sequence is a pure function of the key, so a trial draws the
/// same numbers no matter which worker runs it or in which order. The
/// optional substream selects an independent sequence for the same trial
/// (used to redraw after a probability-zero degenerate sample).
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t trial_index,
              std::uint32_t substream = 0);

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t trial_index() const { return trial_; }
    std::uint32_t substream() const { return substream_; }

    std::uint64_t next_u64();
    /// Uniform on (0, 1], 53-bit resolution.
    double next_uniform();
    /// Standard normal via Box-Muller.
    double next_gaussian();
    /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> next_complex_gaussian(double variance = 1.0);

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t trial_;
    std::uint32_t substream_;
    std::uint32_t block_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace linmimo
