// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linmimo {

//----------------------------------------------------------------------------
// Errors
//----------------------------------------------------------------------------

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class SingularGram : public Error {
  public:
    SingularGram() : Error("Gram matrix is numerically singular") {}
};

class InvalidRate : public InvalidArgument {
  public:
    InvalidRate() : InvalidArgument("rate must be strictly positive") {}
};

class InsufficientPoints : public Error {
  public:
    using Error::Error;
};

class BetaOneUnsupported : public Error {
  public:
    BetaOneUnsupported()
        : Error("ZF large-system moments are undefined for beta = 1 (M = N)") {}
};

class NonConvergence : public Error {
  public:
    using Error::Error;
};

class EpsilonOutOfRange : public InvalidArgument {
  public:
    EpsilonOutOfRange() : InvalidArgument("epsilon must lie in (0, sqrt(2))") {}
};

class NonpositiveVariance : public InvalidArgument {
  public:
    NonpositiveVariance() : InvalidArgument("variance must be strictly positive") {}
};

//----------------------------------------------------------------------------
// Antenna configuration and SNR
//----------------------------------------------------------------------------

/// M transmit and N receive antennas, N >= M >= 1.
class SystemDims {
  public:
    SystemDims(int m_tx, int n_rx) : m_(m_tx), n_(n_rx) {
        if (m_tx < 1) throw InvalidArgument("m_tx must be >= 1");
        if (n_rx < m_tx) throw InvalidArgument("n_rx must be >= m_tx");
    }

    int m_tx() const { return m_; }
    int n_rx() const { return n_; }
    /// Load ratio M/N in (0, 1].
    double beta() const { return static_cast<double>(m_) / n_; }

    friend bool operator==(const SystemDims&, const SystemDims&) = default;

  private:
    int m_;
    int n_;
};

/// Linear transmit SNR rho = M Es / N0.
struct SnrPoint {
    double rho = 0.0;

    static SnrPoint linear(double rho) {
        if (!(rho >= 0.0)) throw InvalidArgument("rho must be >= 0");
        return SnrPoint{rho};
    }
    static SnrPoint db(double snr_db) { return linear(std::pow(10.0, snr_db / 10.0)); }

    /// rho / beta, the SNR scaling used by the large-system formulas.
    double alpha(const SystemDims& dims) const { return rho / dims.beta(); }
};

enum class Receiver { zf, mmse, optimal };

std::string_view to_string(Receiver r);
Receiver parse_receiver(std::string_view name);

inline constexpr double kLn2 = std::numbers::ln2;

inline double bits_to_nats(double bits) { return bits * kLn2; }
inline double nats_to_bits(double nats) { return nats / kLn2; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace linmimo
