#ifndef TUBEALG_TYPES_HPP
#define TUBEALG_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tubealg {

using Cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

enum class ErrorKind {
  MalformedInput,
  InvalidCocycle,
  InvalidCategory,
  GaugeViolation,
  UnknownName,
  Unsupported,
  NotNormal,
  ParseError,
  SchemaVersionMismatch,
  DimensionMismatch,
  DegenerateSpectrum,
  NotIdempotent,
  VacuumNotFound,
  NonScalarT,
  NonIntegerFusion,
  DegenerateBlock,
  DualAmbiguous,
  ZeroProjection,
  NoMatchingICI,
  UnknownFixture,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::GaugeViolation: return "GaugeViolation";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::VacuumNotFound: return "VacuumNotFound";
    case ErrorKind::NonScalarT: return "NonScalarT";
    case ErrorKind::NonIntegerFusion: return "NonIntegerFusion";
    case ErrorKind::DegenerateBlock: return "DegenerateBlock";
    case ErrorKind::DualAmbiguous: return "DualAmbiguous";
    case ErrorKind::ZeroProjection: return "ZeroProjection";
    case ErrorKind::NoMatchingICI: return "NoMatchingICI";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Error";
}

// Deterministic RNG helpers. std::normal_distribution is not pinned down by
// the standard, so gaussians are generated by an explicit Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next_u64() {
    // xorshift64*
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  double uniform() {  // in (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double gaussian() {
    double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Cplx cgaussian() { return Cplx(gaussian(), gaussian()); }

 private:
  std::uint64_t state_;
};

}  // namespace tubealg

#endif
