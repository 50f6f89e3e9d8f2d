#ifndef DOMAINGAUGE_ERRORS_HPP
#define DOMAINGAUGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dg {

/// Malformed or out-of-class input (JSON, representation invariants).
/// CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested operation is not defined for this tail shape.
struct UnsupportedTail : std::runtime_error {
  explicit UnsupportedTail(const std::string& what) : std::runtime_error(what) {}
};

/// No representable eigenvalue listing exists for this spectrum.
struct UnsupportedSpectrum : std::runtime_error {
  explicit UnsupportedSpectrum(const std::string& what) : std::runtime_error(what) {}
};

/// Input sequence has a finite total sum where divergence is required.
struct NotInX0 : std::runtime_error {
  explicit NotInX0(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Domain comparison is basis-relative; different schemes are rejected.
struct IndexSchemeMismatch : std::runtime_error {
  explicit IndexSchemeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A derived internal invariant failed. CLI maps this to exit code 3.
struct InternalInvariantFailure : std::logic_error {
  explicit InternalInvariantFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dg

#endif
