#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Base class for all engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A generator vector was identically zero.
struct ZeroVector : Error {
  using Error::Error;
};

/// The input cone contains a line.
struct NotStronglyConvex : Error {
  using Error::Error;
};

/// Cone exceeds the documented size limits of the brute-force
/// double-description routine (dim <= 5, <= 12 generators).
struct LimitExceeded : Error {
  using Error::Error;
};

/// Two input cones intersect in a set that is not a face of each.
struct InvalidFan : Error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit InvalidFan(const std::string& what) : Error(what) {}
  InvalidFan(const std::string& what, std::size_t first, std::size_t second)
      : Error(what), first_cone(first), second_cone(second) {}

  std::size_t first_cone = npos;
  std::size_t second_cone = npos;
};

/// The (tau, sigma) arguments are not a facet/cone pair of adjacent dimension.
struct NotAFacetPair : Error {
  using Error::Error;
};

struct DegreeOutOfRange : Error {
  using Error::Error;
};

struct FanNotComplete : Error {
  using Error::Error;
};

struct NotAffine : Error {
  using Error::Error;
};

/// No certified displacement vector found within the retry budget.
struct GenericityFailure : Error {
  using Error::Error;
};

/// The displacement vector was certified for a different fan or bidegree.
struct UncertifiedDisplacement : Error {
  using Error::Error;
};

/// A certified pair turned out non-transverse; indicates a certification bug.
struct NonTransversePair : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

/// Fan file could not be read or does not match the schema.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace toric
