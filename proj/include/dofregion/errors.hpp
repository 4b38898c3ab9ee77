#ifndef DOFREGION_ERRORS_HPP
#define DOFREGION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dofregion {

/** Base class of every error raised by the region library. */
class DofRegionError : public std::runtime_error {
 public:
  explicit DofRegionError(const std::string& what) : std::runtime_error(what) {}
};

// Geometry.
class EmptyPolytope : public DofRegionError {
 public:
  explicit EmptyPolytope(const std::string& what = "polytope is empty") : DofRegionError(what) {}
};
class Unbounded : public DofRegionError {
 public:
  explicit Unbounded(const std::string& what = "polyhedron is unbounded") : DofRegionError(what) {}
};
class DimensionMismatch : public DofRegionError {
 public:
  explicit DimensionMismatch(const std::string& what = "dimension mismatch") : DofRegionError(what) {}
};
class NonpositiveScale : public DofRegionError {
 public:
  explicit NonpositiveScale(const std::string& what = "scale factor must be positive")
      : DofRegionError(what) {}
};
class UnknownVariable : public DofRegionError {
 public:
  explicit UnknownVariable(const std::string& what) : DofRegionError(what) {}
};
class InfeasibleProjection : public DofRegionError {
 public:
  explicit InfeasibleProjection(const std::string& what = "projection is infeasible")
      : DofRegionError(what) {}
};

// Model and region arguments.
class ParameterOutOfRange : public DofRegionError {
 public:
  explicit ParameterOutOfRange(const std::string& what) : DofRegionError(what) {}
};
class IndexOutOfRange : public DofRegionError {
 public:
  explicit IndexOutOfRange(const std::string& what) : DofRegionError(what) {}
};
class EmptySubset : public DofRegionError {
 public:
  explicit EmptySubset(const std::string& what = "user subset must be nonempty") : DofRegionError(what) {}
};
class SameUser : public DofRegionError {
 public:
  explicit SameUser(const std::string& what = "user pair must be distinct") : DofRegionError(what) {}
};
class UnsortedAlpha : public DofRegionError {
 public:
  explicit UnsortedAlpha(const std::string& what = "CSIT state must be sorted nonincreasing")
      : DofRegionError(what) {}
};
class CommonBudgetExceeded : public DofRegionError {
 public:
  explicit CommonBudgetExceeded(const std::string& what) : DofRegionError(what) {}
};
class NotTotallyOrdered : public DofRegionError {
 public:
  explicit NotTotallyOrdered(const std::string& what = "CSIT pattern is not totally ordered")
      : DofRegionError(what) {}
};
class TupleOutsideOuterBound : public DofRegionError {
 public:
  explicit TupleOutsideOuterBound(const std::string& what) : DofRegionError(what) {}
};

}  // namespace dofregion

#endif  // DOFREGION_ERRORS_HPP
