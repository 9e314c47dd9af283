#pragma once

#include <stdexcept>
#include <string>

namespace ctdl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid value range (negative density, non-positive ys, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Mismatched grids / lattices between operands.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Grid too coarse to resolve a feature; message names the required size.
class ResolutionError : public Error {
public:
  using Error::Error;
};

/// Cell-neutrality violated for a periodic Coulomb operation.
class NeutralityError : public Error {
public:
  using Error::Error;
};

/// Compact support touches the free-space margin.
class SupportError : public Error {
public:
  using Error::Error;
};

/// An iterative procedure stopped short of its tolerance.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

/// Occupied/unoccupied spectra not separated (metallic configuration).
class GapError : public Error {
public:
  GapError(const std::string& what, double homo, double lumo)
      : Error(what), homo(homo), lumo(lumo) {}
  double homo;
  double lumo;
};

/// Plane-wave basis too small for the requested bands.
class BasisError : public Error {
public:
  using Error::Error;
};

/// Defect does not fit in the supercell with the required margin.
class MarginError : public Error {
public:
  using Error::Error;
};

/// Requested sweep exceeds the configured cost budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// Finite-difference step outside the usable range.
class StepError : public Error {
public:
  using Error::Error;
};

/// Deformation map is not a proper (orientation-preserving) bijection.
class DeformationError : public Error {
public:
  using Error::Error;
};

/// Config file violates the documented grammar or schema.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure, message carries errno text verbatim.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace ctdl
