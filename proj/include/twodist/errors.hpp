#pragma once

#include <stdexcept>
#include <string>

namespace twodist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConvergedError : public Error {
 public:
  using Error::Error;
};

class NotInRangeError : public Error {
 public:
  using Error::Error;
};

/// A float decision landed inside the grey band where the sign cannot be trusted.
class AmbiguousCaseError : public Error {
 public:
  using Error::Error;
};

class ParameterDomainError : public Error {
 public:
  using Error::Error;
};

class CertificateInvalidError : public Error {
 public:
  using Error::Error;
};

class ReconstructionResidualError : public Error {
 public:
  using Error::Error;
};

class AmbiguousPairError : public Error {
 public:
  using Error::Error;
};

class InvalidCodeError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptySubsetError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  using Error::Error;
};

}  // namespace twodist
