#pragma once

#include <stdexcept>
#include <string>

namespace hyperflower {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed its configured size budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two endpoints of a mesh edge coincide, so the edge direction is undefined.
class DegenerateEdgeError : public Error {
 public:
  using Error::Error;
};

class UnknownVertexError : public Error {
 public:
  using Error::Error;
};

/// Face data does not describe an oriented, connected 2-manifold with boundary.
class MeshError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperflower
