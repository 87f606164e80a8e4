#pragma once

#include <stdexcept>
#include <string>

namespace kpartite {

// Root of the library's exception hierarchy. Everything thrown on purpose
// derives from this, so callers can catch kpartite::Error and know the
// failure was diagnosed rather than accidental.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArguments : public Error {
 public:
  using Error::Error;
};

// A vertex id >= n was used where a vertex of an n-vertex graph was expected.
class VertexOutOfRange : public InvalidArguments {
 public:
  using InvalidArguments::InvalidArguments;
};

// An edge or subset contained a repeated vertex.
class NotASet : public InvalidArguments {
 public:
  using InvalidArguments::InvalidArguments;
};

// A subset handed to a combinatorial routine was not in the expected
// canonical (strictly increasing) form, or had the wrong cardinality.
class InvalidSubset : public InvalidArguments {
 public:
  using InvalidArguments::InvalidArguments;
};

// A density value outside (0, 1] was supplied or computed.
class InvalidDensity : public InvalidArguments {
 public:
  using InvalidArguments::InvalidArguments;
};

// The input hypergraph has no edges; the search is undefined (d = 0).
class NoEdges : public InvalidArguments {
 public:
  using InvalidArguments::InvalidArguments;
};

// An instance exceeds the rank-addressable or memory limits of this build.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// A guarantee the algorithm is supposed to maintain failed at runtime.
// Seeing this means a bug, not a bad input.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (hypergraph or witness file).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace kpartite
