#pragma once

#include <stdexcept>
#include <string>

namespace stc {

/// Base class for every validation and input error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plane graph construction.
struct NotConnected : Error { using Error::Error; };
struct InvalidRotation : Error { using Error::Error; };
struct NotPlanarEmbedding : Error { using Error::Error; };

// Spanning tree validation.
struct WrongCardinality : Error { using Error::Error; };
struct ContainsCycle : Error { using Error::Error; };
struct NotSpanning : Error { using Error::Error; };
struct NotSpanningTree : Error { using Error::Error; };

// Index tables.
struct NotOuterEdge : Error { using Error::Error; };
struct NoOuterEdges : Error { using Error::Error; };

// Center-tail systems.
struct CenterDisconnected : Error { using Error::Error; };
struct TailNotPath : Error { using Error::Error; };
struct TailNotReachingO : Error { using Error::Error; };
struct AssignmentIncomplete : Error { using Error::Error; };
struct EmptySystemList : Error { using Error::Error; };

// Generators, file parsing, CLI.
struct InvalidParameter : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace stc
