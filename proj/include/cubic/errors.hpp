#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

// Base class for every failure raised by this library. All conditions are
// reported as named subclasses so callers can react to specific ones.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// graph construction / queries
class DuplicateEdge : public Error { public: using Error::Error; };
class LoopEdge : public Error { public: using Error::Error; };
class VertexOutOfRange : public Error { public: using Error::Error; };
class AcyclicGraph : public Error { public: using Error::Error; };
class KTooLarge : public Error { public: using Error::Error; };
class Disconnected : public Error { public: using Error::Error; };

// generators
class BadParameters : public Error { public: using Error::Error; };
class NotInducedFourCycle : public Error { public: using Error::Error; };
class HypothesisViolated : public Error { public: using Error::Error; };
class UnknownFixture : public Error { public: using Error::Error; };

// counting
class Overflow : public Error { public: using Error::Error; };
class CutInvariantViolated : public Error { public: using Error::Error; };

// Budget exhaustion. Deliberately not a validation failure: the CLI maps it
// to a distinct exit code and the survey records it per graph.
class Timeout : public Error { public: using Error::Error; };

// transfer engine
class WidthTooLarge : public Error { public: using Error::Error; };
class WidthMismatch : public Error { public: using Error::Error; };
class NotRotationClosed : public Error { public: using Error::Error; };
class NoRealDominantRoot : public Error { public: using Error::Error; };

// file formats
class BadHeader : public Error { public: using Error::Error; };
class TruncatedStream : public Error { public: using Error::Error; };
class AsymmetricAdjacency : public Error { public: using Error::Error; };
class UnsupportedSize : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class InconsistentCounts : public Error { public: using Error::Error; };

}  // namespace cubic
