#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wb {

// Base class for everything the library throws on purpose. Anything else
// escaping is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// scalars
struct DivisionByZero : Error {
  using Error::Error;
};
struct MixedAlgebraicRelations : Error {
  using Error::Error;
};
struct DenominatorVanishes : Error {
  using Error::Error;
};
struct InvalidParams : Error {
  using Error::Error;
};

// freealg
struct AlphabetMismatch : Error {
  using Error::Error;
};
struct UnknownSymbol : Error {
  using Error::Error;
};
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// rewrite
struct UnorientableRule : Error {
  using Error::Error;
};
struct NonHomogeneousRule : Error {
  using Error::Error;
};
struct CompletionBudgetExceeded : Error {
  using Error::Error;
};
struct IncompletePresentation : Error {
  using Error::Error;
};

// groups
struct NotAGroup : Error {
  using Error::Error;
};
struct UnknownElement : Error {
  using Error::Error;
};

// grading
struct IncompleteAssignment : Error {
  using Error::Error;
};
struct UnsupportedFamily : Error {
  using Error::Error;
};

// exact linear algebra / ideals
struct AmbientMismatch : Error {
  using Error::Error;
};
struct WordOutsideAmbient : Error {
  using Error::Error;
};

// covariants
struct SeriesDenominatorZeroConstant : Error {
  using Error::Error;
};

// cli / config
struct ConfigError : Error {
  ConfigError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), location(where) {}
  std::string location;
};

}  // namespace wb
