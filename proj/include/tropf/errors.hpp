#pragma once

#include <stdexcept>
#include <string>

namespace tropf {

// Maps onto the CLI exit codes 2, 3 and 4.
enum class ErrorKind { Parse, Precondition, Internal };

class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorKind kind, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)), kind_(kind) {}

  const std::string& name() const noexcept { return name_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string name_;
  ErrorKind kind_;
};

#define TROPF_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message)                            \
        : Error(#Name, ErrorKind::Kind, message) {}                      \
  };

TROPF_DEFINE_ERROR(ParseError, Parse)

TROPF_DEFINE_ERROR(DimensionError, Precondition)
TROPF_DEFINE_ERROR(DirectionError, Precondition)
TROPF_DEFINE_ERROR(NotAMonomial, Precondition)
TROPF_DEFINE_ERROR(NotSkewSymmetrizable, Precondition)
TROPF_DEFINE_ERROR(NotCompatible, Precondition)
TROPF_DEFINE_ERROR(InvalidExtension, Precondition)
TROPF_DEFINE_ERROR(NotFullRank, Precondition)
TROPF_DEFINE_ERROR(NotPointed, Precondition)
TROPF_DEFINE_ERROR(NotPointedAt, Precondition)
TROPF_DEFINE_ERROR(NegativeCoefficientAt, Precondition)
TROPF_DEFINE_ERROR(TropicalMismatchAt, Precondition)
TROPF_DEFINE_ERROR(MissingConstantTerm, Precondition)
TROPF_DEFINE_ERROR(NotAClusterMonomial, Precondition)
TROPF_DEFINE_ERROR(MissingQuantization, Precondition)
TROPF_DEFINE_ERROR(OverflowError, Precondition)

TROPF_DEFINE_ERROR(NonExactDivision, Internal)
TROPF_DEFINE_ERROR(InvariantBreach, Internal)

#undef TROPF_DEFINE_ERROR

}  // namespace tropf
