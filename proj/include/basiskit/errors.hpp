#ifndef BASISKIT_ERRORS_HPP
#define BASISKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace basiskit {

enum class ErrorKind {
  MixedGroups,
  Singular,
  NotClosed,
  NoIdentity,
  NotAssociative,
  NotInvertible,
  DimensionMismatch,
  CarrierMismatch,
  InfeasibleExhaustive,
  NotCovariant,
  EnumerationCapExceeded,
  GroupMismatch,
  SideMismatch,
  NotSingleTransitive,
  NoSolution,
  GroupSpaceMismatch,
  DegenerateReference,
  DegenerateBasis,
  NotInOrbit,
  DependentInput,
  NullVector,
  TypeMismatch,
  AnchorMismatch,
  NotHomomorphism,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::InfeasibleExhaustive: return "InfeasibleExhaustive";
    case ErrorKind::NotCovariant: return "NotCovariant";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::NotSingleTransitive: return "NotSingleTransitive";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::GroupSpaceMismatch: return "GroupSpaceMismatch";
    case ErrorKind::DegenerateReference: return "DegenerateReference";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::NotInOrbit: return "NotInOrbit";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NullVector: return "NullVector";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::AnchorMismatch: return "AnchorMismatch";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace basiskit

#endif  // BASISKIT_ERRORS_HPP
