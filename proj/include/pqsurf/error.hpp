#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pqsurf {

enum class ErrorKind {
  NonPermutation,
  SizeLimit,
  UnknownName,
  NotInGroup,
  GroupMismatch,
  NotASubgroup,
  RelationFails,
  TrivialMonodromy,
  NotGenerating,
  OrderMismatch,
  IdentityElement,
  SearchSpaceTooLarge,
  BaseGenusUnsupported,
  NotCoprime,
  OutOfRange,
  InvalidParameter,
  Degenerate,
  NotEven,
  NotUnimodular,
  NoWitness,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPermutation: return "NonPermutation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::RelationFails: return "RelationFails";
    case ErrorKind::TrivialMonodromy: return "TrivialMonodromy";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::IdentityElement: return "IdentityElement";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::BaseGenusUnsupported: return "BaseGenusUnsupported";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind; the
/// message always starts with the kind's name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pqsurf
