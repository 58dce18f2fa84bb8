#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sutwist {

enum class ErrorKind {
  InvalidInput,
  NonSquareBase,
  NotDescendable,
  DegreeMismatch,
  GroupMismatch,
  NotCocycle,
  RankMismatch,
  NotCyclic,
  ModeMismatch,
  MultiplicityNotOne,
  NonKacDomain,
  Overflow,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonSquareBase: return "NonSquareBase";
    case ErrorKind::NotDescendable: return "NotDescendable";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::MultiplicityNotOne: return "MultiplicityNotOne";
    case ErrorKind::NonKacDomain: return "NonKacDomain";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind and
/// a message naming the violated precondition or invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sutwist
