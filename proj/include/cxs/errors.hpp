#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cxs {

enum class ErrorKind {
  MissingEmptyOrFull,
  NotIntersectionClosed,
  IndexOutOfRange,
  DegenerateInput,
  UnsupportedDimension,
  SetNotConvex,
  Infeasible,
  PreconditionViolation,
  RadonBoundRefuted,
  BudgetExceeded,
  ParseError,
  UsageError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MissingEmptyOrFull:    return "MissingEmptyOrFull";
    case ErrorKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorKind::IndexOutOfRange:       return "IndexOutOfRange";
    case ErrorKind::DegenerateInput:       return "DegenerateInput";
    case ErrorKind::UnsupportedDimension:  return "UnsupportedDimension";
    case ErrorKind::SetNotConvex:          return "SetNotConvex";
    case ErrorKind::Infeasible:            return "Infeasible";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::RadonBoundRefuted:     return "RadonBoundRefuted";
    case ErrorKind::BudgetExceeded:        return "BudgetExceeded";
    case ErrorKind::ParseError:            return "ParseError";
    case ErrorKind::UsageError:            return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Carries the first violating pair found when a family is not closed under
// pairwise intersection.
class NotIntersectionClosedError : public Error {
 public:
  NotIntersectionClosedError(std::string message, std::vector<int> lhs, std::vector<int> rhs)
      : Error(ErrorKind::NotIntersectionClosed, std::move(message)),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}
  const std::vector<int>& lhs() const { return lhs_; }
  const std::vector<int>& rhs() const { return rhs_; }

 private:
  std::vector<int> lhs_, rhs_;
};

// Raised when a search that is guaranteed to succeed under a claimed Radon
// bound fails; the payload is evidence that the bound is wrong.
class RadonRefutedError : public Error {
 public:
  RadonRefutedError(std::string message, std::map<int, int> multiset_certificate = {})
      : Error(ErrorKind::RadonBoundRefuted, std::move(message)),
        certificate_(std::move(multiset_certificate)) {}
  // Element -> multiplicity of a multiset admitting no k-partition; empty when
  // the refutation came from a subfamily search instead.
  const std::map<int, int>& certificate() const { return certificate_; }

 private:
  std::map<int, int> certificate_;
};

// Step counter shared by all search routines. charge() throws once the limit
// is crossed, so "gave up" is always distinguishable from "does not exist".
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_)
      throw Error(ErrorKind::BudgetExceeded,
                  "step budget exhausted (limit " + std::to_string(limit_) + ")");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Lets operations accept `Budget* budget = nullptr` and transparently fall
// back to a fresh default-limit budget.
class BudgetScope {
 public:
  explicit BudgetScope(Budget* external) : budget_(external ? external : &owned_) {}
  Budget& operator*() { return *budget_; }
  Budget* operator->() { return budget_; }

 private:
  Budget owned_;
  Budget* budget_;
};

}  // namespace cxs
