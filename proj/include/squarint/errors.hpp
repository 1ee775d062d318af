#pragma once

#include <stdexcept>
#include <string>

namespace squarint {

/// Base class of every error raised by the engines. The `kind()` string is
/// what reports and the CLI print, so it is stable.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SQUARINT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

SQUARINT_DEFINE_ERROR(DomainError)
SQUARINT_DEFINE_ERROR(Divergent)
SQUARINT_DEFINE_ERROR(BranchConflict)
SQUARINT_DEFINE_ERROR(IllConditioned)
SQUARINT_DEFINE_ERROR(Nonconvergent)
SQUARINT_DEFINE_ERROR(InvalidDim)
SQUARINT_DEFINE_ERROR(UnknownIdentity)
SQUARINT_DEFINE_ERROR(ParseError)

#undef SQUARINT_DEFINE_ERROR

/// Wraps an engine error together with the plan that produced it.
class EngineFailure : public Error {
 public:
  EngineFailure(const Error& cause, std::string plan)
      : Error("EngineFailure", cause.kind() + " in " + plan + ": " + cause.what()),
        cause_kind_(cause.kind()),
        plan_(std::move(plan)) {}
  const std::string& cause_kind() const noexcept { return cause_kind_; }
  const std::string& plan() const noexcept { return plan_; }

 private:
  std::string cause_kind_;
  std::string plan_;
};

}  // namespace squarint
