#pragma once

#include <stdexcept>
#include <string>

namespace zetainv {

// Base of every library failure. kind() is a stable machine-readable tag
// used by the CLI's JSON error body.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
  // Numeric failures are recoverable signals (raise m, add corrections...);
  // everything else is a caller mistake.
  virtual bool numeric() const noexcept { return true; }
};

#define ZETAINV_ERROR(Name, Tag, Numeric)                            \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(what) {}          \
    const char* kind() const noexcept override { return Tag; }       \
    bool numeric() const noexcept override { return Numeric; }       \
  };

ZETAINV_ERROR(UsageError, "usage", false)
ZETAINV_ERROR(ParseError, "parse", false)
ZETAINV_ERROR(DomainError, "domain", false)
ZETAINV_ERROR(PoleError, "pole", true)
ZETAINV_ERROR(SingularityError, "singularity", true)
ZETAINV_ERROR(ZeroConstantTerm, "uncancelled-zero", true)
ZETAINV_ERROR(NoRoot, "no-root", true)
ZETAINV_ERROR(PrecisionError, "precision", true)
ZETAINV_ERROR(ConvergenceError, "non-convergence", true)

#undef ZETAINV_ERROR

// Radicand went negative or complex where a real root was expected. The
// offending (complex) candidate is kept as decimal strings for diagnostics.
class DominanceViolated : public Error {
 public:
  DominanceViolated(const std::string& what, std::string re = {}, std::string im = {})
      : Error(what), re_(std::move(re)), im_(std::move(im)) {}
  const char* kind() const noexcept override { return "dominance-violated"; }
  const std::string& candidate_re() const noexcept { return re_; }
  const std::string& candidate_im() const noexcept { return im_; }

 private:
  std::string re_, im_;
};

// No m-th root branch reproduced w. Carries the best residual seen.
class BranchNotFound : public Error {
 public:
  BranchNotFound(const std::string& what, int best_lambda, double best_log10_residual)
      : Error(what), lambda_(best_lambda), log10_e_(best_log10_residual) {}
  const char* kind() const noexcept override { return "branch-not-found"; }
  int best_lambda() const noexcept { return lambda_; }
  double best_log10_residual() const noexcept { return log10_e_; }

 private:
  int lambda_;
  double log10_e_;
};

}  // namespace zetainv
