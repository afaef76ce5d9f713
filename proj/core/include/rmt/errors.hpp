#pragma once
#include <stdexcept>
#include <string>

namespace rmt {

/// A linear solve hit a singular or non-finite system. Measure-zero for the
/// ensembles built here; callers may resample the offending realization.
class numerical_failure : public std::runtime_error {
 public:
  explicit numerical_failure(const std::string& what, long realization = -1)
      : std::runtime_error(what), realization_(realization) {}
  long realization() const noexcept { return realization_; }

 private:
  long realization_;
};

/// The requested integral diverges (isolated system: every transmission zero).
class divergent_integral : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input data violates a physical bound (e.g. |<S_aa>| > 1).
class inconsistent_input : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rmt
