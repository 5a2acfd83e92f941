#pragma once

#include <stdexcept>
#include <string>

namespace librate {

// Base error carrying a stable machine-readable kind string, so the CLI can
// emit structured error records without mapping exception types by hand.
struct Error : std::runtime_error {
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Input is representable but puts the requested operation outside its domain
// (q1 = 0 divisions, vanishing denominators, negative radicands).
struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& what)
      : Error("degenerate-input", what) {}
};

// An iteration hit its cap without reaching tolerance.
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what)
      : Error("no-convergence", what) {}
};

// A state came closer to a primary than the collision floor.
struct CollisionError : Error {
  explicit CollisionError(const std::string& what)
      : Error("collision", what) {}
};

// The small-drag series solver was asked to run outside its validity range.
struct SeriesInvalid : Error {
  explicit SeriesInvalid(const std::string& what)
      : Error("series-invalid", what) {}
};

}  // namespace librate
