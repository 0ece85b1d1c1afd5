#pragma once

#include <stdexcept>
#include <string>

namespace onebit {

// Randomized construction gave up after the configured number of seeds.
class ConstructionFailed : public std::runtime_error {
 public:
  ConstructionFailed(const std::string& what, int attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// An exhaustive enumeration would exceed its configured cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No candidate is consistent with the given measurements.
class DecodingFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace onebit
