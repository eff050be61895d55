#pragma once

#include <stdexcept>
#include <string>

namespace hrange {

// Signed 64-bit arithmetic left the representable range.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Instantiation produced a basis violating 1 < a2 < a3 < a4.
class NonMonotoneError : public std::runtime_error {
 public:
  explicit NonMonotoneError(const std::string& what) : std::runtime_error(what) {}
};

// A cover scan reached the configured entry ceiling without finding a gap.
class MemoryCapError : public std::runtime_error {
 public:
  explicit MemoryCapError(const std::string& what) : std::runtime_error(what) {}
};

// Greedy quotients of the cover are not exactly linear across the samples.
class FitFailureError : public std::runtime_error {
 public:
  FitFailureError(const std::string& what, long long sample)
      : std::runtime_error(what), offending_sample(sample) {}
  long long offending_sample;
};

// Checkpoint file failed the version or digest check.
class CorruptCheckpointError : public std::runtime_error {
 public:
  explicit CorruptCheckpointError(const std::string& what) : std::runtime_error(what) {}
};

// Crossover probe range ends below the polynomial root bound.
class InsufficientProbeError : public std::runtime_error {
 public:
  InsufficientProbeError(const std::string& what, long long bound)
      : std::runtime_error(what), root_bound(bound) {}
  long long root_bound;
};

}  // namespace hrange
