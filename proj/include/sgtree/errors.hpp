#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgtree {

// A gap set whose complement is not closed under addition. Carries one
// witness pair (a, b) with a, b in the complement but a+b missing.
class ClosureViolation : public std::runtime_error {
 public:
  ClosureViolation(std::uint32_t a, std::uint32_t b)
      : std::runtime_error("closure violation: " + std::to_string(a) + " + " + std::to_string(b) +
                           " = " + std::to_string(a + b) + " is a gap"),
        witness_a(a),
        witness_b(b) {}

  std::uint32_t witness_a;
  std::uint32_t witness_b;
};

// Node state that fails a structural check (bit counts, forced bits).
class MalformedNode : public std::runtime_error {
 public:
  explicit MalformedNode(const std::string& what) : std::runtime_error("malformed node: " + what) {}
};

// A descent was requested along an index that does not hold a seed.
class NotASeed : public std::runtime_error {
 public:
  explicit NotASeed(std::uint32_t step)
      : std::runtime_error("no seed at index " + std::to_string(step)), step(step) {}

  std::uint32_t step;
};

// Requested depth does not fit in the compiled bit-vector capacity.
class GenusTooLarge : public std::runtime_error {
 public:
  GenusTooLarge(std::uint32_t requested, std::uint32_t limit)
      : std::runtime_error("genus " + std::to_string(requested) + " exceeds the supported maximum " +
                           std::to_string(limit)),
        requested(requested),
        limit(limit) {}

  std::uint32_t requested;
  std::uint32_t limit;
};

// Two counting methods disagreed; always fatal.
class CountMismatch : public std::runtime_error {
 public:
  CountMismatch(const std::string& context, std::uint64_t expected, std::uint64_t actual)
      : std::runtime_error("count mismatch (" + context + "): expected " + std::to_string(expected) +
                           ", got " + std::to_string(actual)),
        expected(expected),
        actual(actual) {}

  std::uint64_t expected;
  std::uint64_t actual;
};

}  // namespace sgtree
