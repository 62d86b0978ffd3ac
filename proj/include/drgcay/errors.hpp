#pragma once

#include <stdexcept>
#include <string>

namespace drgcay {

// Malformed input: dimension mismatch, out-of-range residue, bad spelling.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidConnectionSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget. The answer is unknown, not negative.
class ResourceCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drgcay
