#pragma once

#include <stdexcept>
#include <string>

namespace shortcycle {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file, loop, duplicate arc, out-of-range endpoint,
// violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class SinkPresent : public InvalidInput {
 public:
  SinkPresent(unsigned vertex, const std::string& what)
      : InvalidInput(what), vertex_(vertex) {}
  unsigned vertex() const { return vertex_; }

 private:
  unsigned vertex_;
};

class Acyclic : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class Infeasible : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SeedNotSingleton : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An exponential search or enumeration would exceed its hard cap.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

// A harness configuration asks for more than its generator's hard cap.
class CapExceeded : public ResourceCap {
 public:
  using ResourceCap::ResourceCap;
};

// A proved statement failed on a concrete instance. Either a bug or a
// counterexample; never expected.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class LemmaViolation : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class ClaimViolation : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

class BoundViolation : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

}  // namespace shortcycle
