#pragma once

#include <stdexcept>
#include <string>

namespace scff {

// Computed data contradicts itself (wrong genus assumption, R | h failure,
// a Galois field showing a 1- or 2-root unramified prime, ...).
class InconsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The uncovered corner of the P-signature case analysis: v_P(A) = 0 < v_P(B)
// with A a non-square mod P. Cannot arise for a Galois field; raised rather
// than guessed.
class ClassificationGapError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// psi >= 1: the truncation error bound is unusable at this lambda.
class BoundUnusableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Work refused because it exceeds the supported desk-scale limits (oracle
// genus cap, sieve memory cap).
class ResourceRefusal : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace scff
