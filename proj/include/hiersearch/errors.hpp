#pragma once

#include <stdexcept>
#include <string>

namespace hiersearch {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A dimension's bounds or scale are unusable (lo >= hi, log scale with
// lo <= 0, fewer than two categories, value outside the domain, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// A name appears in both the objective and fixed sets.
class OverlappingSets : public Error {
public:
  using Error::Error;
};

class EmptyObjectiveSet : public Error {
public:
  using Error::Error;
};

class CategoryOutOfRange : public Error {
public:
  using Error::Error;
};

// divide() was asked for an impossible partition (k < 1 or k > |set|).
class BadSplit : public Error {
public:
  using Error::Error;
};

class EmptyRegion : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

// The user objective threw; the run aborts rather than dropping the trial.
class ObjectiveFailure : public Error {
public:
  using Error::Error;
};

} // namespace hiersearch
