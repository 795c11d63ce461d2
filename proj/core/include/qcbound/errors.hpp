// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qcbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotRegistered : public Error {
 public:
  using Error::Error;
};

class SingularBasisChange : public Error {
 public:
  using Error::Error;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedCenterVelocity : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DegenerateDirection : public Error {
 public:
  using Error::Error;
};

/// Integration produced a non-finite state; `reached()` is the last finite s.
class NumericBlowup : public Error {
 public:
  NumericBlowup(const std::string& what, double reached)
      : Error(what), reached_(reached) {}
  double reached() const noexcept { return reached_; }

 private:
  double reached_;
};

}  // namespace qcbound
