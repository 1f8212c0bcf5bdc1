#pragma once

#include <stdexcept>
#include <string>

namespace mvf {

// Exit-code families shared with the CLI: 1 = property-check failure,
// 2 = input error, 3 = resource bound exceeded.
class Error : public std::runtime_error {
 public:
  Error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& m) : Error(m, 2) {}
};

class BadParameter : public Error {
 public:
  explicit BadParameter(const std::string& m) : Error(m, 2) {}
};

class SignatureMismatch : public Error {
 public:
  explicit SignatureMismatch(const std::string& m) : Error(m, 2) {}
};

class NotAlgebraicSignature : public Error {
 public:
  explicit NotAlgebraicSignature(const std::string& m) : Error(m, 2) {}
};

class BadSignatureForNucleus : public Error {
 public:
  explicit BadSignatureForNucleus(const std::string& m) : Error(m, 2) {}
};

class NotUnitPreserving : public Error {
 public:
  explicit NotUnitPreserving(const std::string& m) : Error(m, 2) {}
};

class UnitIntervalNotRepresentable : public Error {
 public:
  explicit UnitIntervalNotRepresentable(const std::string& m) : Error(m, 2) {}
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& m) : Error(m, 2) {}
};

class InfiniteCarrier : public Error {
 public:
  explicit InfiniteCarrier(const std::string& m) : Error(m, 3) {}
};

class CarrierTooLarge : public Error {
 public:
  explicit CarrierTooLarge(const std::string& m) : Error(m, 3) {}
};

class PropertyCheckFailure : public Error {
 public:
  explicit PropertyCheckFailure(const std::string& m) : Error(m, 1) {}
};

}  // namespace mvf
