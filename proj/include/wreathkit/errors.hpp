#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreathkit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error("field mismatch: " + msg) {}
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t at)
      : Error("parse error at byte " + std::to_string(at) + ": " + msg), offset(at) {}
};

struct UnboundGenerator : Error {
  explicit UnboundGenerator(const std::string& name) : Error("unbound generator: " + name) {}
};

struct SignatureMismatch : Error {
  explicit SignatureMismatch(const std::string& msg) : Error("signature mismatch: " + msg) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& msg) : Error("not invertible: " + msg) {}
};

struct InvalidWreath : Error {
  explicit InvalidWreath(const std::string& msg) : Error("invalid wreath: " + msg) {}
};

struct InvalidCowreath : Error {
  explicit InvalidCowreath(const std::string& msg) : Error("invalid cowreath: " + msg) {}
};

struct InvalidModule : Error {
  explicit InvalidModule(const std::string& msg) : Error("invalid module: " + msg) {}
};

struct NotAlgebra : Error {
  explicit NotAlgebra(const std::string& msg) : Error("not an algebra: " + msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error("invalid input: " + msg) {}
};

struct InvalidWeakBialgebra : Error {
  explicit InvalidWeakBialgebra(const std::string& msg)
      : Error("invalid weak bialgebra: " + msg) {}
};

struct UnknownExample : Error {
  explicit UnknownExample(const std::string& name) : Error("unknown example: " + name) {}
};

struct FieldIncompatible : Error {
  explicit FieldIncompatible(const std::string& msg) : Error("field incompatible: " + msg) {}
};

struct BundleError : Error {
  explicit BundleError(const std::string& msg) : Error("bundle error: " + msg) {}
};

}  // namespace wreathkit
