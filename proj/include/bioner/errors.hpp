#pragma once

#include <stdexcept>
#include <string>

namespace bioner {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  explicit ParseError(const std::string& reason) : Error(reason), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  ValidationError(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SchemaNotFound : public Error {
 public:
  explicit SchemaNotFound(const std::string& dataset)
      : Error("no schema for dataset '" + dataset + "'") {}
};

class NoTokenOverlap : public Error {
 public:
  explicit NoTokenOverlap(const std::string& msg) : Error(msg) {}
};

// Crossing spans cannot be expressed in a bracket/tag language.
class OverlapUnserializable : public Error {
 public:
  explicit OverlapUnserializable(const std::string& msg) : Error(msg) {}
};

class AlignmentRejected : public Error {
 public:
  explicit AlignmentRejected(const std::string& msg) : Error(msg) {}
};

class MissingPlaceholder : public Error {
 public:
  explicit MissingPlaceholder(const std::string& msg) : Error(msg) {}
};

class MarkerCollision : public Error {
 public:
  explicit MarkerCollision(const std::string& msg) : Error(msg) {}
};

class InsufficientNegatives : public Error {
 public:
  explicit InsufficientNegatives(const std::string& msg) : Error(msg) {}
};

class DuplicateEntity : public Error {
 public:
  explicit DuplicateEntity(const std::string& msg) : Error(msg) {}
};

class UnknownSentence : public Error {
 public:
  explicit UnknownSentence(const std::string& msg) : Error(msg) {}
};

}  // namespace bioner
