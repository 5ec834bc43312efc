#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lattice {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -- corpus ------------------------------------------------------------

class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, std::string reason)
      : Error("malformed record at line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class DuplicateId : public Error {
 public:
  explicit DuplicateId(std::string id)
      : Error("duplicate conversation id: " + id), id_(std::move(id)) {}

  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class EmptyDataset : public Error {
 public:
  explicit EmptyDataset(const std::string& path)
      : Error("dataset has no valid records: " + path) {}
};

// -- guardrail store ---------------------------------------------------

class CorruptStore : public Error {
 public:
  explicit CorruptStore(const std::string& reason)
      : Error("corrupt guardrail store: " + reason) {}
};

class NoSnapshot : public Error {
 public:
  NoSnapshot() : Error("guardrail set has no best snapshot to revert to") {}
};

// -- model backends ----------------------------------------------------

class BackendUnavailable : public Error {
 public:
  BackendUnavailable(int status, const std::string& detail)
      : Error("backend unavailable (status " + std::to_string(status) + "): " + detail),
        status_(status) {}

  int status() const { return status_; }

 private:
  int status_;
};

class Timeout : public Error {
 public:
  explicit Timeout(const std::string& detail) : Error("backend timeout: " + detail) {}
};

class UnparseableVerdict : public Error {
 public:
  explicit UnparseableVerdict(const std::string& detail)
      : Error("could not parse a verdict from the model reply: " + detail) {}
};

/// Raised by the scripted oracle when no rule matches an envelope. The
/// oracle never falls back to a silent default.
class OracleGap : public Error {
 public:
  explicit OracleGap(const std::string& detail)
      : Error("no oracle script entry matches this call: " + detail) {}
};

// -- run control -------------------------------------------------------

class RunAborted : public Error {
 public:
  explicit RunAborted(const std::string& reason) : Error("run aborted: " + reason) {}
};

}  // namespace lattice
