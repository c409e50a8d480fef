#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

/// Base class for every recoverable input/usage failure in the library.
/// The CLI maps any of these to exit code 3.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text in an instance/certificate file.
class parse_error : public error {
public:
  using error::error;
};

/// An instance violates its own invariants (sums, bounds, multiplicities).
class instance_error : public error {
public:
  using error::error;
};

/// The instance is valid but outside the range an operation supports
/// (e.g. the bipartite gadget requires W > 8).
class unsupported_error : public error {
public:
  using error::error;
};

/// A caller invoked an operation without establishing its precondition.
class precondition_error : public error {
public:
  using error::error;
};

enum class graph_defect { self_loop, duplicate_edge, endpoint_out_of_range };

/// Rejected edge list; `defect()` tells which rule was broken.
class graph_error : public error {
public:
  graph_error(graph_defect defect, const std::string& what)
      : error(what), defect_(defect) {}
  graph_defect defect() const noexcept { return defect_; }

private:
  graph_defect defect_;
};

} // namespace degseq
