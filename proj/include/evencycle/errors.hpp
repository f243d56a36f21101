#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evencycle/vertex_set.hpp"

namespace evencycle {

/// Ordered vertex sequence v0..v{k-1}, closing edge v{k-1}v0 implied.
struct Cycle {
  std::vector<Vertex> verts;

  int length() const { return static_cast<int>(verts.size()); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Ordered vertex sequence; length counts edges.
struct Path {
  std::vector<Vertex> verts;

  int order() const { return static_cast<int>(verts.size()); }
  int length() const { return order() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// graph-core input errors

class MalformedRecord : public Error {
public:
  using Error::Error;
};

class UnsupportedSize : public Error {
public:
  using Error::Error;
};

class LoopEdge : public Error {
public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
public:
  using Error::Error;
};

class InvalidCycle : public Error {
public:
  using Error::Error;
};

class NotAHole : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::uint64_t partial, std::uint64_t guard)
      : Error("operation budget exceeded after " + std::to_string(partial) +
              " steps (guard " + std::to_string(guard) + ")"),
        partial_count(partial), guard_value(guard) {}

  std::uint64_t partial_count;
  std::uint64_t guard_value;
};

/// A 4-cycle turned up where the caller required C4-freeness.
class FoundC4 : public Error {
public:
  explicit FoundC4(Cycle c) : Error("graph contains a 4-cycle"), witness(std::move(c)) {}
  Cycle witness;
};

/// Why a checked operation refused to run, with whatever witness disproves the
/// precondition.
class PreconditionFailed : public Error {
public:
  enum class Kind { HasC4, HasC8, LowDegree, HasInducedP10, NotGoodHole, BadIndex, Other };

  PreconditionFailed(Kind k, std::string what) : Error(std::move(what)), kind(k) {}
  PreconditionFailed(Kind k, std::string what, Cycle c)
      : Error(std::move(what)), kind(k), cycle(std::move(c)) {}
  PreconditionFailed(Kind k, std::string what, Path p)
      : Error(std::move(what)), kind(k), path(std::move(p)) {}
  PreconditionFailed(Kind k, std::string what, Vertex v)
      : Error(std::move(what)), kind(k), vertex(v) {}

  Kind kind;
  std::optional<Cycle> cycle;
  std::optional<Path> path;
  std::optional<Vertex> vertex;
};

/// The graph has no hole of length >= 5. Carries the reason a C4-free graph
/// with minimum degree >= 3 would have had one.
class NoLongHole : public Error {
public:
  NoLongHole(std::optional<Cycle> c4, std::optional<Vertex> low)
      : Error("graph has no hole of length >= 5"), c4_witness(std::move(c4)),
        low_degree_vertex(low) {}

  std::optional<Cycle> c4_witness;
  std::optional<Vertex> low_degree_vertex;
};

/// A structural lemma failed on an input whose preconditions were verified.
/// This is never expected; callers serialize a counterexample bundle.
class LemmaViolation : public Error {
public:
  LemmaViolation(std::string lemma, std::string detail)
      : Error(lemma + ": " + detail), lemma_id(std::move(lemma)) {}

  std::string lemma_id;
};

/// classify found no certificate at all.
class TheoremViolation : public Error {
public:
  TheoremViolation() : Error("no certificate: graph would refute the theorem") {}
};

} // namespace evencycle
