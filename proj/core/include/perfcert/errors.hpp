// Structured error types. Each carries the indices a caller needs to name
// the offending player/strategy/level in diagnostics.

#pragma once

#include <stdexcept>
#include <string>

namespace perfcert {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  int player;
  DimensionMismatch(int player_, const std::string& what)
      : Error(what), player(player_) {}
};

struct NotFullSupport : Error {
  int player;
  int strategy;
  NotFullSupport(int player_, int strategy_, const std::string& what)
      : Error(what), player(player_), strategy(strategy_) {}
};

struct LevelOutOfRange : Error {
  long level;
  long max_level;
  LevelOutOfRange(long level_, long max_level_, const std::string& what)
      : Error(what), level(level_), max_level(max_level_) {}
};

struct SinglePlayer : Error {
  using Error::Error;
};

struct ZeroCoordinate : Error {
  int player;
  int strategy;
  ZeroCoordinate(int player_, int strategy_, const std::string& what)
      : Error(what), player(player_), strategy(strategy_) {}
};

struct ModeMismatch : Error {
  using Error::Error;
};

struct DegreeTooSmall : Error {
  using Error::Error;
};

struct WrongPlayerCount : Error {
  using Error::Error;
};

struct OrderMismatch : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  unsigned long long requested;
  unsigned long long cap;
  BudgetExceeded(unsigned long long requested_, unsigned long long cap_,
                 const std::string& what)
      : Error(what), requested(requested_), cap(cap_) {}
};

struct InvalidInput : Error {
  using Error::Error;
};

// Parse/validation failure for an input document. `file` is the path (or a
// pseudo-name for in-memory input), `context` names the field or key.
struct ParseError : Error {
  std::string file;
  std::string context;
  int line;  // 1-based; 0 when unknown
  ParseError(std::string file_, std::string context_, int line_,
             const std::string& what)
      : Error(what),
        file(std::move(file_)),
        context(std::move(context_)),
        line(line_) {}
};

}  // namespace perfcert
