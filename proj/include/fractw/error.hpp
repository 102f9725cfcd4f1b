#pragma once

#include <stdexcept>
#include <string>

namespace fractw {

enum class Errc {
  bad_params,
  bad_range,
  too_large,
  size_guard,
  parse_error,
  io_error,
  insufficient_measure,
  not_a_clique,
  blue_clique_violation,
  game_over,
  wrong_measure,
  blue_conflict,
  illegal_coloring,
  palette_exhausted,
  claim_violated,
  witness_invalid,
  clique_too_large,
  no_extension,
  missing_base,
  forfeit,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fractw
