#include "fractw/error.hpp"

namespace fractw {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_params: return "BadParams";
    case Errc::bad_range: return "BadRange";
    case Errc::too_large: return "TooLarge";
    case Errc::size_guard: return "SizeGuard";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::insufficient_measure: return "InsufficientMeasure";
    case Errc::not_a_clique: return "NotAClique";
    case Errc::blue_clique_violation: return "BlueCliqueViolation";
    case Errc::game_over: return "GameOver";
    case Errc::wrong_measure: return "WrongMeasure";
    case Errc::blue_conflict: return "BlueConflict";
    case Errc::illegal_coloring: return "IllegalColoring";
    case Errc::palette_exhausted: return "PaletteExhausted";
    case Errc::claim_violated: return "ClaimViolated";
    case Errc::witness_invalid: return "WitnessInvalid";
    case Errc::clique_too_large: return "CliqueTooLarge";
    case Errc::no_extension: return "NoExtension";
    case Errc::missing_base: return "MissingBase";
    case Errc::forfeit: return "Forfeit";
  }
  return "Unknown";
}

}  // namespace fractw
