#pragma once

#include <string>
#include <vector>

#include "fractw/game.hpp"

namespace fractw {

// A replayable record of Bob's side of a game.
struct GameTranscript {
  GameConfig cfg;
  std::vector<BobMove> moves;
};

GameTranscript transcript_of(const GameRecord& rec);

// JSONL: a header line {"t":..,"omega":..}, then one line per Bob move
// {"v":..,"back":[..],"colors":[..]} with 1-indexed vertices. Lines written
// from a finished game also carry Alice's response as "phi"; the reader
// ignores it.
std::string transcript_to_jsonl(const GameRecord& rec);
GameTranscript transcript_from_jsonl(const std::string& text);
void write_transcript_file(const GameRecord& rec, const std::string& path);
GameTranscript read_transcript_file(const std::string& path);

}  // namespace fractw
