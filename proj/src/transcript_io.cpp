#include "fractw/transcript.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fractw/error.hpp"

namespace fractw {

using nlohmann::json;

GameTranscript transcript_of(const GameRecord& rec) {
  GameTranscript tr;
  tr.cfg = rec.cfg;
  tr.moves.reserve(rec.moves.size());
  for (const auto& mv : rec.moves) tr.moves.push_back(mv.move);
  return tr;
}

std::string transcript_to_jsonl(const GameRecord& rec) {
  std::ostringstream out;
  json header;
  header["t"] = rec.cfg.t;
  header["omega"] = rec.cfg.omega;
  out << header.dump() << '\n';
  for (const auto& mv : rec.moves) {
    json line;
    line["v"] = mv.vertex + 1;
    json back = json::array();
    for (int u : mv.move.back) back.push_back(u + 1);
    line["back"] = std::move(back);
    json colors = json::array();
    for (EdgeColor c : mv.move.colors)
      colors.push_back(std::string(1, edge_color_char(c)));
    line["colors"] = std::move(colors);
    json phi = json::array();
    for (const Interval& iv : mv.phi.intervals())
      phi.push_back(json::array({rat_str(iv.lo), rat_str(iv.hi)}));
    line["phi"] = std::move(phi);
    out << line.dump() << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  fail(Errc::parse_error, "transcript line " + std::to_string(lineno) + ": " + what);
}

json parse_line(std::size_t lineno, const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) bad_line(lineno, "malformed JSON object");
  return j;
}

int take_int(std::size_t lineno, const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    bad_line(lineno, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

GameTranscript transcript_from_jsonl(const std::string& text) {
  GameTranscript tr;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_line(lineno, line);
    if (!have_header) {
      tr.cfg.t = take_int(lineno, j, "t");
      tr.cfg.omega = take_int(lineno, j, "omega");
      tr.cfg.validate();
      have_header = true;
      continue;
    }
    int v = take_int(lineno, j, "v");
    int expected = tr.cfg.t + static_cast<int>(tr.moves.size()) + 1;
    if (v != expected)
      bad_line(lineno, "vertex " + std::to_string(v) + " out of order (expected " +
                           std::to_string(expected) + ")");
    if (!j.contains("back") || !j["back"].is_array()) bad_line(lineno, "missing \"back\" array");
    if (!j.contains("colors") || !j["colors"].is_array())
      bad_line(lineno, "missing \"colors\" array");
    BobMove mv;
    for (const auto& e : j["back"]) {
      if (!e.is_number_integer()) bad_line(lineno, "non-integer back vertex");
      int u = e.get<int>();
      if (u < 1 || u >= v) bad_line(lineno, "back vertex " + std::to_string(u) + " out of range");
      mv.back.push_back(u - 1);
    }
    for (const auto& e : j["colors"]) {
      if (!e.is_string() || e.get<std::string>().size() != 1)
        bad_line(lineno, "colors entries must be single characters");
      mv.colors.push_back(edge_color_from_char(e.get<std::string>()[0]));
    }
    if (mv.colors.size() != mv.back.size()) bad_line(lineno, "back/colors length mismatch");
    tr.moves.push_back(std::move(mv));
  }
  if (!have_header) fail(Errc::parse_error, "transcript has no header line");
  return tr;
}

void write_transcript_file(const GameRecord& rec, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << transcript_to_jsonl(rec);
  if (!out) fail(Errc::io_error, "write to " + path + " failed");
}

GameTranscript read_transcript_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return transcript_from_jsonl(buf.str());
}

}  // namespace fractw
