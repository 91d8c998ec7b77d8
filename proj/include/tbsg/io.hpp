#pragma once

#include "tbsg/game.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tbsg {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// Strict parser for the line-oriented game format. '#' starts a comment.
/// Throws ParseError with the offending line number.
Game parse_game(std::istream& in);
Game parse_game_string(const std::string& text);
Game load_game(const std::string& path);

/// Canonical serialization; floats at 17 significant digits so that
/// parse(serialize(g)) reproduces g bit for bit.
std::string serialize_game(const Game& g);
void save_game(const Game& g, const std::string& path);

}  // namespace tbsg
