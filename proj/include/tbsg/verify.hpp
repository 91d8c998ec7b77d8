#pragma once

#include "tbsg/game.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tbsg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
};

/// Known check names: validate, flux, signs, algorithms, contraction,
/// transform. An empty selection runs all of them.
///
/// The suite needs the brute-force oracle, so the game must be small
/// enough to enumerate; oversized or otherwise unusable inputs come back
/// as failed checks rather than exceptions.
std::vector<CheckResult> run_verification(const Game& g, std::uint64_t seed,
                                          const std::vector<std::string>& checks = {});

}  // namespace tbsg
