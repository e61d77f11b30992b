// File formats and structured output documents. All inputs are JSON with
// rationals written as "p/q" or integer strings; serialization is canonical
// (sorted keys, lowest-terms rationals, two-space indent, trailing newline),
// so serialize(parse(x)) is byte-identical for canonical inputs.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perfcert/bounds.hpp"
#include "perfcert/certify.hpp"
#include "perfcert/game.hpp"
#include "perfcert/lps.hpp"
#include "perfcert/polyform.hpp"
#include "perfcert/search.hpp"

namespace perfcert::io {

// --- parsing (throws ParseError naming file, line and field) ---

Game parse_game(const std::string& text, const std::string& filename);
Game load_game(const std::string& path);

MixedProfile parse_profile(const std::string& text, const std::string& filename,
                           const Game& game);
MixedProfile load_profile(const std::string& path, const Game& game);

LpsProfile parse_lps(const std::string& text, const std::string& filename,
                     const Game& game);
LpsProfile load_lps(const std::string& path, const Game& game);

PolyProfile parse_poly(const std::string& text, const std::string& filename,
                       const Game& game);
PolyProfile load_poly(const std::string& path, const Game& game);

// --- canonical serialization ---

std::string serialize_game(const Game& game);
std::string serialize_profile(const MixedProfile& profile);
std::string serialize_lps(const LpsProfile& profile);
std::string serialize_poly(const PolyProfile& profile);

// --- output documents ---

std::string bounds_document(const BoundSet& bounds,
                            const std::optional<CrudeBounds>& crude,
                            std::optional<int> crude_actions);

/// `explain` adds a plain-language description of what each condition
/// checks.
std::string verdict_document(const Game& game, const Verdict& verdict,
                             bool explain);

std::string search_document(const Game& game, const SearchOutcome& outcome,
                            const std::vector<std::pair<std::string, std::string>>& knobs);

std::string tremble_document(const Game& game, const TrembleReport& report);

}  // namespace perfcert::io
