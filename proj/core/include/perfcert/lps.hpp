// Lexicographic probability systems over strategy sets, the beliefs they
// induce over opponent profiles, and lexicographic best-reply tests.

#pragma once

#include <functional>
#include <vector>

#include "perfcert/errors.hpp"
#include "perfcert/game.hpp"
#include "perfcert/rational.hpp"

namespace perfcert {

/// An ordered (K+1)-tuple of probability distributions over one player's
/// strategy set. Level 0 is infinitely more likely than level 1, and so on.
class Lps {
 public:
  /// Validates each level: non-negative entries summing to exactly 1, all
  /// levels the same length. Throws InvalidInput otherwise.
  explicit Lps(std::vector<std::vector<Rational>> levels);

  long order() const { return static_cast<long>(levels_.size()) - 1; }
  int support_size() const { return static_cast<int>(levels_[0].size()); }
  const std::vector<Rational>& level(long k) const { return levels_[k]; }
  const std::vector<std::vector<Rational>>& levels() const { return levels_; }

  bool operator==(const Lps&) const = default;

 private:
  std::vector<std::vector<Rational>> levels_;
};

/// One Lps per player, all of the same order K.
class LpsProfile {
 public:
  /// Throws InvalidInput unless all players declare the same order.
  explicit LpsProfile(std::vector<Lps> per_player);

  long order() const { return order_; }
  int player_count() const { return static_cast<int>(per_player_.size()); }
  const Lps& player(int n) const { return per_player_[n]; }
  const std::vector<Lps>& players() const { return per_player_; }

  /// Level-0 vectors as a MixedProfile.
  MixedProfile level_zero() const;

  bool operator==(const LpsProfile&) const = default;

 private:
  std::vector<Lps> per_player_;
  long order_ = 0;
};

/// Worst case over players of the first level by which the cumulative
/// support covers the player's whole strategy set. Throws NotFullSupport
/// naming the first player/strategy never reached.
long support_level(const LpsProfile& profile);

/// Same scan for a single player's system.
long support_level(const Lps& lps, int player_for_errors = -1);

struct InducedBelief {
  long level = 0;
  /// Distribution over opponent pure profiles, indexed row-major over the
  /// opponents in increasing player order.
  std::vector<Rational> distribution;
  /// 1 / (number of bounded compositions of `level` across the opponents).
  Rational normalizer;
  /// Opponent player indices, increasing.
  std::vector<int> opponents;
};

/// Materializes the level-k belief of player n over opponent profiles: the
/// normalized sum, over all opponent level assignments (k_m) with
/// 0 <= k_m <= K and sum k, of the product distribution of the chosen
/// levels. Throws SinglePlayer when the game has one player and
/// LevelOutOfRange when k > K(N-1).
InducedBelief induced_belief(const Game& game, const LpsProfile& profile,
                             int player, long k);

/// Number of opponent level assignments with entries in [0, max_level]
/// summing to `total` (the reciprocal of the belief normalizer). Counted by
/// the same enumeration the belief materialization walks.
Int composition_count(int parts, long max_level, long total);

/// Enumerates bounded compositions in lexicographic order, invoking `visit`
/// for each. Exposed for deterministic-diagnostic tests.
void for_each_composition(int parts, long max_level, long total,
                          const std::function<void(const std::vector<long>&)>& visit);

/// Expected payoff of each pure strategy of `player` against the level-k
/// induced belief. Computed as the normalized sum of per-assignment
/// contracted payoffs; the exponentially sized product distribution is never
/// materialized here. For a one-player game, level 0 returns the player's
/// raw payoff vector (the empty product is the single empty profile).
std::vector<Rational> belief_payoff_vector(const Game& game,
                                           const LpsProfile& profile,
                                           int player, long k);

struct LexBestReplyResult {
  bool ok = true;
  // On failure: first pure strategy whose payoff vector lexicographically
  // beats tau's, and the level of the strict reversal. Scanning is
  // level-major, strategies ascending, so diagnostics are deterministic.
  int violating_strategy = -1;
  long violating_level = -1;
};

/// True iff tau's payoff vector (levels 0..k of induced beliefs) is
/// lexicographically >= that of every pure strategy of `player`. Ties
/// through level k count as passing.
LexBestReplyResult lex_best_reply(const Game& game, const LpsProfile& profile,
                                  int player, const std::vector<Rational>& tau,
                                  long k);

}  // namespace perfcert
