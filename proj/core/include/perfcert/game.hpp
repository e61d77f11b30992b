// Finite normal-form games with exact rational payoffs, and the multilinear
// extension of expected payoffs to arbitrary per-player real vectors.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "perfcert/errors.hpp"
#include "perfcert/rational.hpp"

namespace perfcert {

/// An N-player game in normal form. Payoffs are stored densely, one exact
/// rational per (pure profile, player) pair, in row-major pure-profile
/// order (the last player's strategy index varies fastest).
///
/// Immutable after construction; all operations on it are pure functions.
class Game {
 public:
  /// `payoffs` is flattened as payoffs[flat_profile * N + player].
  Game(std::vector<std::string> players,
       std::vector<std::vector<std::string>> strategy_labels,
       std::vector<Rational> payoffs);

  int player_count() const { return static_cast<int>(players_.size()); }
  int strategy_count(int player) const {
    return static_cast<int>(strategy_labels_[player].size());
  }
  const std::vector<std::string>& player_names() const { return players_; }
  const std::vector<std::vector<std::string>>& strategy_labels() const {
    return strategy_labels_;
  }

  std::size_t profile_count() const { return profile_count_; }

  /// kappa: total number of pure strategies across players.
  long strategy_count_sum() const { return kappa_; }
  /// d: number of players minus one.
  int degree() const { return player_count() - 1; }

  std::size_t flat_index(std::span<const int> profile) const;
  void decode_profile(std::size_t flat, std::span<int> out) const;

  const Rational& payoff(std::size_t flat_profile, int player) const {
    return payoffs_[flat_profile * players_.size() + player];
  }
  const Rational& payoff(std::span<const int> profile, int player) const {
    return payoff(flat_index(profile), player);
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategy_labels_;
  std::vector<Rational> payoffs_;
  std::size_t profile_count_;
  long kappa_;
};

/// One vector of exact rationals per player, indexed like the player's
/// strategy list. Used both for probability profiles and for arbitrary
/// points of the multilinear extension's domain.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<std::vector<Rational>> rows)
      : rows_(std::move(rows)) {}

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  std::vector<std::vector<Rational>>& rows() { return rows_; }
  const std::vector<Rational>& row(int player) const { return rows_[player]; }

  int player_count() const { return static_cast<int>(rows_.size()); }

  /// Every row sums to exactly 1 with non-negative entries.
  bool is_probability_profile() const;
  /// Every entry strictly positive.
  bool is_completely_mixed() const;

  /// Throws DimensionMismatch naming the first offending player.
  void check_dimensions(const Game& game) const;

  bool operator==(const MixedProfile&) const = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

namespace detail {

// Contracts the payoff tensor of `player` against per-player coordinate
// vectors, leaving the player's own dimension free. V must be a ring value
// constructible from Rational (Rational itself, or a polynomial type).
// `coord(m, s)` yields the coordinate of player m at strategy s; it is never
// called with m == player. Cost is O(profile_count) ring multiplications.
template <class V, class Coord>
std::vector<V> contracted_payoffs(const Game& game, int player, Coord&& coord) {
  const int n = game.player_count();
  std::vector<V> acc(game.profile_count());
  for (std::size_t p = 0; p < game.profile_count(); ++p) {
    acc[p] = V(game.payoff(p, player));
  }
  // Fold out trailing dimensions m > player; the last dimension varies
  // fastest, so each pass contracts contiguous blocks.
  std::size_t len = acc.size();
  for (int m = n - 1; m > player; --m) {
    const int dm = game.strategy_count(m);
    const std::size_t out_len = len / dm;
    std::vector<V> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
      V cell{};
      for (int s = 0; s < dm; ++s) {
        cell += acc[i * dm + s] * coord(m, s);
      }
      out[i] = std::move(cell);
    }
    acc = std::move(out);
    len = out_len;
  }
  // Remaining shape is (d_0, ..., d_player); fold out the leading
  // dimensions, keeping the player's own dimension as the inner stride.
  const std::size_t inner = static_cast<std::size_t>(game.strategy_count(player));
  for (int m = player - 1; m >= 0; --m) {
    const int dm = game.strategy_count(m);
    const std::size_t out_len = len / dm;
    std::vector<V> out(out_len);
    for (std::size_t a = 0; a < out_len / inner; ++a) {
      for (std::size_t r = 0; r < inner; ++r) {
        V cell{};
        for (int s = 0; s < dm; ++s) {
          cell += acc[(a * dm + s) * inner + r] * coord(m, s);
        }
        out[a * inner + r] = std::move(cell);
      }
    }
    acc = std::move(out);
    len = out_len;
  }
  return acc;
}

}  // namespace detail

/// Expected payoff of each of `player`'s pure strategies when every other
/// player m plays the (arbitrary rational) vector x[m]. x[player] is ignored.
std::vector<Rational> payoff_vector(const Game& game, int player,
                                    const std::vector<std::vector<Rational>>& x);

/// The unique multilinear extension of `player`'s payoff evaluated at x
/// (one arbitrary rational vector per player, including x[player]).
Rational multilinear_payoff(const Game& game, int player,
                            const std::vector<std::vector<Rational>>& x);

/// Pure strategies of `player` maximizing payoff against the opponents'
/// probability vectors. Exact comparisons; ties all included, ascending.
std::vector<int> best_reply_set(const Game& game, int player,
                                const std::vector<std::vector<Rational>>& opponents);

struct NashReport {
  bool is_nash = true;
  // First violation found, scanning players then strategies in order.
  int violating_player = -1;
  int violating_strategy = -1;
  Rational own_payoff;
  Rational deviation_payoff;
};

/// Exact Nash check: for every player n and pure s_n, the profile's own
/// payoff is >= the payoff from deviating to s_n.
NashReport check_nash(const Game& game, const MixedProfile& sigma);

inline bool is_nash(const Game& game, const MixedProfile& sigma) {
  return check_nash(game, sigma).is_nash;
}

}  // namespace perfcert
