#include "perfcert/game.hpp"

#include <algorithm>
#include <set>

namespace perfcert {

Game::Game(std::vector<std::string> players,
           std::vector<std::vector<std::string>> strategy_labels,
           std::vector<Rational> payoffs)
    : players_(std::move(players)),
      strategy_labels_(std::move(strategy_labels)),
      payoffs_(std::move(payoffs)) {
  if (players_.empty()) {
    throw InvalidInput("a game needs at least one player");
  }
  if (strategy_labels_.size() != players_.size()) {
    throw InvalidInput("strategy label lists must match the player list");
  }
  profile_count_ = 1;
  kappa_ = 0;
  for (std::size_t n = 0; n < players_.size(); ++n) {
    const auto& labels = strategy_labels_[n];
    if (labels.empty()) {
      throw InvalidInput("player " + players_[n] + " has no strategies");
    }
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size()) {
      throw InvalidInput("player " + players_[n] + " has duplicate strategy labels");
    }
    profile_count_ *= labels.size();
    kappa_ += static_cast<long>(labels.size());
  }
  if (payoffs_.size() != profile_count_ * players_.size()) {
    throw InvalidInput("payoff tensor has " + std::to_string(payoffs_.size()) +
                       " entries, expected " +
                       std::to_string(profile_count_ * players_.size()));
  }
}

std::size_t Game::flat_index(std::span<const int> profile) const {
  std::size_t idx = 0;
  for (int m = 0; m < player_count(); ++m) {
    idx = idx * strategy_count(m) + static_cast<std::size_t>(profile[m]);
  }
  return idx;
}

void Game::decode_profile(std::size_t flat, std::span<int> out) const {
  for (int m = player_count() - 1; m >= 0; --m) {
    const int dm = strategy_count(m);
    out[m] = static_cast<int>(flat % dm);
    flat /= dm;
  }
}

bool MixedProfile::is_probability_profile() const {
  for (const auto& row : rows_) {
    Rational sum = 0;
    for (const auto& p : row) {
      if (p < 0) return false;
      sum += p;
    }
    if (sum != 1) return false;
  }
  return true;
}

bool MixedProfile::is_completely_mixed() const {
  for (const auto& row : rows_) {
    for (const auto& p : row) {
      if (p <= 0) return false;
    }
  }
  return true;
}

void MixedProfile::check_dimensions(const Game& game) const {
  if (player_count() != game.player_count()) {
    throw DimensionMismatch(-1, "profile has " + std::to_string(player_count()) +
                                    " rows for a " +
                                    std::to_string(game.player_count()) +
                                    "-player game");
  }
  for (int n = 0; n < player_count(); ++n) {
    if (static_cast<int>(rows_[n].size()) != game.strategy_count(n)) {
      throw DimensionMismatch(
          n, "player " + game.player_names()[n] + " has " +
                 std::to_string(rows_[n].size()) + " entries, expected " +
                 std::to_string(game.strategy_count(n)));
    }
  }
}

namespace {

void check_vector_dims(const Game& game, int player,
                       const std::vector<std::vector<Rational>>& x,
                       bool own_required) {
  if (static_cast<int>(x.size()) != game.player_count()) {
    throw DimensionMismatch(-1, "expected one vector per player");
  }
  for (int m = 0; m < game.player_count(); ++m) {
    if (m == player && !own_required) continue;
    if (static_cast<int>(x[m].size()) != game.strategy_count(m)) {
      throw DimensionMismatch(
          m, "player " + game.player_names()[m] + " vector has " +
                 std::to_string(x[m].size()) + " entries, expected " +
                 std::to_string(game.strategy_count(m)));
    }
  }
}

}  // namespace

std::vector<Rational> payoff_vector(const Game& game, int player,
                                    const std::vector<std::vector<Rational>>& x) {
  check_vector_dims(game, player, x, /*own_required=*/false);
  return detail::contracted_payoffs<Rational>(
      game, player, [&](int m, int s) -> const Rational& { return x[m][s]; });
}

Rational multilinear_payoff(const Game& game, int player,
                            const std::vector<std::vector<Rational>>& x) {
  check_vector_dims(game, player, x, /*own_required=*/true);
  const std::vector<Rational> v = payoff_vector(game, player, x);
  Rational total = 0;
  for (int s = 0; s < game.strategy_count(player); ++s) {
    total += x[player][s] * v[s];
  }
  return total;
}

std::vector<int> best_reply_set(const Game& game, int player,
                                const std::vector<std::vector<Rational>>& opponents) {
  const std::vector<Rational> v = payoff_vector(game, player, opponents);
  const Rational best = *std::max_element(v.begin(), v.end());
  std::vector<int> replies;
  for (int s = 0; s < game.strategy_count(player); ++s) {
    if (v[s] == best) replies.push_back(s);
  }
  return replies;
}

NashReport check_nash(const Game& game, const MixedProfile& sigma) {
  sigma.check_dimensions(game);
  NashReport report;
  for (int n = 0; n < game.player_count(); ++n) {
    const std::vector<Rational> v = payoff_vector(game, n, sigma.rows());
    Rational own = 0;
    for (int s = 0; s < game.strategy_count(n); ++s) {
      own += sigma.row(n)[s] * v[s];
    }
    for (int s = 0; s < game.strategy_count(n); ++s) {
      if (own < v[s]) {
        report.is_nash = false;
        report.violating_player = n;
        report.violating_strategy = s;
        report.own_payoff = own;
        report.deviation_payoff = v[s];
        return report;
      }
    }
  }
  return report;
}

}  // namespace perfcert
