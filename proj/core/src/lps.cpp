#include "perfcert/lps.hpp"

#include <string>

namespace perfcert {

Lps::Lps(std::vector<std::vector<Rational>> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) {
    throw InvalidInput("an LPS needs at least one level");
  }
  const std::size_t width = levels_[0].size();
  if (width == 0) {
    throw InvalidInput("an LPS level cannot be empty");
  }
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const auto& level = levels_[k];
    if (level.size() != width) {
      throw InvalidInput("LPS level " + std::to_string(k) +
                         " has inconsistent length");
    }
    Rational sum = 0;
    for (const auto& p : level) {
      if (p < 0) {
        throw InvalidInput("LPS level " + std::to_string(k) +
                           " has a negative entry");
      }
      sum += p;
    }
    if (sum != 1) {
      throw InvalidInput("LPS level " + std::to_string(k) + " sums to " +
                         to_fraction_string(sum) + ", expected 1");
    }
  }
}

LpsProfile::LpsProfile(std::vector<Lps> per_player)
    : per_player_(std::move(per_player)) {
  if (per_player_.empty()) {
    throw InvalidInput("an LPS profile needs at least one player");
  }
  order_ = per_player_[0].order();
  for (std::size_t n = 1; n < per_player_.size(); ++n) {
    if (per_player_[n].order() != order_) {
      throw InvalidInput("player " + std::to_string(n) + " declares order " +
                         std::to_string(per_player_[n].order()) +
                         " but player 0 declares " + std::to_string(order_));
    }
  }
}

MixedProfile LpsProfile::level_zero() const {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(per_player_.size());
  for (const auto& lps : per_player_) rows.push_back(lps.level(0));
  return MixedProfile(std::move(rows));
}

long support_level(const Lps& lps, int player_for_errors) {
  long worst = 0;
  for (int s = 0; s < lps.support_size(); ++s) {
    long first = -1;
    for (long k = 0; k <= lps.order(); ++k) {
      if (lps.level(k)[s] > 0) {
        first = k;
        break;
      }
    }
    if (first < 0) {
      throw NotFullSupport(player_for_errors, s,
                           "strategy " + std::to_string(s) +
                               " receives no mass at any level");
    }
    worst = std::max(worst, first);
  }
  return worst;
}

long support_level(const LpsProfile& profile) {
  long worst = 0;
  for (int n = 0; n < profile.player_count(); ++n) {
    worst = std::max(worst, support_level(profile.player(n), n));
  }
  return worst;
}

namespace {

void compositions_rec(int parts, long max_level, long total,
                      std::vector<long>& current, int pos,
                      const std::function<void(const std::vector<long>&)>& visit) {
  if (pos == parts) {
    if (total == 0) visit(current);
    return;
  }
  const long remaining_capacity = static_cast<long>(parts - pos - 1) * max_level;
  const long lo = std::max<long>(0, total - remaining_capacity);
  const long hi = std::min<long>(max_level, total);
  for (long v = lo; v <= hi; ++v) {
    current[pos] = v;
    compositions_rec(parts, max_level, total - v, current, pos + 1, visit);
  }
}

}  // namespace

void for_each_composition(int parts, long max_level, long total,
                          const std::function<void(const std::vector<long>&)>& visit) {
  if (total < 0) return;
  if (parts == 0) {
    if (total == 0) {
      std::vector<long> empty;
      visit(empty);
    }
    return;
  }
  std::vector<long> current(parts, 0);
  compositions_rec(parts, max_level, total, current, 0, visit);
}

Int composition_count(int parts, long max_level, long total) {
  Int count = 0;
  for_each_composition(parts, max_level, total,
                       [&](const std::vector<long>&) { ++count; });
  return count;
}

namespace {

std::vector<int> opponent_indices(const Game& game, int player) {
  std::vector<int> opponents;
  for (int m = 0; m < game.player_count(); ++m) {
    if (m != player) opponents.push_back(m);
  }
  return opponents;
}

void check_level_range(const Game& game, const LpsProfile& profile, long k) {
  const long max_level = profile.order() * (game.player_count() - 1);
  if (k < 0 || k > max_level) {
    throw LevelOutOfRange(k, max_level,
                          "belief level " + std::to_string(k) +
                              " outside [0, " + std::to_string(max_level) + "]");
  }
}

}  // namespace

InducedBelief induced_belief(const Game& game, const LpsProfile& profile,
                             int player, long k) {
  if (game.player_count() == 1) {
    throw SinglePlayer("induced beliefs are undefined in a one-player game");
  }
  check_level_range(game, profile, k);
  const std::vector<int> opponents = opponent_indices(game, player);

  std::size_t profile_size = 1;
  for (int m : opponents) profile_size *= game.strategy_count(m);

  InducedBelief belief;
  belief.level = k;
  belief.opponents = opponents;
  belief.distribution.assign(profile_size, Rational(0));

  Int assignments = 0;
  for_each_composition(
      static_cast<int>(opponents.size()), profile.order(), k,
      [&](const std::vector<long>& levels) {
        ++assignments;
        // Accumulate the product distribution of the chosen levels,
        // row-major over opponents in increasing player order.
        for (std::size_t flat = 0; flat < profile_size; ++flat) {
          Rational mass = 1;
          std::size_t rest = flat;
          for (std::size_t j = opponents.size(); j-- > 0;) {
            const int m = opponents[j];
            const std::size_t s = rest % game.strategy_count(m);
            rest /= game.strategy_count(m);
            mass *= profile.player(m).level(levels[j])[s];
            if (mass == 0) break;
          }
          belief.distribution[flat] += mass;
        }
      });

  belief.normalizer = Rational(1, assignments);
  for (auto& p : belief.distribution) p *= belief.normalizer;
  return belief;
}

std::vector<Rational> belief_payoff_vector(const Game& game,
                                           const LpsProfile& profile,
                                           int player, long k) {
  check_level_range(game, profile, k);
  const std::vector<int> opponents = opponent_indices(game, player);
  std::vector<Rational> acc(game.strategy_count(player), Rational(0));
  Int assignments = 0;
  for_each_composition(
      static_cast<int>(opponents.size()), profile.order(), k,
      [&](const std::vector<long>& levels) {
        ++assignments;
        const std::vector<Rational> v = detail::contracted_payoffs<Rational>(
            game, player, [&](int m, int s) -> const Rational& {
              // Map the player index to its position among the opponents:
              // opponents are the players in increasing order with `player`
              // removed, so the position is m when m < player, m-1 after.
              const int j = m < player ? m : m - 1;
              return profile.player(m).level(levels[j])[s];
            });
        for (int s = 0; s < game.strategy_count(player); ++s) acc[s] += v[s];
      });
  const Rational normalizer(1, assignments);
  for (auto& a : acc) a *= normalizer;
  return acc;
}

LexBestReplyResult lex_best_reply(const Game& game, const LpsProfile& profile,
                                  int player, const std::vector<Rational>& tau,
                                  long k) {
  check_level_range(game, profile, k);
  if (static_cast<int>(tau.size()) != game.strategy_count(player)) {
    throw DimensionMismatch(player, "tau has " + std::to_string(tau.size()) +
                                        " entries, expected " +
                                        std::to_string(game.strategy_count(player)));
  }
  // Level-major scan with early resolution: once tau strictly beats a pure
  // strategy at some level, deeper levels cannot change that comparison.
  std::vector<int> unresolved;
  for (int s = 0; s < game.strategy_count(player); ++s) unresolved.push_back(s);

  for (long level = 0; level <= k && !unresolved.empty(); ++level) {
    const std::vector<Rational> v = belief_payoff_vector(game, profile, player, level);
    Rational own = 0;
    for (int s = 0; s < game.strategy_count(player); ++s) own += tau[s] * v[s];

    std::vector<int> still_tied;
    for (int s : unresolved) {
      if (own > v[s]) continue;  // resolved in tau's favor
      if (own < v[s]) {
        return {false, s, level};
      }
      still_tied.push_back(s);
    }
    unresolved = std::move(still_tied);
  }
  // Ties through level k count as lexicographically >=.
  return {};
}

}  // namespace perfcert
