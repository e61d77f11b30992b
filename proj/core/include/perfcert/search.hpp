// Certificate construction and independent evidence gathering: the exact
// LP-based linear-path certifier for two-player games (sound and complete),
// a seeded heuristic linear-path search for any player count, exhaustive
// small-order grid search, and a direct grid-tremble oracle.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfcert/certify.hpp"
#include "perfcert/game.hpp"
#include "perfcert/lps.hpp"
#include "perfcert/polyform.hpp"
#include "perfcert/rational.hpp"

namespace perfcert {

/// A completely mixed profile against which sigma is a weak best reply for
/// every player, together with its smallest coordinate.
struct FeasibleInterior {
  MixedProfile tau_star;
  Rational margin;
};

enum class SearchStatus { certificate_found, certified_imperfect, inconclusive };

std::string to_string(SearchStatus status);

struct ImperfectionEvidence {
  int player = -1;           // trembling player whose program failed
  bool lp_infeasible = false;
  Rational delta_star;       // optimal interior margin (when feasible)
  /// LP row multipliers: the dual optimum proving delta <= delta_star, or
  /// the Farkas ray on infeasibility.
  std::vector<Rational> row_multipliers;
  std::string note;
};

struct ExhaustionRecord {
  unsigned long long candidates_tested = 0;
  unsigned long long candidates_total = 0;
  std::string note;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<LpsProfile> lps_certificate;
  std::optional<PolyProfile> poly_certificate;
  std::optional<FeasibleInterior> witness;
  std::optional<Verdict> lps_verdict;   // re-verification of the emitted pair
  std::optional<Verdict> poly_verdict;
  std::optional<ImperfectionEvidence> imperfection;
  std::optional<ExhaustionRecord> exhaustion;
  std::string note;
};

/// Two-player certifier. Solves, per trembling player, the exact program
///   maximize delta  s.t.  tau in the simplex, tau >= delta on every
///   coordinate, and the opponent's payoff-difference inequalities hold;
/// a positive optimum for both players yields tau* and the verified
/// certificates eta(t) = (1-t)sigma + t tau* and (sigma_n, tau*_n). A
/// non-positive optimum (or infeasibility) proves no completely mixed
/// tremble supports sigma, which for two players is conclusive: the
/// perturbation set is a product of polytopes, so a degree-one path exists
/// whenever any certificate does. Throws WrongPlayerCount unless N = 2.
SearchOutcome find_linear_certificate_2p(const Game& game,
                                         const MixedProfile& sigma);

/// Seeded sampling of completely mixed profiles near sigma (shrinking
/// rational radius). Each candidate in the perturbation set is turned into
/// a linear-path certificate and accepted only if both verifiers pass it at
/// the general-mode bounds. Never claims imperfection.
SearchOutcome heuristic_linear_certificate(const Game& game,
                                           const MixedProfile& sigma,
                                           int samples, std::uint64_t seed);

/// Exhaustive enumeration of LPS certificates with level 0 pinned to sigma
/// and levels 1..k_small drawn from the simplex grid with the given
/// denominator. Returns the first verified certificate, or an exhaustion
/// record (never certified_imperfect: the grid is not complete). Throws
/// BudgetExceeded when the enumeration would exceed `enumeration_cap`.
SearchOutcome exhaustive_small_search(const Game& game, const MixedProfile& sigma,
                                      int k_small, int grid_denominator,
                                      unsigned long long enumeration_cap = 250000);

struct TrembleReport {
  struct Entry {
    Rational epsilon;
    bool satisfied = false;
    std::optional<MixedProfile> tremble;  // first witness found
  };
  std::vector<Entry> entries;
  int grid_denominator = 0;
  bool all_satisfied = false;
};

/// Direct tremble test: for each epsilon, searches the simplex grid for a
/// completely mixed profile within max-norm epsilon of sigma against which
/// every player's sigma_n is an exact weak best reply. All-true reports
/// across shrinking epsilon are perfection evidence, not proof; definitive
/// verdicts are reserved for the two-player certifier.
TrembleReport grid_tremble_oracle(const Game& game, const MixedProfile& sigma,
                                  const std::vector<Rational>& epsilons,
                                  int grid_denominator);

}  // namespace perfcert
