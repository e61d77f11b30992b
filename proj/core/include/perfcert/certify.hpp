// The verdict engine: exact verification of LPS certificates (full support
// within ell, anchored at sigma, lexicographic best reply of order K) and of
// polynomial certificates (series-positive coordinates within ell, anchored
// at sigma, series best reply of order K).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perfcert/bounds.hpp"
#include "perfcert/game.hpp"
#include "perfcert/lps.hpp"
#include "perfcert/polyform.hpp"

namespace perfcert {

enum class KMode { fixed_K, adaptive_K };

std::string to_string(KMode mode);
KMode k_mode_from_string(const std::string& name);

struct ConditionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerdictDiagnostics {
  int player = -1;
  int strategy = -1;
  std::optional<Int> level;  // level (LPS) or series order (polynomial)
  std::string message;
};

struct Verdict {
  bool accepted = false;
  KMode mode = KMode::fixed_K;
  std::vector<ConditionResult> conditions;
  std::optional<VerdictDiagnostics> diagnostics;  // first violation, if any
  /// A rejection says only that this certificate fails; it never establishes
  /// that sigma is imperfect.
  bool rejection_is_certificate_specific = true;
  BoundSet bounds;
  Int k_effective;  // fixed K or the adaptive substitute, before capping
  Int k_tested;     // after capping at (certificate order) * (N - 1)
  bool k_capped = false;

  const ConditionResult* condition(const std::string& name) const;
};

/// Verifies an LPS certificate for sigma. Checks, in order: full support
/// with support level <= bounds.ell; level-0 vectors equal to sigma exactly;
/// sigma_n a lexicographic best reply of the effective order for every
/// player. The effective order is bounds.K (fixed_K) or
/// support_level(rho) * loj_L (adaptive_K), capped at K(N-1) where K is the
/// certificate's own order (induced beliefs end there; the cap is recorded).
/// Acceptance certifies sigma perfect. Throws OrderMismatch when the
/// certificate's order exceeds bounds.K.
Verdict verify_lps_certificate(const Game& game, const MixedProfile& sigma,
                               const LpsProfile& rho, const BoundSet& bounds,
                               KMode mode);

/// Verifies a polynomial certificate: every coordinate series-positive and
/// map order <= bounds.ell; eta(0) = sigma exactly; sigma_n a best reply of
/// order bounds.K against eta for every player (exact big-integer order
/// comparisons). Acceptance certifies sigma perfect.
Verdict verify_poly_certificate(const Game& game, const MixedProfile& sigma,
                                const PolyProfile& eta, const BoundSet& bounds);

}  // namespace perfcert
