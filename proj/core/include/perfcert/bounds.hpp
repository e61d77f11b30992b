// Exact big-integer evaluation of the closed-form certificate-order bounds.
// The general-case constants are astronomically large by construction; all
// values here are exact cpp_int and are serialized as decimal digit strings.

#pragma once

#include <string>

#include "perfcert/errors.hpp"
#include "perfcert/game.hpp"
#include "perfcert/lps.hpp"
#include "perfcert/rational.hpp"

namespace perfcert {

enum class BoundMode { general, two_player, convex_P };

std::string to_string(BoundMode mode);
BoundMode bound_mode_from_string(const std::string& name);

struct BoundSet {
  Int kappa;   // total pure-strategy count
  Int d;       // player count minus one
  Int Z;       // (2d+6)(2d+5)^(kappa-1)
  Int D;       // 5(kappa(2d+4)+2)Z
  Int loj_L;   // d(6d-3)^(2 kappa - 1)
  Int ell;     // support-level bound
  Int K;       // best-reply order bound
  BoundMode mode = BoundMode::general;
  /// Set when d = 0 (one player): certification degenerates to plain exact
  /// maximization and ell = K = 0.
  bool degenerate = false;
};

/// Evaluates every constant for the game. In general mode,
/// ell = 2d(ZD)^2(1+Z) and K = loj_L * ell. two_player mode (requires N = 2,
/// else ModeMismatch) and convex_P mode (caller asserts the perturbation set
/// is convex, e.g. polymatrix) pin ell = K = 1.
BoundSet compute_bounds(const Game& game, BoundMode mode);

struct CrudeBounds {
  Int ell_bar;  // 100 N^3 a^2 (6aN)^(6aN)
  Int K_bar;    // (6N)^(2aN) ell_bar
};

/// Closed-form upper bounds for an N-player game where every player has
/// exactly `a` actions. Requires N >= 2, a >= 1.
CrudeBounds crude_bounds(int players, int actions);

/// The adaptive best-reply order: support_level(rho) * loj_L. Sound in place
/// of the fixed K. Throws NotFullSupport via support_level.
Int adaptive_K(const LpsProfile& rho, const BoundSet& bounds);

/// Standalone exponent estimate degree*(6*degree-3)^(dim-1) for a polynomial
/// map of the given degree in `dim` variables. Requires degree >= 2 (throws
/// DegreeTooSmall). Note compute_bounds' loj_L uses the doubled-variable
/// exponent 2*kappa-1 instead.
Int loj_exponent_bound(const Int& degree, const Int& dim);

}  // namespace perfcert
