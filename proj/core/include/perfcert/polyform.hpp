// Univariate polynomials with exact rational coefficients, polynomial
// strategy profiles (curves through strategy space), the order/sign calculus
// of formal series, and conversions between polynomial and LPS certificates.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "perfcert/game.hpp"
#include "perfcert/lps.hpp"
#include "perfcert/rational.hpp"

namespace perfcert {

/// Dense univariate polynomial, ascending coefficients, trailing zeros
/// stripped. The zero polynomial is the empty coefficient list.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& constant);  // NOLINT: implicit by design
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly monomial(std::size_t k, const Rational& coefficient);

  bool is_zero() const { return c_.empty(); }
  /// Degree; 0 for the zero polynomial by convention.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  /// Coefficient of t^k (0 beyond the degree).
  const Rational& coeff(std::size_t k) const;

  Rational operator()(const Rational& t) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& scalar);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  RatPoly operator-() const;

  bool operator==(const RatPoly&) const = default;

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Order of a formal series: index of the first nonzero coefficient, with a
/// distinguished infinite value for the zero polynomial.
struct SeriesOrder {
  bool infinite = false;
  std::size_t value = 0;  // meaningful only when !infinite

  static SeriesOrder at(std::size_t k) { return {false, k}; }
  static SeriesOrder infinity() { return {true, 0}; }

  bool operator==(const SeriesOrder&) const = default;

  friend bool operator<(const SeriesOrder& a, const SeriesOrder& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const SeriesOrder& a, const SeriesOrder& b) {
    return a == b || a < b;
  }

  /// Exact comparison against an arbitrary-precision threshold; infinity
  /// exceeds every integer.
  bool at_least(const Int& threshold) const {
    return infinite || Int(value) >= threshold;
  }

  std::string to_string() const;
};

SeriesOrder order(const RatPoly& f);

enum class SeriesSign { negative, zero, positive };

/// Sign of the leading-order coefficient; zero for the zero polynomial.
/// This is the series notion of f > 0 / f >= 0 on a right neighborhood of 0.
SeriesSign series_sign(const RatPoly& f);

/// One polynomial per (player, pure strategy) coordinate.
struct PolyProfile {
  std::vector<std::vector<RatPoly>> coords;

  int player_count() const { return static_cast<int>(coords.size()); }
  const RatPoly& coord(int player, int strategy) const {
    return coords[player][strategy];
  }

  /// Value at t = 0 (the constant coefficients) as a MixedProfile.
  MixedProfile at_zero() const;

  void check_dimensions(const Game& game) const;

  bool operator==(const PolyProfile&) const = default;
};

/// Maximum coordinate order. Throws ZeroCoordinate on a coordinate that is
/// identically zero (a certificate coordinate must eventually be positive).
std::size_t map_order(const PolyProfile& profile);

/// The composed payoff polynomial t -> G_player(tau, eta_{-player}(t)):
/// exact multilinear contraction over the opponents' coordinate polynomials.
/// The result's degree is at most the sum over opponents of their maximum
/// coordinate degrees.
RatPoly payoff_compose(const Game& game, int player,
                       const std::vector<Rational>& tau,
                       const PolyProfile& eta);

/// Same with a pure strategy in place of tau.
RatPoly payoff_compose_pure(const Game& game, int player, int strategy,
                            const PolyProfile& eta);

struct PolyBestReplyResult {
  bool ok = true;
  int violating_strategy = -1;
  SeriesOrder difference_order;
  SeriesSign difference_sign = SeriesSign::zero;
};

/// True iff for every pure strategy s of `player`, the payoff difference
/// series G(sigma_n, eta) - G(s, eta) is non-negative (positive or
/// identically zero) or has order >= r + 1. The threshold r is an exact
/// big integer; it may exceed any machine word.
PolyBestReplyResult poly_best_reply(const Game& game, int player,
                                    const std::vector<Rational>& sigma_n,
                                    const PolyProfile& eta, const Int& r);

/// Certificate conversion: eta_{n,s}(t) = sum_k rho_n^k(s) t^k. Requires
/// full support (throws NotFullSupport); guarantees eta(0) = level 0, every
/// coordinate series-positive, and map_order(eta) = support_level(rho).
PolyProfile lps_to_poly(const LpsProfile& rho);

struct NotConverted {
  /// Which ladder stages ran and why each gave up.
  std::string diagnostic;
};

struct PolyToLpsResult {
  std::optional<LpsProfile> lps;   // set on success
  std::optional<NotConverted> failure;  // set otherwise
  /// "linear_path" or "coefficient_extraction" on success.
  std::string stage;

  bool converted() const { return lps.has_value(); }
};

/// Attempts to rebuild an LPS certificate from a polynomial one. The input
/// must already satisfy the polynomial certificate conditions at the given
/// caps (checked; throws InvalidInput otherwise). Strategy ladder:
///   1. detect the linear path eta(t) = (1-t)sigma + t tau* and emit the
///      two-level system (sigma_n, tau*_n);
///   2. read coefficient vectors as levels, clipping negative entries to
///      zero and renormalizing;
/// each candidate is accepted only if the LPS verifier passes it with the
/// same sigma and caps. Guaranteed to succeed for the linear two-player /
/// convex case; best-effort otherwise.
PolyToLpsResult poly_to_lps_attempt(const Game& game, const MixedProfile& sigma,
                                    const PolyProfile& eta, const Int& ell_cap,
                                    const Int& k_cap);

}  // namespace perfcert
