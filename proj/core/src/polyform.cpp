#include "perfcert/polyform.hpp"

#include <algorithm>
#include <sstream>

#include "perfcert/certify.hpp"

namespace perfcert {

RatPoly::RatPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

RatPoly RatPoly::monomial(std::size_t k, const Rational& coefficient) {
  if (coefficient == 0) return {};
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = coefficient;
  return RatPoly(std::move(c));
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& RatPoly::coeff(std::size_t k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Rational RatPoly::operator()(const Rational& t) const {
  Rational value = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    value = value * t + c_[k];
  }
  return value;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] += c_[i] * rhs.c_[j];
    }
  }
  c_ = std::move(out);
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= scalar;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& a : out.c_) a = -a;
  return out;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    out << to_fraction_string(c_[k]);
    if (k == 1) out << "*t";
    if (k > 1) out << "*t^" << k;
    first = false;
  }
  return out.str();
}

std::string SeriesOrder::to_string() const {
  return infinite ? "inf" : std::to_string(value);
}

SeriesOrder order(const RatPoly& f) {
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) return SeriesOrder::at(k);
  }
  return SeriesOrder::infinity();
}

SeriesSign series_sign(const RatPoly& f) {
  const SeriesOrder o = order(f);
  if (o.infinite) return SeriesSign::zero;
  return f.coefficients()[o.value] > 0 ? SeriesSign::positive
                                       : SeriesSign::negative;
}

MixedProfile PolyProfile::at_zero() const {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(coords.size());
  for (const auto& player : coords) {
    std::vector<Rational> row;
    row.reserve(player.size());
    for (const auto& poly : player) row.push_back(poly.coeff(0));
    rows.push_back(std::move(row));
  }
  return MixedProfile(std::move(rows));
}

void PolyProfile::check_dimensions(const Game& game) const {
  if (player_count() != game.player_count()) {
    throw DimensionMismatch(-1, "polynomial profile has " +
                                    std::to_string(player_count()) +
                                    " rows for a " +
                                    std::to_string(game.player_count()) +
                                    "-player game");
  }
  for (int n = 0; n < player_count(); ++n) {
    if (static_cast<int>(coords[n].size()) != game.strategy_count(n)) {
      throw DimensionMismatch(n, "player " + game.player_names()[n] + " has " +
                                     std::to_string(coords[n].size()) +
                                     " coordinates, expected " +
                                     std::to_string(game.strategy_count(n)));
    }
  }
}

std::size_t map_order(const PolyProfile& profile) {
  std::size_t worst = 0;
  for (int n = 0; n < profile.player_count(); ++n) {
    for (std::size_t s = 0; s < profile.coords[n].size(); ++s) {
      const SeriesOrder o = order(profile.coords[n][s]);
      if (o.infinite) {
        throw ZeroCoordinate(n, static_cast<int>(s),
                             "coordinate (" + std::to_string(n) + ", " +
                                 std::to_string(s) +
                                 ") is identically zero (order infinity)");
      }
      worst = std::max(worst, o.value);
    }
  }
  return worst;
}

namespace {

std::vector<RatPoly> poly_payoff_vector(const Game& game, int player,
                                        const PolyProfile& eta) {
  eta.check_dimensions(game);
  return detail::contracted_payoffs<RatPoly>(
      game, player,
      [&](int m, int s) -> const RatPoly& { return eta.coords[m][s]; });
}

}  // namespace

RatPoly payoff_compose(const Game& game, int player,
                       const std::vector<Rational>& tau,
                       const PolyProfile& eta) {
  if (static_cast<int>(tau.size()) != game.strategy_count(player)) {
    throw DimensionMismatch(player, "tau has " + std::to_string(tau.size()) +
                                        " entries, expected " +
                                        std::to_string(game.strategy_count(player)));
  }
  const std::vector<RatPoly> v = poly_payoff_vector(game, player, eta);
  RatPoly total;
  for (int s = 0; s < game.strategy_count(player); ++s) {
    total += v[s] * tau[s];
  }
  return total;
}

RatPoly payoff_compose_pure(const Game& game, int player, int strategy,
                            const PolyProfile& eta) {
  return poly_payoff_vector(game, player, eta)[strategy];
}

PolyBestReplyResult poly_best_reply(const Game& game, int player,
                                    const std::vector<Rational>& sigma_n,
                                    const PolyProfile& eta, const Int& r) {
  const std::vector<RatPoly> v = poly_payoff_vector(game, player, eta);
  RatPoly own;
  for (int s = 0; s < game.strategy_count(player); ++s) own += v[s] * sigma_n[s];

  for (int s = 0; s < game.strategy_count(player); ++s) {
    const RatPoly diff = own - v[s];
    const SeriesSign sgn = series_sign(diff);
    if (sgn != SeriesSign::negative) continue;  // f >= 0 as a series
    const SeriesOrder o = order(diff);
    if (o.at_least(r + 1)) continue;  // negative but beyond the tested order
    return {false, s, o, sgn};
  }
  return {};
}

PolyProfile lps_to_poly(const LpsProfile& rho) {
  support_level(rho);  // throws NotFullSupport when some strategy is missed
  PolyProfile eta;
  eta.coords.resize(rho.player_count());
  for (int n = 0; n < rho.player_count(); ++n) {
    const Lps& lps = rho.player(n);
    eta.coords[n].resize(lps.support_size());
    for (int s = 0; s < lps.support_size(); ++s) {
      std::vector<Rational> coeffs;
      coeffs.reserve(lps.order() + 1);
      for (long k = 0; k <= lps.order(); ++k) {
        coeffs.push_back(lps.level(k)[s]);
      }
      eta.coords[n][s] = RatPoly(std::move(coeffs));
    }
  }
  return eta;
}

namespace {

// Ladder stage 1: eta is a degree-<=1 path whose endpoint eta(1) is a
// completely mixed probability profile. Returns the two-level candidate, or
// the single-level one when eta is constant at a completely mixed sigma.
std::optional<LpsProfile> linear_path_candidate(const Game& game,
                                                const MixedProfile& sigma,
                                                const PolyProfile& eta,
                                                std::string& why_not) {
  bool constant = true;
  for (int n = 0; n < eta.player_count(); ++n) {
    for (const auto& poly : eta.coords[n]) {
      if (poly.degree() > 1) {
        why_not = "a coordinate has degree above one";
        return std::nullopt;
      }
      if (poly.degree() == 1) constant = false;
    }
  }
  if (constant) {
    if (!sigma.is_completely_mixed()) {
      why_not = "constant path but sigma is not completely mixed";
      return std::nullopt;
    }
    std::vector<Lps> levels;
    for (int n = 0; n < game.player_count(); ++n) {
      levels.emplace_back(std::vector<std::vector<Rational>>{sigma.row(n)});
    }
    return LpsProfile(std::move(levels));
  }
  // tau* = eta(1); the LPS (sigma_n, tau*_n) is valid when tau* is a
  // completely mixed probability profile.
  std::vector<Lps> levels;
  for (int n = 0; n < game.player_count(); ++n) {
    std::vector<Rational> tau;
    Rational sum = 0;
    for (const auto& poly : eta.coords[n]) {
      Rational value = poly(Rational(1));
      if (value <= 0) {
        why_not = "path endpoint has a non-positive coordinate";
        return std::nullopt;
      }
      sum += value;
      tau.push_back(std::move(value));
    }
    if (sum != 1) {
      why_not = "path endpoint is not a probability vector";
      return std::nullopt;
    }
    levels.emplace_back(std::vector<std::vector<Rational>>{sigma.row(n), tau});
  }
  return LpsProfile(std::move(levels));
}

// Ladder stage 2: coefficient vectors as levels, with non-negativity repair
// (clip negatives to zero, renormalize; an all-zero level falls back to the
// level-0 vector).
std::optional<LpsProfile> extraction_candidate(const Game& game,
                                               const MixedProfile& sigma,
                                               const PolyProfile& eta,
                                               std::string& why_not) {
  std::size_t max_degree = 0;
  for (const auto& player : eta.coords) {
    for (const auto& poly : player) max_degree = std::max(max_degree, poly.degree());
  }
  std::vector<Lps> levels;
  for (int n = 0; n < game.player_count(); ++n) {
    std::vector<std::vector<Rational>> player_levels;
    player_levels.push_back(sigma.row(n));
    for (std::size_t k = 1; k <= max_degree; ++k) {
      std::vector<Rational> level;
      Rational sum = 0;
      for (const auto& poly : eta.coords[n]) {
        Rational c = poly.coeff(k);
        if (c < 0) c = 0;
        sum += c;
        level.push_back(std::move(c));
      }
      if (sum == 0) {
        level = sigma.row(n);
      } else if (sum != 1) {
        for (auto& c : level) c /= sum;
      }
      player_levels.push_back(std::move(level));
    }
    try {
      levels.emplace_back(std::move(player_levels));
    } catch (const InvalidInput& e) {
      why_not = std::string("repaired level is not a distribution: ") + e.what();
      return std::nullopt;
    }
  }
  return LpsProfile(std::move(levels));
}

}  // namespace

PolyToLpsResult poly_to_lps_attempt(const Game& game, const MixedProfile& sigma,
                                    const PolyProfile& eta, const Int& ell_cap,
                                    const Int& k_cap) {
  BoundSet caps;
  caps.kappa = game.strategy_count_sum();
  caps.d = game.degree();
  caps.ell = ell_cap;
  caps.K = k_cap;
  caps.mode = BoundMode::general;

  const Verdict input_check = verify_poly_certificate(game, sigma, eta, caps);
  if (!input_check.accepted) {
    std::string failed;
    for (const auto& c : input_check.conditions) {
      if (!c.passed) {
        failed = c.name + ": " + c.detail;
        break;
      }
    }
    throw InvalidInput("polynomial certificate fails its own conditions (" +
                       failed + ")");
  }

  std::string diagnostic;
  std::string why_not;
  if (auto candidate = linear_path_candidate(game, sigma, eta, why_not)) {
    const Verdict v =
        verify_lps_certificate(game, sigma, *candidate, caps, KMode::fixed_K);
    if (v.accepted) {
      return {std::move(candidate), std::nullopt, "linear_path"};
    }
    diagnostic += "linear_path: candidate rejected by the verifier; ";
  } else {
    diagnostic += "linear_path: " + why_not + "; ";
  }

  why_not.clear();
  if (auto candidate = extraction_candidate(game, sigma, eta, why_not)) {
    const Verdict v =
        verify_lps_certificate(game, sigma, *candidate, caps, KMode::fixed_K);
    if (v.accepted) {
      return {std::move(candidate), std::nullopt, "coefficient_extraction"};
    }
    diagnostic += "coefficient_extraction: candidate rejected by the verifier";
  } else {
    diagnostic += "coefficient_extraction: " + why_not;
  }

  return {std::nullopt, NotConverted{diagnostic}, ""};
}

}  // namespace perfcert
