#pragma once

#include <cstdint>
#include <iosfwd>

#include <boost/rational.hpp>

namespace stateprep {

/// Multiplicative per-site success terms of the worst-case error model.
///
/// Every slot of a scheduled circuit (an operation, or a live qubit sitting
/// idle next to one) succeeds independently with one of these probabilities.
/// The circuit as a whole succeeds only if every slot does, so the success
/// probability is a product of powers of the seven terms.
struct ErrorTerms {
  double p_s = 1.0;   ///< gate applied in a single-qubit layer
  double p_is = 1.0;  ///< idle qubit in a single-qubit layer
  double p_d = 1.0;   ///< qubit pair coupled in a two-qubit layer
  double p_id = 1.0;  ///< idle qubit in a two-qubit layer
  double p_m = 1.0;   ///< measured qubit
  double p_im = 1.0;  ///< idle qubit in a measurement layer
  double p_ic = 1.0;  ///< live qubit waiting on a classical computation
};

/// Integer exponents for the seven error terms. The success probability of a
/// circuit is p_s^s * p_is^is * p_d^d * p_id^id * p_m^m * p_im^im * p_ic^ic.
struct ExponentVector {
  std::int64_t s = 0;
  std::int64_t is = 0;
  std::int64_t d = 0;
  std::int64_t id = 0;
  std::int64_t m = 0;
  std::int64_t im = 0;
  std::int64_t ic = 0;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  ExponentVector& operator+=(const ExponentVector& o) {
    s += o.s;
    is += o.is;
    d += o.d;
    id += o.id;
    m += o.m;
    im += o.im;
    ic += o.ic;
    return *this;
  }

  ExponentVector& operator-=(const ExponentVector& o) {
    s -= o.s;
    is -= o.is;
    d -= o.d;
    id -= o.id;
    m -= o.m;
    im -= o.im;
    ic -= o.ic;
    return *this;
  }

  ExponentVector& operator*=(std::int64_t f) {
    s *= f;
    is *= f;
    d *= f;
    id *= f;
    m *= f;
    im *= f;
    ic *= f;
    return *this;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(ExponentVector a, std::int64_t f) { return a *= f; }
  friend ExponentVector operator*(std::int64_t f, ExponentVector a) { return a *= f; }

  /// Total number of slots charged to single-qubit layers. Useful as a
  /// conservation check: different accountings of the same layering must
  /// agree on s + is.
  [[nodiscard]] std::int64_t single_slots() const { return s + is; }
};

/// Exact rational used where exponents carry factors of one half.
using Rational = boost::rational<std::int64_t>;

/// Exponent vector with rational entries.
struct RationalExponents {
  Rational s, is, d, id, m, im, ic;

  friend bool operator==(const RationalExponents&, const RationalExponents&) = default;
};

[[nodiscard]] RationalExponents to_rational(const ExponentVector& e);

/// Evaluates the product of powers for the given per-site terms.
[[nodiscard]] double success_probability(const ExponentVector& e, const ErrorTerms& t);
[[nodiscard]] double success_probability(const RationalExponents& e, const ErrorTerms& t);

/// Replaces the terms by the simplified regime where single-qubit layers are
/// free (p_s = p_is = 1), measurements cost as much as two-qubit gates
/// (p_m = p_d) and every idle term collapses onto p_id (p_im = p_ic = p_id).
[[nodiscard]] ErrorTerms simplified_terms(const ErrorTerms& t);

/// Exponents left over under the simplified regime: everything multiplying
/// p_d and everything multiplying p_id.
struct ReducedExponents {
  std::int64_t d = 0;
  std::int64_t id = 0;

  friend bool operator==(const ReducedExponents&, const ReducedExponents&) = default;
};

[[nodiscard]] ReducedExponents reduce_simplified(const ExponentVector& e);

std::ostream& operator<<(std::ostream& os, const ExponentVector& e);

}  // namespace stateprep
