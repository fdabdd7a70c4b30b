#include "stateprep/exponents.hpp"

#include <cmath>
#include <ostream>

namespace stateprep {

RationalExponents to_rational(const ExponentVector& e) {
  return RationalExponents{Rational(e.s), Rational(e.is), Rational(e.d), Rational(e.id),
                           Rational(e.m), Rational(e.im), Rational(e.ic)};
}

namespace {

double rat_value(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

double success_probability(const ExponentVector& e, const ErrorTerms& t) {
  double p = 1.0;
  p *= std::pow(t.p_s, static_cast<double>(e.s));
  p *= std::pow(t.p_is, static_cast<double>(e.is));
  p *= std::pow(t.p_d, static_cast<double>(e.d));
  p *= std::pow(t.p_id, static_cast<double>(e.id));
  p *= std::pow(t.p_m, static_cast<double>(e.m));
  p *= std::pow(t.p_im, static_cast<double>(e.im));
  p *= std::pow(t.p_ic, static_cast<double>(e.ic));
  return p;
}

double success_probability(const RationalExponents& e, const ErrorTerms& t) {
  double p = 1.0;
  p *= std::pow(t.p_s, rat_value(e.s));
  p *= std::pow(t.p_is, rat_value(e.is));
  p *= std::pow(t.p_d, rat_value(e.d));
  p *= std::pow(t.p_id, rat_value(e.id));
  p *= std::pow(t.p_m, rat_value(e.m));
  p *= std::pow(t.p_im, rat_value(e.im));
  p *= std::pow(t.p_ic, rat_value(e.ic));
  return p;
}

ErrorTerms simplified_terms(const ErrorTerms& t) {
  ErrorTerms out = t;
  out.p_s = 1.0;
  out.p_is = 1.0;
  out.p_m = t.p_d;
  out.p_im = t.p_id;
  out.p_ic = t.p_id;
  return out;
}

ReducedExponents reduce_simplified(const ExponentVector& e) {
  return ReducedExponents{e.d + e.m, e.id + e.im + e.ic};
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
  return os << "s=" << e.s << " is=" << e.is << " d=" << e.d << " id=" << e.id << " m=" << e.m
            << " im=" << e.im << " ic=" << e.ic;
}

}  // namespace stateprep
