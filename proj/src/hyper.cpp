#include "hypadic/hyper.hpp"

#include <numeric>
#include <sstream>

namespace hypadic {

std::vector<Rational> HyperParams::all() const {
  std::vector<Rational> v = alphas;
  v.insert(v.end(), betas.begin(), betas.end());
  return v;
}

HyperParams make_params(std::vector<Rational> alphas, std::vector<Rational> betas) {
  if (alphas.empty() || alphas.size() != betas.size() + 1) {
    throw PreconditionError("make_params: need n upper and n-1 lower parameters");
  }
  for (const Rational& b : betas) {
    if (b.is_integer() && b.sign() <= 0) {
      throw PreconditionError("make_params: lower parameter " + b.str() +
                              " is a nonpositive integer; the series is undefined");
    }
  }
  HyperParams p;
  p.alphas = std::move(alphas);
  p.betas = std::move(betas);
  p.admissible = true;
  for (const Rational& x : p.all()) {
    if (!(Rational(0) < x && x < Rational(1))) p.admissible = false;
  }
  if (p.admissible) {
    for (const Rational& a : p.alphas) {
      for (const Rational& b : p.betas) {
        if (a == b) p.admissible = false;
      }
    }
  }
  return p;
}

HyperParams to_params(const Params2F1& t) { return make_params({t.a, t.b}, {t.c}); }

bool is_admissible(const Params2F1& t) {
  auto inside = [](const Rational& x) { return Rational(0) < x && x < Rational(1); };
  return inside(t.a) && inside(t.b) && inside(t.c) && t.a != t.c && t.b != t.c;
}

long lcm_denominator(const Params2F1& t) {
  Integer l = lcm(lcm(t.a.den(), t.b.den()), t.c.den());
  if (!l.fits_slong_p()) throw PreconditionError("lcm_denominator: denominator lcm too large");
  return l.get_si();
}

bool is_good_prime(const HyperParams& params, long p) {
  for (const Rational& x : params.all()) {
    ExtInt v = valuation(x - Rational(1), p);
    if (v.is_infinite() || v.value() != 0) return false;
  }
  return true;
}

bool valuation_formula_applies(const HyperParams& params, long p) {
  for (const Rational& x : params.all()) {
    ExtInt v = valuation(x - Rational(1), p);
    if (!v.is_infinite() && v.value() < 0) return false;
  }
  return true;
}

long period(const HyperParams& params, long p) {
  if (!is_good_prime(params, p)) {
    throw PreconditionError("period: " + std::to_string(p) + " is not a good prime");
  }
  long M = 1;
  for (const Rational& x : params.all()) {
    long ord = multiplicative_order(Integer(p), (x - Rational(1)).den());
    M = std::lcm(M, ord);
  }
  return M;
}

std::vector<Rational> coefficient_oracle(const HyperParams& params, long m_max) {
  if (m_max < 0) throw PreconditionError("coefficient_oracle: negative index");
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(m_max) + 1);
  Rational a = 1;
  out.push_back(a);
  for (long m = 0; m < m_max; ++m) {
    Rational num = 1, den = 1;
    for (const Rational& al : params.alphas) num *= al + Rational(m);
    for (const Rational& be : params.betas) den *= be + Rational(m);
    den *= Rational(m + 1);
    a = a * num / den;
    out.push_back(a);
  }
  return out;
}

CoeffValuation::CoeffValuation(const HyperParams& params, long p) : p_(p) {
  if (!valuation_formula_applies(params, p)) {
    throw PreconditionError("coeff_valuation: some v_" + std::to_string(p) +
                            "(x - 1) is negative; the carry formula does not apply");
  }
  for (const Rational& a : params.alphas) alpha_exp_.push_back(expand(a - Rational(1), p));
  for (const Rational& b : params.betas) beta_exp_.push_back(expand(b - Rational(1), p));
}

long CoeffValuation::at(const Integer& m) const {
  if (m < 0) throw PreconditionError("coeff_valuation: negative index");
  long v = 0;
  for (const PAdicExpansion& e : alpha_exp_) {
    CarryCount c = carries(e, m);
    if (c.is_infinite()) {
      throw PreconditionError("coeff_valuation: A_" + m.get_str() +
                              " = 0 (upper parameter " + (e.value + Rational(1)).str() +
                              " truncates the series); the valuation is +infinity");
    }
    v += c.value();
  }
  for (const PAdicExpansion& e : beta_exp_) {
    CarryCount c = carries(e, m);
    if (c.is_infinite()) throw InternalError("coeff_valuation: lower-parameter carry diverged");
    v -= c.value();
  }
  return v;
}

long coeff_valuation(const HyperParams& params, long p, const Integer& m) {
  return CoeffValuation(params, p).at(m);
}

std::string ValuationProfile::to_csv() const {
  std::ostringstream os;
  os << "m,v\n";
  for (const auto& [m, v] : entries) os << m << ',' << v << '\n';
  return os.str();
}

std::string ValuationProfile::to_json() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << '[' << entries[i].first << ',' << entries[i].second << ']';
  }
  os << ']';
  return os.str();
}

ValuationProfile valuation_profile(const HyperParams& params, long p, long m_max) {
  if (m_max < 0) throw PreconditionError("valuation_profile: negative index range");
  CoeffValuation cv(params, p);
  ValuationProfile prof;
  prof.prime = p;
  prof.entries.reserve(static_cast<size_t>(m_max) + 1);
  for (long m = 0; m <= m_max; ++m) prof.entries.emplace_back(m, cv.at(Integer(m)));
  return prof;
}

SupWitness sup_witness(const HyperParams& params, long p, long r) {
  if (!params.admissible) throw PreconditionError("sup_witness: parameters not admissible");
  if (r < 1) throw PreconditionError("sup_witness: r must be positive");
  long M = period(params, p);  // also rejects non-good p
  // N_r = p^{Mr} - p^{M(r-1)} - ... - p^M - 1
  Integer n = pow_int(Integer(p), static_cast<unsigned long>(M) * static_cast<unsigned long>(r));
  for (long s = 1; s < r; ++s) {
    n -= pow_int(Integer(p), static_cast<unsigned long>(M) * static_cast<unsigned long>(s));
  }
  n -= 1;
  return SupWitness{n, coeff_valuation(params, p, n)};
}

Params2F1 normalize_shift(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<std::string> bad;
  if (a.is_integer()) bad.push_back("a = " + a.str());
  if (b.is_integer()) bad.push_back("b = " + b.str());
  if (c.is_integer()) bad.push_back("c = " + c.str());
  if ((a - c).is_integer()) bad.push_back("a - c = " + (a - c).str());
  if ((b - c).is_integer()) bad.push_back("b - c = " + (b - c).str());
  if (!bad.empty()) {
    std::string msg = "normalize_shift: integral where a shift cannot fix it:";
    for (const std::string& s : bad) msg += " " + s + ";";
    throw PreconditionError(msg);
  }
  return Params2F1{a.frac(), b.frac(), c.frac()};
}

}  // namespace hypadic
