#include "partq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace partq {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::constant(Int c0, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = std::move(c0);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(Int c, int exponent, int order) {
  TruncatedSeries s(order);
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(c);
  return s;
}

const Int& TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order())
    throw std::out_of_range("coefficient index exceeds truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coefficient(int n, Int v) {
  if (n < 0 || n > order())
    throw std::out_of_range("coefficient index exceeds truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(v);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order >= this->order()) {
    TruncatedSeries s = *this;
    s.coeffs_.resize(static_cast<std::size_t>(order) + 1, Int(0));
    return s;
  }
  TruncatedSeries s(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

void TruncatedSeries::mul_one_plus(int sign, int m) {
  if (m <= 0) throw std::invalid_argument("factor exponent must be positive");
  const int N = order();
  for (int n = N; n >= m; --n) {
    if (sign > 0)
      coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - m)];
    else
      coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - m)];
  }
}

void TruncatedSeries::div_one_plus(int sign, int m) {
  if (m <= 0) throw std::invalid_argument("factor exponent must be positive");
  const int N = order();
  for (int n = m; n <= N; ++n) {
    if (sign > 0)
      coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - m)];
    else
      coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - m)];
  }
}

void TruncatedSeries::shift_up(int m) {
  if (m < 0) throw std::invalid_argument("shift must be non-negative");
  const int N = order();
  for (int n = N; n >= 0; --n)
    coeffs_[static_cast<std::size_t>(n)] =
        (n >= m) ? coeffs_[static_cast<std::size_t>(n - m)] : Int(0);
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Int& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::invalid_argument("series_inverse: constant term must be +-1");
  const int N = order();
  TruncatedSeries inv(N);
  inv.coeffs_[0] = c0;  // 1/c0 = c0 for c0 = +-1
  for (int n = 1; n <= N; ++n) {
    Int acc = 0;
    for (int k = 1; k <= n; ++k)
      acc += coeffs_[static_cast<std::size_t>(k)] *
             inv.coeffs_[static_cast<std::size_t>(n - k)];
    inv.coeffs_[static_cast<std::size_t>(n)] = -acc * c0;
  }
  return inv;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int N = std::min(a.order(), b.order());
  TruncatedSeries s(N);
  for (int n = 0; n <= N; ++n)
    s.coeffs_[static_cast<std::size_t>(n)] =
        a.coeffs_[static_cast<std::size_t>(n)] + b.coeffs_[static_cast<std::size_t>(n)];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int N = std::min(a.order(), b.order());
  TruncatedSeries s(N);
  for (int n = 0; n <= N; ++n)
    s.coeffs_[static_cast<std::size_t>(n)] =
        a.coeffs_[static_cast<std::size_t>(n)] - b.coeffs_[static_cast<std::size_t>(n)];
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int N = std::min(a.order(), b.order());
  TruncatedSeries s(N);
  for (int i = 0; i <= N; ++i) {
    const Int& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; i + j <= N; ++j) {
      const Int& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      s.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries s(a.order());
  for (int n = 0; n <= a.order(); ++n)
    s.coeffs_[static_cast<std::size_t>(n)] = -a.coeffs_[static_cast<std::size_t>(n)];
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  *this = *this + o;
  return *this;
}
TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  *this = *this - o;
  return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int N = std::min(a.order(), b.order());
  for (int n = 0; n <= N; ++n)
    if (a.coeffs_[static_cast<std::size_t>(n)] != b.coeffs_[static_cast<std::size_t>(n)])
      return false;
  return true;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + b;
}
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b;
}
TruncatedSeries series_neg(const TruncatedSeries& a) { return -a; }
TruncatedSeries series_inverse(const TruncatedSeries& a) { return a.inverse(); }
Int coefficient(const TruncatedSeries& s, int n) { return s.coefficient(n); }

TruncatedSeries pochhammer_inf(int sign, int offset, int step, int N) {
  if (offset < 1 || step < 1)
    throw std::invalid_argument("pochhammer_inf: offset, step must be >= 1");
  TruncatedSeries s = TruncatedSeries::one(N);
  for (int m = offset; m <= N; m += step) s.mul_one_plus(-sign, m);
  return s;
}

TruncatedSeries lambert_sum(int offset, int modulus, int denomSign,
                            int denomScale, int N) {
  if (offset < 1 || modulus < 1 || denomScale < 1)
    throw std::invalid_argument("lambert_sum: parameters must be positive");
  TruncatedSeries s(N);
  for (long long m = offset; m <= N; m += modulus) {
    // q^m / (1 - denomSign * q^{denomScale*m}) = sum_j denomSign^j q^{m(1+scale*j)}
    int sign = 1;
    for (long long e = m; e <= N; e += denomScale * m) {
      s.set_coefficient(static_cast<int>(e),
                        s.coefficient(static_cast<int>(e)) + sign);
      sign *= denomSign;
    }
  }
  return s;
}

void ZJet::apply_marked(int sign, int m, int exponent) {
  if (exponent == 1) {
    // F' = F*(1+s z q^m): value' = value*(1+s q^m),
    // deriv' = deriv*(1+s q^m) + s q^m * value.
    TruncatedSeries shifted = value;
    shifted.shift_up(m);
    value.mul_one_plus(sign, m);
    deriv.mul_one_plus(sign, m);
    if (sign > 0)
      deriv += shifted;
    else
      deriv -= shifted;
  } else if (exponent == -1) {
    // F' = F/(1+s z q^m): solve F = F'*(1+s z q^m) for (value', deriv').
    value.div_one_plus(sign, m);
    TruncatedSeries shifted = value;  // new value
    shifted.shift_up(m);
    if (sign > 0)
      deriv -= shifted;
    else
      deriv += shifted;
    deriv.div_one_plus(sign, m);
  } else {
    throw std::invalid_argument("jet factor exponent must be +-1");
  }
}

void ZJet::apply_unmarked(int sign, int m, int exponent) {
  if (exponent == 1) {
    value.mul_one_plus(sign, m);
    deriv.mul_one_plus(sign, m);
  } else if (exponent == -1) {
    value.div_one_plus(sign, m);
    deriv.div_one_plus(sign, m);
  } else {
    throw std::invalid_argument("jet factor exponent must be +-1");
  }
}

ZJet operator*(const ZJet& a, const ZJet& b) {
  ZJet r;
  r.value = a.value * b.value;
  r.deriv = a.value * b.deriv + a.deriv * b.value;
  return r;
}

ZJet operator+(const ZJet& a, const ZJet& b) {
  ZJet r;
  r.value = a.value + b.value;
  r.deriv = a.deriv + b.deriv;
  return r;
}

ZJet operator-(const ZJet& a, const ZJet& b) {
  ZJet r;
  r.value = a.value - b.value;
  r.deriv = a.deriv - b.deriv;
  return r;
}

ZJet ZJet::inverse() const {
  ZJet r;
  r.value = value.inverse();
  r.deriv = -(deriv * r.value * r.value);
  return r;
}

namespace {

long long residue_rep(long long m, long long mod) {
  return ((m - 1) % mod) + 1;
}

void check_params(const GenSpec& spec) {
  spec.params.validate();
  switch (spec.name) {
    case SeriesName::ErL:
    case SeriesName::FrL:
    case SeriesName::QrL:
      if (spec.params.L.empty())
        throw std::invalid_argument("series requires a nonempty L");
      break;
    case SeriesName::EtildeRL:
    case SeriesName::QtildeRO:
      break;
    default:
      break;
  }
}

}  // namespace

ZJet build_generating_jet(const GenSpec& spec, int N) {
  check_params(spec);
  const long long r = spec.params.r;
  const auto& L = spec.params.L;
  const auto& O = spec.params.O;
  ZJet jet(N);
  for (int m = 1; m <= N; ++m) {
    const bool odd = (m % 2 != 0);
    switch (spec.name) {
      case SeriesName::F:
        jet.apply_marked(odd ? -1 : +1, m, -1);
        break;
      case SeriesName::E:
        if (odd)
          jet.apply_unmarked(-1, m, -1);
        else
          jet.apply_marked(+1, m, -1);
        break;
      case SeriesName::Qo:
        if (odd) jet.apply_marked(+1, m, +1);
        break;
      case SeriesName::Fr:
        jet.apply_marked(m % (2 * r) == 0 ? +1 : -1, m, -1);
        break;
      case SeriesName::Rr:
        if (m % r != 0)
          jet.apply_marked(-1, m, -1);
        else if (m % (2 * r) != 0)  // odd multiple of r
          jet.apply_marked(+1, m, +1);
        break;
      case SeriesName::Er:
        if (m % (2 * r) == 0)
          jet.apply_marked(+1, m, -1);
        else
          jet.apply_unmarked(-1, m, -1);
        break;
      case SeriesName::Qr:
        if (m % r != 0)
          jet.apply_unmarked(-1, m, -1);
        else if (m % (2 * r) != 0)
          jet.apply_marked(+1, m, +1);
        break;
      case SeriesName::ErL:
        if (odd)
          jet.apply_unmarked(-1, m, -1);
        else if (L.count(residue_rep(m, 2 * r)))
          jet.apply_marked(+1, m, -1);
        break;
      case SeriesName::FrL:
        if (odd)
          jet.apply_marked(-1, m, -1);
        else if (L.count(residue_rep(m, 2 * r)))
          jet.apply_marked(+1, m, -1);
        break;
      case SeriesName::QrL:
        if (!L.count(residue_rep(m, 2 * r))) jet.apply_marked(+1, m, +1);
        break;
      case SeriesName::EtildeRL:
        if (odd)
          jet.apply_unmarked(-1, m, -1);
        else if (L.count(residue_rep(m, 2 * r)))
          jet.apply_marked(+1, m, -1);
        else
          jet.apply_unmarked(+1, m, -1);
        break;
      case SeriesName::QtildeRO:
        if (odd) {
          if (O.count(residue_rep(m, 2 * r)))
            jet.apply_marked(+1, m, +1);
          else
            jet.apply_unmarked(+1, m, +1);
        }
        break;
    }
  }
  return jet;
}

namespace {

TruncatedSeries neg_q_odd_poch(int N) { return pochhammer_inf(-1, 1, 2, N); }

// Generating series of rectangles (a^b): +1 at q^{ab} for a in residue class
// aRes (mod aMod) with b of parity bPar. Used as the jet-free route for the
// section-6 series.
TruncatedSeries rectangle_series(long long aRes, long long aMod, Parity bPar,
                                 int N) {
  TruncatedSeries s(N);
  for (long long a = aRes == aMod ? aMod : aRes; a <= N; a += aMod) {
    for (long long b = (bPar == Parity::Odd ? 1 : 2); a * b <= N; b += 2) {
      s.set_coefficient(static_cast<int>(a * b),
                        s.coefficient(static_cast<int>(a * b)) + 1);
    }
  }
  return s;
}

TruncatedSeries qo_value(long long r, int N) {
  // R_r(1;q) via its closed form (q^r;q^r)_inf / (q;q)_inf * (-q^r;q^{2r})_inf.
  TruncatedSeries s = pochhammer_inf(+1, static_cast<int>(r), static_cast<int>(r), N);
  s = s * pochhammer_inf(+1, 1, 1, N).inverse();
  s = s * pochhammer_inf(-1, static_cast<int>(r), static_cast<int>(2 * r), N);
  return s;
}

TruncatedSeries qr_prefactor(long long r, int N) {
  // (-q^r;q^{2r})_inf / prod_{j=1}^{r-1} (q^j;q^r)_inf
  TruncatedSeries s = pochhammer_inf(-1, static_cast<int>(r), static_cast<int>(2 * r), N);
  for (int m = 1; m <= N; ++m)
    if (m % r != 0) s.div_one_plus(-1, m);
  return s;
}

TruncatedSeries qrl_value(long long r, const std::set<long long>& L, int N) {
  // prod over m with residue rep (mod 2r) not in L of (1+q^m)
  TruncatedSeries s = TruncatedSeries::one(N);
  for (int m = 1; m <= N; ++m)
    if (!L.count(residue_rep(m, 2 * r))) s.mul_one_plus(+1, m);
  return s;
}

}  // namespace

TruncatedSeries derivative_difference(SeriesThm thm, const ResidueSpec& params,
                                      int N) {
  params.validate();
  const long long r = params.r;
  const int ri = static_cast<int>(r);
  TruncatedSeries jets(N), closed(N);

  switch (thm) {
    case SeriesThm::T1_2: {
      ZJet f = build_generating_jet(GenSpec::make(SeriesName::F), N);
      ZJet qo = build_generating_jet(GenSpec::make(SeriesName::Qo), N);
      jets = f.deriv - qo.deriv;
      closed = neg_q_odd_poch(N) * lambert_sum(2, 2, +1, 1, N);
      break;
    }
    case SeriesThm::T1_4: {
      ZJet qo = build_generating_jet(GenSpec::make(SeriesName::Qo), N);
      ZJet e = build_generating_jet(GenSpec::make(SeriesName::E), N);
      jets = qo.deriv - e.deriv;
      closed = neg_q_odd_poch(N) * lambert_sum(1, 1, -1, 1, N);
      break;
    }
    case SeriesThm::T1_7: {
      ZJet fr = build_generating_jet(GenSpec::make(SeriesName::Fr, params), N);
      ZJet rr = build_generating_jet(GenSpec::make(SeriesName::Rr, params), N);
      jets = fr.deriv - rr.deriv;
      closed = qo_value(r, N) * lambert_sum(2 * ri, 2 * ri, +1, 1, N);
      break;
    }
    case SeriesThm::T1_8: {
      ZJet qr = build_generating_jet(GenSpec::make(SeriesName::Qr, params), N);
      ZJet er = build_generating_jet(GenSpec::make(SeriesName::Er, params), N);
      jets = qr.deriv - er.deriv;
      closed = qr_prefactor(r, N) * lambert_sum(ri, ri, -1, 1, N);
      break;
    }
    case SeriesThm::T1_10: {
      ZJet q = build_generating_jet(GenSpec::make(SeriesName::QrL, params), N);
      ZJet f = build_generating_jet(GenSpec::make(SeriesName::FrL, params), N);
      jets = f.deriv - q.deriv;
      closed = qrl_value(r, params.L, N) * lambert_sum(2, 2, +1, 1, N);
      break;
    }
    case SeriesThm::T1_11: {
      ZJet q = build_generating_jet(GenSpec::make(SeriesName::QrL, params), N);
      ZJet e = build_generating_jet(GenSpec::make(SeriesName::ErL, params), N);
      jets = q.deriv - e.deriv;
      closed = qrl_value(r, params.L, N) * lambert_sum(1, 1, -1, 1, N);
      break;
    }
    case SeriesThm::T1_12:
    case SeriesThm::Ex2:
    case SeriesThm::Ex3: {
      ResidueSpec p = params;
      if (thm == SeriesThm::Ex2) {
        p.L.clear();
        p.O.clear();
        p.L.insert(2 * r);
        (r % 2 == 0 ? p.L : p.O).insert(r);
      } else if (thm == SeriesThm::Ex3) {
        p.L.clear();
        p.O.clear();
        p.L.insert(2 * r);
        p.O.insert(1);
      }
      if (p.LO().empty())
        throw std::invalid_argument("derivative_difference: needs L or O nonempty");
      ZJet qt = build_generating_jet(GenSpec::make(SeriesName::QtildeRO, p), N);
      ZJet et = build_generating_jet(GenSpec::make(SeriesName::EtildeRL, p), N);
      jets = qt.deriv - et.deriv;
      TruncatedSeries acc(N);
      for (long long ell : p.LO())
        acc += lambert_sum(static_cast<int>(ell), 2 * ri, -1, 1, N);
      closed = neg_q_odd_poch(N) * acc;
      break;
    }
    case SeriesThm::T6_2: {
      // (-q;q^2) ( sum q^{2(2kr+1)}/(1-q^{2(2kr+1)}) - sum q^{2kr}/(1-q^{4kr}) )
      jets = neg_q_odd_poch(N) *
             (rectangle_series(1, 2 * r, Parity::Even, N) -
              rectangle_series(2 * r, 2 * r, Parity::Odd, N));
      closed = neg_q_odd_poch(N) *
               (lambert_sum(2, 4 * ri, +1, 1, N) - lambert_sum(2 * ri, 2 * ri, +1, 2, N));
      break;
    }
    case SeriesThm::T6_3: {
      jets = neg_q_odd_poch(N) *
             (rectangle_series(1, 2 * r, Parity::Odd, N) -
              rectangle_series(2 * r, 2 * r, Parity::Even, N));
      closed = neg_q_odd_poch(N) *
               (lambert_sum(1, 2 * ri, +1, 2, N) - lambert_sum(4 * ri, 4 * ri, +1, 1, N));
      break;
    }
  }
  if (jets != closed)
    throw std::logic_error("derivative_difference: internal routes disagree");
  return closed;
}

}  // namespace partq
