#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "partq/partition.hpp"

namespace partq {

using Int = boost::multiprecision::cpp_int;

// Exact truncated power series in q: coefficients c_0..c_N over Z.
// Binary operations on mismatched orders truncate to the smaller order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order);
  static TruncatedSeries constant(Int c0, int order);
  static TruncatedSeries monomial(Int c, int exponent, int order);
  static TruncatedSeries one(int order) { return constant(1, order); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coefficient(int n) const;  // throws std::out_of_range if n > N
  void set_coefficient(int n, Int v);
  const std::vector<Int>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;

  // In-place multiplication/division by (1 + sign*q^m); O(N).
  void mul_one_plus(int sign, int m);
  void div_one_plus(int sign, int m);
  // In-place shift by q^m (coefficients beyond the order are dropped).
  void shift_up(int m);

  TruncatedSeries inverse() const;  // requires c_0 = +-1

  friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator-(const TruncatedSeries&);
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  std::vector<Int> coeffs_;  // size N+1
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);
TruncatedSeries series_inverse(const TruncatedSeries& a);
Int coefficient(const TruncatedSeries& s, int n);

// Truncation of prod_{k>=0} (1 - sign*q^{offset+k*step}).
TruncatedSeries pochhammer_inf(int sign, int offset, int step, int N);

// Truncation of sum_{k>=0} q^{m_k} / (1 - denomSign*q^{denomScale*m_k}) with
// m_k = offset + k*modulus.
TruncatedSeries lambert_sum(int offset, int modulus, int denomSign,
                            int denomScale, int N);

// First-order jet in z at z=1: value = F(1;q), deriv = dF/dz at z=1.
struct ZJet {
  TruncatedSeries value;
  TruncatedSeries deriv;

  ZJet() = default;
  explicit ZJet(int order)
      : value(TruncatedSeries::one(order)), deriv(TruncatedSeries(order)) {}

  // Multiply by (1 + sign*z*q^m)^exponent, exponent in {+1,-1}; O(N).
  void apply_marked(int sign, int m, int exponent);
  // Multiply by (1 + sign*q^m)^exponent (no z dependence); O(N).
  void apply_unmarked(int sign, int m, int exponent);

  friend ZJet operator*(const ZJet& a, const ZJet& b);
  friend ZJet operator+(const ZJet& a, const ZJet& b);
  friend ZJet operator-(const ZJet& a, const ZJet& b);
  ZJet inverse() const;  // requires value with unit constant term
  friend bool operator==(const ZJet& a, const ZJet& b) {
    return a.value == b.value && a.deriv == b.deriv;
  }
};

enum class SeriesName {
  F, E, Qo,            // r = 1 series
  Fr, Rr, Er, Qr,      // divisible-by-2r generalizations
  ErL, FrL, QrL,       // residue-restricted (r, L) series
  EtildeRL, QtildeRO,  // residue-marked series of the (L,O) family
};

struct GenSpec {
  SeriesName name = SeriesName::F;
  ResidueSpec params;

  static GenSpec make(SeriesName n, ResidueSpec p = {}) { return {n, p}; }
};

ZJet build_generating_jet(const GenSpec& spec, int N);

enum class SeriesThm {
  T1_2, T1_4, T1_7, T1_8, T1_10, T1_11, T1_12, Ex2, Ex3, T6_2, T6_3
};

// Exact truncated series of the theorem's derivative difference (for T6_2 and
// T6_3, the series displayed in the theorem statement). Computed internally by
// two routes (jet subtraction or rectangle enumeration, and the closed product
// form) and cross-asserted; throws std::logic_error on mismatch.
TruncatedSeries derivative_difference(SeriesThm thm, const ResidueSpec& params,
                                      int N);

}  // namespace partq
