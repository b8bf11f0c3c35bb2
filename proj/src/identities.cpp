#include "partq/identities.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "partq/bijections.hpp"

namespace partq {

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

// ---- per-n statistic caches ------------------------------------------------
//
// Residue-restricted part statistics over the parity-split families reduce to
// part-count-by-value vectors, so one enumeration per (n, r) serves every
// (L, O) choice.

struct ParitySplitCounts {
  long long even_count = 0;  // partitions in the even-parity class
  long long odd_count = 0;
  std::vector<long long> even_by_v;  // total part count by value, even class
  std::vector<long long> odd_by_v;
};

struct AllCache {
  ParitySplitCounts by_even_parts;  // classes P_e/P_o(n,2)
  long long parts_even = 0;         // p_e(n): even number of parts
  long long parts_odd = 0;
};

const AllCache& all_cache(long long n) {
  static std::map<long long, AllCache> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  AllCache c;
  c.by_even_parts.even_by_v.assign(n + 1, 0);
  c.by_even_parts.odd_by_v.assign(n + 1, 0);
  for_each_partition(n, ConstraintSpec::all(),
                     [&](const std::vector<long long>& parts) {
                       long long evens = 0;
                       for (long long p : parts) evens += (p % 2 == 0);
                       bool even_class = evens % 2 == 0;
                       auto& by_v = even_class ? c.by_even_parts.even_by_v
                                               : c.by_even_parts.odd_by_v;
                       for (long long p : parts) ++by_v[p];
                       ++(even_class ? c.by_even_parts.even_count
                                     : c.by_even_parts.odd_count);
                       ++(parts.size() % 2 == 0 ? c.parts_even : c.parts_odd);
                     });
  return memo.emplace(n, std::move(c)).first->second;
}

// Families P_e/P_o(n,2r): parity of the number of parts divisible by 2r.
const ParitySplitCounts& div2r_cache(long long n, long long r) {
  static std::map<std::pair<long long, long long>, ParitySplitCounts> memo;
  auto key = std::make_pair(n, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (r == 1) return memo.emplace(key, all_cache(n).by_even_parts).first->second;
  ParitySplitCounts c;
  c.even_by_v.assign(n + 1, 0);
  c.odd_by_v.assign(n + 1, 0);
  for_each_partition(n, ConstraintSpec::all(),
                     [&](const std::vector<long long>& parts) {
                       long long hits = 0;
                       for (long long p : parts) hits += (p % (2 * r) == 0);
                       bool even_class = hits % 2 == 0;
                       auto& by_v = even_class ? c.even_by_v : c.odd_by_v;
                       for (long long p : parts) ++by_v[p];
                       ++(even_class ? c.even_count : c.odd_count);
                     });
  return memo.emplace(key, std::move(c)).first->second;
}

struct DistinctCache {
  long long count = 0;
  std::vector<long long> by_v;
};

// Q_o(n,r); r=1 gives Q_o(n).
const DistinctCache& qo_cache(long long n, long long r) {
  static std::map<std::pair<long long, long long>, DistinctCache> memo;
  auto key = std::make_pair(n, r);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  DistinctCache c;
  c.by_v.assign(n + 1, 0);
  for_each_partition(n, ConstraintSpec::distinct_odd_multiples(r),
                     [&](const std::vector<long long>& parts) {
                       ++c.count;
                       for (long long p : parts) ++c.by_v[p];
                     });
  return memo.emplace(key, std::move(c)).first->second;
}

long long sum_residue(const std::vector<long long>& by_v, long long ell,
                      long long mod) {
  long long s = 0;
  for (long long v = 1; v < static_cast<long long>(by_v.size()); ++v)
    if (in_residue(v, ell, mod)) s += by_v[v];
  return s;
}

long long sum_all(const std::vector<long long>& by_v) {
  long long s = 0;
  for (long long v : by_v) s += v;
  return s;
}

long long stat_sum(long long n, const ConstraintSpec& c,
                   const StatisticKind& k) {
  long long s = 0;
  for_each_partition(n, c, [&](const std::vector<long long>& parts) {
    s += statistic(parts, k);
  });
  return s;
}

long long count_partitions(long long n, const ConstraintSpec& c) {
  long long s = 0;
  for_each_partition(n, c, [&](const std::vector<long long>&) { ++s; });
  return s;
}

// ---- parameter resolution --------------------------------------------------

ResidueSpec resolve_params(TheoremId thm, const ResidueSpec& in) {
  ResidueSpec p = in;
  switch (thm) {
    case TheoremId::Ex1:
      p.L.clear();
      p.O.clear();
      for (long long ell = 1; ell <= 2 * p.r; ++ell)
        (ell % 2 == 0 ? p.L : p.O).insert(ell);
      break;
    case TheoremId::Ex2:
      p.L.clear();
      p.O.clear();
      (p.r % 2 == 0 ? p.L : p.O).insert(p.r);
      p.L.insert(2 * p.r);
      break;
    case TheoremId::Ex3:
      p.L.clear();
      p.O.clear();
      p.O.insert(1);
      p.L.insert(2 * p.r);
      break;
    case TheoremId::Cor5_2:
    case TheoremId::Cor5_3:
      p.r = 1;
      p.L = {2};
      p.O.clear();
      break;
    case TheoremId::T1_9:
    case TheoremId::T1_10:
    case TheoremId::T1_11:
      if (p.L.empty())
        throw std::invalid_argument("this identity needs a nonempty L");
      break;
    case TheoremId::T1_12:
      if (p.L.empty() && p.O.empty())
        throw std::invalid_argument("T1_12 needs a nonempty residue set");
      break;
    case TheoremId::PositivityRemark:
      if (p.L.size() + p.O.size() != 1)
        throw std::invalid_argument(
            "the positivity remark is per single residue");
      break;
    default:
      break;
  }
  p.validate();
  return p;
}

long long single_ell(const ResidueSpec& p) {
  return p.L.empty() ? *p.O.begin() : *p.L.begin();
}

// ---- left-hand sides (signed excesses / equality counts) --------------------

long long residue_excess(long long n, const ResidueSpec& p) {
  const auto& ac = all_cache(n).by_even_parts;
  const auto& qo = qo_cache(n, 1);
  long long s = 0;
  for (long long ell : p.O) s += sum_residue(qo.by_v, ell, 2 * p.r);
  for (long long ell : p.L)
    s += sum_residue(ac.odd_by_v, ell, 2 * p.r) -
         sum_residue(ac.even_by_v, ell, 2 * p.r);
  return s;
}

PairSpec rect_pairs(std::function<bool(long long, long long)> rect_ok,
                    ConstraintSpec family) {
  return PairSpec{std::move(rect_ok),
                  [family](long long, long long) { return family; },
                  {}};
}

long long lhs_value(TheoremId thm, long long n, const ResidueSpec& p) {
  const long long r = p.r;
  switch (thm) {
    case TheoremId::Lehmer:
      return all_cache(n).by_even_parts.even_count;
    case TheoremId::Glaisher:
      return all_cache(n).parts_even;
    case TheoremId::T1_6:
      return div2r_cache(n, r).even_count;
    case TheoremId::T1_9:
      return count_partitions(
          n, ConstraintSpec::even_count_parity_restricted(r, p.L, Parity::Even));
    case TheoremId::BeckPairs:
      return stat_sum(n, ConstraintSpec::odd_parts(), StatisticKind::num_parts()) -
             stat_sum(n, ConstraintSpec::distinct(), StatisticKind::num_parts());
    case TheoremId::T1_2: {
      const auto& ac = all_cache(n).by_even_parts;
      return sum_all(ac.even_by_v) - sum_all(ac.odd_by_v) -
             sum_all(qo_cache(n, 1).by_v);
    }
    case TheoremId::T1_4: {
      const auto& ac = all_cache(n).by_even_parts;
      return sum_all(qo_cache(n, 1).by_v) + sum_residue(ac.odd_by_v, 2, 2) -
             sum_residue(ac.even_by_v, 2, 2);
    }
    case TheoremId::T1_7: {
      const auto& dc = div2r_cache(n, r);
      return sum_all(dc.even_by_v) - sum_all(dc.odd_by_v) -
             sum_all(qo_cache(n, r).by_v);
    }
    case TheoremId::T1_8: {
      const auto& dc = div2r_cache(n, r);
      return sum_residue(qo_cache(n, r).by_v, r, r) +
             sum_residue(dc.odd_by_v, 2 * r, 2 * r) -
             sum_residue(dc.even_by_v, 2 * r, 2 * r);
    }
    case TheoremId::T1_10:
      return stat_sum(n,
                      ConstraintSpec::even_count_parity_restricted(
                          r, p.L, Parity::Even),
                      StatisticKind::num_parts()) -
             stat_sum(n,
                      ConstraintSpec::even_count_parity_restricted(
                          r, p.L, Parity::Odd),
                      StatisticKind::num_parts()) -
             stat_sum(n, ConstraintSpec::q_Lr(r, p.L),
                      StatisticKind::num_parts());
    case TheoremId::T1_11:
      return stat_sum(n, ConstraintSpec::q_Lr(r, p.L),
                      StatisticKind::num_parts()) +
             stat_sum(n,
                      ConstraintSpec::even_count_parity_restricted(
                          r, p.L, Parity::Odd),
                      StatisticKind::num_even_parts()) -
             stat_sum(n,
                      ConstraintSpec::even_count_parity_restricted(
                          r, p.L, Parity::Even),
                      StatisticKind::num_even_parts());
    case TheoremId::T1_12:
    case TheoremId::Ex1:
    case TheoremId::Ex2:
    case TheoremId::Ex3:
    case TheoremId::Cor5_2:
      return residue_excess(n, p);
    case TheoremId::Cor5_3: {
      const auto& ac = all_cache(n).by_even_parts;
      return sum_residue(ac.even_by_v, 1, 2) - sum_residue(ac.odd_by_v, 1, 2) -
             sum_all(qo_cache(n, 1).by_v);
    }
    case TheoremId::T6_2:
      return count_pairs(n, rect_pairs(
                                [r](long long a, long long b) {
                                  return a % (2 * r) == 1 && b % 2 == 0;
                                },
                                ConstraintSpec::distinct_odd())) -
             count_pairs(n, rect_pairs(
                                [r](long long a, long long b) {
                                  return a % (2 * r) == 0 && b % 2 == 1;
                                },
                                ConstraintSpec::distinct_odd()));
    case TheoremId::T6_3:
      return count_pairs(n, rect_pairs(
                                [r](long long a, long long b) {
                                  return a % (2 * r) == 1 && b % 2 == 1;
                                },
                                ConstraintSpec::distinct_odd())) -
             count_pairs(n, rect_pairs(
                                [r](long long a, long long b) {
                                  return a % (2 * r) == 0 && b % 2 == 0;
                                },
                                ConstraintSpec::distinct_odd()));
    case TheoremId::PositivityRemark: {
      TruncatedSeries s = derivative_difference(SeriesThm::T1_12, p,
                                                static_cast<int>(n));
      return to_ll(s.coefficient(static_cast<int>(n)));
    }
  }
  throw std::logic_error("lhs_value: unhandled theorem");
}

// ---- right-hand sides and witnesses -----------------------------------------

bool one_even_value(const Partition& lam, long long* even_val,
                    long long* even_mult) {
  long long val = 0, mult = 0, prev_odd = -1;
  for (long long p : lam.parts()) {
    if (p % 2 == 0) {
      if (val != 0 && val != p) return false;
      val = p;
      ++mult;
    } else {
      if (p == prev_odd) return false;  // odd parts must be distinct
      prev_odd = p;
    }
  }
  if (val == 0) return false;
  *even_val = val;
  *even_mult = mult;
  return true;
}

bool cor52_pred(const Partition& lam) {
  long long val = 0, mult = 0;
  if (!one_even_value(lam, &val, &mult) || mult % 2 == 0) return false;
  const long long k = val / 2;
  Partition lo = lam;
  for (long long i = 0; i < mult; ++i) lo = lo.without_part(val);
  if (lo.part(1) - lo.part(2) > val) return false;
  if (val >= 4 && lo == mu_partition(val)) return false;
  if (k % 2 == 0 && mult == 1 && lo.empty()) return false;
  return true;
}

bool cor53_type2_pred(const Partition& lam) {
  long long rep_val = 0, rep_mult = 0;
  long long prev = -1, run = 0;
  auto flush = [&](long long v, long long m) {
    if (m >= 2) {
      if (rep_val != 0) return false;
      rep_val = v;
      rep_mult = m;
    }
    return true;
  };
  for (long long p : lam.parts()) {
    if (p % 2 == 0) return false;
    if (p == prev) {
      ++run;
    } else {
      if (prev > 0 && !flush(prev, run)) return false;
      prev = p;
      run = 1;
    }
  }
  if (prev > 0 && !flush(prev, run)) return false;
  if (rep_val == 0) return false;
  const long long k = rep_mult / 2;
  Partition lo = lam;
  for (long long i = 0; i < 2 * k; ++i) lo = lo.without_part(rep_val);
  if (lo.part(1) - lo.part(2) > 2 * k) return false;
  if (2 * k >= 4 && lo == mu_partition(2 * k)) return false;
  if (k % 2 == 0 && rep_val == 1 && lo.empty()) return false;
  return true;
}

// Pair conditions of the single/multi-residue excess identity (T1_12 family).
bool t112_pair_ok(const Partition& lam, long long a, long long b) {
  if (a % 2 == 1) {
    if (b != 1 || lam.contains(a)) return false;
  } else {
    if (lam.part(1) - lam.part(2) > a) return false;
    if (a >= 4 && lam == mu_partition(a)) return false;
  }
  return true;
}

PairSpec t112_pairs(const ResidueSpec& p) {
  auto lo = p.LO();
  return PairSpec{
      [lo, r = p.r](long long a, long long b) {
        if (b % 2 == 0) return false;
        for (long long ell : lo)
          if (in_residue(a, ell, 2 * r)) return true;
        return false;
      },
      [](long long, long long) { return ConstraintSpec::distinct_odd(); },
      [](const Partition& lam, long long a, long long b) {
        return t112_pair_ok(lam, a, b);
      }};
}

// Pair conditions of the full-residue-set variant with the modified
// injection: equality holds for every n with these clauses.
PairSpec ex1_pairs(long long n) {
  return PairSpec{
      [](long long a, long long b) {
        return b % 2 == 1 && (a % 2 == 0 || b == 1);
      },
      [](long long, long long) { return ConstraintSpec::distinct_odd(); },
      [n](const Partition& lam, long long a, long long b) {
        if (a % 2 == 1) return !lam.contains(a);
        if (lam.part(1) - lam.part(2) > a) return false;
        if (n % 4 == 0) {
          if (a >= 4 && lam == mu_partition(a)) return false;
          if (a % 4 == 0 && b == 1 && lam.empty()) return false;
        }
        return true;
      }};
}

bool t112_minus_one_cell(long long n, const ResidueSpec& p) {
  return p.L.count(2) && n % 4 == 0 && n >= 4 && n <= 20;
}
bool t112_exclusion_cell(long long n, const ResidueSpec& p) {
  return p.L.count(2) && n % 4 == 0 && n >= 24;
}

PairSpec t14_pairs(long long n) {
  return PairSpec{
      [](long long a, long long b) { return a % 2 == 1 && b % 2 == 1; },
      [](long long, long long) { return ConstraintSpec::distinct_odd(); },
      [n](const Partition& lam, long long a, long long b) {
        return in_B(lam, n, a, b, 1);
      }};
}

PairSpec t17_pairs(long long r) {
  return rect_pairs([r](long long a, long long) { return a % (2 * r) == 0; },
                    ConstraintSpec::distinct_odd_multiples(r));
}

PairSpec t18_pairs(long long n, long long r) {
  return PairSpec{
      [r](long long a, long long b) {
        return a % r == 0 && (a / r) % 2 == 1 && b % 2 == 1;
      },
      [r](long long, long long) {
        return ConstraintSpec::distinct_odd_multiples(r);
      },
      [n, r](const Partition& lam, long long a, long long b) {
        auto [ndiv, div] = split_div(lam, r);
        return in_B(div, n - ndiv.size(), a / r, b, r);
      }};
}

PairSpec t110_pairs(const ResidueSpec& p) {
  return rect_pairs([](long long a, long long) { return a % 2 == 0; },
                    ConstraintSpec::q_Lr(p.r, p.L));
}

PairSpec t111_pairs(long long n, const ResidueSpec& p) {
  return PairSpec{
      [](long long a, long long b) { return a % 2 == 1 && b % 2 == 1; },
      [&p](long long, long long) { return ConstraintSpec::q_Lr(p.r, p.L); },
      [n](const Partition& lam, long long a, long long b) {
        auto [odd, even] = split_div(lam, 2);
        return in_B(odd, n - even.size(), a, b, 1);
      }};
}

PairSpec beck_pairs() {
  return rect_pairs([](long long a, long long) { return a % 2 == 0; },
                    ConstraintSpec::odd_parts());
}

long long rhs_value(TheoremId thm, long long n, const ResidueSpec& p,
                    std::string* note) {
  const long long r = p.r;
  switch (thm) {
    case TheoremId::Lehmer:
      return all_cache(n).by_even_parts.odd_count + qo_cache(n, 1).count;
    case TheoremId::Glaisher:
      return all_cache(n).parts_odd +
             (n % 2 == 0 ? 1 : -1) * qo_cache(n, 1).count;
    case TheoremId::T1_6:
      return div2r_cache(n, r).odd_count + qo_cache(n, r).count;
    case TheoremId::T1_9:
      return count_partitions(n, ConstraintSpec::even_count_parity_restricted(
                                     r, p.L, Parity::Odd)) +
             count_partitions(n, ConstraintSpec::q_Lr(r, p.L));
    case TheoremId::BeckPairs:
      return count_pairs(n, beck_pairs());
    case TheoremId::T1_2: {
      ConstraintSpec c = ConstraintSpec::all();
      c.extra = [](const Partition& lam) {
        long long v, m;
        return one_even_value(lam, &v, &m);
      };
      return count_partitions(n, c);
    }
    case TheoremId::T1_4:
      return count_pairs(n, t14_pairs(n));
    case TheoremId::T1_7:
      return count_pairs(n, t17_pairs(r));
    case TheoremId::T1_8:
      return count_pairs(n, t18_pairs(n, r));
    case TheoremId::T1_10:
      return count_pairs(n, t110_pairs(p));
    case TheoremId::T1_11:
      return count_pairs(n, t111_pairs(n, p));
    case TheoremId::T1_12:
    case TheoremId::Ex2:
    case TheoremId::Ex3: {
      long long cnt = count_pairs(n, t112_pairs(p));
      if (t112_minus_one_cell(n, p)) {
        if (note) *note = "excess is one less than the pair count here";
        return cnt - 1;
      }
      if (t112_exclusion_cell(n, p)) {
        if (note) *note = "pair ((9,7,5,1),(2^b)) excluded";
        return cnt - 1;  // ((9,7,5,1),(2^{(n-22)/2})) always qualifies here
      }
      return cnt;
    }
    case TheoremId::Ex1:
      return count_pairs(n, ex1_pairs(n));
    case TheoremId::Cor5_2: {
      ConstraintSpec c = ConstraintSpec::all();
      c.extra = cor52_pred;
      return count_partitions(n, c);
    }
    case TheoremId::Cor5_3: {
      ConstraintSpec one_even = ConstraintSpec::all();
      one_even.extra = [](const Partition& lam) {
        long long v, m;
        return one_even_value(lam, &v, &m);
      };
      ConstraintSpec repeated = ConstraintSpec::all();
      repeated.extra = cor53_type2_pred;
      return count_partitions(n, one_even) + count_partitions(n, repeated);
    }
    case TheoremId::T6_2:
      return verify_map(MapId::Thm62, n, MapParams{r}).excess();
    case TheoremId::T6_3:
      return verify_map(MapId::Thm63, n, MapParams{r}).excess();
    case TheoremId::PositivityRemark:
      throw std::logic_error("rhs_value: not meaningful for the remark");
  }
  throw std::logic_error("rhs_value: unhandled theorem");
}

// ---- series columns ----------------------------------------------------------

std::optional<SeriesThm> series_thm_of(TheoremId thm) {
  switch (thm) {
    case TheoremId::T1_2: return SeriesThm::T1_2;
    case TheoremId::T1_4: return SeriesThm::T1_4;
    case TheoremId::T1_7: return SeriesThm::T1_7;
    case TheoremId::T1_8: return SeriesThm::T1_8;
    case TheoremId::T1_10: return SeriesThm::T1_10;
    case TheoremId::T1_11: return SeriesThm::T1_11;
    case TheoremId::T1_12:
    case TheoremId::Cor5_2:
    case TheoremId::Ex1:
    case TheoremId::PositivityRemark: return SeriesThm::T1_12;
    case TheoremId::Ex2: return SeriesThm::Ex2;
    case TheoremId::Ex3: return SeriesThm::Ex3;
    case TheoremId::T6_2: return SeriesThm::T6_2;
    case TheoremId::T6_3: return SeriesThm::T6_3;
    default: return std::nullopt;
  }
}

// Series route for the equality-form identities: the count of the even-parity
// class equals (total + signed-by-parity total)/2.
std::vector<long long> half_sum_column(const TruncatedSeries& total,
                                       const TruncatedSeries& signed_total,
                                       long long n_max) {
  std::vector<long long> col(n_max + 1);
  for (long long n = 0; n <= n_max; ++n) {
    Int v = total.coefficient(n) + signed_total.coefficient(n);
    col[n] = to_ll(v / 2);
  }
  return col;
}

std::optional<std::vector<long long>> series_column(TheoremId thm,
                                                    long long n_max,
                                                    const ResidueSpec& p) {
  const int N = static_cast<int>(n_max);
  if (auto st = series_thm_of(thm)) {
    TruncatedSeries s = derivative_difference(*st, p, N);
    std::vector<long long> col(n_max + 1);
    for (long long n = 0; n <= n_max; ++n)
      col[n] = to_ll(s.coefficient(static_cast<int>(n)));
    return col;
  }
  switch (thm) {
    case TheoremId::Lehmer: {
      TruncatedSeries all = pochhammer_inf(1, 1, 1, N).inverse();
      ZJet f = build_generating_jet(GenSpec::make(SeriesName::F), N);
      return half_sum_column(all, f.value, n_max);
    }
    case TheoremId::Glaisher: {
      TruncatedSeries all = pochhammer_inf(1, 1, 1, N).inverse();
      TruncatedSeries sgn = pochhammer_inf(-1, 1, 1, N).inverse();
      return half_sum_column(all, sgn, n_max);
    }
    case TheoremId::T1_6: {
      TruncatedSeries all = pochhammer_inf(1, 1, 1, N).inverse();
      ZJet f = build_generating_jet(GenSpec::make(SeriesName::Fr, p), N);
      return half_sum_column(all, f.value, n_max);
    }
    case TheoremId::T1_9: {
      TruncatedSeries total = TruncatedSeries::one(N);
      for (int m = 1; m <= N; ++m) {
        long long rep = (m - 1) % (2 * p.r) + 1;
        if (m % 2 == 1 || p.L.count(rep)) total.div_one_plus(-1, m);
      }
      ZJet f = build_generating_jet(GenSpec::make(SeriesName::FrL, p), N);
      return half_sum_column(total, f.value, n_max);
    }
    case TheoremId::BeckPairs: {
      ZJet odd(N), dist(N);
      for (int m = 1; m <= N; ++m) {
        if (m % 2 == 1) odd.apply_marked(-1, m, -1);
        dist.apply_marked(1, m, 1);
      }
      std::vector<long long> col(n_max + 1);
      TruncatedSeries d = odd.deriv - dist.deriv;
      for (long long n = 0; n <= n_max; ++n)
        col[n] = to_ll(d.coefficient(static_cast<int>(n)));
      return col;
    }
    default:
      return std::nullopt;  // Cor5_3 has no direct series form
  }
}

// ---- positivity remark witnesses --------------------------------------------

std::optional<Partition> remark_witness(long long ell, long long n) {
  const long long d = n - ell;
  auto valid_parts = [](std::vector<long long> parts) {
    std::optional<Partition> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0 || parts[i] % 2 == 0) return out;
      if (i + 1 < parts.size() && parts[i] <= parts[i + 1]) return out;
    }
    out = Partition(std::move(parts));
    return out;
  };
  if (ell % 2 == 1) {
    std::vector<std::vector<long long>> cands;
    if (d % 2 == 0)
      cands = {{d - 1, 1}, {d - 3, 3}};
    else
      cands = {{d}, {d - 4, 3, 1}};
    for (auto& parts : cands)
      if (auto lam = valid_parts(parts); lam && !lam->contains(ell))
        return lam;
    return std::nullopt;
  }
  switch (d % 4) {
    case 0: return valid_parts({d / 2 - 1, d / 2 - 3, 3, 1});
    case 1: return valid_parts({(d + 1) / 2, (d - 3) / 2, 1});
    case 2: return valid_parts({d / 2 - 2, d / 2 - 4, 5, 1});
    default: return valid_parts({(d - 1) / 2, (d - 5) / 2, 3});
  }
}

bool remark_witness_ok(long long ell, long long n, const Partition& lam) {
  if (lam.size() != n - ell) return false;
  if (ell % 2 == 1) return !lam.contains(ell);
  if (lam.part(1) - lam.part(2) > ell) return false;
  if (ell >= 4 && lam == mu_partition(ell)) return false;
  if (ell == 2 && n >= 28 && (n - ell) % 4 == 2 &&
      lam == Partition({9, 7, 5, 1}))
    return false;
  return true;
}

}  // namespace

// ---- public surface ----------------------------------------------------------

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Lehmer: return "lehmer";
    case TheoremId::Glaisher: return "glaisher";
    case TheoremId::BeckPairs: return "beck_pairs";
    case TheoremId::T1_2: return "t1_2";
    case TheoremId::T1_4: return "t1_4";
    case TheoremId::T1_6: return "t1_6";
    case TheoremId::T1_7: return "t1_7";
    case TheoremId::T1_8: return "t1_8";
    case TheoremId::T1_9: return "t1_9";
    case TheoremId::T1_10: return "t1_10";
    case TheoremId::T1_11: return "t1_11";
    case TheoremId::T1_12: return "t1_12";
    case TheoremId::Cor5_2: return "cor5_2";
    case TheoremId::Cor5_3: return "cor5_3";
    case TheoremId::Ex1: return "ex1";
    case TheoremId::Ex2: return "ex2";
    case TheoremId::Ex3: return "ex3";
    case TheoremId::T6_2: return "t6_2";
    case TheoremId::T6_3: return "t6_3";
    case TheoremId::PositivityRemark: return "positivity";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  static const std::vector<TheoremId> all = {
      TheoremId::Lehmer,  TheoremId::Glaisher, TheoremId::BeckPairs,
      TheoremId::T1_2,    TheoremId::T1_4,     TheoremId::T1_6,
      TheoremId::T1_7,    TheoremId::T1_8,     TheoremId::T1_9,
      TheoremId::T1_10,   TheoremId::T1_11,    TheoremId::T1_12,
      TheoremId::Cor5_2,  TheoremId::Cor5_3,   TheoremId::Ex1,
      TheoremId::Ex2,     TheoremId::Ex3,      TheoremId::T6_2,
      TheoremId::T6_3,    TheoremId::PositivityRemark};
  for (TheoremId id : all)
    if (theorem_name(id) == name) return id;
  return std::nullopt;
}

bool theorem_uses_params(TheoremId id) {
  switch (id) {
    case TheoremId::Lehmer:
    case TheoremId::Glaisher:
    case TheoremId::BeckPairs:
    case TheoremId::T1_2:
    case TheoremId::T1_4:
    case TheoremId::Cor5_2:
    case TheoremId::Cor5_3:
      return false;
    default:
      return true;
  }
}

bool IdentityReport::ok() const {
  if (!failures.empty()) return false;
  return std::all_of(per_n.begin(), per_n.end(),
                     [](const IdentityRow& r) { return r.ok; });
}

IdentityReport check(TheoremId thm, long long n_max, const ResidueSpec& params) {
  if (n_max < 0) throw std::invalid_argument("check: n_max must be >= 0");
  ResidueSpec p = resolve_params(thm, params);
  IdentityReport rep;
  rep.thm = thm;
  rep.params = p;
  rep.n_max = n_max;

  if (thm == TheoremId::PositivityRemark) {
    const long long ell = single_ell(p);
    rep.n_min = ell + (ell % 2 == 1 ? 8 : 19);
    TruncatedSeries s = derivative_difference(SeriesThm::T1_12, p,
                                              static_cast<int>(n_max));
    for (long long n = rep.n_min; n <= n_max; ++n) {
      IdentityRow row;
      row.n = n;
      long long c = to_ll(s.coefficient(static_cast<int>(n)));
      row.lhs = c;
      row.series = c;
      auto lam = remark_witness(ell, n);
      bool w_ok = lam && remark_witness_ok(ell, n, *lam);
      row.rhs = w_ok ? 1 : 0;
      row.ok = c > 0 && w_ok;
      row.note = lam ? "witness " + lam->to_string() + " x (" +
                           std::to_string(ell) + "^1)"
                     : "no witness constructed";
      rep.per_n.push_back(std::move(row));
    }
    return rep;
  }

  std::optional<std::vector<long long>> col;
  try {
    col = series_column(thm, n_max, p);
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("series route failed: ") + e.what());
  }
  const bool sign_claim = thm == TheoremId::T6_2 || thm == TheoremId::T6_3;

  for (long long n = 0; n <= n_max; ++n) {
    IdentityRow row;
    row.n = n;
    row.lhs = lhs_value(thm, n, p);
    row.rhs = rhs_value(thm, n, p, &row.note);
    if (col) row.series = (*col)[n];
    row.ok = row.lhs == row.rhs && (!row.series || *row.series == row.lhs);
    if (sign_claim && row.lhs < 0) row.ok = false;
    rep.per_n.push_back(std::move(row));
  }
  return rep;
}

long long excess(TheoremId thm, long long n, const ResidueSpec& params) {
  if (n < 0) throw std::invalid_argument("excess: n must be >= 0");
  return lhs_value(thm, n, resolve_params(thm, params));
}

std::string witness_to_string(const Witness& w) {
  return std::visit([](const auto& x) { return x.to_string(); }, w);
}

std::vector<Witness> witnesses(TheoremId thm, long long n,
                               const ResidueSpec& params) {
  if (n < 0) throw std::invalid_argument("witnesses: n must be >= 0");
  ResidueSpec p = resolve_params(thm, params);
  const long long r = p.r;
  std::vector<Witness> out;
  auto add_partitions = [&](const ConstraintSpec& c) {
    for (const Partition& lam : enumerate_partitions(n, c))
      out.emplace_back(lam);
  };
  auto add_pairs = [&](const PairSpec& s) {
    for (const PartitionPair& q : enumerate_pairs(n, s)) out.emplace_back(q);
  };
  switch (thm) {
    case TheoremId::Lehmer:
    case TheoremId::Glaisher:
      add_partitions(ConstraintSpec::distinct_odd());
      break;
    case TheoremId::T1_6:
      add_partitions(ConstraintSpec::distinct_odd_multiples(r));
      break;
    case TheoremId::T1_9:
      add_partitions(ConstraintSpec::q_Lr(r, p.L));
      break;
    case TheoremId::BeckPairs:
      add_pairs(beck_pairs());
      break;
    case TheoremId::T1_2: {
      ConstraintSpec c = ConstraintSpec::all();
      c.extra = [](const Partition& lam) {
        long long v, m;
        return one_even_value(lam, &v, &m);
      };
      add_partitions(c);
      break;
    }
    case TheoremId::T1_4:
      add_pairs(t14_pairs(n));
      break;
    case TheoremId::T1_7:
      add_pairs(t17_pairs(r));
      break;
    case TheoremId::T1_8:
      add_pairs(t18_pairs(n, r));
      break;
    case TheoremId::T1_10:
      add_pairs(t110_pairs(p));
      break;
    case TheoremId::T1_11:
      add_pairs(t111_pairs(n, p));
      break;
    case TheoremId::T1_12:
    case TheoremId::Ex2:
    case TheoremId::Ex3: {
      add_pairs(t112_pairs(p));
      if (t112_exclusion_cell(n, p)) {
        const PartitionPair excluded{Partition({9, 7, 5, 1}), 2, (n - 22) / 2};
        std::erase_if(out, [&](const Witness& w) {
          auto* q = std::get_if<PartitionPair>(&w);
          return q && *q == excluded;
        });
      }
      break;
    }
    case TheoremId::Ex1:
      add_pairs(ex1_pairs(n));
      break;
    case TheoremId::Cor5_2: {
      ConstraintSpec c = ConstraintSpec::all();
      c.extra = cor52_pred;
      add_partitions(c);
      break;
    }
    case TheoremId::Cor5_3: {
      ConstraintSpec one_even = ConstraintSpec::all();
      one_even.extra = [](const Partition& lam) {
        long long v, m;
        return one_even_value(lam, &v, &m);
      };
      add_partitions(one_even);
      ConstraintSpec repeated = ConstraintSpec::all();
      repeated.extra = cor53_type2_pred;
      add_partitions(repeated);
      break;
    }
    case TheoremId::T6_2:
      for (auto& q : verify_map(MapId::Thm62, n, MapParams{r}).complement)
        out.emplace_back(std::move(q));
      break;
    case TheoremId::T6_3:
      for (auto& q : verify_map(MapId::Thm63, n, MapParams{r}).complement)
        out.emplace_back(std::move(q));
      break;
    case TheoremId::PositivityRemark: {
      if (auto lam = remark_witness(single_ell(p), n))
        out.emplace_back(PartitionPair{*lam, single_ell(p), 1});
      break;
    }
  }
  return out;
}

std::vector<NegativeRow> negative_coefficient_table(long long r_max,
                                                    long long n_max) {
  if (r_max < 1 || n_max < 20)
    throw std::invalid_argument(
        "negative_coefficient_table: need r_max >= 1 and n_max >= 20");
  std::vector<NegativeRow> table;
  for (long long r = 1; r <= r_max; ++r) {
    ResidueSpec p{r, {2}, {}};
    TruncatedSeries s = derivative_difference(SeriesThm::T1_12, p,
                                              static_cast<int>(n_max));
    NegativeRow row;
    row.r = r;
    for (long long n = 0; n <= n_max; ++n) {
      Int c = s.coefficient(static_cast<int>(n));
      if (c < 0) {
        row.ns.push_back(n);
        row.values.push_back(to_ll(c));
      }
    }
    table.push_back(std::move(row));
  }
  return table;
}

PositivityReport positivity_threshold_check(long long ell, long long r,
                                            long long n_max) {
  if (ell < 1 || ell > 2 * r)
    throw std::invalid_argument("positivity_threshold_check: need 1 <= ell <= 2r");
  PositivityReport rep;
  rep.ell = ell;
  rep.r = r;
  rep.threshold = ell + (ell % 2 == 1 ? 8 : 19);
  rep.n_max = n_max;
  ResidueSpec p{r, {}, {}};
  (ell % 2 == 0 ? p.L : p.O).insert(ell);
  TruncatedSeries s = derivative_difference(SeriesThm::T1_12, p,
                                            static_cast<int>(n_max));
  for (long long n = rep.threshold; n <= n_max; ++n) {
    if (s.coefficient(static_cast<int>(n)) <= 0) {
      rep.coefficients_ok = false;
      rep.failures.push_back("c(" + std::to_string(n) + ") <= 0");
    }
    auto lam = remark_witness(ell, n);
    if (!lam || !remark_witness_ok(ell, n, *lam)) {
      rep.witnesses_ok = false;
      rep.failures.push_back("witness construction fails at n = " +
                             std::to_string(n));
    }
  }
  return rep;
}

}  // namespace partq
