#include "partq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partq {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (long long p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<long long>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(long long a) const {
  return std::binary_search(parts_.begin(), parts_.end(), a,
                            std::greater<long long>());
}

long long Partition::multiplicity(long long a) const {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), a,
                                   std::greater<long long>());
  return hi - lo;
}

Partition Partition::with_part(long long v) const {
  std::vector<long long> p = parts_;
  p.push_back(v);
  return Partition(std::move(p));
}

Partition Partition::without_part(long long v) const {
  std::vector<long long> p = parts_;
  auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end())
    throw std::invalid_argument("without_part: part not present");
  p.erase(it);
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += "]";
  return s;
}

std::string PartitionPair::to_string() const {
  return lambda.to_string() + " x (" + std::to_string(a) + "^" +
         std::to_string(b) + ")";
}

Partition make_partition(std::vector<long long> parts) {
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lam) {
  if (lam.empty()) return {};
  std::vector<long long> out(static_cast<std::size_t>(lam.parts()[0]), 0);
  for (long long p : lam.parts()) {
    for (long long i = 0; i < p; ++i) out[static_cast<std::size_t>(i)]++;
  }
  return Partition(std::move(out));
}

Partition mu_partition(long long a) {
  if (a == 0) return {};
  if (a % 2 != 0 || a == 2 || a < 0)
    throw std::invalid_argument("mu_partition: a must be 0 or even >= 4");
  long long h = a / 2;
  if (h % 2 == 0) return Partition({h + 1, h - 1});
  return Partition({h + 2, h - 2});
}

std::pair<Partition, Partition> split_div(const Partition& lam, long long r) {
  if (r < 1) throw std::invalid_argument("split_div: r must be positive");
  std::vector<long long> ndiv, div;
  for (long long p : lam.parts()) (p % r == 0 ? div : ndiv).push_back(p);
  return {Partition(std::move(ndiv)), Partition(std::move(div))};
}

bool in_B(const Partition& lam, long long n, long long a, long long b,
          long long r) {
  if (r < 1) throw std::invalid_argument("in_B: r must be positive");
  if (a < 1 || b < 1 || a * b > n)
    throw std::invalid_argument("in_B: requires 1 <= a*b <= n");
  if (lam.size() != n - r * a * b) return false;
  // lam != (ra, r(a-2)); with lam_2 = 0 for one-part lam this also covers
  // a = 2, where the excluded partition is the single part (2r).
  if (lam.num_parts() <= 2 && lam.part(1) == r * a &&
      lam.part(2) == r * (a - 2))
    return false;
  if (lam.part(1) - lam.part(2) > 2 * r * (a + b + 1)) return false;
  if (lam.contains(r * (a + b + 1))) return false;
  return true;
}

void ResidueSpec::validate() const {
  if (r < 1) throw std::invalid_argument("ResidueSpec: r must be positive");
  for (long long l : L) {
    if (l % 2 != 0 || l < 2 || l > 2 * r)
      throw std::invalid_argument("ResidueSpec: L must be even residues in [2,2r]");
  }
  for (long long o : O) {
    if (o % 2 == 0 || o < 1 || o > 2 * r - 1)
      throw std::invalid_argument("ResidueSpec: O must be odd residues in [1,2r-1]");
  }
}

std::set<long long> ResidueSpec::LO() const {
  std::set<long long> s = L;
  s.insert(O.begin(), O.end());
  return s;
}

std::set<long long> ResidueSpec::L_complement() const {
  std::set<long long> s;
  for (long long l = 2; l <= 2 * r; l += 2)
    if (!L.count(l)) s.insert(l);
  return s;
}

std::set<long long> ResidueSpec::O_complement() const {
  std::set<long long> s;
  for (long long o = 1; o <= 2 * r - 1; o += 2)
    if (!O.count(o)) s.insert(o);
  return s;
}

void ConstraintSpec::validate() const {
  using F = Family;
  if (family == F::DistinctOddMultiplesOfR || family == F::QLr ||
      family == F::PLr || family == F::DivisibleBy2rCountParity ||
      family == F::EvenCountParityRestricted) {
    if (r < 1) throw std::invalid_argument("ConstraintSpec: r must be positive");
  }
  if (family == F::QLr || family == F::PLr ||
      family == F::EvenCountParityRestricted) {
    ResidueSpec rs;
    rs.r = r;
    rs.L = L;
    rs.validate();
  }
}

ConstraintSpec ConstraintSpec::all() { return {}; }
ConstraintSpec ConstraintSpec::odd_parts() {
  ConstraintSpec c;
  c.family = Family::OddParts;
  return c;
}
ConstraintSpec ConstraintSpec::distinct() {
  ConstraintSpec c;
  c.family = Family::Distinct;
  return c;
}
ConstraintSpec ConstraintSpec::distinct_odd() {
  ConstraintSpec c;
  c.family = Family::DistinctOdd;
  return c;
}
ConstraintSpec ConstraintSpec::distinct_odd_multiples(long long r) {
  ConstraintSpec c;
  c.family = Family::DistinctOddMultiplesOfR;
  c.r = r;
  return c;
}
ConstraintSpec ConstraintSpec::q_Lr(long long r, std::set<long long> L) {
  ConstraintSpec c;
  c.family = Family::QLr;
  c.r = r;
  c.L = std::move(L);
  return c;
}
ConstraintSpec ConstraintSpec::p_Lr(long long r, std::set<long long> L) {
  ConstraintSpec c;
  c.family = Family::PLr;
  c.r = r;
  c.L = std::move(L);
  return c;
}
ConstraintSpec ConstraintSpec::even_count_parity(Parity p) {
  ConstraintSpec c;
  c.family = Family::EvenCountParity;
  c.parity = p;
  return c;
}
ConstraintSpec ConstraintSpec::div2r_count_parity(long long r, Parity p) {
  ConstraintSpec c;
  c.family = Family::DivisibleBy2rCountParity;
  c.r = r;
  c.parity = p;
  return c;
}
ConstraintSpec ConstraintSpec::even_count_parity_restricted(
    long long r, std::set<long long> L, Parity p) {
  ConstraintSpec c;
  c.family = Family::EvenCountParityRestricted;
  c.r = r;
  c.L = std::move(L);
  c.parity = p;
  return c;
}
ConstraintSpec ConstraintSpec::part_count_parity(Parity p) {
  ConstraintSpec c;
  c.family = Family::PartCountParity;
  c.parity = p;
  return c;
}

namespace {

// Compiled form of a ConstraintSpec: per-part admissibility and multiplicity
// limits drive the generator; parity conditions are checked at the leaves.
struct GenConfig {
  ConstraintSpec::Family fam;
  long long r;
  std::vector<char> in_L;  // residue lookup, index 1..2r
  Parity parity;
  const std::function<bool(const Partition&)>* extra;

  explicit GenConfig(const ConstraintSpec& c)
      : fam(c.family), r(c.r), parity(c.parity), extra(nullptr) {
    if (c.extra) extra = &c.extra;
    in_L.assign(static_cast<std::size_t>(2 * r + 1), 0);
    for (long long l : c.L) in_L[static_cast<std::size_t>(l)] = 1;
  }

  bool residue_in_L(long long p) const {
    long long rep = ((p - 1) % (2 * r)) + 1;
    return in_L[static_cast<std::size_t>(rep)] != 0;
  }

  bool allowed(long long p) const {
    using F = ConstraintSpec::Family;
    switch (fam) {
      case F::All:
      case F::Distinct:
      case F::EvenCountParity:
      case F::DivisibleBy2rCountParity:
      case F::PartCountParity:
        return true;
      case F::OddParts:
      case F::DistinctOdd:
        return p % 2 != 0;
      case F::DistinctOddMultiplesOfR:
        return p % (2 * r) != 0;
      case F::QLr:
        return p % 2 != 0 || !residue_in_L(p);
      case F::PLr:
      case F::EvenCountParityRestricted:
        return p % 2 != 0 || residue_in_L(p);
    }
    return true;
  }

  bool single_use(long long p) const {
    using F = ConstraintSpec::Family;
    switch (fam) {
      case F::Distinct:
      case F::DistinctOdd:
      case F::QLr:
        return true;
      case F::DistinctOddMultiplesOfR:
        return p % r == 0;
      default:
        return false;
    }
  }

  bool leaf_ok(const std::vector<long long>& parts, long long even_count,
               long long div2r_count) const {
    using F = ConstraintSpec::Family;
    long long want = parity == Parity::Even ? 0 : 1;
    bool ok = true;
    switch (fam) {
      case F::EvenCountParity:
      case F::EvenCountParityRestricted:
        ok = (even_count % 2) == want;
        break;
      case F::DivisibleBy2rCountParity:
        ok = (div2r_count % 2) == want;
        break;
      case F::PartCountParity:
        ok = (static_cast<long long>(parts.size()) % 2) == want;
        break;
      default:
        break;
    }
    if (ok && extra) ok = (*extra)(Partition(parts));
    return ok;
  }
};

void gen_rec(const GenConfig& cfg, long long remaining, long long max_part,
             std::vector<long long>& parts, long long even_count,
             long long div2r_count,
             const std::function<void(const std::vector<long long>&)>& fn) {
  if (remaining == 0) {
    if (cfg.leaf_ok(parts, even_count, div2r_count)) fn(parts);
    return;
  }
  for (long long p = std::min(max_part, remaining); p >= 1; --p) {
    if (!cfg.allowed(p)) continue;
    parts.push_back(p);
    gen_rec(cfg, remaining - p, cfg.single_use(p) ? p - 1 : p, parts,
            even_count + (p % 2 == 0 ? 1 : 0),
            div2r_count + (p % (2 * cfg.r) == 0 ? 1 : 0), fn);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(
    long long n, const ConstraintSpec& c,
    const std::function<void(const std::vector<long long>&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
  c.validate();
  GenConfig cfg(c);
  std::vector<long long> parts;
  gen_rec(cfg, n, n, parts, 0, 0, fn);
}

std::vector<Partition> enumerate_partitions(long long n,
                                            const ConstraintSpec& c) {
  std::vector<Partition> out;
  for_each_partition(n, c, [&](const std::vector<long long>& parts) {
    out.push_back(Partition(parts));
  });
  return out;
}

long long statistic(const std::vector<long long>& parts,
                    const StatisticKind& k) {
  using T = StatisticKind::Tag;
  long long c = 0;
  switch (k.tag) {
    case T::NumParts:
      return static_cast<long long>(parts.size());
    case T::NumEvenParts:
      for (long long p : parts) c += (p % 2 == 0);
      return c;
    case T::NumOddParts:
      for (long long p : parts) c += (p % 2 != 0);
      return c;
    case T::NumPartsDivisibleBy:
      if (k.m < 1) throw std::invalid_argument("statistic: m must be >= 1");
      for (long long p : parts) c += (p % k.m == 0);
      return c;
    case T::NumPartsInResidue:
      if (k.ell < 1 || k.ell > k.modulus)
        throw std::invalid_argument("statistic: need 1 <= ell <= modulus");
      for (long long p : parts) c += in_residue(p, k.ell, k.modulus);
      return c;
  }
  return 0;
}

long long statistic(const Partition& lam, const StatisticKind& k) {
  return statistic(lam.parts(), k);
}

void for_each_pair(long long n, const PairSpec& spec,
                   const std::function<void(const PartitionPair&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_pair: n must be >= 0");
  for (long long a = 1; a <= n; ++a) {
    for (long long b = 1; a * b <= n; ++b) {
      if (spec.rect_ok && !spec.rect_ok(a, b)) continue;
      ConstraintSpec fam =
          spec.lambda_family ? spec.lambda_family(a, b) : ConstraintSpec::all();
      for_each_partition(n - a * b, fam, [&](const std::vector<long long>& parts) {
        PartitionPair p{Partition(parts), a, b};
        if (spec.pair_ok && !spec.pair_ok(p.lambda, a, b)) return;
        fn(p);
      });
    }
  }
}

std::vector<PartitionPair> enumerate_pairs(long long n, const PairSpec& spec) {
  std::vector<PartitionPair> out;
  for_each_pair(n, spec, [&](const PartitionPair& p) { out.push_back(p); });
  return out;
}

long long count_pairs(long long n, const PairSpec& spec) {
  long long c = 0;
  for_each_pair(n, spec, [&](const PartitionPair&) { ++c; });
  return c;
}

}  // namespace partq
