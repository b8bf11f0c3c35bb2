#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace partq {

// A partition: non-increasing sequence of positive parts. Immutable after
// construction; the size (sum of parts) is cached.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);

  const std::vector<long long>& parts() const { return parts_; }
  long long size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  std::size_t num_parts() const { return parts_.size(); }

  // lambda_k with the convention lambda_k = 0 beyond the last part (1-based).
  long long part(std::size_t k) const {
    return (k >= 1 && k <= parts_.size()) ? parts_[k - 1] : 0;
  }
  bool contains(long long a) const;
  long long multiplicity(long long a) const;

  // Returns a copy with one part v added (resp. one copy of v removed).
  Partition with_part(long long v) const;
  Partition without_part(long long v) const;

  std::string to_string() const;  // "[5,3,1]", "[]" for empty

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.parts_ == y.parts_;
  }
  friend bool operator!=(const Partition& x, const Partition& y) {
    return !(x == y);
  }
  friend bool operator<(const Partition& x, const Partition& y) {
    return x.parts_ < y.parts_;
  }

 private:
  std::vector<long long> parts_;
  long long size_ = 0;
};

Partition make_partition(std::vector<long long> parts);
Partition conjugate(const Partition& lam);

// The two-part distinct-odd partition of an even integer a >= 4:
// (a/2+1, a/2-1) if a/2 is even, (a/2+2, a/2-2) if a/2 is odd.
// mu(0) is the empty partition.
Partition mu_partition(long long a);

// Splits parts by divisibility: (parts not divisible by r, parts divisible
// by r). r=2 gives the odd/even split.
std::pair<Partition, Partition> split_div(const Partition& lam, long long r);

// Membership in B_r(n,a,b): |lam| = n - r*a*b, lam != (ra, r(a-2)),
// lam_1 - lam_2 <= 2r(a+b+1), and r(a+b+1) not a part of lam.
bool in_B(const Partition& lam, long long n, long long a, long long b,
          long long r);

// Pair (lambda, (a^b)) with a,b >= 1; lambda may be empty.
struct PartitionPair {
  Partition lambda;
  long long a = 1;
  long long b = 1;

  long long total() const { return lambda.size() + a * b; }
  std::string to_string() const;  // "[5,3] x (2^2)"

  friend bool operator==(const PartitionPair& x, const PartitionPair& y) {
    return x.a == y.a && x.b == y.b && x.lambda == y.lambda;
  }
  friend bool operator<(const PartitionPair& x, const PartitionPair& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.lambda < y.lambda;
  }
};

enum class Parity { Even, Odd };

// Residue-class configuration (r, L_r, O_r): L_r a set of even residues in
// {2,...,2r}, O_r a set of odd residues in {1,...,2r-1}.
struct ResidueSpec {
  long long r = 1;
  std::set<long long> L;
  std::set<long long> O;

  void validate() const;  // throws std::invalid_argument on violation
  std::set<long long> LO() const;            // L union O
  std::set<long long> L_complement() const;  // {2,...,2r} \ L
  std::set<long long> O_complement() const;  // {1,...,2r-1} \ O
};

// True iff v lies in the residue class of ell modulo `mod` (representatives
// 1..mod, so ell = mod means v divisible by mod).
inline bool in_residue(long long v, long long ell, long long mod) {
  return ((v - ell) % mod) == 0;
}

// Constraint families for partition enumeration.
struct ConstraintSpec {
  enum class Family {
    All,
    OddParts,
    Distinct,
    DistinctOdd,              // Q_o(n)
    DistinctOddMultiplesOfR,  // Q_o(n,r): no part divisible by 2r, parts
                              // divisible by r distinct
    QLr,                      // Q(n,L_r,r): distinct, even parts not in L mod 2r
    PLr,                      // even parts restricted to residues in L mod 2r
    EvenCountParity,          // parity of the number of even parts
    DivisibleBy2rCountParity, // parity of the number of parts divisible by 2r
    EvenCountParityRestricted,// PLr with even-part-count parity
    PartCountParity,          // parity of the total number of parts
  };

  Family family = Family::All;
  long long r = 1;
  std::set<long long> L;
  Parity parity = Parity::Even;
  std::function<bool(const Partition&)> extra;  // optional leaf predicate

  void validate() const;

  static ConstraintSpec all();
  static ConstraintSpec odd_parts();
  static ConstraintSpec distinct();
  static ConstraintSpec distinct_odd();
  static ConstraintSpec distinct_odd_multiples(long long r);
  static ConstraintSpec q_Lr(long long r, std::set<long long> L);
  static ConstraintSpec p_Lr(long long r, std::set<long long> L);
  static ConstraintSpec even_count_parity(Parity p);
  static ConstraintSpec div2r_count_parity(long long r, Parity p);
  static ConstraintSpec even_count_parity_restricted(long long r,
                                                     std::set<long long> L,
                                                     Parity p);
  static ConstraintSpec part_count_parity(Parity p);
};

// Enumerates the partitions of n satisfying c, in descending lexicographic
// order on part sequences. The callback form avoids per-partition allocation;
// the vector form materializes Partition values.
void for_each_partition(long long n, const ConstraintSpec& c,
                        const std::function<void(const std::vector<long long>&)>& fn);
std::vector<Partition> enumerate_partitions(long long n, const ConstraintSpec& c);

struct StatisticKind {
  enum class Tag {
    NumParts,
    NumEvenParts,
    NumOddParts,
    NumPartsDivisibleBy,
    NumPartsInResidue
  };
  Tag tag = Tag::NumParts;
  long long m = 1;        // for NumPartsDivisibleBy
  long long ell = 1;      // for NumPartsInResidue
  long long modulus = 2;  // for NumPartsInResidue

  static StatisticKind num_parts() { return {Tag::NumParts}; }
  static StatisticKind num_even_parts() { return {Tag::NumEvenParts}; }
  static StatisticKind num_odd_parts() { return {Tag::NumOddParts}; }
  static StatisticKind num_parts_divisible_by(long long m) {
    return {Tag::NumPartsDivisibleBy, m};
  }
  static StatisticKind num_parts_in_residue(long long ell, long long modulus) {
    return {Tag::NumPartsInResidue, 1, ell, modulus};
  }
};

long long statistic(const Partition& lam, const StatisticKind& kind);
long long statistic(const std::vector<long long>& parts,
                    const StatisticKind& kind);

// Pair-family specification: rectangles filtered by rect_ok(a,b), lambda
// drawn from lambda_family(a,b), optionally filtered by pair_ok.
struct PairSpec {
  std::function<bool(long long a, long long b)> rect_ok;
  std::function<ConstraintSpec(long long a, long long b)> lambda_family;
  std::function<bool(const Partition&, long long a, long long b)> pair_ok;
};

// Enumerates pairs (lambda,(a^b)) with |lambda| + a*b = n, a,b >= 1, matching
// spec; order: a ascending, then b ascending, then lambda descending-lex.
void for_each_pair(long long n, const PairSpec& spec,
                   const std::function<void(const PartitionPair&)>& fn);
std::vector<PartitionPair> enumerate_pairs(long long n, const PairSpec& spec);
long long count_pairs(long long n, const PairSpec& spec);

}  // namespace partq
