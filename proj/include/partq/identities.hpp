#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "partq/partition.hpp"
#include "partq/series.hpp"

namespace partq {

// One checkable identity per enumerator. Lehmer/Glaisher/T1_6/T1_9 are
// equality statements (lhs = count, rhs = sum of two counts); the rest are
// excess statements (lhs = signed excess by enumeration, rhs = combinatorial
// count). Ex1/Ex2/Ex3 are the residue-set specializations LO = {1..2r},
// {r,2r}, {1,2r} of T1_12.
enum class TheoremId {
  Lehmer,
  Glaisher,
  BeckPairs,
  T1_2,
  T1_4,
  T1_6,
  T1_7,
  T1_8,
  T1_9,
  T1_10,
  T1_11,
  T1_12,
  Cor5_2,
  Cor5_3,
  Ex1,
  Ex2,
  Ex3,
  T6_2,
  T6_3,
  PositivityRemark,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
// True if the theorem takes residue parameters beyond the defaults.
bool theorem_uses_params(TheoremId id);

struct IdentityRow {
  long long n = 0;
  long long lhs = 0;
  long long rhs = 0;
  std::optional<long long> series;  // absent where no series route exists
  bool ok = false;
  std::string note;
};

struct IdentityReport {
  TheoremId thm;
  ResidueSpec params;
  long long n_min = 0;
  long long n_max = 0;
  std::vector<IdentityRow> per_n;
  std::vector<std::string> failures;

  bool ok() const;
};

IdentityReport check(TheoremId thm, long long n_max,
                     const ResidueSpec& params = {});

// Signed excess (or lhs count for the equality-form identities) at a single n.
long long excess(TheoremId thm, long long n, const ResidueSpec& params = {});

// The exact objects counted by the identity's right-hand side.
using Witness = std::variant<Partition, PartitionPair>;
std::vector<Witness> witnesses(TheoremId thm, long long n,
                               const ResidueSpec& params = {});
std::string witness_to_string(const Witness& w);

// Negative coefficients of the single-residue derivative difference with
// LO = {2}, per r: the n <= n_max with a negative coefficient and its value.
struct NegativeRow {
  long long r = 0;
  std::vector<long long> ns;
  std::vector<long long> values;
};
std::vector<NegativeRow> negative_coefficient_table(long long r_max,
                                                    long long n_max);

// Strict positivity of the single-residue coefficients c_{ell,r}(n) beyond
// the threshold (ell+8 for odd ell, ell+19 for even ell), together with the
// explicit witness constructions.
struct PositivityReport {
  long long ell = 0;
  long long r = 0;
  long long threshold = 0;
  long long n_max = 0;
  bool coefficients_ok = true;
  bool witnesses_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return coefficients_ok && witnesses_ok; }
};
PositivityReport positivity_threshold_check(long long ell, long long r,
                                            long long n_max);

}  // namespace partq
