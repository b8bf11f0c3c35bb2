#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "partq/identities.hpp"
#include "partq/series.hpp"

using namespace partq;

namespace {

long long count_family(long long n, const ConstraintSpec& spec) {
  long long c = 0;
  for_each_partition(n, spec, [&](const std::vector<long long>&) { ++c; });
  return c;
}

}  // namespace

TEST_CASE("theorem name round-trip") {
  for (const char* name :
       {"lehmer", "glaisher", "beck_pairs", "t1_2", "t1_4", "t1_6", "t1_7",
        "t1_8", "t1_9", "t1_10", "t1_11", "t1_12", "cor5_2", "cor5_3", "ex1",
        "ex2", "ex3", "t6_2", "t6_3", "positivity"}) {
    std::optional<TheoremId> id = theorem_from_name(name);
    REQUIRE(id.has_value());
    CHECK(theorem_name(*id) == name);
  }
  CHECK_FALSE(theorem_from_name("nope").has_value());
}

TEST_CASE("base partition identities against direct counts") {
  for (long long n = 0; n <= 40; ++n) {
    long long pe = count_family(n, ConstraintSpec::even_count_parity(Parity::Even));
    long long po = count_family(n, ConstraintSpec::even_count_parity(Parity::Odd));
    long long qo = count_family(n, ConstraintSpec::distinct_odd());
    CHECK(pe == po + qo);
    long long all = count_family(n, ConstraintSpec::all());
    CHECK(pe + po == all);
    long long ce = count_family(n, ConstraintSpec::part_count_parity(Parity::Even));
    long long co = count_family(n, ConstraintSpec::part_count_parity(Parity::Odd));
    CHECK(ce - co == (n % 2 == 0 ? qo : -qo));
    CHECK(ce + co == all);
  }
  IdentityReport lehmer = check(TheoremId::Lehmer, 40);
  CHECK(lehmer.ok());
  IdentityReport glaisher = check(TheoremId::Glaisher, 40);
  CHECK(glaisher.ok());
  for (const IdentityRow& row : lehmer.per_n) {
    CHECK(row.lhs == row.rhs);
    REQUIRE(row.series.has_value());
    CHECK(row.lhs == *row.series);
  }
}

TEST_CASE("first companion identity: counts, series and witnesses agree") {
  IdentityReport rep = check(TheoremId::T1_2, 40);
  CHECK(rep.ok());
  // n = 4: the two qualifying partitions
  std::vector<Witness> w = witnesses(TheoremId::T1_2, 4);
  REQUIRE(w.size() == 2);
  std::set<std::string> names;
  for (const Witness& x : w) names.insert(witness_to_string(x));
  CHECK(names == std::set<std::string>{"[4]", "[2,2]"});
  for (long long n = 0; n <= 30; ++n)
    CHECK(static_cast<long long>(witnesses(TheoremId::T1_2, n).size()) ==
          excess(TheoremId::T1_2, n));
}

TEST_CASE("second companion identity: pair description undercounts on a gap set") {
  IdentityReport rep = check(TheoremId::T1_4, 30);
  const std::set<long long> gap = {10, 11, 18, 19, 21, 22, 26, 27, 29, 30};
  for (const IdentityRow& row : rep.per_n) {
    REQUIRE(row.series.has_value());
    CHECK(row.lhs == *row.series);  // the count/series routes always agree
    CHECK((row.lhs == row.rhs) == !gap.count(row.n));
    if (gap.count(row.n)) CHECK(row.rhs < row.lhs);
  }
  std::vector<Witness> w = witnesses(TheoremId::T1_4, 4);
  std::set<std::string> names;
  for (const Witness& x : w) names.insert(witness_to_string(x));
  CHECK(names == std::set<std::string>{"[1] x (1^3)", "[1] x (3^1)"});
}

TEST_CASE("modulus generalizations for small r") {
  for (long long r = 1; r <= 4; ++r) {
    ResidueSpec p;
    p.r = r;
    CHECK(check(TheoremId::T1_6, 36, p).ok());
    CHECK(check(TheoremId::T1_7, 36, p).ok());
  }
  // the t1_8 pair description inherits the same gap cells
  ResidueSpec p1;
  p1.r = 1;
  IdentityReport rep = check(TheoremId::T1_8, 30, p1);
  for (const IdentityRow& row : rep.per_n)
    CHECK((row.lhs == row.rhs) ==
          !std::set<long long>{10, 11, 18, 19, 21, 22, 26, 27, 29, 30}.count(
              row.n));
}

TEST_CASE("residue-set generalizations over every nonempty even set") {
  for (long long r = 1; r <= 3; ++r) {
    std::vector<long long> evens;
    for (long long ell = 2; ell <= 2 * r; ell += 2) evens.push_back(ell);
    for (unsigned mask = 1; mask < (1u << evens.size()); ++mask) {
      ResidueSpec p;
      p.r = r;
      for (std::size_t i = 0; i < evens.size(); ++i)
        if (mask & (1u << i)) p.L.insert(evens[i]);
      CHECK(check(TheoremId::T1_9, 28, p).ok());
      CHECK(check(TheoremId::T1_10, 28, p).ok());
    }
  }
}

TEST_CASE("singleton residue identity including the correction cells") {
  for (long long r : {1LL, 2LL, 3LL}) {
    for (long long ell = 1; ell <= 2 * r; ++ell) {
      ResidueSpec p;
      p.r = r;
      (ell % 2 ? p.O : p.L).insert(ell);
      IdentityReport rep = check(TheoremId::T1_12, 36, p);
      CHECK(rep.ok());
      if (ell == 2) {
        // the correction cells carry explanatory notes
        std::map<long long, std::string> notes;
        for (const IdentityRow& row : rep.per_n)
          if (!row.note.empty()) notes[row.n] = row.note;
        for (long long n : {4, 8, 12, 16, 20}) CHECK(notes.count(n));
        for (long long n : {24, 28, 32, 36}) CHECK(notes.count(n));
      }
    }
  }
}

TEST_CASE("singleton excesses add up to the full-set excess") {
  const long long r = 2;
  ResidueSpec full;
  full.r = r;
  full.L = {2, 4};
  full.O = {1, 3};
  for (long long n = 0; n <= 32; ++n) {
    long long sum = 0;
    for (long long ell = 1; ell <= 2 * r; ++ell) {
      ResidueSpec p;
      p.r = r;
      (ell % 2 ? p.O : p.L).insert(ell);
      sum += excess(TheoremId::T1_12, n, p);
    }
    CHECK(sum == excess(TheoremId::T1_12, n, full));
  }
}

TEST_CASE("corollaries of the singleton identity") {
  CHECK(check(TheoremId::Cor5_2, 40).ok());
  CHECK(check(TheoremId::Cor5_3, 40).ok());
  // the odd-excess witnesses split into the two stated types and biject
  // with (even-excess witnesses, first-identity witnesses)
  for (long long n = 0; n <= 36; ++n) {
    std::vector<Witness> odd = witnesses(TheoremId::Cor5_3, n);
    std::vector<Witness> even = witnesses(TheoremId::Cor5_2, n);
    std::vector<Witness> onev = witnesses(TheoremId::T1_2, n);
    CHECK(odd.size() == even.size() + onev.size());
    // type-ii witnesses (all parts odd) map to even-excess witnesses by
    // conjugating the repeated block (2k)^b -> b^{2k}
    std::set<Partition> target;
    for (const Witness& w : even) target.insert(std::get<Partition>(w));
    std::set<Partition> mapped;
    for (const Witness& w : odd) {
      const Partition& lam = std::get<Partition>(w);
      bool all_odd = true;
      for (long long part : lam.parts()) all_odd &= part % 2 == 1;
      if (!all_odd) continue;
      // locate the repeated value v with multiplicity m, move 2k = 2*(m/2)
      // copies of v into a (2k) x v block and conjugate it
      long long v = 0, m = 0;
      for (long long part : lam.parts())
        if (lam.multiplicity(part) > 1) {
          v = part;
          m = lam.multiplicity(part);
          break;
        }
      REQUIRE(v > 0);
      long long k = m / 2;
      std::vector<long long> rest;
      long long removed = 0;
      for (long long part : lam.parts()) {
        if (part == v && removed < 2 * k) {
          ++removed;
          continue;
        }
        rest.push_back(part);
      }
      for (long long i = 0; i < v; ++i) rest.push_back(2 * k);
      mapped.insert(make_partition(std::move(rest)));
    }
    CHECK(mapped.size() == odd.size() - onev.size());
    CHECK(mapped == target);
  }
}

TEST_CASE("the three worked examples") {
  for (long long r = 1; r <= 3; ++r) {
    ResidueSpec p;
    p.r = r;
    CHECK(check(TheoremId::Ex1, 36, p).ok());
    CHECK(check(TheoremId::Ex2, 36, p).ok());
    CHECK(check(TheoremId::Ex3, 36, p).ok());
  }
}

TEST_CASE("sign theorems: nonnegativity and the r = 2 defect cell") {
  for (long long r = 1; r <= 4; ++r) {
    ResidueSpec p;
    p.r = r;
    IdentityReport a = check(TheoremId::T6_2, 32, p);
    CHECK(a.ok());
    for (const IdentityRow& row : a.per_n) CHECK(row.lhs >= 0);
    IdentityReport b = check(TheoremId::T6_3, 32, p);
    for (const IdentityRow& row : b.per_n) {
      CHECK(row.lhs >= 0);
      REQUIRE(row.series.has_value());
      CHECK(row.lhs == *row.series);
      // the stated pair complement overcounts where the map leaves the
      // claimed codomain
      const bool defect = (r == 2 && (row.n == 15 || row.n == 27));
      CHECK((row.lhs == row.rhs) == !defect);
      if (defect) CHECK(row.rhs == row.lhs + 1);
    }
  }
}

TEST_CASE("negative-coefficient table matches the frozen values") {
  std::vector<NegativeRow> table = negative_coefficient_table(12, 60);
  REQUIRE(table.size() == 12);
  auto ns_of = [&](long long r) {
    for (const NegativeRow& row : table)
      if (row.r == r) return row.ns;
    return std::vector<long long>{};
  };
  CHECK(ns_of(1).empty());
  CHECK(ns_of(2) == std::vector<long long>{4, 8, 12});
  CHECK(ns_of(3) == std::vector<long long>{4});
  CHECK(ns_of(4) == std::vector<long long>{4, 8, 12});
  CHECK(ns_of(5) == std::vector<long long>{4, 8});
  CHECK(ns_of(6) == std::vector<long long>{4, 8, 12, 16});
  CHECK(ns_of(7) == std::vector<long long>{4, 8, 12});
  CHECK(ns_of(8) == std::vector<long long>{4, 8, 12, 16, 20});
  CHECK(ns_of(9) == std::vector<long long>{4, 8, 12, 16});
  for (long long r : {10, 11, 12})
    CHECK(ns_of(r) == std::vector<long long>{4, 8, 12, 16, 20});
  for (const NegativeRow& row : table)
    for (long long v : row.values) CHECK(v == -1);
}

TEST_CASE("positivity thresholds with explicit witnesses") {
  CHECK(positivity_threshold_check(1, 1, 60).ok());
  CHECK(positivity_threshold_check(3, 2, 60).ok());
  CHECK(positivity_threshold_check(4, 2, 60).ok());
  CHECK(positivity_threshold_check(2, 3, 60).ok());
  CHECK(positivity_threshold_check(5, 3, 60).ok());
  CHECK(positivity_threshold_check(6, 3, 60).ok());
  PositivityReport rep = positivity_threshold_check(2, 1, 60);
  CHECK(rep.threshold == 2 + 19);
  CHECK(rep.ok());
}

TEST_CASE("witness counts match the right-hand sides") {
  for (TheoremId id : {TheoremId::T1_2, TheoremId::Cor5_2, TheoremId::Cor5_3})
    for (long long n = 0; n <= 28; ++n) {
      IdentityReport rep = check(id, n);
      CHECK(static_cast<long long>(witnesses(id, n).size()) ==
            rep.per_n.back().rhs);
    }
  ResidueSpec p;
  p.r = 2;
  p.L = {4};
  for (long long n = 0; n <= 28; ++n)
    CHECK(static_cast<long long>(witnesses(TheoremId::T1_12, n, p).size()) ==
          excess(TheoremId::T1_12, n, p));
}
