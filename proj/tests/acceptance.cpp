// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "partq/bijections.hpp"
#include "partq/identities.hpp"
#include "partq/series.hpp"

using namespace partq;

namespace {

int g_failures = 0;

void run(int idx, const char* label, double budget_s,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  if (budget_s > 0 && dt > budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++g_failures;
  if (detail.size() > 220) detail = detail.substr(0, 220) + " ...";
  std::printf("criterion %2d: %s (%6.2fs) %s%s%s\n", idx, ok ? "PASS" : "FAIL",
              dt, label, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

std::string list_bad(const IdentityReport& rep) {
  std::string s;
  for (const IdentityRow& row : rep.per_n)
    if (!row.ok) s += (s.empty() ? "n=" : ",") + std::to_string(row.n);
  return s;
}

bool all_ok(const IdentityReport& rep, std::string& detail) {
  if (rep.ok()) return true;
  if (!detail.empty()) detail += "; ";
  detail += theorem_name(rep.thm) + " fails at " + list_bad(rep);
  return false;
}

}  // namespace

int main() {
  run(1, "parity identity: enumeration n<=60, series n<=200", 60,
      [](std::string& detail) {
        bool ok = all_ok(check(TheoremId::Lehmer, 60), detail);
        // series route to higher order: the even/odd split sums to p(n) and
        // differs by the distinct-odd count, so both halves are determined
        ZJet f = build_generating_jet(GenSpec::make(SeriesName::F), 200);
        TruncatedSeries qo = pochhammer_inf(-1, 1, 2, 200);
        TruncatedSeries all = pochhammer_inf(1, 1, 1, 200).inverse();
        if (f.value != qo) {
          ok = false;
          detail += "; signed series != distinct-odd product";
        }
        for (int n = 0; n <= 200 && ok; ++n)
          if ((all.coefficient(n) + qo.coefficient(n)) % 2 != 0) {
            ok = false;
            detail += "; parity split not integral at n=" + std::to_string(n);
          }
        return ok;
      });

  run(2, "signed parity identity n<=50", 0, [](std::string& detail) {
    return all_ok(check(TheoremId::Glaisher, 50), detail);
  });

  run(3, "first/second companion identities, three routes, n<=50", 0,
      [](std::string& detail) {
        bool ok = true;
        for (TheoremId id : {TheoremId::T1_2, TheoremId::T1_4}) {
          IdentityReport rep = check(id, 50);
          for (const IdentityRow& row : rep.per_n)
            if (!row.series.has_value()) {
              ok = false;
              detail += "missing series column";
            }
          ok &= all_ok(rep, detail);
        }
        return ok;
      });

  run(4, "modulus generalizations r in {1..4}, n<=40", 0,
      [](std::string& detail) {
        bool ok = true;
        for (long long r = 1; r <= 4; ++r) {
          ResidueSpec p{r, {}, {}};
          ok &= all_ok(check(TheoremId::T1_6, 40, p), detail);
          ok &= all_ok(check(TheoremId::T1_7, 40, p), detail);
          ok &= all_ok(check(TheoremId::T1_8, 40, p), detail);
        }
        // r = 1 regression: the generalizations reduce to the base cases
        ResidueSpec one{1, {}, {}};
        IdentityReport a = check(TheoremId::T1_6, 40, one);
        IdentityReport b = check(TheoremId::Lehmer, 40);
        for (std::size_t i = 0; i < a.per_n.size(); ++i)
          if (a.per_n[i].lhs != b.per_n[i].lhs ||
              a.per_n[i].rhs != b.per_n[i].rhs) {
            ok = false;
            detail += "; r=1 reduction mismatch";
            break;
          }
        for (long long n = 0; n <= 40; ++n)
          if (excess(TheoremId::T1_8, n, one) != excess(TheoremId::T1_4, n)) {
            ok = false;
            detail += "; r=1 excess reduction mismatch";
            break;
          }
        return ok;
      });

  run(5, "residue-set generalizations r in {1..3}, all nonempty L, n<=36", 0,
      [](std::string& detail) {
        bool ok = true;
        for (long long r = 1; r <= 3; ++r) {
          std::vector<long long> evens;
          for (long long ell = 2; ell <= 2 * r; ell += 2)
            evens.push_back(ell);
          for (unsigned mask = 1; mask < (1u << evens.size()); ++mask) {
            ResidueSpec p{r, {}, {}};
            for (std::size_t i = 0; i < evens.size(); ++i)
              if (mask & (1u << i)) p.L.insert(evens[i]);
            ok &= all_ok(check(TheoremId::T1_9, 36, p), detail);
            ok &= all_ok(check(TheoremId::T1_10, 36, p), detail);
            ok &= all_ok(check(TheoremId::T1_11, 36, p), detail);
          }
        }
        return ok;
      });

  run(6, "singleton residue identity r in {1,2,3,5,10}, n<=60", 0,
      [](std::string& detail) {
        bool ok = true;
        for (long long r : {1LL, 2LL, 3LL, 5LL, 10LL})
          for (long long ell = 1; ell <= 2 * r; ++ell) {
            ResidueSpec p{r, {}, {}};
            (ell % 2 ? p.O : p.L).insert(ell);
            IdentityReport rep = check(TheoremId::T1_12, 60, p);
            ok &= all_ok(rep, detail);
            if (ell == 2) {
              // correction cells must be annotated, small and large
              std::set<long long> noted;
              for (const IdentityRow& row : rep.per_n)
                if (!row.note.empty()) noted.insert(row.n);
              for (long long n : {4, 8, 12, 16, 20, 24, 28, 60})
                if (!noted.count(n)) {
                  ok = false;
                  detail += "; missing correction note at n=" +
                            std::to_string(n) + " (r=" + std::to_string(r) +
                            ")";
                }
            }
          }
        return ok;
      });

  run(7, "negative-coefficient table r in {1..12}, n<=60, bit-exact", 0,
      [](std::string& detail) {
        const std::vector<std::vector<long long>> expect = {
            {},           {4, 8, 12},     {4},
            {4, 8, 12},   {4, 8},         {4, 8, 12, 16},
            {4, 8, 12},   {4, 8, 12, 16, 20}, {4, 8, 12, 16},
            {4, 8, 12, 16, 20}, {4, 8, 12, 16, 20}, {4, 8, 12, 16, 20}};
        std::vector<NegativeRow> table = negative_coefficient_table(12, 60);
        bool ok = table.size() == 12;
        for (const NegativeRow& row : table) {
          if (row.ns != expect[static_cast<std::size_t>(row.r - 1)]) {
            ok = false;
            detail += "; wrong cells at r=" + std::to_string(row.r);
          }
          for (long long v : row.values)
            if (v != -1) {
              ok = false;
              detail += "; non -1 value at r=" + std::to_string(row.r);
            }
        }
        return ok;
      });

  run(8, "printed expansions through q^16 and q^20", 0,
      [](std::string& detail) {
        bool ok = true;
        TruncatedSeries a = pochhammer_inf(-1, 1, 2, 16);
        a.mul_one_plus(-1, 2);
        const long long e1[] = {1, 1, -1, 0, 1, 0, 0, 0, 1,
                                1, 0,  0, 1, 1, 0, 1, 2};
        for (int n = 0; n <= 16; ++n)
          if (a.coefficient(n) != e1[n]) {
            ok = false;
            detail += "; first expansion differs at q^" + std::to_string(n);
          }
        TruncatedSeries b = pochhammer_inf(-1, 1, 2, 20);
        b.mul_one_plus(-1, 2);
        TruncatedSeries m = TruncatedSeries::monomial(1, 2, 20);
        m.div_one_plus(-1, 4);
        b = b * m;
        const long long e3[] = {0, 0, 1, 1, -1, 0, 2, 1, -1, 0, 3,
                                2, -1, 0, 4, 3, -1, 1, 6, 4, -1};
        for (int n = 0; n <= 20; ++n)
          if (b.coefficient(n) != e3[n]) {
            ok = false;
            detail += "; product expansion differs at q^" + std::to_string(n);
          }
        return ok;
      });

  run(9, "bijection suites, all flags + complement = series excess, n<=36", 0,
      [](std::string& detail) {
        bool ok = true;
        auto note = [&](const char* what, long long r, long long ell,
                        long long n) {
          ok = false;
          detail += std::string("; ") + what + " r=" + std::to_string(r) +
                    (ell ? " ell=" + std::to_string(ell) : "") +
                    " n=" + std::to_string(n);
        };
        TruncatedSeries dd14 = derivative_difference(SeriesThm::T1_4, {}, 36);
        for (long long n = 0; n <= 36; ++n) {
          MapReport rep = verify_map(MapId::Sec2, n);
          if (!rep.ok()) note("sec2", 1, 0, n);
          if (Int(rep.excess()) != dd14.coefficient(static_cast<int>(n)))
            note("sec2 excess", 1, 0, n);
        }
        for (long long r = 1; r <= 4; ++r) {
          for (long long ell = 1; ell <= 2 * r; ++ell) {
            ResidueSpec p{r, {}, {}};
            (ell % 2 ? p.O : p.L).insert(ell);
            TruncatedSeries dd =
                derivative_difference(SeriesThm::T1_12, p, 36);
            for (long long n = 0; n <= 36; ++n) {
              MapParams mp;
              mp.r = r;
              mp.ell = ell;
              MapReport rep = verify_map(MapId::Lr, n, mp);
              if (!rep.ok()) note("residue map", r, ell, n);
              if (Int(rep.excess()) != dd.coefficient(static_cast<int>(n)))
                note("residue map excess", r, ell, n);
            }
          }
          ResidueSpec pr{r, {}, {}};
          TruncatedSeries dd62 =
              derivative_difference(SeriesThm::T6_2, pr, 36);
          TruncatedSeries dd63 =
              derivative_difference(SeriesThm::T6_3, pr, 36);
          for (long long n = 0; n <= 36; ++n) {
            MapParams mp;
            mp.r = r;
            MapReport r62 = verify_map(MapId::Thm62, n, mp);
            if (!r62.ok()) note("even-to-odd sign map", r, 0, n);
            if (Int(r62.excess()) != dd62.coefficient(static_cast<int>(n)))
              note("even-to-odd excess", r, 0, n);
            MapReport r63 = verify_map(MapId::Thm63, n, mp);
            if (!r63.ok()) note("odd-to-even sign map", r, 0, n);
            if (Int(r63.excess()) != dd63.coefficient(static_cast<int>(n)))
              note("odd-to-even excess", r, 0, n);
          }
        }
        return ok;
      });

  run(10, "sign-theorem series: nonnegative to N=150, sum equals example 3", 0,
      [](std::string& detail) {
        bool ok = true;
        for (long long r = 1; r <= 6; ++r) {
          ResidueSpec p{r, {}, {}};
          TruncatedSeries a = derivative_difference(SeriesThm::T6_2, p, 150);
          TruncatedSeries b = derivative_difference(SeriesThm::T6_3, p, 150);
          for (int n = 0; n <= 150; ++n) {
            if (a.coefficient(n) < 0 || b.coefficient(n) < 0) {
              ok = false;
              detail += "; negative coefficient at r=" + std::to_string(r) +
                        " n=" + std::to_string(n);
            }
          }
          ResidueSpec e{r, {2 * r}, {1}};
          TruncatedSeries c = derivative_difference(SeriesThm::Ex3, e, 150);
          if (a + b != c) {
            ok = false;
            detail += "; sum != example-3 series at r=" + std::to_string(r) +
                      " (difference matches instead: " +
                      (b - a == c ? "yes" : "no") + ")";
          }
        }
        return ok;
      });

  run(11, "corollaries and worked examples n<=40, with witness bijection", 0,
      [](std::string& detail) {
        bool ok = true;
        ok &= all_ok(check(TheoremId::Cor5_2, 40), detail);
        ok &= all_ok(check(TheoremId::Cor5_3, 40), detail);
        for (long long r = 1; r <= 3; ++r) {
          ResidueSpec p{r, {}, {}};
          ok &= all_ok(check(TheoremId::Ex1, 40, p), detail);
          ok &= all_ok(check(TheoremId::Ex2, 40, p), detail);
          ok &= all_ok(check(TheoremId::Ex3, 40, p), detail);
        }
        // odd-excess witnesses = even-excess witnesses + one-even witnesses,
        // via conjugating the repeated even block
        for (long long n = 0; n <= 40; ++n) {
          std::vector<Witness> odd = witnesses(TheoremId::Cor5_3, n);
          std::vector<Witness> even = witnesses(TheoremId::Cor5_2, n);
          std::vector<Witness> onev = witnesses(TheoremId::T1_2, n);
          if (odd.size() != even.size() + onev.size()) {
            ok = false;
            detail += "; witness split fails at n=" + std::to_string(n);
            continue;
          }
          std::set<Partition> target;
          for (const Witness& w : even) target.insert(std::get<Partition>(w));
          std::set<Partition> mapped;
          for (const Witness& w : odd) {
            const Partition& lam = std::get<Partition>(w);
            bool all_odd = true;
            for (long long part : lam.parts()) all_odd &= part % 2 == 1;
            if (!all_odd) continue;
            long long v = 0, m = 0;
            for (long long part : lam.parts())
              if (lam.multiplicity(part) > 1) {
                v = part;
                m = lam.multiplicity(part);
                break;
              }
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
          if (mapped != target) {
            ok = false;
            detail += "; witness bijection fails at n=" + std::to_string(n);
          }
        }
        return ok;
      });

  run(12, "property suite: ring laws, oracles, closed-form equalities N=150",
      0, [](std::string& detail) {
        bool ok = true;
        TruncatedSeries s = pochhammer_inf(-1, 1, 2, 150);
        TruncatedSeries t = pochhammer_inf(1, 2, 2, 150);
        if (s * t != t * s || s * s.inverse() != TruncatedSeries::one(150) ||
            (s + t) * s != s * s + t * s) {
          ok = false;
          detail += "; ring law violation";
        }
        // pentagonal-number signs in the Euler product
        TruncatedSeries euler = pochhammer_inf(1, 1, 1, 150);
        for (int n = 0; n <= 150; ++n) {
          Int expect = 0;
          for (long long k = -20; k <= 20; ++k)
            if (k * (3 * k - 1) / 2 == n) expect += (k % 2 == 0 ? 1 : -1);
          if (euler.coefficient(n) != expect) {
            ok = false;
            detail += "; pentagonal mismatch at n=" + std::to_string(n);
          }
        }
        // Lambert sum counts divisors in a residue class
        TruncatedSeries lam = lambert_sum(1, 2, 1, 1, 120);
        for (int n = 1; n <= 120; ++n) {
          Int cnt = 0;
          for (int d = 1; d <= n; ++d)
            if (n % d == 0 && d % 2 == 1) ++cnt;
          if (lam.coefficient(n) != cnt) {
            ok = false;
            detail += "; lambert oracle mismatch at n=" + std::to_string(n);
          }
        }
        for (long long r = 1; r <= 4 && ok; ++r) {
          ResidueSpec p{r, {}, {}};
          if (build_generating_jet(GenSpec::make(SeriesName::Fr, p), 150)
                  .value !=
              build_generating_jet(GenSpec::make(SeriesName::Rr, p), 150)
                  .value) {
            ok = false;
            detail += "; product forms differ at r=" + std::to_string(r);
          }
          std::vector<long long> evens;
          for (long long ell = 2; ell <= 2 * r; ell += 2)
            evens.push_back(ell);
          for (unsigned mask = 1; mask < (1u << evens.size()); ++mask) {
            ResidueSpec pl{r, {}, {}};
            for (std::size_t i = 0; i < evens.size(); ++i)
              if (mask & (1u << i)) pl.L.insert(evens[i]);
            if (build_generating_jet(GenSpec::make(SeriesName::ErL, pl), 150)
                    .value !=
                build_generating_jet(GenSpec::make(SeriesName::QrL, pl), 150)
                    .value) {
              ok = false;
              detail += "; restricted forms differ at r=" + std::to_string(r);
            }
            ResidueSpec plo = pl;
            plo.O = pl.O_complement();
            if (build_generating_jet(GenSpec::make(SeriesName::EtildeRL, plo),
                                     150)
                    .value !=
                build_generating_jet(GenSpec::make(SeriesName::QtildeRO, plo),
                                     150)
                    .value) {
              ok = false;
              detail += "; marked forms differ at r=" + std::to_string(r);
            }
          }
        }
        return ok;
      });

  std::printf("acceptance: %d of 12 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
