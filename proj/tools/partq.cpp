// partq: run the identity checks, dump exact q-series coefficients, emit
// witness lists and the negative-coefficient table.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partq/identities.hpp"
#include "partq/series.hpp"

using nlohmann::json;
using namespace partq;

namespace {

struct RunConfig {
  std::string thm;
  long long n_max = 36;
  long long N = -1;  // series order; -1 = derive from n_max / env
  long long r = 1;
  std::vector<long long> set;  // residues, split by parity into L and O
  long long ell = 0;
  long long n = 0;
  long long r_max = 12;
  std::string format = "text";
  std::string name;  // series name for `series`
  bool compare_paper = false;
};

long long default_order(const RunConfig& cfg) {
  if (cfg.N >= 0) return cfg.N;
  if (const char* env = std::getenv("PARTQ_N")) return std::atoll(env);
  return cfg.n_max;
}

ResidueSpec residues(const RunConfig& cfg) {
  ResidueSpec p;
  p.r = cfg.r;
  for (long long v : cfg.set) (v % 2 == 0 ? p.L : p.O).insert(v);
  if (cfg.ell > 0) (cfg.ell % 2 == 0 ? p.L : p.O).insert(cfg.ell);
  return p;
}

json params_json(const ResidueSpec& p) {
  return json{{"r", p.r}, {"L", p.L}, {"O", p.O}};
}

int emit_check(const IdentityReport& rep, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const IdentityRow& row : rep.per_n) {
      json j{{"n", row.n},   {"lhs", row.lhs}, {"rhs", row.rhs},
             {"ok", row.ok}, {"note", row.note}};
      if (row.series)
        j["series"] = *row.series;
      else
        j["series"] = nullptr;
      rows.push_back(std::move(j));
    }
    json out{{"thm", theorem_name(rep.thm)},
             {"params", params_json(rep.params)},
             {"rows", std::move(rows)}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,lhs,rhs,series,ok,note\n";
    for (const IdentityRow& row : rep.per_n) {
      std::cout << row.n << ',' << row.lhs << ',' << row.rhs << ',';
      if (row.series) std::cout << *row.series;
      std::cout << ',' << (row.ok ? "true" : "false") << ',' << row.note
                << "\n";
    }
  } else {
    for (const IdentityRow& row : rep.per_n) {
      std::cout << "n=" << row.n << " lhs=" << row.lhs << " rhs=" << row.rhs;
      if (row.series) std::cout << " series=" << *row.series;
      std::cout << (row.ok ? " ok" : " FAIL");
      if (!row.note.empty()) std::cout << "  (" << row.note << ")";
      std::cout << "\n";
    }
    for (const std::string& f : rep.failures) std::cout << "error: " << f << "\n";
  }
  return rep.ok() ? 0 : 1;
}

std::string set_braces(const std::vector<long long>& ns) {
  if (ns.empty()) return "∅";
  std::string s = "{";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(ns[i]);
  }
  return s + "}";
}

// Negative-coefficient cells as published: r -> {n}, every value -1.
std::vector<long long> published_negative_cells(long long r) {
  if (r == 1) return {};
  if (r == 2 || r == 4 || r == 7) return {4, 8, 12};
  if (r == 3) return {4};
  if (r == 5) return {4, 8};
  if (r == 6 || r == 9) return {4, 8, 12, 16};
  return {4, 8, 12, 16, 20};  // r = 8 or r >= 10
}

int emit_table(const std::vector<NegativeRow>& table, const RunConfig& cfg) {
  bool mismatch = false;
  if (cfg.compare_paper) {
    for (const NegativeRow& row : table) {
      if (row.ns != published_negative_cells(row.r)) mismatch = true;
      for (long long v : row.values)
        if (v != -1) mismatch = true;
    }
  }
  if (cfg.format == "json") {
    json rows = json::array();
    for (const NegativeRow& row : table)
      rows.push_back(json{{"r", row.r}, {"n", row.ns}, {"values", row.values}});
    json out{{"rows", std::move(rows)}};
    if (cfg.compare_paper) out["matches_published"] = !mismatch;
    std::cout << out.dump() << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "r,n\n";
    for (const NegativeRow& row : table)
      std::cout << row.r << ',' << set_braces(row.ns) << "\n";
  } else {
    for (const NegativeRow& row : table) {
      std::cout << "r=" << row.r << "  n=" << set_braces(row.ns);
      if (!row.values.empty()) {
        std::cout << "  values=";
        for (long long v : row.values) std::cout << v << ' ';
      }
      std::cout << "\n";
    }
    if (cfg.compare_paper)
      std::cout << (mismatch ? "MISMATCH with published table\n"
                             : "matches published table\n");
  }
  return mismatch ? 1 : 0;
}

std::optional<TruncatedSeries> named_series(const std::string& name, int N) {
  static const std::map<std::string, SeriesName> gens = {
      {"f", SeriesName::F},         {"e", SeriesName::E},
      {"qo", SeriesName::Qo},       {"fr", SeriesName::Fr},
      {"rr", SeriesName::Rr},       {"er", SeriesName::Er},
      {"qr", SeriesName::Qr},       {"erl", SeriesName::ErL},
      {"frl", SeriesName::FrL},     {"qrl", SeriesName::QrL},
      {"etilde", SeriesName::EtildeRL}, {"qtilde", SeriesName::QtildeRO}};
  if (auto it = gens.find(name); it != gens.end())
    return build_generating_jet(GenSpec::make(it->second), N).value;
  if (name == "j2exp") {
    TruncatedSeries s = pochhammer_inf(-1, 1, 2, N);
    s.mul_one_plus(-1, 2);
    return s;
  }
  if (name == "j2exp2") {
    TruncatedSeries s = TruncatedSeries::monomial(1, 2, N);
    s.div_one_plus(-1, 4);
    return s;
  }
  if (name == "j2exp3") {
    TruncatedSeries a = pochhammer_inf(-1, 1, 2, N);
    a.mul_one_plus(-1, 2);
    TruncatedSeries b = TruncatedSeries::monomial(1, 2, N);
    b.div_one_plus(-1, 4);
    return a * b;
  }
  return std::nullopt;
}

std::optional<TruncatedSeries> named_series_with_params(const RunConfig& cfg,
                                                        int N) {
  ResidueSpec p = residues(cfg);
  static const std::map<std::string, SeriesName> gens = {
      {"f", SeriesName::F},         {"e", SeriesName::E},
      {"qo", SeriesName::Qo},       {"fr", SeriesName::Fr},
      {"rr", SeriesName::Rr},       {"er", SeriesName::Er},
      {"qr", SeriesName::Qr},       {"erl", SeriesName::ErL},
      {"frl", SeriesName::FrL},     {"qrl", SeriesName::QrL},
      {"etilde", SeriesName::EtildeRL}, {"qtilde", SeriesName::QtildeRO}};
  if (auto it = gens.find(cfg.name); it != gens.end())
    return build_generating_jet(GenSpec::make(it->second, p), N).value;
  return named_series(cfg.name, N);
}

int emit_series(const TruncatedSeries& s, const std::string& format) {
  if (format == "csv") {
    std::cout << "n,c\n";
    for (int n = 0; n <= s.order(); ++n)
      std::cout << n << ',' << s.coefficient(n) << "\n";
  } else {
    std::cout << '[';
    for (int n = 0; n <= s.order(); ++n) {
      if (n) std::cout << ',';
      std::cout << s.coefficient(n);
    }
    std::cout << "]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact partition-identity checker"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "modulus parameter r");
    sub->add_option("--set", cfg.set,
                    "residue set, comma separated; split by parity into L/O")
        ->delimiter(',');
    sub->add_option("--ell", cfg.ell, "single residue (shorthand for --set)");
    sub->add_option("--format", cfg.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* c_check = app.add_subcommand("check", "verify an identity");
  c_check->add_option("--thm", cfg.thm, "identity name")->required();
  c_check->add_option("--nmax", cfg.n_max, "check all n <= nmax");
  add_common(c_check);

  CLI::App* c_table =
      app.add_subcommand("table", "negative-coefficient table of the single-residue series with residue 2");
  c_table->add_option("--rmax", cfg.r_max, "largest r");
  c_table->add_option("--nmax", cfg.n_max, "largest n scanned");
  c_table->add_flag("--compare-paper", cfg.compare_paper,
                    "diff against the published table");
  add_common(c_table);

  CLI::App* c_series = app.add_subcommand("series", "dump series coefficients");
  c_series->add_option("--name", cfg.name, "series name (qo, f, e, ..., j2exp)");
  c_series->add_option("--thm", cfg.thm, "derivative difference of an identity");
  c_series->add_option("--N", cfg.N, "series order");
  add_common(c_series);

  CLI::App* c_witness = app.add_subcommand("witness", "list counted objects");
  c_witness->add_option("--thm", cfg.thm, "identity name")->required();
  c_witness->add_option("--n", cfg.n, "size n")->required();
  add_common(c_witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_check->parsed()) {
      if (cfg.n_max < 0) {
        std::cerr << "nmax must be >= 0\n";
        return 2;
      }
      auto id = theorem_from_name(cfg.thm);
      if (!id) {
        std::cerr << "unknown identity: " << cfg.thm << "\n";
        return 2;
      }
      return emit_check(check(*id, cfg.n_max, residues(cfg)), cfg.format);
    }
    if (c_table->parsed()) {
      if (cfg.r_max < 1) {
        std::cerr << "rmax must be >= 1\n";
        return 2;
      }
      long long n_max = std::max<long long>(cfg.n_max, 20);
      return emit_table(negative_coefficient_table(cfg.r_max, n_max), cfg);
    }
    if (c_series->parsed()) {
      const int N = static_cast<int>(std::max<long long>(default_order(cfg), 0));
      if (!cfg.name.empty()) {
        auto s = named_series_with_params(cfg, N);
        if (!s) {
          std::cerr << "unknown series name: " << cfg.name << "\n";
          return 2;
        }
        return emit_series(*s, cfg.format);
      }
      if (!cfg.thm.empty()) {
        auto id = theorem_from_name(cfg.thm);
        if (!id) {
          std::cerr << "unknown identity: " << cfg.thm << "\n";
          return 2;
        }
        IdentityReport rep = check(*id, N, residues(cfg));
        TruncatedSeries s(N);
        for (const IdentityRow& row : rep.per_n)
          if (row.series) s.set_coefficient(static_cast<int>(row.n), *row.series);
        return emit_series(s, cfg.format);
      }
      std::cerr << "series needs --name or --thm\n";
      return 2;
    }
    if (c_witness->parsed()) {
      if (cfg.n < 0) {
        std::cerr << "n must be >= 0\n";
        return 2;
      }
      auto id = theorem_from_name(cfg.thm);
      if (!id) {
        std::cerr << "unknown identity: " << cfg.thm << "\n";
        return 2;
      }
      if (cfg.format == "json") {
        json arr = json::array();
        for (const Witness& w : witnesses(*id, cfg.n, residues(cfg)))
          arr.push_back(witness_to_string(w));
        std::cout << arr.dump() << "\n";
      } else {
        for (const Witness& w : witnesses(*id, cfg.n, residues(cfg)))
          std::cout << witness_to_string(w) << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
