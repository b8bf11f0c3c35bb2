#include "partq/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace partq {

namespace {

bool is_distinct_odd(const Partition& lam) {
  long long prev = -1;
  for (long long p : lam.parts()) {
    if (p % 2 == 0 || p == prev) return false;
    prev = p;
  }
  return true;
}

long long mod2r(long long v, long long r) {
  long long m = 2 * r;
  return ((v % m) + m) % m;
}

Partition two_parts(long long x, long long y) {
  return Partition(std::vector<long long>{x, y});
}

// Largest part of lam different from g (lam has >= 2 parts, g in lam,
// parts distinct).
long long largest_other(const Partition& lam, long long g) {
  return lam.part(1) == g ? lam.part(2) : lam.part(1);
}

}  // namespace

PartitionPair map_T_sec2(const PartitionPair& p) {
  const long long a = p.a, b = p.b;
  if (a % 2 != 0 || b % 2 != 0 || !is_distinct_odd(p.lambda))
    throw std::invalid_argument("map_T_sec2: input not in the domain");
  const long long g = a + b - 1;
  if (!p.lambda.contains(g))
    return {p.lambda.with_part(g), a - 1, b - 1};
  if (p.lambda.num_parts() >= 2) {
    long long m = largest_other(p.lambda, g);
    return {p.lambda.without_part(g).without_part(m).with_part(2 * g + m),
            a - 1, b - 1};
  }
  // lambda = (a+b-1)
  return {two_parts(a + 1, a - 1), a + 1, b - 1};
}

PartitionPair map_L_sec2(const PartitionPair& p) {
  const long long c = p.a, d = p.b;
  if (c % 2 != 1 || d % 2 != 1)
    throw std::invalid_argument("map_L_sec2: rectangle not odd-odd");
  const Partition& mu = p.lambda;
  const long long h = c + d + 1;
  if (mu.contains(h)) return {mu.without_part(h), c + 1, d + 1};
  if (mu.part(1) != 3 * h && mu.part(1) - mu.part(2) > 2 * h)
    return {mu.without_part(mu.part(1)).with_part(h).with_part(mu.part(1) - 2 * h),
            c + 1, d + 1};
  if (c >= 3 && mu == two_parts(c, c - 2))
    return {Partition({c + d - 1}), c - 1, d + 1};
  throw std::invalid_argument("map_L_sec2: input not in the image");
}

std::optional<PartitionPair> map_T_lr(const PartitionPair& p, long long r,
                                      long long ell, long long n,
                                      bool extended) {
  const long long a = p.a, b = p.b;
  if (b % 2 != 0 || mod2r(a - ell, r) != 0 || !is_distinct_odd(p.lambda) ||
      p.total() != n)
    throw std::invalid_argument("map_T_lr: input not in the domain");
  if (ell % 2 != 0) {
    if (p.lambda.contains(a)) return PartitionPair{p.lambda.without_part(a), a, b + 1};
    return PartitionPair{p.lambda.with_part(a), a, b - 1};
  }
  if (!p.lambda.empty()) {
    long long l1 = p.lambda.part(1);
    return PartitionPair{p.lambda.without_part(l1).with_part(l1 + a), a, b - 1};
  }
  if (a != 2) return PartitionPair{mu_partition(a), a, b - 1};
  // (empty, (2^{n/2})), n = 0 (mod 4)
  if (extended) return PartitionPair{Partition{}, n, 1};
  if (n >= 24)
    return PartitionPair{Partition({9, 7, 5, 1}), 2, (n - 22) / 2};
  return std::nullopt;  // n in {4,8,12,16,20}: no image
}

PartitionPair map_L_lr(const PartitionPair& p, long long r, long long ell,
                       long long n, bool extended) {
  const long long a = p.a, d = p.b;
  const Partition& mu = p.lambda;
  if (d % 2 != 1)
    throw std::invalid_argument("map_L_lr: rectangle exponent not odd");
  if (ell % 2 != 0) {
    if (mu.contains(a)) return {mu.without_part(a), a, d + 1};
    if (d >= 3) return {mu.with_part(a), a, d - 1};
    throw std::invalid_argument("map_L_lr: input not in the image");
  }
  if (extended && mu.empty() && d == 1 && a == n && n % 4 == 0)
    return {Partition{}, 2, n / 2};
  if (a == 2 && mu == Partition({9, 7, 5, 1}))
    return {Partition{}, 2, d + 11};
  if (a >= 4 && mu == mu_partition(a)) return {Partition{}, a, d + 1};
  if (mu.part(1) - mu.part(2) > a)
    return {mu.without_part(mu.part(1)).with_part(mu.part(1) - a), a, d + 1};
  throw std::invalid_argument("map_L_lr: input not in the image");
}

PartitionPair map_T_thm62(const PartitionPair& p, long long r) {
  const long long a = p.a, b = p.b;
  if (b % 2 != 1 || mod2r(a, r) != 0 || !is_distinct_odd(p.lambda))
    throw std::invalid_argument("map_T_thm62: input not in the domain");
  const long long c = (b - 1) % (2 * r);
  const long long delta = a * b - (a - c) * (b - c);  // = c(a+b-c) >= 0
  if (!p.lambda.empty()) {
    long long l1 = p.lambda.part(1);
    return {p.lambda.without_part(l1).with_part(l1 + delta), b - c, a - c};
  }
  return {mu_partition(delta), b - c, a - c};
}

PartitionPair map_L_thm62(const PartitionPair& p, long long r) {
  const long long x = p.a, y = p.b;
  if (y % 2 != 0 || mod2r(x - 1, r) != 0)
    throw std::invalid_argument("map_L_thm62: input not in the codomain");
  const long long z = mod2r(-y, r);
  const long long delta = (y + z) * (x + z) - x * y;  // = z(x+y+z)
  const Partition& mu = p.lambda;
  if (mu == mu_partition(delta)) return {Partition{}, y + z, x + z};
  if (mu.part(1) - mu.part(2) > delta)
    return {mu.without_part(mu.part(1)).with_part(mu.part(1) - delta), y + z,
            x + z};
  throw std::invalid_argument("map_L_thm62: input not in the image");
}

PartitionPair map_T_thm63(const PartitionPair& p, long long r) {
  const long long a = p.a, b = p.b;
  if (b % 2 != 0 || mod2r(a, r) != 0 || !is_distinct_odd(p.lambda))
    throw std::invalid_argument("map_T_thm63: input not in the domain");
  const long long g = a + (2 * r - 1) * (b - 1);
  if (!p.lambda.contains(g))
    return {p.lambda.with_part(g), a + 1 - 2 * r, b - 1};
  if (p.lambda.num_parts() >= 2) {
    long long m = largest_other(p.lambda, g);
    return {p.lambda.without_part(g).without_part(m).with_part(2 * g + m),
            a + 1 - 2 * r, b - 1};
  }
  // lambda = (a + (2r-1)(b-1))
  return {two_parts(a + 1, a + (2 * r - 2) * b - (2 * r - 1)), a + 1, b - 1};
}

PartitionPair map_L_thm63(const PartitionPair& p, long long r) {
  const long long c = p.a, d = p.b;
  if (d % 2 != 1 || mod2r(c - 1, r) != 0)
    throw std::invalid_argument("map_L_thm63: input not in the codomain");
  const Partition& mu = p.lambda;
  const long long h = c + (2 * r - 1) * (d + 1);
  if (mu.contains(h)) return {mu.without_part(h), c + 2 * r - 1, d + 1};
  if (mu.part(1) - mu.part(2) > 2 * h)
    return {mu.without_part(mu.part(1)).with_part(h).with_part(mu.part(1) - 2 * h),
            c + 2 * r - 1, d + 1};
  long long second = c + (2 * r - 2) * d - 2;
  if (second >= 1 && c >= 2 && mu == two_parts(c, second))
    return {Partition({c - 1 + (2 * r - 1) * d}), c - 1, d + 1};
  throw std::invalid_argument("map_L_thm63: input not in the image");
}

namespace {

struct MapSpec {
  PairSpec domain;
  PairSpec codomain;
  std::function<std::optional<PartitionPair>(const PartitionPair&)> T;
  std::function<PartitionPair(const PartitionPair&)> L;
  // Stated image-set membership, independent of T (pair assumed in codomain).
  std::function<bool(const PartitionPair&)> in_image;
  // Stated complement description, where the source gives one.
  std::function<bool(const PartitionPair&)> in_complement;
};

PairSpec qo_pairs(std::function<bool(long long, long long)> rect) {
  return PairSpec{std::move(rect),
                  [](long long, long long) { return ConstraintSpec::distinct_odd(); },
                  {}};
}

MapSpec make_spec(MapId id, long long n, const MapParams& prm) {
  const long long r = prm.r;
  MapSpec s;
  switch (id) {
    case MapId::Sec2: {
      s.domain = qo_pairs([](long long a, long long b) { return a % 2 == 0 && b % 2 == 0; });
      s.codomain = qo_pairs([](long long a, long long b) { return a % 2 == 1 && b % 2 == 1; });
      s.T = [](const PartitionPair& p) { return std::optional{map_T_sec2(p)}; };
      s.L = [](const PartitionPair& p) { return map_L_sec2(p); };
      s.in_image = [](const PartitionPair& p) {
        const Partition& mu = p.lambda;
        long long h = p.a + p.b + 1;
        if (mu.contains(h)) return true;
        if (mu.part(1) != 3 * h && mu.part(1) - mu.part(2) > 2 * h) return true;
        return p.a >= 3 && mu == two_parts(p.a, p.a - 2);
      };
      s.in_complement = [n](const PartitionPair& p) {
        return in_B(p.lambda, n, p.a, p.b, 1);
      };
      break;
    }
    case MapId::Lr: {
      const long long ell = prm.ell;
      s.domain = qo_pairs([r, ell](long long a, long long b) {
        return b % 2 == 0 && mod2r(a - ell, r) == 0;
      });
      s.codomain = qo_pairs([r, ell](long long a, long long b) {
        return b % 2 == 1 && mod2r(a - ell, r) == 0;
      });
      s.T = [r, ell, n, ext = prm.extended](const PartitionPair& p) {
        return map_T_lr(p, r, ell, n, ext);
      };
      s.L = [r, ell, n, ext = prm.extended](const PartitionPair& p) {
        return map_L_lr(p, r, ell, n, ext);
      };
      if (ell % 2 != 0) {
        s.in_image = [](const PartitionPair& p) {
          return p.lambda.contains(p.a) || p.b >= 3;
        };
        s.in_complement = [](const PartitionPair& p) {
          return p.b == 1 && !p.lambda.contains(p.a);
        };
      } else {
        s.in_image = [n, ext = prm.extended](const PartitionPair& p) {
          const Partition& mu = p.lambda;
          if (ext && mu.empty() && p.b == 1 && p.a == n && n % 4 == 0)
            return true;
          if (!ext && p.a == 2 && n >= 24 && mu == Partition({9, 7, 5, 1}))
            return true;
          if (p.a >= 4 && mu == mu_partition(p.a)) return true;
          return mu.part(1) - mu.part(2) > p.a;
        };
        // conditions II_e (and III_e where applicable)
        s.in_complement = [n, ext = prm.extended](const PartitionPair& p) {
          const Partition& mu = p.lambda;
          if (mu.part(1) - mu.part(2) > p.a) return false;
          if (p.a >= 4 && mu == mu_partition(p.a)) return false;
          if (!ext && p.a == 2 && n % 4 == 0 && n >= 24 &&
              mu == Partition({9, 7, 5, 1}))
            return false;
          if (ext && p.a % 4 == 0 && p.b == 1 && mu.empty()) return false;
          return true;
        };
      }
      break;
    }
    case MapId::Thm62: {
      s.domain = qo_pairs([r](long long a, long long b) {
        return b % 2 == 1 && mod2r(a, r) == 0;
      });
      s.codomain = qo_pairs([r](long long a, long long b) {
        return b % 2 == 0 && mod2r(a - 1, r) == 0;
      });
      s.T = [r](const PartitionPair& p) { return std::optional{map_T_thm62(p, r)}; };
      s.L = [r](const PartitionPair& p) { return map_L_thm62(p, r); };
      s.in_image = [r](const PartitionPair& p) {
        long long z = mod2r(-p.b, r);
        long long delta = (p.b + z) * (p.a + z) - p.a * p.b;
        if (p.lambda == mu_partition(delta)) return true;
        return p.lambda.part(1) - p.lambda.part(2) > delta;
      };
      break;
    }
    case MapId::Thm63: {
      s.domain = qo_pairs([r](long long a, long long b) {
        return b % 2 == 0 && mod2r(a, r) == 0;
      });
      s.codomain = qo_pairs([r](long long a, long long b) {
        return b % 2 == 1 && mod2r(a - 1, r) == 0;
      });
      s.T = [r](const PartitionPair& p) { return std::optional{map_T_thm63(p, r)}; };
      s.L = [r](const PartitionPair& p) { return map_L_thm63(p, r); };
      s.in_image = [r](const PartitionPair& p) {
        const Partition& mu = p.lambda;
        long long h = p.a + (2 * r - 1) * (p.b + 1);
        if (mu.contains(h)) return true;
        if (mu.part(1) - mu.part(2) > 2 * h) return true;
        long long second = p.a + (2 * r - 2) * p.b - 2;
        return second >= 1 && mu == two_parts(p.a, second);
      };
      break;
    }
  }
  return s;
}

bool in_codomain(const MapSpec& s, const PartitionPair& p, long long n) {
  if (p.total() != n) return false;
  if (s.codomain.rect_ok && !s.codomain.rect_ok(p.a, p.b)) return false;
  return is_distinct_odd(p.lambda);
}

}  // namespace

MapReport verify_map(MapId id, long long n, const MapParams& params) {
  if (id == MapId::Lr && params.ell == 0)
    throw std::invalid_argument("verify_map: Lr requires ell");
  MapSpec spec = make_spec(id, n, params);
  MapReport rep;
  rep.n = n;

  std::vector<PartitionPair> domain = enumerate_pairs(n, spec.domain);
  std::vector<PartitionPair> codomain = enumerate_pairs(n, spec.codomain);
  rep.domain_size = static_cast<long long>(domain.size());

  std::set<PartitionPair> image;
  std::map<PartitionPair, PartitionPair> preimage_of;
  for (const PartitionPair& x : domain) {
    std::optional<PartitionPair> y;
    try {
      y = spec.T(x);
    } catch (const std::exception& e) {
      rep.failures.push_back("T failed on " + x.to_string() + ": " + e.what());
      rep.roundtrip_ok = false;
      continue;
    }
    if (!y) {
      ++rep.unmapped;
      continue;
    }
    if (y->total() != n) {
      rep.size_ok = false;
      rep.failures.push_back("size not preserved: " + x.to_string() + " -> " +
                             y->to_string());
    }
    if (!in_codomain(spec, *y, n)) {
      rep.codomain_ok = false;
      rep.failures.push_back("image outside codomain: " + x.to_string() +
                             " -> " + y->to_string());
    }
    if (auto [it, fresh] = image.insert(*y); !fresh) {
      rep.injective_ok = false;
      rep.failures.push_back("collision at " + y->to_string() + " from " +
                             x.to_string() + " and " +
                             preimage_of.at(*y).to_string());
    } else {
      preimage_of.emplace(*y, x);
    }
    try {
      PartitionPair back = spec.L(*y);
      if (!(back == x)) {
        rep.roundtrip_ok = false;
        rep.failures.push_back("L(T(" + x.to_string() + ")) = " +
                               back.to_string());
      }
    } catch (const std::exception& e) {
      rep.roundtrip_ok = false;
      rep.failures.push_back("L failed on T(" + x.to_string() +
                             "): " + e.what());
    }
  }
  rep.image_size = static_cast<long long>(image.size());

  for (const PartitionPair& y : codomain) {
    bool in_img = image.count(y) != 0;
    if (!in_img) rep.complement.push_back(y);
    if (spec.in_image && spec.in_image(y) != in_img) {
      rep.image_char_ok = false;
      rep.failures.push_back(std::string("image characterization ") +
                             (in_img ? "misses " : "wrongly admits ") +
                             y.to_string());
    }
    if (spec.in_complement && spec.in_complement(y) != !in_img) {
      rep.complement_char_ok = false;
      rep.failures.push_back(std::string("complement description ") +
                             (!in_img ? "misses " : "wrongly admits ") +
                             y.to_string());
    }
  }
  return rep;
}

}  // namespace partq
