#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partq/partition.hpp"

namespace partq {

// The four injection constructions between rectangle-marked pair families,
// with their inverses. Domains/codomains:
//   Sec2:  A = {lambda in Qo, a,b even}      -> B = {lambda in Qo, a,b odd}
//   Lr:    A = {Qo, b even, a = ell (2r)}    -> B = {Qo, b odd,  a = ell (2r)}
//   Thm62: A = {Qo, a = 0 (2r), b odd}       -> B = {Qo, a = 1 (2r), b even}
//   Thm63: A = {Qo, a = 0 (2r), b even}      -> B = {Qo, a = 1 (2r), b odd}

PartitionPair map_T_sec2(const PartitionPair& p);
PartitionPair map_L_sec2(const PartitionPair& p);

// For even ell the pair (empty,(2^{n/2})) maps to ((9,7,5,1),(2^{(n-22)/2}))
// when n >= 24 and has no image when n in {4,8,12,16,20} (nullopt).
// With `extended` set (the full-L variant), (empty,(2^{n/2})) maps to
// (empty,(n)) instead.
std::optional<PartitionPair> map_T_lr(const PartitionPair& p, long long r,
                                      long long ell, long long n,
                                      bool extended = false);
PartitionPair map_L_lr(const PartitionPair& p, long long r, long long ell,
                       long long n, bool extended = false);

PartitionPair map_T_thm62(const PartitionPair& p, long long r);
PartitionPair map_L_thm62(const PartitionPair& p, long long r);

PartitionPair map_T_thm63(const PartitionPair& p, long long r);
PartitionPair map_L_thm63(const PartitionPair& p, long long r);

enum class MapId { Sec2, Lr, Thm62, Thm63 };

struct MapParams {
  long long r = 1;
  long long ell = 0;      // required for MapId::Lr
  bool extended = false;  // full-L variant of the Lr exceptional case
};

struct MapReport {
  long long n = 0;
  long long domain_size = 0;
  long long image_size = 0;
  long long unmapped = 0;  // domain elements with no image (documented case)
  std::vector<PartitionPair> complement;  // codomain minus image
  bool roundtrip_ok = true;   // L(T(x)) == x and T(L(y)) == y on the image
  bool injective_ok = true;
  bool size_ok = true;        // T preserves total size
  bool codomain_ok = true;    // every image lies in the stated codomain
  bool image_char_ok = true;  // image == elements matching the stated image-set
                              // predicates (checked independently of T)
  bool complement_char_ok = true;  // complement == the stated combinatorial
                                   // description (where one exists)
  std::vector<std::string> failures;

  // |B| - |A| = |complement| - |unmapped| when T is injective.
  long long excess() const {
    return static_cast<long long>(complement.size()) - unmapped;
  }
  bool ok() const {
    return roundtrip_ok && injective_ok && size_ok && codomain_ok &&
           image_char_ok && complement_char_ok;
  }
};

MapReport verify_map(MapId id, long long n, const MapParams& params = {});

}  // namespace partq
