#ifndef ORBITDATA_TEST_UTIL_HPP
#define ORBITDATA_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "orbitdata/class_frame.hpp"
#include "orbitdata/group.hpp"
#include "orbitdata/orbit_algebra.hpp"
#include "orbitdata/presets.hpp"

namespace testutil {

using namespace orbitdata;

// random datum over the nontrivial classes, patched to validate by one
// extra entry from the coset that cancels the image sum
inline OrbitDatum random_valid_datum(const ClassFrame& frame, std::mt19937_64& rng,
                                     int max_entries = 8) {
  const ConjClassTable& cls = *frame.classes;
  const FiniteGroup& q = *frame.ab.quotient;
  int nc = cls.num_classes();
  std::map<int, long long> counts;
  if (nc > 1) {
    std::uniform_int_distribution<int> len(0, max_entries);
    std::uniform_int_distribution<int> pick(1, nc - 1);
    int n = len(rng);
    for (int i = 0; i < n; ++i) counts[pick(rng)] += 1;
  }
  int sum = FiniteGroup::identity;
  for (const auto& [c, k] : counts)
    sum = q.mul(sum, q.power(frame.ab.phi[cls.rep(c)], k));
  if (sum != FiniteGroup::identity) {
    int want = q.inv(sum);
    for (int x = 0; x < frame.group->order(); ++x)
      if (frame.ab.phi[x] == want) {
        counts[cls.class_of[x]] += 1;
        break;
      }
  }
  return make_datum(frame.group, counts);
}

inline SignedDatum random_valid_signed(const ClassFrame& frame, std::mt19937_64& rng,
                                       int max_entries = 8) {
  OrbitDatum a = random_valid_datum(frame, rng, max_entries);
  OrbitDatum b = random_valid_datum(frame, rng, max_entries);
  return difference(a, b);
}

// adds a random combination of cancelling-pair relations, preserving the
// canonical form
inline SignedDatum smear_with_relations(const SignedDatum& d, const ClassFrame& frame,
                                        std::mt19937_64& rng, int relation_count = 3) {
  const ConjClassTable& cls = *frame.classes;
  std::map<int, long long> counts = d.counts;
  int nc = cls.num_classes();
  if (nc <= 1) return d;
  std::uniform_int_distribution<int> pick(1, nc - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int i = 0; i < relation_count; ++i) {
    int c = pick(rng);
    long long k = coeff(rng);
    counts[c] += k;
    counts[cls.inverse_class[c]] += k;
  }
  return make_signed(d.group, counts);
}

inline std::vector<PresetGroup> small_corpus() {
  std::vector<PresetGroup> out;
  for (const char* n : {"C1", "C2", "C3", "C4", "C6", "C9", "C12", "C2xC2", "C3xC3", "C4xC2",
                        "C2xC2xC2", "C8xC4", "S3", "S4", "A4", "A5", "D8", "D12", "Q8", "Heis3"})
    out.push_back(preset_group(n));
  return out;
}

// semidihedral group of order 16: r of order 8 and s with s r s^-1 = r^3;
// its fiber over r has no self-inverse classes, which exercises the pair
// elements the section map fails to linearize
inline PresetGroup sd16() {
  PresetGroup pg;
  std::vector<int> r(8), s(8);
  for (int i = 0; i < 8; ++i) {
    r[i] = (i + 1) % 8;
    s[i] = (3 * i) % 8;
  }
  pg.group = build_from_permutations(8, {r, s}, kDefaultOrderCap, "SD16");
  pg.generator_names["a"] = pg.group->generator_elements()[0];
  pg.generator_names["b"] = pg.group->generator_elements()[1];
  return pg;
}

// left-regular permutation action for two-generator presentations on
// elements a^i b^j
inline PresetGroup regular_two_gen(int na, int nb, const std::string& name,
                                   int (*amap)(int, int, int), int (*bmap)(int, int, int)) {
  int n = na * nb;
  std::vector<int> pa(n), pb(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      pa[i + na * j] = amap(i, j, na);
      pb[i + na * j] = bmap(i, j, na);
    }
  PresetGroup pg;
  pg.group = build_from_permutations(n, {pa, pb}, kDefaultOrderCap, name);
  pg.generator_names["a"] = pg.group->generator_elements()[0];
  pg.generator_names["b"] = pg.group->generator_elements()[1];
  return pg;
}

// generalized quaternion of order 16: a^8 = 1, b^2 = a^4, b a b^-1 = a^-1
inline PresetGroup q16() {
  return regular_two_gen(
      8, 2, "Q16", [](int i, int j, int na) { return (i + 1) % na + na * j; },
      [](int i, int j, int na) {
        return j == 0 ? (na - i) % na + na : (4 + na - i) % na;
      });
}

// modular group of order 16: a^8 = b^2 = 1, b a b^-1 = a^5
inline PresetGroup m16() {
  return regular_two_gen(
      8, 2, "M16", [](int i, int j, int na) { return (i + 1) % na + na * j; },
      [](int i, int j, int na) { return (5 * i) % na + na * (1 - j); });
}

// Frobenius groups: a normal cyclic kernel acted on by x -> m x
inline PresetGroup frobenius(int p, int m, const std::string& name) {
  std::vector<int> cyc(p), mult(p);
  for (int i = 0; i < p; ++i) {
    cyc[i] = (i + 1) % p;
    mult[i] = (m * i) % p;
  }
  PresetGroup pg;
  pg.group = build_from_permutations(p, {cyc, mult}, kDefaultOrderCap, name);
  pg.generator_names["a"] = pg.group->generator_elements()[0];
  pg.generator_names["b"] = pg.group->generator_elements()[1];
  return pg;
}

inline std::vector<PresetGroup> extra_nonabelian() {
  return {sd16(), q16(), m16(), frobenius(7, 2, "F21"), frobenius(5, 2, "F20")};
}

}  // namespace testutil

#endif
