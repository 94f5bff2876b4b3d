#include <doctest.h>

#include <algorithm>
#include <random>

#include "orbitdata/errors.hpp"
#include "orbitdata/lattice_oracle.hpp"
#include "orbitdata/orbit_algebra.hpp"
#include "orbitdata/presets.hpp"
#include "test_util.hpp"

using namespace orbitdata;

TEST_CASE("validation") {
  auto s3 = preset_group("S3");
  auto f = build_class_frame(s3.group);
  int a = s3.generator_names.at("a"), b = s3.generator_names.at("b");
  CHECK(validate(datum_from_elements(s3.group, *f->classes, {a}), *f));
  CHECK(!validate(datum_from_elements(s3.group, *f->classes, {b}), *f));
  CHECK(validate(make_datum(s3.group, {}), *f));
  CHECK_THROWS_AS(make_datum(s3.group, {{0, 1}}), TrivialClassPresent);
  // validity is closed under concatenation
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    auto d1 = testutil::random_valid_datum(*f, rng);
    auto d2 = testutil::random_valid_datum(*f, rng);
    std::map<int, long long> joined = d1.counts;
    for (auto& [c, k] : d2.counts) joined[c] += k;
    CHECK(validate(make_datum(s3.group, joined), *f));
  }
}

TEST_CASE("canonicalize worked examples") {
  auto c3 = preset_group("C3");
  auto f3 = build_class_frame(c3.group);
  CHECK(canonicalize(datum_from_elements(c3.group, *f3->classes, {1, 2}), f3).is_zero());

  auto s3 = preset_group("S3");
  auto fs = build_class_frame(s3.group);
  int a = s3.generator_names.at("a");
  CHECK(canonicalize(datum_from_elements(s3.group, *fs->classes, {a, a}), fs).is_zero());

  auto k4 = preset_group("C2xC2");
  auto fk = build_class_frame(k4.group);
  auto form = canonicalize(datum_from_elements(k4.group, *fk->classes, {1, 2, 3}), fk);
  CHECK(form.free.empty());
  CHECK(form.torsion == std::set<int>{1, 2, 3});

  CHECK_THROWS_AS(
      canonicalize(datum_from_elements(s3.group, *fs->classes, {s3.generator_names.at("b")}), fs),
      NotValidatable);
}

TEST_CASE("group law on canonical forms") {
  auto c3 = preset_group("C3");
  auto f = build_class_frame(c3.group);
  auto x = canonicalize(datum_from_elements(c3.group, *f->classes, {1, 1, 1}), f);
  CHECK(add(x, zero_form(f)) == x);
  auto two = add(x, x);
  CHECK(two.free.at(1) == 6);
  CHECK(add(x, negate(x)).is_zero());
  CHECK(negate(zero_form(f)).is_zero());

  auto s3 = preset_group("S3");
  auto fs = build_class_frame(s3.group);
  int a = s3.generator_names.at("a");
  auto t = canonicalize(datum_from_elements(s3.group, *fs->classes, {a}), fs);
  CHECK(add(t, t).is_zero());     // torsion-only forms have order two
  CHECK(negate(t) == t);

  auto other = zero_form(build_class_frame(preset_group("C4").group));
  CHECK_THROWS_AS(add(x, other), FrameMismatch);
}

TEST_CASE("canonicalize is additive and complete") {
  std::mt19937_64 rng(29);
  for (const auto& pg : testutil::small_corpus()) {
    if (pg.group->order() == 1) continue;
    auto f = build_class_frame(pg.group);
    RowSpanSolver relations(relation_vectors(*f->classes));
    for (int t = 0; t < 60; ++t) {
      auto a = testutil::random_valid_signed(*f, rng);
      auto b = t % 2 == 0 ? testutil::smear_with_relations(a, *f, rng)
                          : testutil::random_valid_signed(*f, rng);
      // additivity
      std::map<int, long long> joined = a.counts;
      for (auto& [c, k] : b.counts) joined[c] += k;
      CHECK(canonicalize(make_signed(pg.group, joined), f) ==
            add(canonicalize(a, f), canonicalize(b, f)));
      // completeness against the relation lattice
      bool same = canonicalize(a, f) == canonicalize(b, f);
      std::map<int, long long> diff = a.counts;
      for (auto& [c, k] : b.counts) diff[c] -= k;
      CHECK(same == lattice_membership(make_signed(pg.group, diff), relations, *f->classes));
    }
  }
}

TEST_CASE("orders of canonical forms") {
  std::mt19937_64 rng(31);
  for (const auto& pg : testutil::small_corpus()) {
    auto f = build_class_frame(pg.group);
    for (int t = 0; t < 20; ++t) {
      auto form = canonicalize(testutil::random_valid_datum(*f, rng), f);
      if (form.is_zero()) continue;
      if (form.free.empty()) {
        CHECK(add(form, form).is_zero());
      } else {
        CanonicalForm acc = form;
        for (int n = 2; n <= 8; ++n) {
          acc = add(acc, form);
          CHECK(!acc.is_zero());
        }
      }
    }
  }
}

namespace {

// removes cancelling pairs in a random order, then canonicalizes
CanonicalForm reduce_then_canonicalize(OrbitDatum d, const FramePtr& f, std::mt19937_64& rng) {
  const ConjClassTable& cls = *f->classes;
  for (;;) {
    std::vector<int> cancellable;
    for (const auto& [c, k] : d.counts) {
      int ci = cls.inverse_class[c];
      if (ci == c && k >= 2) cancellable.push_back(c);
      if (ci > c && d.counts.count(ci)) cancellable.push_back(c);
    }
    if (cancellable.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, cancellable.size() - 1);
    int c = cancellable[pick(rng)];
    int ci = cls.inverse_class[c];
    auto counts = d.counts;
    counts[c] -= 1;
    counts[ci] -= 1;
    d = make_datum(d.group, counts);
  }
  return canonicalize(d, f);
}

}  // namespace

TEST_CASE("cancelling-pair reduction is confluent") {
  std::mt19937_64 rng(37);
  for (const char* name : {"S3", "C4", "Q8", "A4", "C4xC2"}) {
    auto pg = preset_group(name);
    auto f = build_class_frame(pg.group);
    for (int t = 0; t < 10; ++t) {
      auto d = testutil::random_valid_datum(*f, rng, 10);
      auto direct = canonicalize(d, f);
      for (int order = 0; order < 50; ++order)
        CHECK(reduce_then_canonicalize(d, f, rng) == direct);
    }
  }
}

TEST_CASE("reduced tuple reconstructs the form") {
  std::mt19937_64 rng(41);
  for (const auto& pg : testutil::small_corpus()) {
    auto f = build_class_frame(pg.group);
    for (int t = 0; t < 30; ++t) {
      auto form = canonicalize(testutil::random_valid_datum(*f, rng), f);
      CHECK(canonicalize(reduced_tuple(form), f) == form);
    }
  }
}

TEST_CASE("triple splitting") {
  auto c5 = preset_group("C5");
  auto f5 = build_class_frame(c5.group);
  auto d = datum_from_elements(c5.group, *f5->classes, {1, 1, 1, 2});
  auto triples = split_into_triples(d, *f5);
  CanonicalForm sum = zero_form(f5);
  for (const auto& t : triples) {
    CHECK(t.total() == 3);
    CHECK(validate(t, *f5));
    sum = add(sum, canonicalize(t, f5));
  }
  CHECK(sum == canonicalize(d, f5));

  // a valid triple passes through unchanged
  auto tri = datum_from_elements(c5.group, *f5->classes, {1, 1, 3});
  CHECK(split_into_triples(tri, *f5) == std::vector<OrbitDatum>{tri});

  auto s3 = preset_group("S3");
  auto fs = build_class_frame(s3.group);
  int a = s3.generator_names.at("a");
  auto d4 = datum_from_elements(s3.group, *fs->classes, {a, a, a, a});
  CanonicalForm s = zero_form(fs);
  for (const auto& t : split_into_triples(d4, *fs)) s = add(s, canonicalize(t, fs));
  CHECK(s.is_zero());
}

TEST_CASE("triple splitting across the corpus") {
  std::mt19937_64 rng(43);
  auto corpus = testutil::small_corpus();
  for (const auto& extra : testutil::extra_nonabelian()) corpus.push_back(extra);
  for (const auto& pg : corpus) {
    if (pg.group->order() == 1) continue;
    auto f = build_class_frame(pg.group);
    for (int t = 0; t < 40; ++t) {
      auto d = testutil::random_valid_datum(*f, rng, 9);
      auto triples = split_into_triples(d, *f);
      CanonicalForm sum = zero_form(f);
      for (const auto& tr : triples) {
        CHECK(validate(tr, *f));
        if (d.total() > 3) CHECK(tr.total() == 3);
        sum = add(sum, canonicalize(tr, f));
      }
      CHECK(sum == canonicalize(d, f));
    }
  }
}
