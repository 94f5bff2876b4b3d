#include <doctest.h>

#include <set>

#include "orbitdata/basis.hpp"
#include "orbitdata/class_frame.hpp"
#include "orbitdata/errors.hpp"
#include "orbitdata/lattice_oracle.hpp"
#include "orbitdata/presets.hpp"
#include "test_util.hpp"

using namespace orbitdata;

TEST_CASE("classify classes") {
  auto c4 = preset_group("C4");
  auto [s4, t4] = classify_classes(*conjugacy_classes(c4.group));
  CHECK(s4 == std::vector<int>{2});
  CHECK(t4 == std::vector<int>{1, 3});

  auto s3 = preset_group("S3");
  auto [s, t] = classify_classes(*conjugacy_classes(s3.group));
  CHECK(s.size() == 2);  // both nontrivial classes of S3 are self-inverse
  CHECK(t.empty());

  auto c3 = preset_group("C3");
  auto [s3s, t3s] = classify_classes(*conjugacy_classes(c3.group));
  CHECK(s3s.empty());
  CHECK(t3s == std::vector<int>{1, 2});
}

TEST_CASE("canonical T+ for cyclic products") {
  CHECK(canonical_T_plus_abelian(preset_group("C5").group) == std::vector<int>{1, 2});
  CHECK(canonical_T_plus_abelian(preset_group("C4").group) == std::vector<int>{1});
  CHECK(canonical_T_plus_abelian(preset_group("C2xC2").group).empty());
  CHECK_THROWS_AS(canonical_T_plus_abelian(preset_group("S3").group), WrongOrigin);

  // the complement splits into S and inverse pairs, on every abelian group
  for (const auto& pg : testutil::small_corpus()) {
    if (pg.group->origin() != GroupOrigin::CyclicProduct) continue;
    const FiniteGroup& g = *pg.group;
    std::set<int> tp;
    for (int e : canonical_T_plus_abelian(pg.group)) tp.insert(e);
    for (int e : tp) CHECK(!tp.count(g.inv(e)));
    int t_count = 0;
    for (int x = 1; x < g.order(); ++x)
      if (g.inv(x) != x) ++t_count;
    CHECK(static_cast<int>(tp.size()) * 2 == t_count);
  }
}

TEST_CASE("S3 frame matches the hand enumeration") {
  auto s3 = preset_group("S3");
  auto f = build_class_frame(s3.group);
  int a = s3.generator_names.at("a"), b = s3.generator_names.at("b");
  int ca = f->classes->class_of[a], cb = f->classes->class_of[b];
  CHECK(f->s_classes == std::vector<int>{ca, cb});
  CHECK(f->t_plus.empty());
  // fiber over the identity coset is [trivial class, class of a]
  CHECK(f->fiber_classes[0] == std::vector<int>{0, ca});
  CHECK(f->fiber_classes[1] == std::vector<int>{cb});
  CHECK(f->head[0] == 0);
  CHECK(f->head[1] == cb);
  CHECK(f->m_set == std::vector<int>{0, 1});
  CHECK(f->k_prime.size() == 2);
  CHECK(f->n_kprime == 1);
}

TEST_CASE("C3 and Q8 frames") {
  auto c3 = preset_group("C3");
  auto f3 = build_class_frame(c3.group);
  CHECK(f3->t_plus == std::vector<int>{1});
  CHECK(f3->s_classes.empty());
  CHECK(f3->m_set == std::vector<int>{0});
  CHECK(f3->n_kprime == 0);

  auto q8 = preset_group("Q8");
  auto fq = build_class_frame(q8.group);
  CHECK(fq->s_classes.size() == 4);
  CHECK(fq->t_plus.empty());
  CHECK(fq->m_set.size() == 4);  // all of G' = C2 x C2
  CHECK(fq->n_kprime == 2);
}

TEST_CASE("frame invariants across the corpus") {
  auto corpus = testutil::small_corpus();
  for (const auto& extra : testutil::extra_nonabelian()) corpus.push_back(extra);
  for (const auto& pg : corpus) {
    auto f = build_class_frame(pg.group);
    const ConjClassTable& cls = *f->classes;
    const FiniteGroup& q = *f->ab.quotient;

    CHECK(f->t_plus.size() == f->t_minus.size());
    CHECK(f->t_plus.size() + f->t_minus.size() + f->s_classes.size() + 1 ==
          static_cast<size_t>(cls.num_classes()));

    // T- is exactly the inverse image of T+
    std::set<int> tminus(f->t_minus.begin(), f->t_minus.end());
    for (int c : f->t_plus) CHECK(tminus.count(cls.inverse_class[c]));

    // head is a section of the fiber map
    for (int x = 0; x < q.order(); ++x) CHECK(f->ab.phi[cls.rep(f->head[x])] == x);

    // mirrored numbering for inverse fiber pairs
    for (int x = 0; x < q.order(); ++x) {
      int xi = q.inv(x);
      if (xi == x) continue;
      for (size_t i = 0; i < f->fiber_classes[x].size(); ++i)
        CHECK(cls.inverse_class[f->fiber_classes[x][i]] == f->fiber_classes[xi][i]);
    }

    // self-inverse classes form a prefix of each fiber
    for (int x = 0; x < q.order(); ++x) {
      bool non_self_seen = false;
      for (int c : f->fiber_classes[x]) {
        if (cls.inverse_class[c] == c)
          CHECK(!non_self_seen);
        else
          non_self_seen = true;
      }
    }

    // membership in M <=> the fiber contains a self-inverse class
    std::set<int> m(f->m_set.begin(), f->m_set.end());
    for (int x = 0; x < q.order(); ++x) {
      bool has_self = false;
      for (int c : f->fiber_classes[x])
        if (cls.inverse_class[c] == c) has_self = true;
      CHECK(m.count(x) == static_cast<size_t>(has_self));
    }

    // K' inside H'_2
    std::set<int> h2(f->h2_prime.begin(), f->h2_prime.end());
    for (int x : f->k_prime) CHECK(h2.count(x));
    CHECK(f->n_kprime <= f->n_gprime);

    // abelian groups: n_K' agrees with the 2-rank
    if (pg.group->is_abelian()) CHECK(f->n_kprime == elementary_two_rank(pg.group));
  }
}

TEST_CASE("canonical abelian frame agrees with the generic one on counts") {
  for (const auto& pg : testutil::small_corpus()) {
    if (pg.group->origin() != GroupOrigin::CyclicProduct) continue;
    auto generic = build_class_frame(pg.group);
    auto canonical = build_class_frame_abelian_canonical(pg.group);
    CHECK(generic->t_plus.size() == canonical->t_plus.size());
    CHECK(generic->s_classes == canonical->s_classes);
    CHECK(generic->n_kprime == canonical->n_kprime);
  }
}

TEST_CASE("recursive S set equals the self-inverse classes") {
  for (const auto& pg : testutil::small_corpus()) {
    if (pg.group->origin() != GroupOrigin::CyclicProduct) continue;
    std::vector<std::pair<long long, int>> factors;
    for (size_t i = 0; i < pg.group->factor_orders().size(); ++i)
      factors.emplace_back(pg.group->factor_orders()[i], pg.group->factor_generators()[i]);
    auto sets = abelian_basis_sets(*pg.group, factors);
    auto [s, t] = classify_classes(*conjugacy_classes(pg.group));
    CHECK(sets.s == s);  // abelian: class ids are element indices
    std::vector<int> tp = canonical_T_plus_abelian(pg.group);
    CHECK(sets.t_plus == tp);
  }
}

TEST_CASE("frame determinism") {
  for (const char* name : {"S4", "C4xC2", "Q8"}) {
    auto f1 = build_class_frame(preset_group(name).group);
    auto f2 = build_class_frame(preset_group(name).group);
    CHECK(same_frame(*f1, *f2));
  }
}

TEST_CASE("closed-form structure on the worked examples") {
  auto check = [](const char* name, long long fr, long long tr) {
    auto r = structure_closed_form(preset_group(name).group);
    CHECK(r.free_rank == fr);
    CHECK(r.two_torsion_rank == tr);
  };
  check("C2", 0, 0);
  check("C9", 4, 0);
  check("C3xC3", 4, 0);
  check("S3", 0, 1);
  check("C2xC2", 0, 1);
}

TEST_CASE("triviality criterion") {
  CHECK(is_trivial_B(preset_group("C2").group));
  CHECK(is_trivial_B(preset_group("C1").group));
  CHECK(!is_trivial_B(preset_group("C3").group));
  for (const auto& pg : testutil::small_corpus()) {
    auto r = structure_closed_form(pg.group);
    CHECK(is_trivial_B(pg.group) == (r.free_rank == 0 && r.two_torsion_rank == 0));
  }
}

TEST_CASE("shape strings") {
  CHECK(shape_string(0, 0) == "0");
  CHECK(shape_string(4, 0) == "Z^4");
  CHECK(shape_string(0, 2) == "(Z/2)^2");
  CHECK(shape_string(1, 1) == "Z^1 ⊕ (Z/2)^1");
}

TEST_CASE("closed form on the extended nonabelian battery") {
  // hand-derived shapes: Q16 is ambivalent with six nontrivial classes and
  // K' = G'; F21 has four mutually-inverse class pairs over C3; F20 mixes a
  // free generator with one surviving bit
  auto expect = [](const testutil::PresetGroup& pg, long long fr, long long tr) {
    auto r = structure_closed_form(pg.group);
    CHECK(r.free_rank == fr);
    CHECK(r.two_torsion_rank == tr);
    auto o = oracle_structure(pg.group);
    CHECK(o.free_rank == fr);
    CHECK(o.two_torsion_rank == tr);
  };
  expect(testutil::q16(), 0, 4);
  expect(testutil::frobenius(7, 2, "F21"), 2, 0);
  expect(testutil::frobenius(5, 2, "F20"), 1, 1);
}
