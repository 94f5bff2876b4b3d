#include "orbitdata/class_frame.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "orbitdata/errors.hpp"

namespace orbitdata {

std::pair<std::vector<int>, std::vector<int>> classify_classes(const ConjClassTable& classes) {
  std::vector<int> s, t;
  for (int c = 1; c < classes.num_classes(); ++c)
    (classes.inverse_class[c] == c ? s : t).push_back(c);
  return {s, t};
}

namespace {

struct CyclicSets {
  std::vector<int> t_plus, s;  // element indices
};

CyclicSets cyclic_factor_sets(int m) {
  CyclicSets out;
  if (m % 2 == 0) {
    for (int i = 1; i < m / 2; ++i) out.t_plus.push_back(i);
    out.s.push_back(m / 2);
  } else {
    for (int i = 1; i <= (m - 1) / 2; ++i) out.t_plus.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<int> canonical_T_plus_abelian(const GroupPtr& g) {
  if (g->origin() != GroupOrigin::CyclicProduct)
    throw WrongOrigin("canonical T+ requires a cyclic-product group");
  std::vector<int> t_plus, s;  // over the prefix product, indices scale as factors join
  for (int m : g->factor_orders()) {
    CyclicSets f = cyclic_factor_sets(m);
    std::vector<int> nt, ns;
    for (int x : t_plus) {
      nt.push_back(x * m);
      for (int y = 1; y < m; ++y) nt.push_back(x * m + y);
    }
    for (int y : f.t_plus) nt.push_back(y);
    for (int x : s)
      for (int y : f.t_plus) nt.push_back(x * m + y);
    for (int x : s) ns.push_back(x * m);
    for (int y : f.s) ns.push_back(y);
    for (int x : s)
      for (int y : f.s) ns.push_back(x * m + y);
    t_plus = std::move(nt);
    s = std::move(ns);
  }
  std::sort(t_plus.begin(), t_plus.end());
  return t_plus;
}

namespace {

std::vector<int> span_in_abelian(const FiniteGroup& q, const std::vector<int>& gens) {
  std::set<int> span{FiniteGroup::identity};
  for (int g : gens) {
    std::set<int> next;
    for (int s : span) {
      int p = s;
      do {
        next.insert(p);
        p = q.mul(p, g);
      } while (p != s);
    }
    span = std::move(next);
  }
  return {span.begin(), span.end()};
}

int log2_exact(size_t n, const char* what) {
  int r = 0;
  while ((size_t{1} << r) < n) ++r;
  if ((size_t{1} << r) != n) throw Error(std::string("internal: ") + what + " not a power of two");
  return r;
}

void check_frame(const ClassFrame& f) {
  const ConjClassTable& cls = *f.classes;
  const FiniteGroup& q = *f.ab.quotient;
  // partition
  if (static_cast<int>(f.s_classes.size() + f.t_plus.size() + f.t_minus.size()) + 1 !=
      cls.num_classes())
    throw Error("internal: S/T+/T- do not partition the nontrivial classes");
  // numbering bullets
  for (int x = 0; x < q.order(); ++x) {
    const auto& fib = f.fiber_classes[x];
    if (fib.empty()) throw Error("internal: empty fiber");
    bool seen_non_self = false;
    for (int c : fib) {
      bool self = cls.inverse_class[c] == c;
      if (self && seen_non_self) throw Error("internal: self-inverse class after a pair");
      if (!self) seen_non_self = true;
    }
    int xi = q.inv(x);
    if (xi != x) {
      const auto& partner = f.fiber_classes[xi];
      for (size_t i = 0; i < fib.size(); ++i)
        if (cls.inverse_class[fib[i]] != partner[i])
          throw Error("internal: mirrored fiber numbering broken");
    }
    if (f.ab.phi[cls.rep(f.head[x])] != x) throw Error("internal: head not a section");
  }
  // T+ conditions
  for (int c : f.t_plus) {
    int x = f.fiber_of[c];
    if (q.inv(x) != x) {
      for (int d : f.fiber_classes[x])
        if (!f.in_t_plus[d]) throw Error("internal: fiber not wholly in T+");
    }
  }
  for (int x = 0; x < q.order(); ++x) {
    if (q.inv(x) != x || x == FiniteGroup::identity) continue;
    int h = f.head[x];
    if (cls.inverse_class[h] != h && !f.in_t_plus[h])
      throw Error("internal: head of self-inverse fiber not in T+");
  }
}

FramePtr build_frame_impl(const GroupPtr& g, bool canonical) {
  auto frame = std::make_shared<ClassFrame>();
  frame->group = g;
  frame->classes = conjugacy_classes(g);
  frame->ab = abelianize(g);
  frame->canonical_abelian = canonical;

  const ConjClassTable& cls = *frame->classes;
  const FiniteGroup& q = *frame->ab.quotient;
  int nc = cls.num_classes();

  frame->fiber_of.resize(nc);
  for (int c = 0; c < nc; ++c) frame->fiber_of[c] = frame->ab.phi[cls.rep(c)];

  frame->fiber_classes.assign(q.order(), {});
  std::vector<std::vector<int>> raw(q.order());
  for (int c = 0; c < nc; ++c) raw[frame->fiber_of[c]].push_back(c);

  frame->in_s.assign(nc, 0);
  frame->in_t_plus.assign(nc, 0);
  for (int c = 1; c < nc; ++c)
    if (cls.inverse_class[c] == c) frame->in_s[c] = 1;

  for (int x = 0; x < q.order(); ++x) {
    int xi = q.inv(x);
    if (xi == x) {
      // self-inverse classes first, then adjacent inverse pairs
      std::vector<int> selfinv, rest;
      for (int c : raw[x]) (cls.inverse_class[c] == c ? selfinv : rest).push_back(c);
      std::sort(selfinv.begin(), selfinv.end(),
                [&](int a, int b) { return cls.rep(a) < cls.rep(b); });
      std::vector<std::pair<int, int>> pairs;
      std::set<int> used;
      for (int c : rest) {
        if (used.count(c)) continue;
        int d = cls.inverse_class[c];
        int lo = cls.rep(c) < cls.rep(d) ? c : d;
        pairs.emplace_back(lo, cls.inverse_class[lo]);
        used.insert(c);
        used.insert(d);
      }
      std::sort(pairs.begin(), pairs.end(),
                [&](const auto& a, const auto& b) { return cls.rep(a.first) < cls.rep(b.first); });
      frame->fiber_classes[x] = selfinv;
      for (auto [lo, hi] : pairs) {
        frame->fiber_classes[x].push_back(lo);
        frame->fiber_classes[x].push_back(hi);
        frame->in_t_plus[lo] = 1;  // pair-minimal side of an in-fiber pair
      }
    } else if (x < xi) {
      std::vector<int> ordered = raw[x];
      std::sort(ordered.begin(), ordered.end(),
                [&](int a, int b) { return cls.rep(a) < cls.rep(b); });
      frame->fiber_classes[x] = ordered;
      for (int c : ordered) frame->in_t_plus[c] = 1;  // whole fiber on the smaller side
    } else {
      const auto& partner = frame->fiber_classes[xi];
      frame->fiber_classes[x].reserve(partner.size());
      for (int c : partner) frame->fiber_classes[x].push_back(cls.inverse_class[c]);
    }
  }

  if (canonical) {
    std::fill(frame->in_t_plus.begin(), frame->in_t_plus.end(), 0);
    for (int e : canonical_T_plus_abelian(g)) frame->in_t_plus[cls.class_of[e]] = 1;
  }

  for (int c = 1; c < nc; ++c) {
    if (frame->in_s[c])
      frame->s_classes.push_back(c);
    else if (frame->in_t_plus[c])
      frame->t_plus.push_back(c);
    else
      frame->t_minus.push_back(c);
  }

  frame->head.resize(q.order());
  for (int x = 0; x < q.order(); ++x) frame->head[x] = frame->fiber_classes[x][0];

  for (int x = 0; x < q.order(); ++x)
    if (cls.inverse_class[frame->head[x]] == frame->head[x]) frame->m_set.push_back(x);

  for (int x = 0; x < q.order(); ++x)
    if (q.mul(x, x) == FiniteGroup::identity) frame->h2_prime.push_back(x);
  frame->n_gprime = log2_exact(frame->h2_prime.size(), "H'_2 order");

  frame->k_prime = span_in_abelian(q, frame->m_set);
  frame->n_kprime = log2_exact(frame->k_prime.size(), "K' order");
  for (int x : frame->k_prime)
    if (q.mul(x, x) != FiniteGroup::identity)
      throw Error("internal: K' is not elementary abelian");

  check_frame(*frame);
  return frame;
}

}  // namespace

FramePtr build_class_frame(const GroupPtr& g) { return build_frame_impl(g, false); }

FramePtr build_class_frame_abelian_canonical(const GroupPtr& g) {
  if (g->origin() != GroupOrigin::CyclicProduct)
    throw WrongOrigin("canonical frame requires a cyclic-product group");
  return build_frame_impl(g, true);
}

bool same_frame(const ClassFrame& a, const ClassFrame& b) {
  return a.group->same_group(*b.group) && a.classes->members == b.classes->members &&
         a.s_classes == b.s_classes && a.t_plus == b.t_plus && a.t_minus == b.t_minus &&
         a.fiber_of == b.fiber_of && a.fiber_classes == b.fiber_classes && a.head == b.head &&
         a.m_set == b.m_set && a.k_prime == b.k_prime && a.n_kprime == b.n_kprime &&
         a.n_gprime == b.n_gprime && a.ab.phi == b.ab.phi &&
         a.ab.cyclic_decomposition == b.ab.cyclic_decomposition;
}

StructureReport report_from_frame(const ClassFrame& frame) {
  StructureReport r;
  r.card_T_plus = static_cast<long long>(frame.t_plus.size());
  r.card_S = static_cast<long long>(frame.s_classes.size());
  r.n_Kprime = frame.n_kprime;
  r.free_rank = r.card_T_plus;
  r.two_torsion_rank = r.card_S - r.n_Kprime;
  r.source = "closed-form";
  if (r.two_torsion_rank < 0) throw Error("internal: negative torsion rank");
  return r;
}

StructureReport structure_closed_form(const GroupPtr& g) {
  return report_from_frame(*build_class_frame(g));
}

bool is_trivial_B(const GroupPtr& g) { return g->order() <= 2; }

std::string shape_string(long long free_rank, long long two_torsion_rank) {
  if (free_rank == 0 && two_torsion_rank == 0) return "0";
  std::ostringstream os;
  if (free_rank > 0) os << "Z^" << free_rank;
  if (two_torsion_rank > 0) {
    if (free_rank > 0) os << " ⊕ ";
    os << "(Z/2)^" << two_torsion_rank;
  }
  return os.str();
}

}  // namespace orbitdata
