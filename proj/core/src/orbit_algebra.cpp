#include "orbitdata/orbit_algebra.hpp"

#include <algorithm>
#include <deque>

#include "orbitdata/errors.hpp"

namespace orbitdata {

long long OrbitDatum::total() const {
  long long t = 0;
  for (const auto& [c, k] : counts) t += k;
  return t;
}

namespace {

void check_entries(const GroupPtr& g, const std::map<int, long long>& counts, bool allow_negative) {
  (void)g;
  for (const auto& [c, k] : counts) {
    if (c == 0) throw TrivialClassPresent("the trivial class cannot appear in a datum");
    if (c < 0) throw IndexOutOfRange("negative class id");
    if (!allow_negative && k < 0) throw Error("negative multiplicity in an unsigned datum");
  }
}

std::map<int, long long> pruned(std::map<int, long long> m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

void check_same_frame(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.frame == b.frame) return;
  if (!a.frame || !b.frame || !same_frame(*a.frame, *b.frame))
    throw FrameMismatch("canonical forms built over different frames");
}

}  // namespace

OrbitDatum make_datum(const GroupPtr& g, const std::map<int, long long>& class_counts) {
  check_entries(g, class_counts, false);
  return OrbitDatum{g, pruned(class_counts)};
}

OrbitDatum datum_from_elements(const GroupPtr& g, const ConjClassTable& classes,
                               const std::vector<int>& elements) {
  std::map<int, long long> counts;
  for (int e : elements) {
    if (e < 0 || e >= g->order()) throw IndexOutOfRange("element index out of range");
    counts[classes.class_of[e]] += 1;
  }
  return make_datum(g, counts);
}

SignedDatum make_signed(const GroupPtr& g, const std::map<int, long long>& class_counts) {
  check_entries(g, class_counts, true);
  return SignedDatum{g, pruned(class_counts)};
}

SignedDatum difference(const OrbitDatum& a, const OrbitDatum& b) {
  std::map<int, long long> counts = a.counts;
  for (const auto& [c, k] : b.counts) counts[c] -= k;
  return make_signed(a.group, counts);
}

namespace {

bool phi_sum_vanishes(const std::map<int, long long>& counts, const ClassFrame& frame) {
  const FiniteGroup& q = *frame.ab.quotient;
  int acc = FiniteGroup::identity;
  for (const auto& [c, k] : counts) {
    int img = frame.ab.phi[frame.classes->rep(c)];
    acc = q.mul(acc, q.power(img, k));
  }
  return acc == FiniteGroup::identity;
}

}  // namespace

bool validate(const OrbitDatum& d, const ClassFrame& frame) {
  check_entries(d.group, d.counts, false);
  return phi_sum_vanishes(d.counts, frame);
}

bool validate(const SignedDatum& d, const ClassFrame& frame) {
  check_entries(d.group, d.counts, true);
  return phi_sum_vanishes(d.counts, frame);
}

CanonicalForm canonicalize(const SignedDatum& d, const FramePtr& frame) {
  if (!validate(d, *frame))
    throw NotValidatable("datum does not validate: class product not in [G,G]");
  CanonicalForm f;
  f.frame = frame;
  const ConjClassTable& cls = *frame->classes;
  for (const auto& [c, k] : d.counts) {
    if (frame->is_in_s(c)) {
      if (((k % 2) + 2) % 2 == 1) {
        auto [it, fresh] = f.torsion.insert(c);
        if (!fresh) f.torsion.erase(it);
      }
    } else {
      int pos = frame->is_in_t_plus(c) ? c : cls.inverse_class[c];
      f.free[pos] += frame->is_in_t_plus(c) ? k : -k;
    }
  }
  f.free = pruned(std::move(f.free));
  return f;
}

CanonicalForm canonicalize(const OrbitDatum& d, const FramePtr& frame) {
  return canonicalize(SignedDatum{d.group, d.counts}, frame);
}

CanonicalForm zero_form(const FramePtr& frame) { return CanonicalForm{frame, {}, {}}; }

CanonicalForm add(const CanonicalForm& a, const CanonicalForm& b) {
  check_same_frame(a, b);
  CanonicalForm out = a;
  for (const auto& [c, k] : b.free) out.free[c] += k;
  out.free = pruned(std::move(out.free));
  for (int c : b.torsion) {
    auto [it, fresh] = out.torsion.insert(c);
    if (!fresh) out.torsion.erase(it);
  }
  return out;
}

CanonicalForm negate(const CanonicalForm& a) {
  CanonicalForm out = a;
  for (auto& [c, k] : out.free) k = -k;
  return out;
}

CanonicalForm scale(const CanonicalForm& a, long long k) {
  CanonicalForm out;
  out.frame = a.frame;
  if (k != 0)
    for (const auto& [c, v] : a.free) out.free[c] = v * k;
  if (((k % 2) + 2) % 2 == 1) out.torsion = a.torsion;
  return out;
}

OrbitDatum reduced_tuple(const CanonicalForm& form) {
  const ClassFrame& frame = *form.frame;
  std::map<int, long long> counts;
  for (const auto& [c, k] : form.free)
    counts[k > 0 ? c : frame.classes->inverse_class[c]] += std::llabs(k);
  for (int c : form.torsion) counts[c] += 1;
  return make_datum(frame.group, counts);
}

std::vector<OrbitDatum> split_into_triples(const OrbitDatum& d, const ClassFrame& frame) {
  if (!validate(d, frame))
    throw NotValidatable("datum does not validate: class product not in [G,G]");
  if (d.total() <= 3) return {d};

  const FiniteGroup& g = *frame.group;
  const ConjClassTable& cls = *frame.classes;

  std::deque<int> entries;  // class ids, expanded, in class-id order
  for (const auto& [c, k] : d.counts)
    for (long long i = 0; i < k; ++i) entries.push_back(c);

  auto triple = [&](int a, int b, int c) {
    std::map<int, long long> m;
    m[a] += 1;
    m[b] += 1;
    m[c] += 1;
    return make_datum(d.group, m);
  };
  // smallest nontrivial class, for padding short leftovers
  auto pad_class = [&]() {
    if (cls.num_classes() < 2) throw Error("internal: no nontrivial class to pad with");
    return 1;
  };

  std::vector<OrbitDatum> out;
  int carry = -1;  // accumulated product element, never the identity

  while (!entries.empty()) {
    if (carry < 0) {
      if (entries.size() == 1) {
        int c = entries.front();
        entries.clear();
        int p = pad_class();
        out.push_back(triple(c, p, cls.inverse_class[p]));
      } else if (entries.size() == 2) {
        int a = entries.front();
        entries.pop_front();
        int b = entries.front();
        entries.pop_front();
        if (cls.inverse_class[a] == b) continue;  // cancelling pair, zero
        int prod = g.mul(cls.rep(a), cls.rep(b));
        int pc = cls.class_of[prod];
        out.push_back(triple(a, b, cls.class_of[g.inv(prod)]));
        int p = pad_class();
        out.push_back(triple(pc, p, cls.inverse_class[p]));
      } else if (entries.size() == 3) {
        int a = entries[0], b = entries[1], c = entries[2];
        entries.clear();
        out.push_back(triple(a, b, c));
      } else {
        carry = cls.rep(entries.front());
        entries.pop_front();
      }
    } else {
      int c = entries.front();
      entries.pop_front();
      if (entries.size() == 1) {
        int last = entries.front();
        entries.clear();
        out.push_back(triple(cls.class_of[carry], c, last));
        carry = -1;
      } else {
        int next = g.mul(carry, cls.rep(c));
        if (next == FiniteGroup::identity) {
          carry = -1;  // [carry-class, c] is a cancelling pair; drop it
        } else {
          out.push_back(triple(cls.class_of[carry], c, cls.class_of[g.inv(next)]));
          carry = next;
        }
      }
    }
  }
  return out;
}

}  // namespace orbitdata
