#include "orbitdata/presets.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "orbitdata/errors.hpp"

namespace orbitdata {

namespace {

const char* kFactorNames[] = {"x", "y", "z", "w"};

std::string factor_name(size_t i) {
  if (i < 4) return kFactorNames[i];
  return "g" + std::to_string(i + 1);
}

PresetGroup make_cyclic(const std::vector<int>& orders, const std::string& name, int cap) {
  PresetGroup pg;
  pg.group = build_cyclic_product(orders, cap, name);
  for (size_t i = 0; i < orders.size(); ++i)
    pg.generator_names[factor_name(i)] = pg.group->factor_generators()[i];
  return pg;
}

PresetGroup make_perm(int degree, const std::vector<std::vector<int>>& gens,
                      const std::vector<std::string>& names, const std::string& name, int cap) {
  PresetGroup pg;
  pg.group = build_from_permutations(degree, gens, cap, name);
  for (size_t i = 0; i < gens.size(); ++i)
    pg.generator_names[names[i]] = pg.group->generator_elements()[i];
  return pg;
}

// quaternion units 1,-1,i,-i,j,-j,k,-k encoded as axis*2 + (sign<0)
int quat_mul(int a, int b) {
  int sa = a % 2 == 0 ? 1 : -1, xa = a / 2;
  int sb = b % 2 == 0 ? 1 : -1, xb = b / 2;
  int s = sa * sb, ax;
  if (xa == 0) {
    ax = xb;
  } else if (xb == 0) {
    ax = xa;
  } else if (xa == xb) {
    ax = 0;
    s = -s;
  } else {
    ax = 6 - xa - xb;
    if ((xb - xa + 3) % 3 != 1) s = -s;  // i*j=k cyclic, reversed pairs flip sign
  }
  return ax * 2 + (s == 1 ? 0 : 1);
}

PresetGroup make_q8(int cap) {
  std::vector<int> pi(8), pj(8);
  for (int h = 0; h < 8; ++h) {
    pi[h] = quat_mul(2, h);
    pj[h] = quat_mul(4, h);
  }
  return make_perm(8, {pi, pj}, {"a", "b"}, "Q8", cap);
}

PresetGroup make_heis3(int cap) {
  // upper unitriangular 3x3 matrices over F_3: (a,b,c)*(a',b',c') =
  // (a+a', b+b', c+c'+a*b'), element index 9a+3b+c, acting on itself
  auto mul3 = [](int u, int v) {
    int a = u / 9, b = (u / 3) % 3, c = u % 3;
    int a2 = v / 9, b2 = (v / 3) % 3, c2 = v % 3;
    return 9 * ((a + a2) % 3) + 3 * ((b + b2) % 3) + (c + c2 + a * b2) % 3;
  };
  std::vector<int> px(27), py(27);
  for (int h = 0; h < 27; ++h) {
    px[h] = mul3(9, h);
    py[h] = mul3(3, h);
  }
  return make_perm(27, {px, py}, {"a", "b"}, "Heis3", cap);
}

PresetGroup make_dihedral(int order, int cap) {
  if (order == 4) {
    return make_perm(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {"a", "b"}, "D4", cap);
  }
  int n = order / 2;
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return make_perm(n, {rot, ref}, {"a", "b"}, "D" + std::to_string(order), cap);
}

bool parse_cyclic_name(const std::string& name, std::vector<int>& orders) {
  size_t pos = 0;
  orders.clear();
  while (pos < name.size()) {
    if (name[pos] != 'C') return false;
    ++pos;
    size_t start = pos;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
    if (start == pos) return false;
    orders.push_back(std::stoi(name.substr(start, pos - start)));
    if (pos < name.size()) {
      if (name[pos] != 'x') return false;
      ++pos;
      if (pos == name.size()) return false;
    }
  }
  return !orders.empty();
}

}  // namespace

PresetGroup preset_group(const std::string& name, int cap) {
  if (name == "trivial" || name == "C1") return make_cyclic({}, "C1", cap);
  if (name == "S3")
    return make_perm(3, {{1, 2, 0}, {1, 0, 2}}, {"a", "b"}, "S3", cap);
  if (name == "S4")
    return make_perm(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, {"a", "b"}, "S4", cap);
  if (name == "A4")
    return make_perm(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, {"a", "b"}, "A4", cap);
  if (name == "A5")
    return make_perm(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, {"a", "b"}, "A5", cap);
  if (name == "Q8") return make_q8(cap);
  if (name == "Heis3" || name == "Heis27") return make_heis3(cap);
  if (name.size() > 1 && name[0] == 'D') {
    bool digits = std::all_of(name.begin() + 1, name.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) {
      int order = std::stoi(name.substr(1));
      if (order >= 4 && order % 2 == 0) return make_dihedral(order, cap);
      throw ParseError("dihedral preset needs an even order >= 4: " + name);
    }
  }
  std::vector<int> orders;
  if (parse_cyclic_name(name, orders)) {
    if (orders.size() == 1 && orders[0] == 1) return make_cyclic({}, "C1", cap);
    return make_cyclic(orders, name, cap);
  }
  throw ParseError("unknown preset: " + name);
}

bool is_preset_name(const std::string& name) {
  try {
    preset_group(name);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

std::vector<std::string> named_presets() {
  return {"S3", "S4", "A4", "A5", "D4", "D6", "D8", "D10", "D12", "D14", "D16", "Q8", "Heis3"};
}

namespace {

void abelian_factor_lists(int max_order, std::vector<std::vector<int>>& out) {
  std::vector<int> prime_powers;
  for (int q = 2; q <= max_order; ++q) {
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;
    int r = q;
    while (r % p == 0) r /= p;
    if (r == 1) prime_powers.push_back(q);
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t min_idx, long long product) -> void {
    out.push_back(cur);
    for (size_t i = min_idx; i < prime_powers.size(); ++i) {
      if (product * prime_powers[i] > max_order) continue;
      cur.push_back(prime_powers[i]);
      self(self, i, product * prime_powers[i]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long pa = 1, pb = 1;
    for (int x : a) pa *= x;
    for (int x : b) pb *= x;
    return pa != pb ? pa < pb : a < b;
  });
}

}  // namespace

std::vector<PresetGroup> verification_corpus(int max_abelian_order) {
  std::vector<PresetGroup> corpus;
  std::vector<std::vector<int>> lists;
  abelian_factor_lists(max_abelian_order, lists);
  for (const auto& orders : lists)
    corpus.push_back(orders.empty() ? make_cyclic({}, "C1", kDefaultOrderCap)
                                    : make_cyclic(orders, "", kDefaultOrderCap));
  for (const auto& n : named_presets()) corpus.push_back(preset_group(n));
  return corpus;
}

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

int evaluate_word(const PresetGroup& g, const std::string& word) {
  std::string w = strip(word);
  if (w.empty()) throw ParseError("empty element word");
  if (w == "e") return FiniteGroup::identity;
  int acc = FiniteGroup::identity;
  size_t pos = 0;
  while (pos <= w.size()) {
    size_t next = w.find('*', pos);
    std::string term = strip(w.substr(pos, next == std::string::npos ? next : next - pos));
    if (term.empty()) throw ParseError("empty term in word: " + word);
    long long exp = 1;
    size_t caret = term.find('^');
    std::string base = term;
    if (caret != std::string::npos) {
      base = strip(term.substr(0, caret));
      try {
        exp = std::stoll(strip(term.substr(caret + 1)));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in term: " + term);
      }
    }
    int el;
    if (base == "e") {
      el = FiniteGroup::identity;
    } else if (!base.empty() && (base[0] == '#' || std::isdigit(static_cast<unsigned char>(base[0])))) {
      std::string digits = base[0] == '#' ? base.substr(1) : base;
      try {
        el = std::stoi(digits);
      } catch (const std::exception&) {
        throw ParseError("bad element index: " + base);
      }
      if (el < 0 || el >= g.group->order()) throw ParseError("element index out of range: " + base);
    } else {
      auto it = g.generator_names.find(base);
      if (it == g.generator_names.end()) throw ParseError("unknown generator name: " + base);
      el = it->second;
    }
    acc = g.group->mul(acc, g.group->power(el, exp));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return acc;
}

std::string element_word(const PresetGroup& g, int element) {
  if (element == FiniteGroup::identity) return "e";
  const FiniteGroup& grp = *g.group;
  if (grp.origin() == GroupOrigin::CyclicProduct) {
    std::vector<int> c = grp.coords_of(element);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!first) os << "*";
      os << factor_name(i);
      if (c[i] != 1) os << "^" << c[i];
      first = false;
    }
    return os.str();
  }
  if (grp.origin() == GroupOrigin::Permutation) {
    // read the BFS discovery word backwards
    std::vector<int> gens;
    int cur = element;
    while (cur != FiniteGroup::identity) {
      gens.push_back(grp.bfs_gen()[cur]);
      cur = grp.bfs_parent()[cur];
    }
    std::reverse(gens.begin(), gens.end());
    std::vector<std::string> names(grp.generator_elements().size(), "");
    for (const auto& [n, el] : g.generator_names) {
      for (size_t i = 0; i < grp.generator_elements().size(); ++i)
        if (grp.generator_elements()[i] == el && names[i].empty()) names[i] = n;
    }
    std::ostringstream os;
    // run-length collapse repeated generators into powers
    for (size_t i = 0; i < gens.size();) {
      size_t j = i;
      while (j < gens.size() && gens[j] == gens[i]) ++j;
      std::string nm = names[gens[i]].empty() ? "g" + std::to_string(gens[i] + 1) : names[gens[i]];
      if (i > 0) os << "*";
      os << nm;
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
    return os.str();
  }
  return "#" + std::to_string(element);
}

}  // namespace orbitdata
