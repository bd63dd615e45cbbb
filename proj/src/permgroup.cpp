#include "chevtori/permgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "chevtori/torus.hpp"

namespace chevtori {

Perm perm_identity(size_t degree) {
  Perm p(degree);
  for (size_t i = 0; i < degree; ++i)
    p[i] = static_cast<uint16_t>(i);
  return p;
}

Perm perm_mul(const Perm &a, const Perm &b) {
  Perm c(b.size());
  for (size_t i = 0; i < b.size(); ++i)
    c[i] = a[b[i]];
  return c;
}

Perm perm_inv(const Perm &a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    c[a[i]] = static_cast<uint16_t>(i);
  return c;
}

bool perm_is_identity(const Perm &a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != i)
      return false;
  return true;
}

Perm weyl_perm(const WeylElement &w) {
  std::vector<int> p = w.root_permutation();
  return Perm(p.begin(), p.end());
}

PermGroup::PermGroup(size_t degree, const std::vector<Perm> &generators) : degree_(degree) {
  for (auto &g : generators) {
    if (g.size() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!perm_is_identity(g))
      gens_.push_back(g);
  }
  build();
}

void PermGroup::rebuild_orbit(Level &lv) const {
  lv.u.assign(degree_, std::nullopt);
  lv.orbit.clear();
  lv.u[lv.point] = perm_identity(degree_);
  lv.orbit.push_back(lv.point);
  for (size_t k = 0; k < lv.orbit.size(); ++k) {
    int x = lv.orbit[k];
    for (auto &s : lv.gens) {
      int y = s[x];
      if (!lv.u[y]) {
        lv.u[y] = perm_mul(s, *lv.u[x]);
        lv.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::sift(Perm p, size_t from) const {
  for (size_t l = from; l < levels_.size(); ++l) {
    int x = p[levels_[l].point];
    if (!levels_[l].u[x])
      return {p, l};
    p = perm_mul(perm_inv(*levels_[l].u[x]), p);
  }
  return {p, levels_.size()};
}

void PermGroup::build() {
  auto moved_point = [&](const Perm &p) {
    for (size_t i = 0; i < degree_; ++i)
      if (p[i] != i)
        return static_cast<uint16_t>(i);
    throw std::logic_error("identity has no moved point");
  };
  for (auto &g : gens_) {
    bool moves = false;
    for (auto b : base_)
      moves = moves || g[b] != b;
    if (!moves) {
      base_.push_back(moved_point(g));
      levels_.push_back(Level{base_.back(), {}, {}, {}});
    }
  }
  for (size_t i = 0; i < levels_.size(); ++i) {
    for (auto &g : gens_) {
      bool fixes = true;
      for (size_t j = 0; j < i; ++j)
        fixes = fixes && g[base_[j]] == base_[j];
      if (fixes)
        levels_[i].gens.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level &lv = levels_[i];
    for (size_t k = 0; k < lv.orbit.size() && !restart; ++k) {
      int beta = lv.orbit[k];
      for (size_t si = 0; si < lv.gens.size(); ++si) {
        const Perm &s = lv.gens[si];
        Perm h = perm_mul(perm_inv(*lv.u[s[beta]]), perm_mul(s, *lv.u[beta]));
        auto [r, j] = sift(std::move(h), i + 1);
        if (perm_is_identity(r))
          continue;
        if (j == levels_.size()) {
          base_.push_back(moved_point(r));
          levels_.push_back(Level{base_.back(), {}, {}, {}});
        }
        for (size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(r);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<long>(j);
        restart = true;
        break;
      }
    }
    if (!restart)
      --i;
  }
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (auto &lv : levels_)
    o *= lv.orbit.size();
  return o;
}

bool PermGroup::contains(const Perm &p) const {
  if (p.size() != degree_)
    return false;
  auto [r, j] = sift(p, 0);
  return j == levels_.size() && perm_is_identity(r);
}

PermGroup weyl_group(const RootSystem &rs) {
  std::vector<Perm> gens;
  for (int i = 1; i <= rs.rank(); ++i)
    gens.push_back(weyl_perm(WeylElement::simple(rs, i)));
  return PermGroup(2 * rs.num_positive(), gens);
}

PermGroup weyl_subgroup(const RootSystem &rs, const std::vector<WeylElement> &gens) {
  std::vector<Perm> p;
  for (auto &g : gens)
    p.push_back(weyl_perm(g));
  return PermGroup(2 * rs.num_positive(), p);
}

CentralizerImage centralizer_image_order(const WeylElement &w, const std::vector<WeylElement> &gens) {
  CentralizerImage c;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!(gens[i] * w == w * gens[i])) {
      c.all_centralize = false;
      c.offenders.push_back(static_cast<int>(i));
    }
  c.order = weyl_subgroup(w.system(), gens).order();
  return c;
}

namespace {

const BigInt &weyl_order(const RootSystem &rs) {
  static std::map<const RootSystem *, BigInt> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&rs);
  if (it == cache.end())
    it = cache.emplace(&rs, weyl_group(rs).order()).first;
  return it->second;
}

// Conjugation by simple reflections acting on the images of the simple roots.
class ClassWalker {
public:
  explicit ClassWalker(const RootSystem &rs) : rs_(rs), l_(rs.rank()), d_(2 * rs.num_positive()) {
    sum_.assign(d_ * d_, 0);
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b)
        sum_[a * d_ + b] = rs.sum(rs.root_at(a), rs.root_at(b));
  }

  uint64_t key(const WeylElement &w) const {
    uint64_t k = 0;
    for (int i = 1; i <= l_; ++i)
      k = (k << 8) | static_cast<uint64_t>(rs_.pos(w.apply(i)));
    return k;
  }

  // key of s w s
  uint64_t conj(uint64_t k, int s) const {
    int img[8];
    for (int i = l_ - 1; i >= 0; --i, k >>= 8)
      img[i] = rs_.root_at(static_cast<int>(k & 0xff));
    uint64_t out = 0;
    for (int i = 1; i <= l_; ++i) {
      int v;
      if (i == s)
        v = -img[s - 1];
      else if (rs_.adjacent(i, s))
        v = sum_[rs_.pos(img[i - 1]) * d_ + rs_.pos(img[s - 1])];
      else
        v = img[i - 1];
      out = (out << 8) | static_cast<uint64_t>(rs_.pos(rs_.reflect(s, v)));
    }
    return out;
  }

private:
  const RootSystem &rs_;
  int l_, d_;
  std::vector<int> sum_;
};

} // namespace

std::optional<uint64_t> conjugacy_class_size(const WeylElement &w, uint64_t budget) {
  const RootSystem &rs = w.system();
  ClassWalker walk(rs);
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> queue{walk.key(w)};
  seen.insert(queue[0]);
  for (size_t k = 0; k < queue.size(); ++k) {
    for (int s = 1; s <= rs.rank(); ++s) {
      uint64_t c = walk.conj(queue[k], s);
      if (seen.insert(c).second) {
        if (seen.size() > budget)
          return std::nullopt;
        queue.push_back(c);
      }
    }
  }
  return seen.size();
}

std::optional<BigInt> centralizer_order(const WeylElement &w, uint64_t budget) {
  auto c = conjugacy_class_size(w, budget);
  if (!c)
    return std::nullopt;
  const BigInt &W = weyl_order(w.system());
  if (W % *c != 0)
    throw std::logic_error("class size does not divide the group order");
  return BigInt(W / *c);
}

namespace {

class CentralizerSearch {
public:
  // isometries g with g w = w2 g; w2 = w gives the centralizer
  CentralizerSearch(const WeylElement &w, const WeylElement &w2)
      : rs_(w.system()), d_(2 * rs_.num_positive()), wp_(weyl_perm(w)), wp2_(weyl_perm(w2)), img_(d_, -1) {
    gram_.resize(d_ * d_);
    for (int a = 0; a < d_; ++a)
      for (int b = 0; b < d_; ++b)
        gram_[a * d_ + b] = static_cast<int8_t>(rs_.pairing(rs_.root_at(a), rs_.root_at(b)));
    // grow along the Dynkin diagram so every new node has a placed neighbour
    std::vector<bool> used(rs_.rank() + 1, false);
    order_.push_back(1);
    used[1] = true;
    while (static_cast<int>(order_.size()) < rs_.rank())
      for (int i = 1; i <= rs_.rank(); ++i) {
        if (used[i])
          continue;
        bool near = false;
        for (int j : order_)
          near = near || rs_.adjacent(i, j);
        if (near) {
          order_.push_back(i);
          used[i] = true;
          break;
        }
      }
    if (rs_.kind() == Kind::E6)
      weyl_.emplace(weyl_group(rs_));
  }

  std::optional<BigInt> count(uint64_t limit) {
    total_ = 0;
    limit_ = limit;
    descend(0);
    if (total_ > limit_)
      return std::nullopt;
    return BigInt(total_);
  }

  // first g in W with g w g^{-1} = w2; nullopt when none exists or past the limit
  std::optional<WeylElement> first(uint64_t limit, bool *exhausted) {
    total_ = 0;
    limit_ = limit;
    stop_first_ = true;
    descend(0);
    *exhausted = total_ > limit_;
    return found_;
  }

private:
  bool place(int s, int t, std::vector<int> &trail) {
    if (img_[s] >= 0)
      return img_[s] == t;
    for (int p : placed_)
      if (gram_[p * d_ + s] != gram_[img_[p] * d_ + t])
        return false;
    img_[s] = t;
    placed_.push_back(s);
    trail.push_back(s);
    return true;
  }

  void undo(std::vector<int> &trail) {
    for (int s : trail) {
      img_[s] = -1;
      placed_.pop_back();
    }
    trail.clear();
  }

  void descend(size_t level) {
    if (total_ > limit_ || found_)
      return;
    if (level == order_.size()) {
      if (weyl_ && !weyl_->contains(leaf_perm()))
        return;
      ++total_;
      if (stop_first_)
        found_ = leaf_element();
      return;
    }
    if (stop_first_)
      ++total_; // inner nodes count against the limit too
    int s0 = rs_.pos(order_[level]);
    std::vector<int> trail;
    for (int t0 = 0; t0 < d_; ++t0) {
      int s = s0, t = t0;
      bool ok = true;
      // g(w^k a) = w^k g(a) along the w-orbit
      do {
        ok = place(s, t, trail);
        s = wp_[s];
        t = wp2_[t];
      } while (ok && s != s0);
      ok = ok && t == t0;
      if (ok)
        descend(level + 1);
      undo(trail);
    }
  }

  WeylElement leaf_element() const {
    IMat m(rs_.rank(), rs_.rank());
    for (int i = 1; i <= rs_.rank(); ++i) {
      const IVec &c = rs_.coords(rs_.root_at(img_[rs_.pos(i)]));
      for (int r = 0; r < rs_.rank(); ++r)
        m(r, i - 1) = c[r];
    }
    return WeylElement(rs_, m);
  }

  Perm leaf_perm() const { return weyl_perm(leaf_element()); }

  const RootSystem &rs_;
  int d_;
  Perm wp_, wp2_;
  std::vector<int8_t> gram_;
  std::vector<int> order_;
  std::vector<int> img_, placed_;
  std::optional<PermGroup> weyl_;
  uint64_t total_ = 0, limit_ = 0;
  bool stop_first_ = false;
  std::optional<WeylElement> found_;
};

std::vector<int64_t> power_traces(const WeylElement &w, int order) {
  std::vector<int64_t> t;
  IMat p = w.matrix();
  for (int k = 1; k <= order; ++k) {
    int64_t tr = 0;
    for (size_t i = 0; i < p.rows(); ++i)
      tr += p(i, i);
    t.push_back(tr);
    p = p * w.matrix();
  }
  return t;
}

// minimal-length elements reachable by length-non-increasing simple conjugations,
// each with x such that x w x^{-1} is that element
std::unordered_map<uint64_t, std::pair<WeylElement, WeylElement>>
reduce_class(const WeylElement &w, const ClassWalker &walk, size_t cap) {
  const RootSystem &rs = w.system();
  std::unordered_map<uint64_t, std::pair<WeylElement, WeylElement>> level;
  std::vector<uint64_t> queue;
  WeylElement start = w, startx(rs);
  int len = w.length();
restart:
  level.clear();
  queue.clear();
  level.emplace(walk.key(start), std::make_pair(start, startx));
  queue.push_back(walk.key(start));
  for (size_t k = 0; k < queue.size(); ++k) {
    auto [v, x] = level.at(queue[k]);
    for (int s = 1; s <= rs.rank(); ++s) {
      uint64_t c = walk.conj(queue[k], s);
      if (level.count(c))
        continue;
      WeylElement si = WeylElement::simple(rs, s);
      WeylElement v2 = si * v * si;
      int l2 = v2.length();
      if (l2 < len) {
        start = v2;
        startx = si * x;
        len = l2;
        goto restart;
      }
      if (l2 == len && level.size() < cap) {
        level.emplace(c, std::make_pair(v2, si * x));
        queue.push_back(c);
      }
    }
  }
  return level;
}

} // namespace

std::string verdict_name(ConjugacyResult::Verdict v) {
  switch (v) {
  case ConjugacyResult::Verdict::Witness:
    return "witness";
  case ConjugacyResult::Verdict::ConsistentInvariants:
    return "consistent-invariants";
  case ConjugacyResult::Verdict::Distinct:
    return "distinct";
  }
  return "?";
}

ConjugacyResult conjugacy_witness(const WeylElement &w, const WeylElement &w2, uint64_t budget,
                                  uint64_t seed) {
  const RootSystem &rs = w.system();
  if (&rs != &w2.system())
    throw std::invalid_argument("elements of different Weyl groups");
  using V = ConjugacyResult::Verdict;
  int o = w.order();
  if (o != w2.order())
    return {V::Distinct, std::nullopt, "orders differ"};
  if (!(twisted_order_polynomial(w) == twisted_order_polynomial(w2)))
    return {V::Distinct, std::nullopt, "characteristic polynomials differ"};
  if (power_traces(w, o) != power_traces(w2, o))
    return {V::Distinct, std::nullopt, "traces of powers differ"};
  if (w == w2)
    return {V::Witness, WeylElement(rs), "equal"};

  ClassWalker walk(rs);
  const size_t cap = 50000;
  auto target = reduce_class(w2, walk, cap);
  auto found = [&](const WeylElement &x, const WeylElement &u) -> std::optional<WeylElement> {
    // x w x^{-1} = u
    for (auto &[k, vx] : reduce_class(u, walk, cap)) {
      auto it = target.find(k);
      if (it == target.end())
        continue;
      WeylElement c = it->second.second.inverse() * vx.second * x;
      if (c * w * c.inverse() == w2)
        return c;
    }
    return std::nullopt;
  };
  if (auto c = found(WeylElement(rs), w))
    return {V::Witness, c, "minimal-length reduction"};

  {
    // exact: backtrack over isometries intertwining w and w2
    bool exhausted = false;
    CentralizerSearch search(w, w2);
    if (auto c = search.first(std::max<uint64_t>(budget, 1) << 12, &exhausted)) {
      if (*c * w * c->inverse() == w2)
        return {V::Witness, c, "intertwining search"};
    } else if (!exhausted) {
      return {V::Distinct, std::nullopt, "no element of W conjugates one to the other"};
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, rs.rank());
  for (uint64_t t = 0; t < budget; ++t) {
    WeylElement x(rs);
    for (int k = 0; k < 2 * rs.num_positive(); ++k)
      x = x * WeylElement::simple(rs, letter(rng));
    if (auto c = found(x, x * w * x.inverse()))
      return {V::Witness, c, "randomized search"};
  }
  return {V::ConsistentInvariants, std::nullopt, "search budget exhausted"};
}

std::optional<BigInt> centralizer_order_search(const WeylElement &w, uint64_t limit) {
  CentralizerSearch search(w, w);
  return search.count(limit);
}

BigInt centralizer_order_exact(const WeylElement &w) {
  if (auto c = centralizer_order_search(w, 1u << 18))
    return *c;
  if (auto c = centralizer_order(w, 1u << 22))
    return *c;
  throw std::runtime_error("centralizer too large for search and class too large to walk");
}

} // namespace chevtori
