#include "chevtori/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace chevtori {

Kind parse_kind(const std::string &s) {
  if (s == "E6" || s == "e6")
    return Kind::E6;
  if (s == "E7" || s == "e7")
    return Kind::E7;
  if (s == "E8" || s == "e8")
    return Kind::E8;
  throw std::invalid_argument("unknown root system type: " + s);
}

std::string kind_name(Kind k) {
  switch (k) {
  case Kind::E6:
    return "E6";
  case Kind::E7:
    return "E7";
  case Kind::E8:
    return "E8";
  }
  return "?";
}

namespace {

int rank_of(Kind k) { return k == Kind::E6 ? 6 : k == Kind::E7 ? 7 : 8; }

// Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
IMat e_cartan(int l) {
  IMat c = IMat::identity(l).scaled(2);
  auto edge = [&](int i, int j) {
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  edge(1, 3);
  edge(2, 4);
  for (int i = 3; i < l; ++i)
    edge(i, i + 1);
  return c;
}

} // namespace

uint64_t RootSystem::key(const IVec &c) {
  uint64_t k = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < -7 || c[i] > 7)
      return ~uint64_t(0);
    k |= uint64_t(c[i] + 8) << (4 * i);
  }
  return k;
}

RootSystem::RootSystem(Kind kind) : kind_(kind), l_(rank_of(kind)), cartan_(e_cartan(l_)) {
  std::vector<IVec> found;
  std::map<IVec, bool> seen;
  for (int i = 0; i < l_; ++i) {
    IVec e(l_, 0);
    e[i] = 1;
    found.push_back(e);
    seen[e] = true;
  }
  // simply laced: r + a_i is a root iff (r, a_i) = -1
  for (size_t k = 0; k < found.size(); ++k) {
    for (int i = 0; i < l_; ++i) {
      IVec r = found[k];
      int64_t p = 0;
      for (int j = 0; j < l_; ++j)
        p += r[j] * cartan_(j, i);
      if (p != -1)
        continue;
      r[i] += 1;
      if (!seen.count(r)) {
        seen[r] = true;
        found.push_back(r);
      }
    }
  }
  auto height = [](const IVec &v) {
    int64_t h = 0;
    for (auto x : v)
      h += x;
    return h;
  };
  // equal heights: lexicographically larger coordinate vectors come first
  std::stable_sort(found.begin(), found.end(), [&](const IVec &a, const IVec &b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb)
      return ha < hb;
    return a > b;
  });
  pos_roots_ = found;
  n_ = static_cast<int>(found.size());
  for (auto &r : found) {
    IVec m = r;
    for (auto &x : m)
      x = -x;
    neg_roots_.push_back(m);
  }
  for (int k = 1; k <= n_; ++k) {
    lookup_[key(pos_roots_[k - 1])] = k;
    lookup_[key(neg_roots_[k - 1])] = -k;
  }
  simple_reflect_.assign(l_ + 1, std::vector<int>(2 * n_));
  for (int s = 1; s <= l_; ++s)
    for (int p = 0; p < 2 * n_; ++p)
      simple_reflect_[s][p] = index_of(reflect(s, coords(root_at(p))));
}

const RootSystem &RootSystem::get(Kind kind) {
  static std::once_flag flags[3];
  static std::unique_ptr<RootSystem> cache[3];
  int i = static_cast<int>(kind);
  std::call_once(flags[i], [&] { cache[i] = std::make_unique<RootSystem>(kind); });
  return *cache[i];
}

const IVec &RootSystem::coords(int r) const {
  if (!valid_index(r))
    throw std::out_of_range("root index out of range: " + std::to_string(r));
  return r > 0 ? pos_roots_[r - 1] : neg_roots_[-r - 1];
}

int RootSystem::height(int r) const {
  int h = 0;
  for (auto x : coords(r))
    h += static_cast<int>(x);
  return h;
}

int RootSystem::index_of(const IVec &c) const {
  if (static_cast<int>(c.size()) != l_)
    return 0;
  auto it = lookup_.find(key(c));
  return it == lookup_.end() ? 0 : it->second;
}

int64_t RootSystem::pairing(const IVec &a, const IVec &b) const {
  int64_t p = 0;
  for (int i = 0; i < l_; ++i) {
    if (!a[i])
      continue;
    for (int j = 0; j < l_; ++j)
      p += a[i] * cartan_(i, j) * b[j];
  }
  return p;
}

int RootSystem::pairing(int r, int s) const {
  return static_cast<int>(pairing(coords(r), coords(s)));
}

int RootSystem::sum(int r, int s) const {
  IVec v = coords(r);
  const IVec &b = coords(s);
  for (int i = 0; i < l_; ++i)
    v[i] += b[i];
  return index_of(v);
}

IVec RootSystem::reflect(int s, const IVec &v) const {
  const IVec &a = coords(s);
  int64_t p = pairing(v, a);
  IVec r = v;
  for (int i = 0; i < l_; ++i)
    r[i] -= p * a[i];
  return r;
}

int RootSystem::reflect(int s, int r) const {
  if (s >= 1 && s <= l_)
    return simple_reflect_[s][pos(r)];
  int x = index_of(reflect(s, coords(r)));
  if (!x)
    throw std::logic_error("reflection left the root system");
  return x;
}

IMat RootSystem::reflection_matrix(int s) const {
  IMat m(l_, l_);
  for (int i = 0; i < l_; ++i) {
    IVec e(l_, 0);
    e[i] = 1;
    IVec img = reflect(s, e);
    for (int j = 0; j < l_; ++j)
      m(j, i) = img[j];
  }
  return m;
}

std::string RootSystem::to_json() const {
  nlohmann::json j;
  j["type"] = kind_name(kind_);
  j["rank"] = l_;
  nlohmann::json roots = nlohmann::json::array();
  for (int k = 1; k <= n_; ++k)
    roots.push_back({{"index", k}, {"coords", coords(k)}, {"height", height(k)}});
  j["positive_roots"] = roots;
  return j.dump(1);
}

WeylElement::WeylElement(const RootSystem &rs)
    : rs_(&rs), m_(IMat::identity(rs.rank())) {}

WeylElement::WeylElement(const RootSystem &rs, IMat m) : rs_(&rs), m_(std::move(m)) {}

WeylElement WeylElement::simple(const RootSystem &rs, int i) {
  return WeylElement(rs, rs.reflection_matrix(i));
}

WeylElement WeylElement::from_word(const RootSystem &rs, const std::vector<int> &word) {
  IMat m = IMat::identity(rs.rank());
  for (int s : word) {
    if (!rs.valid_index(s))
      throw std::out_of_range("reflection index out of range: " + std::to_string(s));
    m = m * rs.reflection_matrix(s);
  }
  return WeylElement(rs, m);
}

WeylElement WeylElement::operator*(const WeylElement &o) const {
  if (rs_ != o.rs_)
    throw std::invalid_argument("Weyl elements from different root systems");
  return WeylElement(*rs_, m_ * o.m_);
}

WeylElement WeylElement::inverse() const {
  auto w = reduced_word();
  std::reverse(w.begin(), w.end());
  return from_word(*rs_, w);
}

int WeylElement::apply(int r) const {
  int x = rs_->index_of(m_ * rs_->coords(r));
  if (!x)
    throw std::logic_error("matrix does not preserve the root system");
  return x;
}

bool WeylElement::is_identity() const { return m_ == IMat::identity(rs_->rank()); }

bool WeylElement::right_descent(int i) const {
  for (size_t k = 0; k < m_.rows(); ++k) {
    if (m_(k, i - 1) < 0)
      return true;
    if (m_(k, i - 1) > 0)
      return false;
  }
  return false;
}

int WeylElement::length() const {
  int n = 0;
  for (int r = 1; r <= rs_->num_positive(); ++r)
    if (apply(r) < 0)
      ++n;
  return n;
}

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> rev;
  IMat m = m_;
  int l = rs_->rank();
  for (;;) {
    WeylElement cur(*rs_, m);
    int i = 1;
    while (i <= l && !cur.right_descent(i))
      ++i;
    if (i > l)
      break;
    rev.push_back(i);
    m = m * rs_->reflection_matrix(i);
  }
  return std::vector<int>(rev.rbegin(), rev.rend());
}

int WeylElement::order() const {
  IMat id = IMat::identity(rs_->rank());
  IMat p = m_;
  int k = 1;
  while (!(p == id)) {
    p = p * m_;
    if (++k > 1000)
      throw std::logic_error("Weyl element order exceeds bound");
  }
  return k;
}

std::vector<int> WeylElement::root_permutation() const {
  std::vector<int> p(2 * rs_->num_positive());
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    p[i] = rs_->pos(apply(rs_->root_at(i)));
  return p;
}

std::string word_string(const std::vector<int> &word) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < word.size(); ++i)
    os << (i ? "," : "") << word[i];
  os << ')';
  return os.str();
}

} // namespace chevtori
