#include "chevtori/tits.hpp"

#include <algorithm>
#include <sstream>

namespace chevtori {

Isogeny parse_isogeny(const std::string &s) {
  if (s == "sc" || s == "SC")
    return Isogeny::SC;
  if (s == "ad" || s == "AD")
    return Isogeny::AD;
  throw std::invalid_argument("unknown isogeny: " + s);
}

std::string isogeny_name(Isogeny i) { return i == Isogeny::SC ? "sc" : "ad"; }

uint32_t TitsGroup::root_parity(const RootSystem &rs, int r) {
  uint32_t m = 0;
  const IVec &c = rs.coords(r);
  for (int i = 0; i < rs.rank(); ++i)
    if (c[i] & 1)
      m |= 1u << i;
  return m;
}

TitsGroup::TitsGroup(Kind kind, Isogeny iso, bool trivial_h)
    : rs_(&RootSystem::get(kind)), iso_(iso), trivial_h_(trivial_h) {
  // only E7 has a centre meeting H: <h_2 h_5 h_7>
  if (iso == Isogeny::AD && kind == Kind::E7)
    center_ = (1u << 1) | (1u << 4) | (1u << 6);
  const EtaTable &eta = EtaTable::get(kind);
  int l = rs_->rank();
  n_pos_.reserve(rs_->num_positive());
  for (int i = 1; i <= l; ++i)
    n_pos_.push_back(TitsElement{0, WeylElement::simple(*rs_, i)});
  for (int r = l + 1; r <= rs_->num_positive(); ++r) {
    int s = 1;
    while (rs_->pairing(r, s) != 1)
      ++s;
    int lower = rs_->reflect(s, r);
    // n_s n_lower n_s^{-1} = h_r(eta) n_r
    TitsElement ns = n_pos_[s - 1];
    TitsElement x = mul(mul(ns, n_pos_[lower - 1]), inv(ns));
    if (eta.eta(s, lower) == -1)
      x = mul(h_root(r), x);
    n_pos_.push_back(x);
  }
}

TitsElement TitsGroup::identity() const { return TitsElement{0, WeylElement(*rs_)}; }

TitsElement TitsGroup::h(uint32_t mask) const {
  return TitsElement{trivial_h_ ? 0u : reduce(mask), WeylElement(*rs_)};
}

TitsElement TitsGroup::h_root(int r) const { return h(root_parity(*rs_, r)); }

TitsElement TitsGroup::n(int r) const {
  if (r == 0)
    return n0();
  if (!rs_->valid_index(r))
    throw std::out_of_range("root index out of range: " + std::to_string(r));
  TitsElement x = n_pos_[std::abs(r) - 1];
  if (trivial_h_)
    x.h = 0;
  else
    x.h = reduce(x.h);
  return r > 0 ? x : inv(x);
}

TitsElement TitsGroup::n0() const {
  switch (kind()) {
  case Kind::E7:
    return parse("n_1n_2n_5n_7n_{37}n_{55}n_{61}");
  case Kind::E8:
    return parse("h_2h_5h_7n_1n_2n_5n_7n_{44}n_{71}n_{89}n_{120}");
  default:
    throw std::invalid_argument("E6 has no central lift of w_0");
  }
}

uint32_t TitsGroup::reduce(uint32_t h) const {
  if (trivial_h_)
    return 0;
  // canonical coset representative: h_2 bit cleared
  if (center_ && (h & (1u << 1)))
    h ^= center_;
  return h;
}

uint32_t TitsGroup::act(const WeylElement &w, uint32_t h) const {
  const IMat &m = w.matrix();
  int l = rs_->rank();
  uint32_t out = 0;
  for (int j = 0; j < l; ++j) {
    if (!((h >> j) & 1))
      continue;
    for (int i = 0; i < l; ++i)
      if (m(i, j) & 1)
        out ^= 1u << i;
  }
  return out;
}

void TitsGroup::fold_reflection(IMat &m, int i) const {
  int l = rs_->rank();
  const IMat &c = rs_->cartan();
  for (int j = 0; j < l; ++j) {
    if (j == i - 1)
      continue;
    int64_t cij = c(i - 1, j);
    if (cij)
      for (int k = 0; k < l; ++k)
        m(k, j) -= cij * m(k, i - 1);
  }
  for (int k = 0; k < l; ++k)
    m(k, i - 1) = -m(k, i - 1);
}

TitsElement TitsGroup::mul_n(TitsElement a, int i) const {
  bool descent = a.w.right_descent(i);
  IMat m = a.w.matrix();
  fold_reflection(m, i);
  a.w = WeylElement(*rs_, std::move(m));
  if (descent && !trivial_h_) {
    // lift(w') n_i n_i = lift(w') h_i = h_{w'(a_i)} lift(w')
    uint32_t col = 0;
    for (int k = 0; k < rs_->rank(); ++k)
      if (a.w.matrix()(k, i - 1) & 1)
        col |= 1u << k;
    a.h ^= col;
  }
  return a;
}

TitsElement TitsGroup::mul(const TitsElement &a, const TitsElement &b) const {
  if (&a.w.system() != rs_ || &b.w.system() != rs_)
    throw std::invalid_argument("Tits elements from different root systems");
  TitsElement r = a;
  if (!trivial_h_)
    r.h ^= act(a.w, b.h);
  for (int i : b.w.reduced_word())
    r = mul_n(std::move(r), i);
  r.h = reduce(r.h);
  return r;
}

TitsElement TitsGroup::inv(const TitsElement &a) const {
  auto word = a.w.reduced_word();
  TitsElement r = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    // n_i^{-1} = n_i h_i
    r = mul_n(std::move(r), *it);
    if (!trivial_h_)
      r.h ^= act(r.w, 1u << (*it - 1));
  }
  if (!trivial_h_)
    r.h ^= act(r.w, a.h);
  r.h = reduce(r.h);
  return r;
}

TitsElement TitsGroup::pow(const TitsElement &a, long long m) const {
  TitsElement base = m < 0 ? inv(a) : a;
  if (m < 0)
    m = -m;
  TitsElement acc = identity();
  while (m > 0) {
    if (m & 1)
      acc = mul(acc, base);
    m >>= 1;
    if (m)
      base = mul(base, base);
  }
  return acc;
}

TitsElement TitsGroup::conj(const TitsElement &a, const TitsElement &b) const {
  return mul(mul(b, a), inv(b));
}

TitsElement TitsGroup::comm(const TitsElement &a, const TitsElement &b) const {
  return mul(mul(mul(a, b), inv(a)), inv(b));
}

long long TitsGroup::order(const TitsElement &a) const {
  long long d = a.w.order();
  TitsElement p = pow(a, d);
  if (is_identity(p))
    return d;
  if (!p.w.is_identity())
    throw std::logic_error("power of a lift left H");
  return 2 * d;
}

bool TitsGroup::equal(const TitsElement &a, const TitsElement &b) const {
  return reduce(a.h) == reduce(b.h) && a.w == b.w;
}

bool TitsGroup::is_identity(const TitsElement &a) const {
  return reduce(a.h) == 0 && a.w.is_identity();
}

TitsElement TitsGroup::eval(const Expr &e, const std::map<std::string, TitsElement> &env) const {
  ExprEval<TitsElement> ev;
  ev.one = [&] { return identity(); };
  ev.h = [&](int r) { return h_root(r); };
  ev.n = [&](int r) { return n(r); };
  ev.name = [&](const std::string &s) {
    auto it = env.find(s);
    if (it == env.end())
      throw ParseError("unbound generator '" + s + "'");
    return it->second;
  };
  ev.mul = [&](const TitsElement &x, const TitsElement &y) { return mul(x, y); };
  ev.inv = [&](const TitsElement &x) { return inv(x); };
  return ev(e);
}

TitsElement TitsGroup::parse(const std::string &text,
                             const std::map<std::string, TitsElement> &env) const {
  return eval(*parse_expr(text), env);
}

std::string TitsGroup::format(const TitsElement &a) const {
  std::ostringstream os;
  uint32_t h = reduce(a.h);
  auto idx = [](int i) { return i > 9 ? "{" + std::to_string(i) + "}" : std::to_string(i); };
  for (int i = 0; i < rs_->rank(); ++i)
    if ((h >> i) & 1)
      os << "h_" << idx(i + 1);
  for (int i : a.w.reduced_word())
    os << "n_" << idx(i);
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

SparseMat TitsGroup::to_adjoint(const TitsElement &a) const {
  const AdjointRep &adj = AdjointRep::get(kind());
  SparseMat m = adj.h_mask(a.h);
  for (int i : a.w.reduced_word())
    m = m * adj.n_cached(i);
  return m;
}

LiftCheck lift_order_check(const TitsGroup &g, const std::vector<int> &word,
                           const TitsElement &lift) {
  LiftCheck c;
  WeylElement w = WeylElement::from_word(g.system(), word);
  c.image_matches = lift.w == w;
  c.weyl_order = w.order();
  c.order = g.order(lift);
  return c;
}

} // namespace chevtori
