#include "chevtori/chevalley.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace chevtori {

std::vector<ExtraspecialPair> extraspecial_pairs(const RootSystem &rs) {
  std::vector<ExtraspecialPair> out;
  int n = rs.num_positive();
  for (int t = rs.rank() + 1; t <= n; ++t) {
    for (int r = 1; r < t; ++r) {
      IVec d = rs.coords(t);
      const IVec &a = rs.coords(r);
      for (size_t i = 0; i < d.size(); ++i)
        d[i] -= a[i];
      int s = rs.index_of(d);
      if (s > r) {
        out.push_back({r, s, 0});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](auto &x, auto &y) {
    return x.r != y.r ? x.r < y.r : x.s < y.s;
  });
  return out;
}

namespace {

// bimultiplicative cocycle with eps(a_i, a_i) = -1 and eps(a_i, a_j) = -1 for adjacent i < j
int cocycle(const RootSystem &rs, const IVec &a, const IVec &b) {
  int l = rs.rank();
  int64_t e = 0;
  for (int i = 0; i < l; ++i) {
    if (!a[i])
      continue;
    e += a[i] * b[i];
    for (int j = i + 1; j < l; ++j)
      if (rs.adjacent(i + 1, j + 1))
        e += a[i] * b[j];
  }
  return (e & 1) ? -1 : 1;
}

int sgn(int r) { return r > 0 ? 1 : -1; }

} // namespace

StructureConstants::StructureConstants(const RootSystem &rs)
    : rs_(&rs), width_(2 * rs.num_positive()), table_(width_ * width_, 0) {
  int n = rs.num_positive();
  auto raw = [&](int r, int s) {
    int t = rs.sum(r, s);
    return t ? sgn(r) * sgn(s) * sgn(t) * cocycle(rs, rs.coords(r), rs.coords(s)) : 0;
  };
  extra_ = extraspecial_pairs(rs);
  // rescale e_t by c_t so every extraspecial pair gets sign +
  std::vector<int> c(n + 1, 1);
  std::vector<const ExtraspecialPair *> by_sum(n + 1, nullptr);
  for (auto &p : extra_)
    by_sum[rs.sum(p.r, p.s)] = &p;
  for (int t = rs.rank() + 1; t <= n; ++t) {
    auto *p = by_sum[t];
    c[t] = c[p->r] * c[p->s] * raw(p->r, p->s);
  }
  auto cc = [&](int r) { return c[std::abs(r)]; };
  for (int p = 0; p < width_; ++p)
    for (int q = 0; q < width_; ++q) {
      int r = rs.root_at(p), s = rs.root_at(q);
      int t = rs.sum(r, s);
      if (t)
        table_[p * width_ + q] = static_cast<int8_t>(cc(r) * cc(s) * cc(t) * raw(r, s));
    }
  for (auto &e : extra_)
    e.sign = N(e.r, e.s);
}

const StructureConstants &StructureConstants::get(Kind kind) {
  static std::once_flag flags[3];
  static std::unique_ptr<StructureConstants> cache[3];
  int i = static_cast<int>(kind);
  std::call_once(flags[i], [&] {
    cache[i] = std::make_unique<StructureConstants>(RootSystem::get(kind));
  });
  return *cache[i];
}

void StructureConstants::validate() const {
  const RootSystem &rs = *rs_;
  auto fail = [](const std::string &what, int r, int s, int t) {
    std::ostringstream os;
    os << "structure constants inconsistent (" << what << ") at r=" << r << " s=" << s
       << " t=" << t;
    throw std::logic_error(os.str());
  };
  for (auto &e : extra_)
    if (e.sign != 1)
      fail("extraspecial sign", e.r, e.s, 0);
  int n = rs.num_positive();
  for (int p = 0; p < width_; ++p)
    for (int q = 0; q < width_; ++q) {
      int r = rs.root_at(p), s = rs.root_at(q);
      int t = rs.sum(r, s);
      int v = N(r, s);
      if ((t != 0) != (v != 0))
        fail("support", r, s, t);
      if (!t)
        continue;
      if (v != 1 && v != -1)
        fail("magnitude", r, s, t);
      if (N(s, r) != -v)
        fail("antisymmetry", r, s, t);
      if (N(-r, -s) != -v)
        fail("negation", r, s, t);
      // r + s + u = 0 with u = -t
      int u = -t;
      if (N(s, u) != v || N(u, r) != v)
        fail("triangle", r, s, u);
    }
  // Jacobi on root triples whose pairwise sums stay in the root lattice span
  for (int a = -n; a <= n; ++a) {
    if (!a)
      continue;
    for (int b = -n; b <= n; ++b) {
      int ab = b ? rs.sum(a, b) : 0;
      if (!ab)
        continue;
      for (int c = -n; c <= n; ++c) {
        if (!c || c == -a || c == -b || a == -b)
          continue;
        int abc = rs.sum(ab, c);
        if (!abc)
          continue;
        // [[a,b],c] + [[b,c],a] + [[c,a],b] on the e_{a+b+c} coefficient
        int bc = rs.sum(b, c), ca = rs.sum(c, a);
        int v = N(a, b) * N(ab, c);
        if (bc)
          v += N(b, c) * N(bc, a);
        if (ca)
          v += N(c, a) * N(ca, b);
        if (v)
          fail("Jacobi", a, b, c);
      }
    }
  }
}

std::string StructureConstants::extraspecial_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < extra_.size(); ++i)
    os << (i ? ", " : "") << "⟨" << extra_[i].r << ", " << extra_[i].s << ", "
       << extra_[i].sign << "⟩";
  os << ']';
  return os.str();
}

std::string StructureConstants::to_json() const {
  nlohmann::json j;
  j["type"] = kind_name(rs_->kind());
  nlohmann::json ex = nlohmann::json::array();
  for (auto &e : extra_)
    ex.push_back({e.r, e.s, e.sign});
  j["extraspecial"] = ex;
  nlohmann::json tab = nlohmann::json::array();
  int n = rs_->num_positive();
  for (int r = -n; r <= n; ++r)
    for (int s = -n; s <= n; ++s)
      if (r && s && N(r, s))
        tab.push_back({r, s, N(r, s)});
  j["N"] = tab;
  return j.dump();
}

// ---------------------------------------------------------------- SparseMat

SparseMat SparseMat::identity(int dim) {
  SparseMat m(dim);
  for (int i = 0; i < dim; ++i)
    m.cols_[i].push_back({i, 1});
  return m;
}

int64_t SparseMat::at(int i, int j) const {
  for (auto &[r, v] : cols_[j])
    if (r == i)
      return v;
  return 0;
}

void SparseMat::set(int i, int j, int64_t v) {
  auto &c = cols_[j];
  for (auto &e : c)
    if (e.first == i) {
      e.second = v;
      normalize();
      return;
    }
  c.push_back({i, v});
  normalize();
}

void SparseMat::normalize() {
  for (auto &c : cols_) {
    std::sort(c.begin(), c.end());
    c.erase(std::remove_if(c.begin(), c.end(), [](auto &e) { return e.second == 0; }), c.end());
  }
}

SparseMat SparseMat::operator*(const SparseMat &o) const {
  int d = dim();
  SparseMat p(d);
  std::vector<int64_t> acc(d, 0);
  std::vector<int> touched;
  for (int j = 0; j < d; ++j) {
    touched.clear();
    for (auto &[k, b] : o.cols_[j])
      for (auto &[i, a] : cols_[k]) {
        if (!acc[i])
          touched.push_back(i);
        acc[i] += a * b;
      }
    std::sort(touched.begin(), touched.end());
    auto &c = p.cols_[j];
    for (int i : touched) {
      if (acc[i])
        c.push_back({i, acc[i]});
      acc[i] = 0;
    }
  }
  return p;
}

SparseMat SparseMat::operator+(const SparseMat &o) const {
  SparseMat s = *this;
  for (int j = 0; j < dim(); ++j)
    s.cols_[j].insert(s.cols_[j].end(), o.cols_[j].begin(), o.cols_[j].end());
  for (auto &c : s.cols_) {
    std::sort(c.begin(), c.end());
    Column merged;
    for (auto &e : c) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    c = std::move(merged);
  }
  s.normalize();
  return s;
}

SparseMat SparseMat::scaled(int64_t f) const {
  SparseMat s = *this;
  for (auto &c : s.cols_)
    for (auto &e : c)
      e.second *= f;
  s.normalize();
  return s;
}

bool SparseMat::is_identity() const {
  for (int j = 0; j < dim(); ++j)
    if (cols_[j].size() != 1 || cols_[j][0].first != j || cols_[j][0].second != 1)
      return false;
  return true;
}

SparseMat SparseMat::pow(int64_t m) const {
  SparseMat r = identity(dim()), b = *this;
  while (m > 0) {
    if (m & 1)
      r = r * b;
    b = b * b;
    m >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------- AdjointRep

AdjointRep::AdjointRep(const StructureConstants &sc)
    : rs_(&sc.system()), sc_(&sc), dim_(2 * sc.system().num_positive() + sc.system().rank()) {
  n_cache_.reserve(2 * rs_->num_positive());
  for (int p = 0; p < 2 * rs_->num_positive(); ++p)
    n_cache_.push_back(n(rs_->root_at(p)));
}

const AdjointRep &AdjointRep::get(Kind kind) {
  static std::once_flag flags[3];
  static std::unique_ptr<AdjointRep> cache[3];
  int i = static_cast<int>(kind);
  std::call_once(flags[i], [&] {
    cache[i] = std::make_unique<AdjointRep>(StructureConstants::get(kind));
  });
  return *cache[i];
}

SparseMat::Column AdjointRep::bracket(int a, int b) const {
  int nn = 2 * rs_->num_positive();
  SparseMat::Column out;
  if (a < nn && b < nn) {
    int r = rs_->root_at(a), s = rs_->root_at(b);
    if (r == -s) {
      const IVec &c = rs_->coords(r);
      for (int i = 0; i < rs_->rank(); ++i)
        if (c[i])
          out.push_back({nn + i, c[i]});
      return out;
    }
    int t = rs_->sum(r, s);
    if (t)
      out.push_back({rs_->pos(t), sc_->N(r, s)});
    return out;
  }
  if (a < nn && b >= nn) {
    int r = rs_->root_at(a);
    int64_t v = -rs_->pairing(r, b - nn + 1);
    if (v)
      out.push_back({a, v});
    return out;
  }
  if (a >= nn && b < nn) {
    int s = rs_->root_at(b);
    int64_t v = rs_->pairing(s, a - nn + 1);
    if (v)
      out.push_back({b, v});
    return out;
  }
  return out;
}

SparseMat AdjointRep::ad_e(int r) const {
  SparseMat m(dim_);
  int a = rs_->pos(r);
  for (int b = 0; b < dim_; ++b)
    m.col(b) = bracket(a, b);
  m.normalize();
  return m;
}

SparseMat AdjointRep::x(int r, int64_t t) const {
  SparseMat a = ad_e(r);
  SparseMat a2 = a * a;
  for (int j = 0; j < dim_; ++j)
    for (auto &e : a2.col(j)) {
      if (e.second % 2)
        throw std::logic_error("divided power not integral; structure constants are broken");
      e.second /= 2;
    }
  return SparseMat::identity(dim_) + a.scaled(t) + a2.scaled(t * t);
}

SparseMat AdjointRep::n(int r, int t) const {
  if (t != 1 && t != -1)
    throw std::invalid_argument("n_r(t) only for t = +-1");
  SparseMat xr = x(r, t);
  return xr * x(-r, -t) * xr;
}

SparseMat AdjointRep::h_minus1(int r) const {
  SparseMat m = SparseMat::identity(dim_);
  int nn = 2 * rs_->num_positive();
  for (int p = 0; p < nn; ++p)
    if (rs_->pairing(rs_->root_at(p), r) & 1)
      m.col(p)[0].second = -1;
  return m;
}

SparseMat AdjointRep::h_mask(uint32_t mask) const {
  IVec c(rs_->rank(), 0);
  for (int i = 0; i < rs_->rank(); ++i)
    c[i] = (mask >> i) & 1;
  SparseMat m = SparseMat::identity(dim_);
  int nn = 2 * rs_->num_positive();
  for (int p = 0; p < nn; ++p)
    if (rs_->pairing(rs_->coords(rs_->root_at(p)), c) & 1)
      m.col(p)[0].second = -1;
  return m;
}

// ---------------------------------------------------------------- EtaTable

EtaTable::EtaTable(const AdjointRep &adj)
    : rs_(&adj.system()), width_(2 * adj.system().num_positive()),
      table_(adj.system().rank() * width_, 0) {
  for (int s = 1; s <= rs_->rank(); ++s) {
    SparseMat ns = adj.n_cached(s), ns_inv = adj.n_cached(-s);
    for (int p = 0; p < width_; ++p) {
      int r = rs_->root_at(p);
      int t = rs_->reflect(s, r);
      SparseMat lhs = ns * adj.n_cached(r) * ns_inv;
      const SparseMat &nt = adj.n_cached(t);
      bool plus = lhs == nt;
      bool minus = lhs == adj.h_minus1(t) * nt;
      if (plus == minus)
        throw std::logic_error("eta extraction failed for s=" + std::to_string(s) +
                               " r=" + std::to_string(r));
      table_[(s - 1) * width_ + p] = plus ? 1 : -1;
    }
  }
}

const EtaTable &EtaTable::get(Kind kind) {
  static std::once_flag flags[3];
  static std::unique_ptr<EtaTable> cache[3];
  int i = static_cast<int>(kind);
  std::call_once(flags[i], [&] { cache[i] = std::make_unique<EtaTable>(AdjointRep::get(kind)); });
  return *cache[i];
}

std::string EtaTable::to_json() const {
  nlohmann::json j;
  j["type"] = kind_name(rs_->kind());
  nlohmann::json rows = nlohmann::json::array();
  for (int s = 1; s <= rs_->rank(); ++s) {
    nlohmann::json row = nlohmann::json::object();
    for (int p = 0; p < width_; ++p)
      row[std::to_string(rs_->root_at(p))] = eta(s, rs_->root_at(p));
    rows.push_back(row);
  }
  j["eta"] = rows;
  return j.dump();
}

} // namespace chevtori
