#include "chevtori/monosolve.hpp"

#include <stdexcept>

#include "chevtori/torus.hpp"

namespace chevtori {

int ConstraintSystem::add_unknown(const std::string &label) {
  unknowns.push_back(label);
  for (auto &r : rows)
    r.exponents.push_back(0);
  return static_cast<int>(unknowns.size()) - 1;
}

void ConstraintSystem::add(std::vector<int64_t> exponents, bool negative, std::string origin) {
  if (exponents.size() != unknowns.size())
    throw std::invalid_argument("constraint width does not match the unknowns");
  rows.push_back({std::move(exponents), negative, std::move(origin)});
}

nlohmann::json ConstraintSystem::to_json() const {
  nlohmann::json j;
  j["unknowns"] = unknowns;
  auto &rs = j["rows"] = nlohmann::json::array();
  for (auto &r : rows)
    rs.push_back({{"exponents", r.exponents}, {"sign", r.negative ? -1 : 1}, {"origin", r.origin}});
  return j;
}

ConstraintSystem ConstraintSystem::from_json(const nlohmann::json &j) {
  ConstraintSystem s;
  s.unknowns = j.at("unknowns").get<std::vector<std::string>>();
  for (auto &r : j.at("rows"))
    s.add(r.at("exponents").get<std::vector<int64_t>>(), r.at("sign").get<int>() < 0,
          r.value("origin", ""));
  return s;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (auto &x : kernel_vector)
    v.push_back(x.str());
  return {{"kernel_vector", v}};
}

Certificate Certificate::from_json(const nlohmann::json &j) {
  Certificate c;
  for (auto &x : j.at("kernel_vector"))
    c.kernel_vector.emplace_back(x.get<std::string>());
  return c;
}

nlohmann::json Witness::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (auto &x : exponents)
    v.push_back(x.str());
  return {{"modulus", modulus.str()}, {"exponents", v}};
}

namespace {

BigMat exponent_matrix(const ConstraintSystem &sys) {
  BigMat S;
  S.reserve(sys.rows.size());
  for (auto &r : sys.rows) {
    BigVec row;
    for (auto e : r.exponents)
      row.emplace_back(e);
    S.push_back(std::move(row));
  }
  return S;
}

BigInt mod(const BigInt &a, const BigInt &m) {
  BigInt r = a % m;
  return r < 0 ? BigInt(r + m) : r;
}

} // namespace

SolveResult solve(const ConstraintSystem &sys) {
  SolveResult res;
  size_t m = sys.rows.size(), u = sys.unknowns.size();
  if (m == 0) {
    res.sat = true;
    res.witness = Witness{2, BigVec(u, 0)};
    return res;
  }
  BigMat S = exponent_matrix(sys);
  if (u == 0)
    for (auto &row : S)
      row.clear();

  // a kernel vector with odd pairing against the signs is an obstruction
  BigMat K = u == 0 ? big_identity(m) : left_kernel(S);
  for (auto &v : K) {
    BigInt dot = 0;
    for (size_t i = 0; i < m; ++i)
      if (sys.rows[i].negative)
        dot += v[i];
    if (mod(dot, 2) == 1) {
      res.sat = false;
      res.certificate = Certificate{v};
      return res;
    }
  }

  // otherwise solve S x = s/2 over Q/Z via U S V = D
  res.sat = true;
  if (u == 0) {
    res.witness = Witness{2, {}};
    return res;
  }
  Smith sm = smith_normal_form(S);
  BigVec s(m, 0);
  for (size_t i = 0; i < m; ++i)
    s[i] = sys.rows[i].negative ? 1 : 0;
  BigVec Us = big_mul(sm.U, s);
  BigInt L = 2;
  for (auto &d : sm.diag)
    if (d != 0)
      L = lcm(L, 2 * abs(d));
  BigVec y(u, 0);
  for (size_t i = 0; i < sm.diag.size() && i < u; ++i) {
    const BigInt &d = sm.diag[i];
    if (d == 0)
      continue;
    // d y = Us/2 mod 1, so y = Us * (L / (2d)) in units of 1/L
    y[i] = mod(Us[i] * (L / (2 * d)), L);
  }
  BigVec x = big_mul(sm.V, y);
  for (auto &xi : x)
    xi = mod(xi, L);
  res.witness = Witness{L, x};
  return res;
}

SymbolicNormalizer::SymbolicNormalizer(const TitsGroup &g, int blocks, uint32_t center_mask)
    : g_(&g), blocks_(blocks), l_(g.system().rank()), center_(center_mask) {
  if (g.isogeny() != Isogeny::SC)
    throw std::invalid_argument("symbolic normalizer works in the simply connected group");
}

SymElement SymbolicNormalizer::unknown(int block) const {
  if (block < 0 || block >= blocks_)
    throw std::out_of_range("unknown torus block");
  SymElement a = one();
  for (int i = 0; i < l_; ++i)
    a.E(i, block * l_ + i) = 1;
  return a;
}

SymElement SymbolicNormalizer::tits(const TitsElement &t) const {
  return SymElement{IMat(l_, unknown_count()), t};
}

SymElement SymbolicNormalizer::one() const { return tits(g_->identity()); }

SymElement SymbolicNormalizer::mul(const SymElement &a, const SymElement &b) const {
  return SymElement{a.E + a.t.w.matrix() * b.E, g_->mul(a.t, b.t)};
}

SymElement SymbolicNormalizer::inv(const SymElement &a) const {
  TitsElement ti = g_->inv(a.t);
  return SymElement{(ti.w.matrix() * a.E).scaled(-1), ti};
}

SymElement SymbolicNormalizer::pow(const SymElement &a, long long m) const {
  SymElement base = m < 0 ? inv(a) : a;
  if (m < 0)
    m = -m;
  SymElement acc = one();
  while (m > 0) {
    if (m & 1)
      acc = mul(acc, base);
    m >>= 1;
    if (m)
      base = mul(base, base);
  }
  return acc;
}

SymElement SymbolicNormalizer::comm(const SymElement &a, const SymElement &b) const {
  return mul(mul(mul(a, b), inv(a)), inv(b));
}

ConstraintSystem SymbolicNormalizer::new_system(const std::vector<std::string> &block_names) const {
  if (static_cast<int>(block_names.size()) != blocks_)
    throw std::invalid_argument("one name per unknown torus element");
  ConstraintSystem sys;
  for (auto &b : block_names)
    for (int i = 1; i <= l_; ++i)
      sys.add_unknown(b + "[" + std::to_string(i) + "]");
  return sys;
}

void SymbolicNormalizer::require_identity(ConstraintSystem &sys, const SymElement &a,
                                          const std::string &origin) const {
  if (!a.t.w.is_identity())
    throw std::invalid_argument(origin + ": Weyl image is not trivial, relation cannot hold");
  int zeta = -1;
  if (center_) {
    zeta = sys.add_unknown("z(" + origin + ")");
    std::vector<int64_t> row(sys.unknowns.size(), 0);
    row[zeta] = 2;
    sys.add(row, false, origin + ": central factor squares to 1");
  }
  for (int i = 0; i < l_; ++i) {
    std::vector<int64_t> row(sys.unknowns.size(), 0);
    for (int j = 0; j < unknown_count(); ++j)
      row[j] = a.E(i, j);
    if (zeta >= 0 && ((center_ >> i) & 1))
      row[zeta] = -1;
    sys.add(row, (a.t.h >> i) & 1, origin + " coordinate " + std::to_string(i + 1));
  }
}

void SymbolicNormalizer::require_commute(ConstraintSystem &sys, const SymElement &a,
                                         const SymElement &b, const std::string &origin) const {
  require_identity(sys, comm(a, b), origin);
}

void SymbolicNormalizer::require_power(ConstraintSystem &sys, const SymElement &a, long long m,
                                       uint32_t target, const std::string &origin) const {
  require_identity(sys, mul(pow(a, m), tits(g_->h(target))), origin);
}

std::string SymbolicNormalizer::render(const SymElement &a) const {
  IMat E(l_, l_);
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j)
      E(i, j) = a.E(i, j);
  return render_torus(E, a.t.w.is_identity() ? a.t.h : 0);
}

} // namespace chevtori
