#include "chevtori/torus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chevtori {

IMat conj_matrix(const WeylElement &w) { return w.matrix(); }

PowerExponents power_exponents(const TitsGroup &g, const TitsElement &u, long long m) {
  if (m < 1)
    throw std::invalid_argument("power_exponents needs m >= 1");
  const IMat &A = u.w.matrix();
  size_t l = A.rows();
  PowerExponents p{IMat(l, l), g.pow(u, m)};
  IMat At = IMat::identity(l);
  for (long long t = 0; t < m; ++t) {
    p.B = p.B + At;
    At = A * At;
  }
  return p;
}

std::string render_torus(const IMat &E, uint32_t signs, const std::string &var) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < E.rows(); ++i) {
    if (i)
      os << ",";
    std::ostringstream c;
    for (size_t j = 0; j < E.cols(); ++j) {
      int64_t e = E(i, j);
      if (!e)
        continue;
      c << var << "_" << j + 1;
      if (e != 1)
        c << "^" << (e >= 2 && e <= 9 ? std::to_string(e) : "{" + std::to_string(e) + "}");
    }
    std::string body = c.str();
    bool neg = (signs >> i) & 1;
    if (body.empty())
      os << (neg ? "-1" : "1");
    else
      os << (neg ? "-" : "") << body;
  }
  os << ")";
  return os.str();
}

// ---- polynomials ----

Poly::Poly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Poly Poly::constant(const BigInt &c) { return Poly({c}); }
Poly Poly::q() { return Poly({0, 1}); }

BigInt Poly::eval(const BigInt &x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly &o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<BigInt> c = c_;
  for (auto &x : c)
    x = -x;
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const Poly &o) const {
  if (c_.empty() || o.c_.empty())
    return Poly();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(1);
  for (unsigned i = 0; i < e; ++i)
    acc = acc * *this;
  return acc;
}

std::string Poly::str() const {
  if (c_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = c_[i];
    if (c == 0)
      continue;
    bool neg = c < 0;
    BigInt a = neg ? BigInt(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? "-" : "+");
    first = false;
    if (i == 0 || a != 1)
      os << a;
    if (i >= 1)
      os << "q";
    if (i >= 2)
      os << "^" << i;
  }
  return os.str();
}

namespace {

class PolyParser {
public:
  explicit PolyParser(const std::string &s) {
    // normalize the product tokens to '*'
    std::string t;
    for (size_t i = 0; i < s.size();) {
      if (s.compare(i, 6, "\\times") == 0) {
        t += '*';
        i += 6;
      } else if (s.compare(i, 5, "\\cdot") == 0) {
        t += '*';
        i += 5;
      } else if (s.compare(i, 2, "\xC3\x97") == 0) {
        t += '*';
        i += 2;
      } else if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      } else {
        t += s[i++];
      }
    }
    t_ = t;
  }

  Poly parse() {
    Poly p = sum();
    if (p_ != t_.size())
      fail("trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(p_) + " in '" + t_ + "'");
  }
  char peek() const { return p_ < t_.size() ? t_[p_] : '\0'; }

  Poly sum() {
    Poly acc;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++p_;
    }
    acc = neg ? -product() : product();
    while (peek() == '+' || peek() == '-') {
      bool minus = t_[p_++] == '-';
      Poly t = product();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++p_;
        acc = acc * power();
      } else if (c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = primary();
    while (peek() == '^') {
      ++p_;
      bool braced = peek() == '{';
      if (braced)
        ++p_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected exponent");
      unsigned e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        e = e * 10 + (t_[p_++] - '0');
      if (braced) {
        if (peek() != '}')
          fail("expected '}'");
        ++p_;
      }
      base = base.pow(e);
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++p_;
      Poly inner = sum();
      if (peek() != ')')
        fail("expected ')'");
      ++p_;
      return inner;
    }
    if (c == 'q') {
      ++p_;
      return Poly::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        v = v * 10 + (t_[p_++] - '0');
      return Poly::constant(v);
    }
    fail("unexpected token");
  }

  std::string t_;
  size_t p_ = 0;
};

std::vector<std::string> split_top_level_times(const std::string &s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    bool times = false;
    size_t len = 0;
    if (s.compare(i, 6, "\\times") == 0)
      times = true, len = 6;
    else if (s.compare(i, 2, "\xC3\x97") == 0)
      times = true, len = 2;
    if (times && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      i += len;
      continue;
    }
    if (times) {
      cur += s.substr(i, len);
      i += len;
      continue;
    }
    cur += c;
    ++i;
  }
  parts.push_back(cur);
  return parts;
}

} // namespace

Poly parse_factor_string(const std::string &s) { return PolyParser(s).parse(); }

std::vector<CyclicFactor> parse_cyclic_structure(const std::string &s) {
  std::vector<CyclicFactor> out;
  for (std::string part : split_top_level_times(s)) {
    part.erase(std::remove_if(part.begin(), part.end(),
                              [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
               part.end());
    CyclicFactor f;
    if (!part.empty() && part[0] == '(') {
      int depth = 0;
      size_t close = std::string::npos;
      for (size_t i = 0; i < part.size(); ++i) {
        if (part[i] == '(')
          ++depth;
        if (part[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close != std::string::npos && close + 1 < part.size() && part[close + 1] == '^') {
        std::string rest = part.substr(close + 2);
        if (!rest.empty() && rest.front() == '{' && rest.back() == '}')
          rest = rest.substr(1, rest.size() - 2);
        if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            })) {
          f.order = parse_factor_string(part.substr(1, close - 1));
          f.copies = std::stoi(rest);
          out.push_back(f);
          continue;
        }
      }
    }
    f.order = parse_factor_string(part);
    out.push_back(f);
  }
  return out;
}

Poly twisted_order_polynomial(const WeylElement &w) {
  const IMat &A = w.matrix();
  size_t l = A.rows();
  // Faddeev-LeVerrier: det(xI - A) = sum c_i x^i
  BigMat Ab = to_big(A);
  std::vector<BigInt> c(l + 1, 0);
  c[l] = 1;
  BigMat Mk(l, BigVec(l, 0));
  for (size_t k = 1; k <= l; ++k) {
    BigMat AM = big_mul(Ab, Mk);
    for (size_t i = 0; i < l; ++i)
      AM[i][i] += c[l - k + 1];
    Mk = AM;
    BigMat AMk = big_mul(Ab, Mk);
    BigInt tr = 0;
    for (size_t i = 0; i < l; ++i)
      tr += AMk[i][i];
    if (tr % k != 0)
      throw std::logic_error("characteristic polynomial is not integral");
    c[l - k] = -tr / k;
  }
  // det(qA - I) = (-1)^l sum_i c_i q^{l-i}
  std::vector<BigInt> d(l + 1, 0);
  for (size_t i = 0; i <= l; ++i)
    d[l - i] = (l % 2 ? -1 : 1) * c[i];
  Poly p(d);
  if (!p.coeffs().empty() && p.coeffs().back() < 0)
    p = -p;
  return p;
}

TwistedTorusStructure twisted_structure(const WeylElement &w, long long q) {
  const IMat &A = w.matrix();
  size_t l = A.rows();
  IMat M = A.scaled(q) - IMat::identity(l);
  Smith s = smith_normal_form(to_big(M));
  TwistedTorusStructure t;
  t.q = q;
  t.order = 1;
  for (auto &d : s.diag) {
    if (d == 0)
      throw std::logic_error("qA - I is singular");
    t.order *= d;
    if (d != 1)
      t.invariant_factors.push_back(d);
  }
  BigInt det = determinant(to_big(M));
  if (abs(det) != t.order)
    throw std::logic_error("Smith form disagrees with the determinant");
  return t;
}

namespace {

void prime_powers(BigInt n, std::vector<BigInt> &out) {
  if (n < 0)
    n = -n;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    BigInt pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    out.push_back(pk);
  }
  if (n > 1)
    out.push_back(n);
}

} // namespace

bool same_abelian_group(const BigVec &a, const BigVec &b) {
  std::vector<BigInt> pa, pb;
  for (auto &x : a)
    prime_powers(x, pa);
  for (auto &x : b)
    prime_powers(x, pb);
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

// ---- concrete normalizer ----

ConcreteNormalizer::ConcreteNormalizer(const TitsGroup &g, long long q, int k, uint32_t center_mask)
    : g_(&g), q_(q), center_(center_mask) {
  if (g.isogeny() != Isogeny::SC || g.trivial_h())
    throw std::invalid_argument("concrete normalizer needs the simply connected Tits group");
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("concrete normalizer needs odd q");
  M_ = 1;
  for (int i = 0; i < k; ++i)
    M_ *= q;
  M_ -= 1;
}

ConcreteElement ConcreteNormalizer::torus(const IVec &e) const {
  ConcreteElement a{e, g_->identity()};
  for (auto &x : a.e)
    x = ((x % M_) + M_) % M_;
  return a;
}

ConcreteElement ConcreteNormalizer::tits(const TitsElement &t) const {
  return ConcreteElement{IVec(g_->system().rank(), 0), t};
}

ConcreteElement ConcreteNormalizer::one() const { return tits(g_->identity()); }

ConcreteElement ConcreteNormalizer::mul(const ConcreteElement &a, const ConcreteElement &b) const {
  IVec moved = a.t.w.matrix() * b.e;
  ConcreteElement r{a.e, g_->mul(a.t, b.t)};
  for (size_t i = 0; i < r.e.size(); ++i)
    r.e[i] = (((r.e[i] + moved[i]) % M_) + M_) % M_;
  return r;
}

ConcreteElement ConcreteNormalizer::inv(const ConcreteElement &a) const {
  TitsElement ti = g_->inv(a.t);
  IVec moved = ti.w.matrix() * a.e;
  ConcreteElement r{moved, ti};
  for (auto &x : r.e)
    x = (((-x) % M_) + M_) % M_;
  return r;
}

ConcreteElement ConcreteNormalizer::pow(const ConcreteElement &a, long long m) const {
  ConcreteElement base = m < 0 ? inv(a) : a;
  if (m < 0)
    m = -m;
  ConcreteElement acc = one();
  while (m > 0) {
    if (m & 1)
      acc = mul(acc, base);
    m >>= 1;
    if (m)
      base = mul(base, base);
  }
  return acc;
}

ConcreteElement ConcreteNormalizer::sigma(const ConcreteElement &a) const {
  ConcreteElement r = a;
  for (auto &x : r.e)
    x = static_cast<int64_t>((static_cast<__int128>(x) * q_) % M_);
  return r;
}

IVec ConcreteNormalizer::normalized_torus(const ConcreteElement &a) const {
  IVec e = a.e;
  for (size_t i = 0; i < e.size(); ++i)
    if ((a.t.h >> i) & 1)
      e[i] = (e[i] + M_ / 2) % M_;
  return e;
}

bool ConcreteNormalizer::is_identity(const ConcreteElement &a) const {
  if (!a.t.w.is_identity())
    return false;
  IVec e = normalized_torus(a);
  if (std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; }))
    return true;
  if (!center_)
    return false;
  for (size_t i = 0; i < e.size(); ++i) {
    int64_t want = ((center_ >> i) & 1) ? M_ / 2 : 0;
    if (e[i] != want)
      return false;
  }
  return true;
}

bool ConcreteNormalizer::equal(const ConcreteElement &a, const ConcreteElement &b) const {
  return is_identity(mul(a, inv(b)));
}

bool ConcreteNormalizer::fixed_by_twist(const ConcreteElement &y, const ConcreteElement &x) const {
  return equal(mul(mul(x, sigma(y)), inv(x)), y);
}

int64_t ConcreteNormalizer::root_of(long long k, bool minus_one) const {
  int64_t target = minus_one ? M_ / 2 : 0;
  for (int64_t x = 0; x < M_; ++x)
    if (((static_cast<__int128>(k) * x) % M_ + M_) % M_ == target)
      return x;
  throw std::domain_error("no root in F_{q^k}^* for exponent " + std::to_string(k));
}

int64_t ConcreteNormalizer::coordinate(const std::string &raw,
                                       const std::map<std::string, int64_t> &symbols) const {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  int64_t e = 0;
  size_t p = 0;
  if (!s.empty() && s[0] == '-') {
    e += M_ / 2;
    p = 1;
  }
  if (s.substr(p) == "1")
    return e % M_;
  while (p < s.size()) {
    size_t start = p;
    while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p])))
      ++p;
    std::string name = s.substr(start, p - start);
    auto it = symbols.find(name);
    if (name.empty() || it == symbols.end())
      throw std::invalid_argument("unknown coordinate symbol in '" + raw + "'");
    long long k = 1;
    if (p < s.size() && s[p] == '^') {
      ++p;
      bool braced = p < s.size() && s[p] == '{';
      if (braced)
        ++p;
      size_t used = 0;
      k = std::stoll(s.substr(p), &used);
      p += used;
      if (braced) {
        if (p >= s.size() || s[p] != '}')
          throw std::invalid_argument("bad exponent in '" + raw + "'");
        ++p;
      }
    }
    e += static_cast<int64_t>((static_cast<__int128>(it->second) * k) % M_);
    if (p < s.size()) {
      if (s[p] != '*')
        throw std::invalid_argument("bad coordinate '" + raw + "'");
      ++p;
    }
  }
  return ((e % M_) + M_) % M_;
}

std::string ConcreteNormalizer::format(const ConcreteElement &a) const {
  std::ostringstream os;
  IVec e = normalized_torus(a);
  os << "[";
  for (size_t i = 0; i < e.size(); ++i)
    os << (i ? "," : "") << e[i];
  os << "]·" << g_->format(TitsElement{0, a.t.w});
  return os.str();
}

} // namespace chevtori
