// Standalone re-check of solver output. Deliberately uses nothing from the solver.
#include "chevtori/monosolve.hpp"

namespace chevtori {

bool check_certificate(const ConstraintSystem &sys, const Certificate &c, std::string *why) {
  auto fail = [&](const std::string &m) {
    if (why)
      *why = m;
    return false;
  };
  if (c.kernel_vector.size() != sys.rows.size())
    return fail("kernel vector length differs from the number of constraints");
  for (size_t j = 0; j < sys.unknowns.size(); ++j) {
    BigInt s = 0;
    for (size_t i = 0; i < sys.rows.size(); ++i)
      s += c.kernel_vector[i] * sys.rows[i].exponents[j];
    if (s != 0)
      return fail("combined exponent of " + sys.unknowns[j] + " is " + s.str());
  }
  BigInt sign = 0;
  for (size_t i = 0; i < sys.rows.size(); ++i)
    if (sys.rows[i].negative)
      sign += c.kernel_vector[i];
  if (sign % 2 == 0)
    return fail("combined sign is +1");
  return true;
}

bool check_witness(const ConstraintSystem &sys, const Witness &w, std::string *why) {
  auto fail = [&](const std::string &m) {
    if (why)
      *why = m;
    return false;
  };
  if (w.modulus <= 0 || w.modulus % 2 != 0 || w.exponents.size() != sys.unknowns.size())
    return fail("malformed witness");
  BigInt half = w.modulus / 2;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    BigInt e = 0;
    for (size_t j = 0; j < sys.unknowns.size(); ++j)
      e += w.exponents[j] * sys.rows[i].exponents[j];
    e %= w.modulus;
    if (e < 0)
      e += w.modulus;
    if (e != (sys.rows[i].negative ? half : BigInt(0)))
      return fail("constraint " + sys.rows[i].origin + " is violated");
  }
  return true;
}

} // namespace chevtori
