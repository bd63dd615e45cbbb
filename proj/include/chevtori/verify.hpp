#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevtori/data.hpp"
#include "chevtori/intlinalg.hpp"

namespace chevtori {

struct Check {
  std::string id;
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes; // logged, never failing
  nlohmann::json data = nlohmann::json::object();
};

struct Section {
  Section() = default;
  explicit Section(std::string n, std::vector<Check> c = {}) : name(std::move(n)), checks(std::move(c)) {}

  std::string name;
  std::vector<Check> checks;
  double seconds = 0;

  bool ok() const;
  size_t failures() const;
  Check &add(std::string id, bool ok, std::string detail = {});
  nlohmann::json to_json() const;
};

struct Options {
  uint64_t seed = 1;
  std::vector<long long> qs{3, 5, 7, 9, 11, 13};
  std::vector<long long> prose_qs{5, 7};
  size_t oracle_samples = 10000;
  size_t oracle_samples_e8 = 200;
  int oracle_max_length = 12;
  uint64_t conjugacy_budget = 200;
};

// root counts, printed extraspecial list, defining anchors of the root order
Section verify_roots(const DataSet &d);
// conjugation matrix A, B = sum A^t and the printed torus strings
Section verify_example(const DataSet &d);
// Tits normal form against products of adjoint-representation matrices
Section verify_oracle(Kind kind, size_t samples, int max_length, uint64_t seed);
Section verify_anchors(const DataSet &d);
Section verify_weyl(const DataSet &d, Kind kind);
Section verify_lifts(const DataSet &d, Isogeny iso, const Options &o);
Section verify_nonsplit(const DataSet &d, Kind kind, const Options &o);
Section verify_complements(const DataSet &d, Kind kind, const Options &o);
Section verify_prose(const DataSet &d, const Options &o);
Section verify_tori(const DataSet &d, Kind kind, const Options &o);
// combined verdict table against the per-type tables and the main theorems
Section verify_main(const DataSet &d, const Options &o);

// group order from a printed structure such as (2.\Oo_8^+(2)):2; nullopt if unreadable
std::optional<BigInt> structure_order(const std::string &s);

struct Report {
  std::vector<Section> sections;
  bool ok() const;
  nlohmann::json to_json() const;
  std::string to_markdown() const;
};

Report full_report(const DataSet &d, const Options &o);

// one line per check, failures and notes expanded
std::string summarize(const Section &s, bool verbose);

} // namespace chevtori
