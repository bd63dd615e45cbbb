#pragma once
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevtori/matrix.hpp"
#include "chevtori/rootsys.hpp"
#include "chevtori/tits.hpp"

namespace chevtori {

constexpr int kDataSchema = 1;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "w_1w_{53}w_2" -> {1, 53, 2}; "1" is the empty word
std::vector<int> parse_weyl_word(const std::string &text);
std::string format_weyl_word(const std::vector<int> &word);

struct LiftRow {
  int index = 0;
  std::string rep;
  int order = 0;
  std::string lift;
  std::optional<std::string> lift_ww0;
};

struct LiftTable {
  Kind kind = Kind::E7;
  Isogeny isogeny = Isogeny::SC;
  std::vector<LiftRow> rows;
};

struct NonsplitLemma {
  std::vector<std::string> generators, relations, centralizing;
  std::vector<std::string> printed_generators;
  std::string correction;
};

struct NonsplitRow {
  int index = 0;
  std::string rep, rep_prime, preimage, lift;
};

struct SpecialTorus {
  int index = 0;
  std::string rep;
  std::optional<std::string> table_rep;
  std::string n;
  std::vector<std::string> centralizing, commuting, generators, relations;
  std::string lift;
  int lift_order = 0;
};

struct NonsplitTable {
  Kind kind = Kind::E7;
  Isogeny isogeny = Isogeny::AD;
  NonsplitLemma lemma;
  std::vector<NonsplitRow> rows;
  std::vector<SpecialTorus> special;
};

struct ToriRow {
  int index = 0;
  std::string rep;
  int order = 0;
  std::optional<long long> centralizer;
  std::string structure, factors;
  std::optional<std::string> factors_corrected;
  bool splits = false;

  const std::string &effective_factors() const { return factors_corrected ? *factors_corrected : factors; }
};

struct ToriTable {
  Kind kind = Kind::E7;
  std::vector<ToriRow> rows;
};

struct SplitRow {
  int index = 0;
  bool odd = false; // odd torus order: no relations needed
  std::vector<std::string> relations;
  std::optional<std::vector<std::string>> relations_corrected;
  std::optional<int> relations_same_as;
  std::vector<std::string> generators;
  std::string correction, note;
};

struct SplitTable {
  Kind kind = Kind::E7;
  Isogeny isogeny = Isogeny::AD;
  std::vector<SplitRow> rows;

  const SplitRow *find(int index) const;
  // printed relations, corrected ones if present, or those of the referenced row
  std::vector<std::string> effective_relations(const SplitRow &row) const;
};

struct ProseSymbol {
  std::string name, power, rhs;
};

struct ProseBranch {
  std::vector<int> q_mod_4;
  std::vector<ProseSymbol> symbols;
  std::map<std::string, std::string> tori;
};

struct ProseTorus {
  int index = 0;
  std::string rep;
  std::optional<std::string> rep_prime;
  std::string n;
  std::optional<std::string> x;
  std::vector<ProseSymbol> symbols;
  std::vector<std::string> generators, relations;
  std::vector<ProseBranch> branches;
  std::string note;
};

struct ProseTable {
  Kind kind = Kind::E7;
  Isogeny isogeny = Isogeny::AD;
  std::vector<ProseTorus> tori;
};

enum class Verdict { Split, Nonsplit, Conditional };
Verdict parse_verdict(const std::string &s);
std::string verdict_string(Verdict v);

struct MainRow {
  int index = 0;
  std::string rep; // greek letters
  std::map<Kind, Verdict> verdicts;
};

struct Anchor {
  Kind kind = Kind::E7;
  std::string relation;
};

struct Fixtures {
  std::string extraspecial_e7;
  std::string example_word, example_lift;
  IMat A, B;
  int example_power = 0;
  std::string example_n_power, hn_conj, hn_power_printed, hn_power, hn_power_note;
  std::map<Kind, int> root_counts;
  std::map<std::string, IVec> greek;
  std::map<Kind, std::vector<std::string>> theorem_nonsplit, theorem_conditional;
  std::vector<Anchor> anchors;
  std::map<Kind, std::string> central_involution;
};

// Raw TOML texts keyed by file name: the compiled-in copy or a directory.
class DataSource {
public:
  static DataSource embedded();
  static DataSource directory(const std::filesystem::path &dir);

  const std::string &origin() const { return origin_; }
  std::vector<std::string> names() const;
  bool has(const std::string &name) const { return files_.count(name) != 0; }
  const std::string &text(const std::string &name) const;
  void set_text(const std::string &name, std::string text) { files_[name] = std::move(text); }

private:
  std::string origin_;
  std::map<std::string, std::string> files_;
};

// Typed view of every table; parsing checks the schema version and the row fields.
struct DataSet {
  LiftTable e7_lifts;
  NonsplitTable e7_nonsplit, e8_nonsplit;
  ToriTable e7_tori, e8_tori;
  SplitTable e7_split, e8_split;
  ProseTable e7_prose;
  std::vector<MainRow> main;
  Fixtures fixtures;

  static DataSet load(const DataSource &src);
  const ToriTable &tori(Kind k) const;
  const NonsplitTable &nonsplit(Kind k) const;
  const SplitTable &split(Kind k) const;
};

// word in greek letters ("\alpha\delta\rho") as reflections in the given type
std::vector<int> greek_word(const std::string &letters, const Fixtures &fx, const RootSystem &rs);

} // namespace chevtori
