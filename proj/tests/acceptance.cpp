// One line per acceptance criterion; exit status is the number of failed criteria.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "chevtori/data.hpp"
#include "chevtori/verify.hpp"

using namespace chevtori;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
  size_t total = 0, failed = 0;
  std::string first;
  void take(const Section &s, const std::function<bool(const Check &)> &pick = {}) {
    for (auto &c : s.checks) {
      if (pick && !pick(c))
        continue;
      ++total;
      if (!c.ok) {
        if (failed++ == 0)
          first = s.name + ": " + c.id + ": " + c.detail;
      }
    }
  }
  bool ok() const { return failed == 0 && total > 0; }
  std::string str() const {
    std::string s = std::to_string(total - failed) + "/" + std::to_string(total) + " checks";
    if (failed)
      s += ", first failure " + first;
    return s;
  }
};

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool contains(const std::string &s, const std::string &part) { return s.find(part) != std::string::npos; }

int failures = 0;

void report(int n, bool ok, const std::string &detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " | " << detail << std::endl;
  failures += ok ? 0 : 1;
}

// ---- mutation harness ----

struct Mutation {
  std::string name, file, anchor, find, replace, args;
};

std::string read_file(const fs::path &p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_cli(const fs::path &data, const std::string &args) {
  std::string cmd = std::string("\"") + CHEVTORI_CLI + "\" --data \"" + data.string() + "\" " + args +
                    " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  if (st == -1)
    return -1;
  return WIFEXITED(st) ? WEXITSTATUS(st) : 128;
}

std::vector<Mutation> mutations() {
  return {
      {"lift order", "e7_lifts.toml", "index = 2\n", "lift = \"h_3n_1\"", "lift = \"n_1\"", "lifts --isogeny sc"},
      {"Weyl order", "e7_lifts.toml", "index = 4\n", "order = 3", "order = 4", "lifts --isogeny sc"},
      {"lift of ww0", "e7_lifts.toml", "lift_ww0 = \"", "n_0\"", "\"", "lifts --isogeny sc"},
      {"adjoint lift", "e7_lifts.toml", "index = 3\n", "lift = \"h_3h_4n_1n_2\"", "lift = \"n_1n_2\"",
       "lifts --isogeny ad"},
      {"lemma relation", "e7_nonsplit.toml", "[lemma]", "\"N3^2=1\", ", "", "nonsplit --type E7"},
      {"lemma centralizer", "e7_nonsplit.toml", "centralizing", "\"n_{63}\"", "\"n_{62}\"", "nonsplit --type E7"},
      {"non-split lift", "e7_nonsplit.toml", "index = 2\n", "lift = \"h_6n_7\"", "lift = \"n_7\"",
       "nonsplit --type E7"},
      {"conjugate representative", "e7_nonsplit.toml", "index = 2\n", "rep_prime = \"w_7\"",
       "rep_prime = \"w_7w_6\"", "nonsplit --type E7"},
      {"special lift order", "e8_nonsplit.toml", "index = 36\n", "lift_order = 4", "lift_order = 8",
       "nonsplit --type E8"},
      {"special centralizer", "e8_nonsplit.toml", "index = 59\n", "h_3h_5n_1n_{99}\", \"h_4h_7",
       "h_3h_5n_1n_{98}\", \"h_4h_7", "nonsplit --type E8"},
      {"E8 lemma", "e8_nonsplit.toml", "[lemma]", "\"N2^2=1\", ", "", "nonsplit --type E8"},
      {"complement generator", "e7_split.toml", "index = 12\n", "\"b=h_7n_6\"", "\"b=n_6\"", "complements --type E7"},
      {"uncorrected relation", "e7_split.toml", "index = 10\n", "relations_corrected", "uncorrected",
       "complements --type E7"},
      {"complement relation", "e8_split.toml", "[[row]]", "^2", "^3", "complements --type E8"},
      {"prose torus coordinate", "e7_prose.toml", "index = 9\n", "H1 = \"(-1,alpha,", "H1 = \"(1,alpha,",
       "prose"},
      {"prose symbol", "e7_prose.toml", "index = 4\n", "rhs = \"-1\"", "rhs = \"1\"", "prose"},
      {"torus factors", "e7_tori.toml", "index = 1\n", "(q-1)^7", "(q-1)^6\\times(q+1)", "tori --type E7"},
      {"torus centralizer", "e7_tori.toml", "index = 2\n", "centralizer = ", "centralizer = 1", "tori --type E7"},
      {"split flag", "e7_tori.toml", "index = 12\n", "splits = true", "splits = false", "selftest"},
      {"combined verdict", "main.toml", "index = 12\n", "e7 = \"split\"", "e7 = \"nonsplit\"", "selftest"},
      {"extraspecial list", "fixtures.toml", "printed", "⟨1, 3, 1⟩", "⟨1, 3, -1⟩", "selftest"},
      {"conjugation matrix", "fixtures.toml", "A = [", "[0, 0, -1, 1, 0, 0, 0]", "[0, 0, 1, 1, 0, 0, 0]",
       "selftest"},
      {"anchor", "fixtures.toml", "", "n_{63}^2=h_3h_5h_7", "n_{63}^2=h_3h_5", "selftest"},
      {"root count", "fixtures.toml", "[roots]", "E8 = 120", "E8 = 119", "selftest"},
      {"greek letter", "fixtures.toml", "", "rho = [0,1,0,1,1,0,0,0]", "rho = [0,1,1,1,1,0,0,0]", "selftest"},
      {"central involution", "fixtures.toml", "[central_involution]", "w_{120}\"", "\"", "selftest"},
      {"schema version", "e7_lifts.toml", "", "schema = 1", "schema = 2", "selftest"},
      {"torus power string", "fixtures.toml", "hn_power = ", "λ_7^6", "λ_7^5", "selftest"},
  };
}

void criterion_mutations() {
  fs::path src = CHEVTORI_DATA_DIR;
  fs::path root = fs::temp_directory_path() / ("chevtori_mutations_" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);
  std::map<std::string, int> baseline;
  size_t caught = 0, counted = 0;
  std::vector<std::string> problems;
  int k = 0;
  for (auto &m : mutations()) {
    if (!baseline.count(m.args))
      baseline[m.args] = run_cli(src, m.args);
    if (baseline[m.args] != 0) {
      problems.push_back(m.name + " (baseline '" + m.args + "' already fails)");
      continue;
    }
    fs::path dir = root / std::to_string(k++);
    fs::create_directories(dir);
    for (auto &e : fs::directory_iterator(src))
      fs::copy_file(e.path(), dir / e.path().filename());
    std::string text = read_file(dir / m.file);
    size_t from = m.anchor.empty() ? 0 : text.find(m.anchor);
    size_t at = from == std::string::npos ? from : text.find(m.find, from);
    if (at == std::string::npos) {
      problems.push_back(m.name + " (pattern not found)");
      continue;
    }
    text.replace(at, m.find.size(), m.replace);
    std::ofstream(dir / m.file, std::ios::binary) << text;
    ++counted;
    int rc = run_cli(dir, m.args);
    if (rc != 0)
      ++caught;
    else
      problems.push_back(m.name + " (not detected)");
  }
  fs::remove_all(root);
  std::string detail = std::to_string(caught) + " of " + std::to_string(counted) + " mutated tables rejected";
  for (auto &p : problems)
    detail += "; " + p;
  report(10, caught >= 20 && caught == counted, detail);
}

} // namespace

int main() {
  DataSet d = DataSet::load(DataSource::embedded());
  Options o;

  {
    auto t0 = Clock::now();
    Section s = verify_roots(d);
    double all = since(t0), secs = 0;
    // root systems plus the extraspecial list; structure-constant validation is timed separately
    for (auto &c : s.checks)
      secs += c.data.value("seconds", 0.0);
    Tally t;
    t.take(s);
    report(1, t.ok() && secs < 1.0,
           t.str() + ", roots and extraspecial list in " + std::to_string(secs) + " s (section " +
               std::to_string(all) + " s)");
  }
  {
    Tally t;
    t.take(verify_example(d));
    report(2, t.ok(), t.str());
  }
  {
    Tally t;
    t.take(verify_oracle(Kind::E6, o.oracle_samples, o.oracle_max_length, o.seed));
    t.take(verify_oracle(Kind::E7, o.oracle_samples, o.oracle_max_length, o.seed));
    t.take(verify_oracle(Kind::E8, o.oracle_samples_e8, o.oracle_max_length, o.seed));
    report(3, t.ok() && o.oracle_samples >= 10000 && o.oracle_samples_e8 >= 200,
           t.str() + " (" + std::to_string(o.oracle_samples) + " samples for E6/E7, " +
               std::to_string(o.oracle_samples_e8) + " for E8)");
  }
  {
    Tally t;
    t.take(verify_anchors(d));
    report(4, t.ok() && t.total >= 7, t.str());
  }

  Section lifts_sc = verify_lifts(d, Isogeny::SC, o), lifts_ad = verify_lifts(d, Isogeny::AD, o);
  Section ns7 = verify_nonsplit(d, Kind::E7, o), ns8 = verify_nonsplit(d, Kind::E8, o);
  {
    Tally t;
    t.take(lifts_sc);
    t.take(lifts_ad);
    Tally cols;
    auto lift = [](const Check &c) { return ends_with(c.id, " lift"); };
    cols.take(ns7, lift);
    cols.take(ns8, lift);
    bool rows = d.e7_lifts.rows.size() == 30;
    report(5, t.ok() && cols.ok() && rows,
           "lift table " + t.str() + "; non-split lift columns " + cols.str());
  }
  {
    auto cert = [](const Check &c) {
      return contains(c.id, "contradiction system") || contains(c.id, "no lift of ww0") ||
             contains(c.id, "global obstruction");
    };
    Tally t;
    t.take(lifts_sc, cert);
    t.take(ns7, cert);
    t.take(ns8, cert);
    std::set<std::string> special;
    for (auto &c : ns8.checks)
      if (contains(c.id, "contradiction system") && c.id.rfind("torus ", 0) == 0 && c.ok)
        special.insert(c.id.substr(6, c.id.find(' ', 6) - 6));
    size_t rows7 = 0, rows8 = 0;
    for (auto &c : ns7.checks)
      rows7 += contains(c.id, "contradiction system") && c.id.rfind("row ", 0) == 0;
    for (auto &c : ns8.checks)
      rows8 += contains(c.id, "contradiction system") && c.id.rfind("row ", 0) == 0;
    bool shape = rows7 == 10 && rows8 >= 24 && special == std::set<std::string>{"36", "41", "49", "59"};
    report(6, t.ok() && shape,
           t.str() + "; E7 rows " + std::to_string(rows7) + ", E8 rows " + std::to_string(rows8) +
               ", E8 special tori " + std::to_string(special.size()));
  }
  {
    Tally t;
    t.take(verify_complements(d, Kind::E7, o));
    t.take(verify_complements(d, Kind::E8, o));
    Section pr = verify_prose(d, o);
    t.take(pr);
    std::set<std::string> seen;
    for (auto &c : pr.checks)
      if (contains(c.id, " relations") && c.ok)
        seen.insert(c.id.substr(0, c.id.find(" relations")));
    size_t want = 0;
    for (int idx : {4, 6, 9, 13, 19, 20, 26, 30})
      for (long long q : o.prose_qs)
        want += seen.count("torus " + std::to_string(idx) + " q=" + std::to_string(q));
    report(7, t.ok() && want == 16, t.str() + "; prose tori verified at " + std::to_string(want) + "/16 (torus, q) pairs");
  }
  {
    auto pick = [](const Check &c) { return ends_with(c.id, " polynomial") || ends_with(c.id, " orders"); };
    Tally t;
    Section t7 = verify_tori(d, Kind::E7, o), t8 = verify_tori(d, Kind::E8, o);
    t.take(t7, pick);
    t.take(t8, pick);
    size_t notes = 0;
    for (auto *s : {&t7, &t8})
      for (auto &c : s->checks)
        notes += c.notes.size();
    report(8, t.ok() && t.total == 2 * (30 + 67),
           t.str() + "; " + std::to_string(notes) + " invariant-factor and correction notes logged");
  }
  {
    Tally t;
    Section w7 = verify_weyl(d, Kind::E7);
    t.take(w7);
    Section w8 = verify_weyl(d, Kind::E8);
    double e8 = 0;
    for (auto &c : w8.checks)
      if (c.id == "order") {
        t.take(Section{w8.name, {c}});
        e8 = c.data.value("seconds", 1e9);
      }
    report(9, t.ok() && e8 < 60, t.str() + "; |W(E8)| in " + std::to_string(e8) + " s");
  }
  criterion_mutations();
  return failures;
}
