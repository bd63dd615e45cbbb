#include <algorithm>
#include "chevtori/data.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <toml.hpp>

namespace chevtori {

const std::map<std::string, std::string> &embedded_tables();

std::vector<int> parse_weyl_word(const std::string &text) {
  std::vector<int> word;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1' && text.find_first_not_of(" \t", i + 1) == std::string::npos)
    return word;
  while (true) {
    skip();
    if (i == text.size())
      break;
    if (text[i] != 'w' || i + 1 >= text.size() || text[i + 1] != '_')
      throw DataError("bad Weyl word '" + text + "'");
    i += 2;
    bool braced = i < text.size() && text[i] == '{';
    if (braced)
      ++i;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start)
      throw DataError("bad Weyl word '" + text + "'");
    word.push_back(std::stoi(text.substr(start, i - start)));
    if (braced) {
      if (i >= text.size() || text[i] != '}')
        throw DataError("unbalanced brace in '" + text + "'");
      ++i;
    }
  }
  if (word.empty())
    throw DataError("empty Weyl word");
  return word;
}

std::string format_weyl_word(const std::vector<int> &word) {
  if (word.empty())
    return "1";
  std::string s;
  for (int r : word)
    s += r < 10 ? "w_" + std::to_string(r) : "w_{" + std::to_string(r) + "}";
  return s;
}

Verdict parse_verdict(const std::string &s) {
  if (s == "split")
    return Verdict::Split;
  if (s == "nonsplit")
    return Verdict::Nonsplit;
  if (s == "conditional")
    return Verdict::Conditional;
  throw DataError("unknown verdict '" + s + "'");
}

std::string verdict_string(Verdict v) {
  switch (v) {
  case Verdict::Split:
    return "split";
  case Verdict::Nonsplit:
    return "nonsplit";
  case Verdict::Conditional:
    return "conditional";
  }
  return "?";
}

DataSource DataSource::embedded() {
  DataSource d;
  d.origin_ = "embedded";
  d.files_ = embedded_tables();
  return d;
}

DataSource DataSource::directory(const std::filesystem::path &dir) {
  if (!std::filesystem::is_directory(dir))
    throw DataError("data directory not found: " + dir.string());
  DataSource d;
  d.origin_ = dir.string();
  for (auto &e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".toml")
      continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    d.files_[e.path().filename().string()] = ss.str();
  }
  return d;
}

std::vector<std::string> DataSource::names() const {
  std::vector<std::string> v;
  for (auto &[k, _] : files_)
    v.push_back(k);
  return v;
}

const std::string &DataSource::text(const std::string &name) const {
  auto it = files_.find(name);
  if (it == files_.end())
    throw DataError("missing table " + name + " in " + origin_);
  return it->second;
}

const SplitRow *SplitTable::find(int index) const {
  for (auto &r : rows)
    if (r.index == index)
      return &r;
  return nullptr;
}

std::vector<std::string> SplitTable::effective_relations(const SplitRow &row) const {
  if (row.relations_same_as) {
    const SplitRow *other = find(*row.relations_same_as);
    if (!other || other == &row)
      throw DataError("row " + std::to_string(row.index) + " refers to a missing row");
    return effective_relations(*other);
  }
  return row.relations_corrected ? *row.relations_corrected : row.relations;
}

namespace {

// field access with the file and row in every message
class Reader {
public:
  Reader(const std::string &file, const toml::table &t, std::string where = {})
      : file_(file), t_(t), where_(std::move(where)) {}

  [[noreturn]] void fail(const std::string &msg) const {
    throw DataError(file_ + (where_.empty() ? "" : " " + where_) + ": " + msg);
  }

  bool has(const char *key) const { return t_.contains(key); }

  std::string str(const char *key) const {
    auto v = t_[key].value<std::string>();
    if (!v)
      fail(std::string("missing string '") + key + "'");
    return *v;
  }
  std::optional<std::string> opt_str(const char *key) const {
    if (!has(key))
      return std::nullopt;
    return str(key);
  }
  int64_t integer(const char *key) const {
    auto v = t_[key].value<int64_t>();
    if (!v)
      fail(std::string("missing integer '") + key + "'");
    return *v;
  }
  bool boolean(const char *key) const {
    auto v = t_[key].value<bool>();
    if (!v)
      fail(std::string("missing boolean '") + key + "'");
    return *v;
  }
  std::vector<std::string> strings(const char *key, bool required = true) const {
    std::vector<std::string> out;
    const toml::array *a = t_[key].as_array();
    if (!a) {
      if (required)
        fail(std::string("missing array '") + key + "'");
      return out;
    }
    for (auto &e : *a) {
      auto v = e.value<std::string>();
      if (!v)
        fail(std::string("non-string entry in '") + key + "'");
      out.push_back(*v);
    }
    return out;
  }
  std::vector<int64_t> ints(const char *key) const {
    std::vector<int64_t> out;
    const toml::array *a = t_[key].as_array();
    if (!a)
      fail(std::string("missing array '") + key + "'");
    for (auto &e : *a) {
      auto v = e.value<int64_t>();
      if (!v)
        fail(std::string("non-integer entry in '") + key + "'");
      out.push_back(*v);
    }
    return out;
  }
  IMat matrix(const char *key) const {
    const toml::array *a = t_[key].as_array();
    if (!a || a->empty())
      fail(std::string("missing matrix '") + key + "'");
    IMat m;
    for (size_t i = 0; i < a->size(); ++i) {
      const toml::array *row = (*a)[i].as_array();
      if (!row)
        fail(std::string("matrix '") + key + "' has a non-array row");
      if (i == 0)
        m = IMat(a->size(), row->size());
      if (row->size() != m.cols())
        fail(std::string("matrix '") + key + "' is ragged");
      for (size_t j = 0; j < row->size(); ++j) {
        auto v = (*row)[j].value<int64_t>();
        if (!v)
          fail(std::string("matrix '") + key + "' has a non-integer entry");
        m(i, j) = *v;
      }
    }
    return m;
  }
  Reader sub(const char *key) const {
    const toml::table *t = t_[key].as_table();
    if (!t)
      fail(std::string("missing table '") + key + "'");
    return Reader(file_, *t, where_.empty() ? key : where_ + "." + key);
  }
  std::vector<Reader> rows(const char *key, bool required = true) const {
    std::vector<Reader> out;
    const toml::array *a = t_[key].as_array();
    if (!a) {
      if (required)
        fail(std::string("missing array of tables '") + key + "'");
      return out;
    }
    for (auto &e : *a) {
      const toml::table *t = e.as_table();
      if (!t)
        fail(std::string("'") + key + "' entry is not a table");
      std::string w = std::string(key) + "[" + std::to_string(out.size()) + "]";
      if (auto idx = (*t)["index"].value<int64_t>())
        w = std::string(key) + " " + std::to_string(*idx);
      out.emplace_back(file_, *t, w);
    }
    return out;
  }
  const toml::table &raw() const { return t_; }

private:
  std::string file_;
  const toml::table &t_;
  std::string where_;
};

struct Parsed {
  std::string file;
  toml::table table;
  Reader top() const { return Reader(file, table); }
};

Parsed parse(const DataSource &src, const std::string &name, const char *kind) {
  Parsed p{name, {}};
  try {
    p.table = toml::parse(src.text(name), name);
  } catch (const toml::parse_error &e) {
    std::ostringstream os;
    os << name << ":" << e.source().begin.line << ": " << e.description();
    throw DataError(os.str());
  }
  Reader r = p.top();
  if (r.integer("schema") != kDataSchema)
    r.fail("unsupported schema version " + std::to_string(r.integer("schema")));
  if (r.str("table") != kind)
    r.fail("expected table kind '" + std::string(kind) + "'");
  return p;
}

void check_indices(const std::string &file, const std::vector<int> &idx) {
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] <= idx[i - 1])
      throw DataError(file + ": row indices must be strictly increasing (at " +
                      std::to_string(idx[i]) + ")");
}

LiftTable load_lifts(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "lifts");
  Reader top = p.top();
  LiftTable t;
  t.kind = parse_kind(top.str("type"));
  t.isogeny = parse_isogeny(top.str("isogeny"));
  std::vector<int> idx;
  for (auto &r : top.rows("row")) {
    LiftRow row;
    row.index = static_cast<int>(r.integer("index"));
    row.rep = r.str("rep");
    row.order = static_cast<int>(r.integer("order"));
    row.lift = r.str("lift");
    row.lift_ww0 = r.opt_str("lift_ww0");
    idx.push_back(row.index);
    t.rows.push_back(row);
  }
  check_indices(name, idx);
  return t;
}

NonsplitTable load_nonsplit(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "nonsplit");
  Reader top = p.top();
  NonsplitTable t;
  t.kind = parse_kind(top.str("type"));
  t.isogeny = parse_isogeny(top.str("isogeny"));
  Reader lem = top.sub("lemma");
  t.lemma.generators = lem.strings("generators");
  t.lemma.relations = lem.strings("relations");
  t.lemma.centralizing = lem.strings("centralizing");
  t.lemma.printed_generators = lem.strings("printed_generators", false);
  t.lemma.correction = lem.opt_str("correction").value_or("");
  std::vector<int> idx;
  for (auto &r : top.rows("row")) {
    NonsplitRow row;
    row.index = static_cast<int>(r.integer("index"));
    row.rep = r.str("rep");
    row.rep_prime = r.str("rep_prime");
    row.preimage = r.str("preimage");
    row.lift = r.str("lift");
    idx.push_back(row.index);
    t.rows.push_back(row);
  }
  check_indices(name, idx);
  for (auto &r : top.rows("special", false)) {
    SpecialTorus s;
    s.index = static_cast<int>(r.integer("index"));
    s.rep = r.str("rep");
    s.table_rep = r.opt_str("table_rep");
    s.n = r.str("n");
    s.centralizing = r.strings("centralizing");
    s.commuting = r.strings("commuting", false);
    s.generators = r.strings("generators");
    s.relations = r.strings("relations");
    s.lift = r.str("lift");
    s.lift_order = static_cast<int>(r.integer("lift_order"));
    t.special.push_back(s);
  }
  return t;
}

ToriTable load_tori(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "tori");
  Reader top = p.top();
  ToriTable t;
  t.kind = parse_kind(top.str("type"));
  std::vector<int> idx;
  for (auto &r : top.rows("row")) {
    ToriRow row;
    row.index = static_cast<int>(r.integer("index"));
    row.rep = r.str("rep");
    row.order = static_cast<int>(r.integer("order"));
    if (r.has("centralizer"))
      row.centralizer = r.integer("centralizer");
    row.structure = r.str("structure");
    row.factors = r.str("factors");
    row.factors_corrected = r.opt_str("factors_corrected");
    row.splits = r.boolean("splits");
    idx.push_back(row.index);
    t.rows.push_back(row);
  }
  check_indices(name, idx);
  return t;
}

SplitTable load_split(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "split");
  Reader top = p.top();
  SplitTable t;
  t.kind = parse_kind(top.str("type"));
  t.isogeny = parse_isogeny(top.str("isogeny"));
  std::vector<int> idx;
  for (const char *key : {"row", "odd"}) {
    bool odd = std::string(key) == "odd";
    for (auto &r : top.rows(key, !odd)) {
      SplitRow row;
      row.index = static_cast<int>(r.integer("index"));
      row.odd = odd;
      row.relations = r.strings("relations", false);
      if (r.has("relations_corrected"))
        row.relations_corrected = r.strings("relations_corrected");
      if (r.has("relations_same_as"))
        row.relations_same_as = static_cast<int>(r.integer("relations_same_as"));
      if (!odd && row.relations.empty() && !row.relations_same_as)
        r.fail("no relations");
      row.generators = r.strings("generators");
      row.correction = r.opt_str("correction").value_or("");
      row.note = r.opt_str("note").value_or("");
      idx.push_back(row.index);
      t.rows.push_back(row);
    }
  }
  std::sort(idx.begin(), idx.end());
  check_indices(name, idx);
  std::sort(t.rows.begin(), t.rows.end(), [](auto &a, auto &b) { return a.index < b.index; });
  return t;
}

std::vector<ProseSymbol> load_symbols(const Reader &r) {
  std::vector<ProseSymbol> out;
  const toml::array *a = r.raw()["symbols"].as_array();
  if (!a)
    return out;
  for (auto &e : *a) {
    const toml::table *t = e.as_table();
    if (!t)
      r.fail("symbol entry is not a table");
    Reader s("", *t);
    out.push_back({s.str("name"), s.str("power"), s.str("rhs")});
  }
  return out;
}

ProseTable load_prose(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "prose");
  Reader top = p.top();
  ProseTable t;
  t.kind = parse_kind(top.str("type"));
  t.isogeny = parse_isogeny(top.str("isogeny"));
  for (auto &r : top.rows("torus")) {
    ProseTorus pt;
    pt.index = static_cast<int>(r.integer("index"));
    pt.rep = r.str("rep");
    pt.rep_prime = r.opt_str("rep_prime");
    pt.n = r.str("n");
    pt.x = r.opt_str("x");
    pt.symbols = load_symbols(r);
    pt.generators = r.strings("generators");
    pt.relations = r.strings("relations");
    pt.note = r.opt_str("note").value_or("");
    for (auto &b : r.rows("branch")) {
      ProseBranch br;
      for (auto q : b.ints("q_mod_4"))
        br.q_mod_4.push_back(static_cast<int>(q));
      br.symbols = load_symbols(b);
      const toml::table *tori = b.raw()["tori"].as_table();
      if (!tori)
        b.fail("missing 'tori'");
      for (auto &[k, v] : *tori) {
        auto s = v.value<std::string>();
        if (!s)
          b.fail("torus element is not a string");
        br.tori[std::string(k.str())] = *s;
      }
      pt.branches.push_back(br);
    }
    t.tori.push_back(pt);
  }
  return t;
}

std::vector<MainRow> load_main(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "main");
  std::vector<MainRow> out;
  std::vector<int> idx;
  for (auto &r : p.top().rows("row")) {
    MainRow m;
    m.index = static_cast<int>(r.integer("index"));
    m.rep = r.str("rep");
    for (auto [key, kind] : {std::pair{"e6", Kind::E6}, {"e7", Kind::E7}, {"e8", Kind::E8}})
      if (r.has(key))
        m.verdicts[kind] = parse_verdict(r.str(key));
    idx.push_back(m.index);
    out.push_back(m);
  }
  check_indices(name, idx);
  return out;
}

Fixtures load_fixtures(const DataSource &src, const std::string &name) {
  Parsed p = parse(src, name, "fixtures");
  Reader top = p.top();
  Fixtures f;
  f.extraspecial_e7 = top.sub("extraspecial").str("printed");
  Reader ex = top.sub("conjugation_example");
  f.example_word = ex.str("word");
  f.example_lift = ex.str("lift");
  f.A = ex.matrix("A");
  f.B = ex.matrix("B");
  f.example_power = static_cast<int>(ex.integer("power"));
  f.example_n_power = ex.str("n_power");
  f.hn_conj = ex.str("hn_conj");
  f.hn_power_printed = ex.str("hn_power_printed");
  f.hn_power = ex.str("hn_power");
  f.hn_power_note = ex.opt_str("correction").value_or("");
  Reader roots = top.sub("roots");
  for (auto k : {Kind::E6, Kind::E7, Kind::E8})
    f.root_counts[k] = static_cast<int>(roots.integer(kind_name(k).c_str()));
  const toml::table *g = top.raw()["greek"].as_table();
  if (!g)
    top.fail("missing [greek]");
  for (auto &[k, _] : *g) {
    std::string key(k.str());
    f.greek[key] = top.sub("greek").ints(key.c_str());
  }
  Reader th = top.sub("theorem");
  for (auto k : {Kind::E6, Kind::E7, Kind::E8}) {
    Reader t = th.sub(kind_name(k).c_str());
    f.theorem_nonsplit[k] = t.strings("nonsplit");
    f.theorem_conditional[k] = t.strings("conditional", false);
  }
  for (auto &a : top.rows("anchor"))
    f.anchors.push_back({parse_kind(a.str("type")), a.str("relation")});
  Reader ci = top.sub("central_involution");
  for (auto k : {Kind::E7, Kind::E8})
    f.central_involution[k] = ci.str(kind_name(k).c_str());
  return f;
}

void expect(bool ok, const std::string &msg) {
  if (!ok)
    throw DataError(msg);
}

} // namespace

DataSet DataSet::load(const DataSource &src) {
  DataSet d;
  d.e7_lifts = load_lifts(src, "e7_lifts.toml");
  d.e7_nonsplit = load_nonsplit(src, "e7_nonsplit.toml");
  d.e8_nonsplit = load_nonsplit(src, "e8_nonsplit.toml");
  d.e7_tori = load_tori(src, "e7_tori.toml");
  d.e8_tori = load_tori(src, "e8_tori.toml");
  d.e7_split = load_split(src, "e7_split.toml");
  d.e8_split = load_split(src, "e8_split.toml");
  d.e7_prose = load_prose(src, "e7_prose.toml");
  d.main = load_main(src, "main.toml");
  d.fixtures = load_fixtures(src, "fixtures.toml");
  expect(d.e7_lifts.kind == Kind::E7, "e7_lifts.toml: wrong type");
  expect(d.e7_nonsplit.kind == Kind::E7 && d.e8_nonsplit.kind == Kind::E8, "nonsplit tables: wrong type");
  expect(d.e7_tori.kind == Kind::E7 && d.e8_tori.kind == Kind::E8, "tori tables: wrong type");
  expect(d.e7_split.kind == Kind::E7 && d.e8_split.kind == Kind::E8, "split tables: wrong type");
  return d;
}

const ToriTable &DataSet::tori(Kind k) const {
  if (k == Kind::E7)
    return e7_tori;
  if (k == Kind::E8)
    return e8_tori;
  throw DataError("no tori table for " + kind_name(k));
}

const NonsplitTable &DataSet::nonsplit(Kind k) const {
  if (k == Kind::E7)
    return e7_nonsplit;
  if (k == Kind::E8)
    return e8_nonsplit;
  throw DataError("no nonsplit table for " + kind_name(k));
}

const SplitTable &DataSet::split(Kind k) const {
  if (k == Kind::E7)
    return e7_split;
  if (k == Kind::E8)
    return e8_split;
  throw DataError("no split table for " + kind_name(k));
}

std::vector<int> greek_word(const std::string &letters, const Fixtures &fx, const RootSystem &rs) {
  std::vector<int> word;
  if (letters == "1")
    return word;
  size_t i = 0;
  while (i < letters.size()) {
    if (letters[i] != '\\')
      throw DataError("bad greek word '" + letters + "'");
    size_t j = i + 1;
    while (j < letters.size() && std::isalpha(static_cast<unsigned char>(letters[j])))
      ++j;
    std::string name = letters.substr(i + 1, j - i - 1);
    auto it = fx.greek.find(name);
    if (it == fx.greek.end())
      throw DataError("unknown greek letter '" + name + "'");
    const IVec &c = it->second;
    for (size_t k = rs.rank(); k < c.size(); ++k)
      if (c[k] != 0)
        throw DataError("letter '" + name + "' is not a root of " + kind_name(rs.kind()));
    IVec trunc(c.begin(), c.begin() + rs.rank());
    int r = rs.index_of(trunc);
    if (r <= 0)
      throw DataError("letter '" + name + "' is not a positive root");
    word.push_back(r);
    i = j;
  }
  return word;
}

} // namespace chevtori
