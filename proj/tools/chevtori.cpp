#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "chevtori/data.hpp"
#include "chevtori/verify.hpp"

using namespace chevtori;

namespace {

struct Globals {
  uint64_t seed = 1;
  std::string data_dir;
  bool verbose = false;
};

DataSet load(const Globals &g) {
  DataSource src = g.data_dir.empty() ? DataSource::embedded() : DataSource::directory(g.data_dir);
  return DataSet::load(src);
}

int emit(const std::vector<Section> &sections, bool verbose) {
  bool ok = true;
  for (auto &s : sections) {
    std::cout << summarize(s, verbose);
    ok = ok && s.ok();
  }
  std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? 0 : 1;
}

Kind kind_option(const std::string &s) { return parse_kind(s); }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tits groups and torus normalizers of E6, E7 and E8: exact verification of lifts, splittings and torus orders"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized searches and oracle sampling")->capture_default_str();
  app.add_option("--data", g.data_dir, "directory of TOML tables (default: compiled-in copy)")
      ->check(CLI::ExistingDirectory);
  app.add_flag("-v,--verbose", g.verbose, "print every check, not only failures and notes");

  auto *selftest = app.add_subcommand("selftest", "fast consistency checks of the core algebra");
  size_t st_samples = 2000;
  selftest->add_option("--samples", st_samples, "oracle samples per type")->capture_default_str();

  auto *lifts = app.add_subcommand("lifts", "orders of lifts of Weyl elements");
  std::string lift_type = "E7", lift_iso = "sc";
  lifts->add_option("--type", lift_type)->check(CLI::IsMember({"E7"}))->capture_default_str();
  lifts->add_option("--isogeny", lift_iso)->check(CLI::IsMember({"sc", "ad"}))->capture_default_str();

  auto *nonsplit = app.add_subcommand("nonsplit", "unsatisfiability certificates for non-split normalizers");
  std::string ns_type = "E8";
  nonsplit->add_option("--type", ns_type)->check(CLI::IsMember({"E7", "E8"}))->capture_default_str();

  auto *complements = app.add_subcommand("complements", "explicit complements of split normalizers");
  std::string cp_type = "E8";
  complements->add_option("--type", cp_type)->check(CLI::IsMember({"E7", "E8"}))->capture_default_str();
  std::vector<long long> cp_qs{3, 5, 7, 9, 11, 13};
  complements->add_option("--q", cp_qs, "prime powers used for odd-order tori")->delimiter(',');

  auto *prose = app.add_subcommand("prose", "complements built from field elements over F_{q^2}");
  std::string pr_type = "E7";
  prose->add_option("--type", pr_type)->check(CLI::IsMember({"E7"}))->capture_default_str();
  std::vector<long long> pr_qs{5, 7};
  prose->add_option("--q", pr_qs)->delimiter(',');

  auto *tori = app.add_subcommand("tori", "orders and structure of maximal tori");
  std::string to_type = "E7";
  tori->add_option("--type", to_type)->check(CLI::IsMember({"E6", "E7", "E8"}))->capture_default_str();
  std::vector<long long> to_qs{3, 5, 7, 9, 11, 13};
  tori->add_option("--q", to_qs)->delimiter(',');

  auto *report = app.add_subcommand("report", "run everything and write a report");
  std::string format = "md", output;
  report->add_option("--format", format)->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  report->add_option("-o,--output", output, "file to write instead of stdout");
  size_t rp_samples = 10000, rp_samples_e8 = 200;
  report->add_option("--samples", rp_samples, "oracle samples for E6 and E7")->capture_default_str();
  report->add_option("--samples-e8", rp_samples_e8, "oracle samples for E8")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  auto odd_q = [](const std::vector<long long> &qs) {
    for (long long q : qs)
      if (q < 3 || q % 2 == 0)
        throw CLI::ValidationError("--q", "q must be odd and at least 3, got " + std::to_string(q));
  };

  try {
    DataSet d = load(g);
    Options o;
    o.seed = g.seed;
    if (*selftest) {
      std::vector<Section> s;
      s.push_back(verify_roots(d));
      s.push_back(verify_example(d));
      s.push_back(verify_anchors(d));
      for (auto k : {Kind::E6, Kind::E7, Kind::E8})
        s.push_back(verify_oracle(k, k == Kind::E8 ? std::max<size_t>(st_samples / 20, 1) : st_samples,
                                  o.oracle_max_length, g.seed));
      s.push_back(verify_lifts(d, Isogeny::SC, o));
      s.push_back(verify_main(d, o));
      return emit(s, g.verbose);
    }
    if (*lifts)
      return emit({verify_lifts(d, parse_isogeny(lift_iso), o)}, g.verbose);
    if (*nonsplit)
      return emit({verify_nonsplit(d, kind_option(ns_type), o)}, g.verbose);
    if (*complements) {
      odd_q(cp_qs);
      o.qs = cp_qs;
      return emit({verify_complements(d, kind_option(cp_type), o)}, g.verbose);
    }
    if (*prose) {
      odd_q(pr_qs);
      o.prose_qs = pr_qs;
      return emit({verify_prose(d, o)}, g.verbose);
    }
    if (*tori) {
      odd_q(to_qs);
      o.qs = to_qs;
      Kind k = kind_option(to_type);
      std::vector<Section> s{verify_tori(d, k, o)};
      if (k != Kind::E6)
        s.push_back(verify_weyl(d, k));
      return emit(s, g.verbose);
    }
    if (*report) {
      o.oracle_samples = rp_samples;
      o.oracle_samples_e8 = rp_samples_e8;
      Report r = full_report(d, o);
      std::string text = format == "json" ? r.to_json().dump(2) + "\n" : r.to_markdown();
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(output);
        if (!f)
          throw std::runtime_error("cannot write " + output);
        f << text;
      }
      for (auto &s : r.sections)
        if (!s.ok())
          std::cerr << summarize(s, false);
      return r.ok() ? 0 : 1;
    }
  } catch (const DataError &e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
