#include "catalan_lab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "catalan_lab/bijections.hpp"
#include "catalan_lab/errors.hpp"
#include "catalan_lab/formulas.hpp"
#include "catalan_lab/oeis.hpp"
#include "catalan_lab/verify.hpp"
#include "catalan_lab/words.hpp"

namespace catalan_lab {

namespace {

using nlohmann::json;

json json_count(const Count& c) {
  if (mpz_fits_ulong_p(c.get_mpz_t())) return json(c.get_ui());
  return json(c.get_str());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  return row;
}

// RFC 4180 style: quoted fields may hold commas and doubled quotes.
std::vector<std::string> parse_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int resolve_ceiling(std::optional<int> flag) {
  if (flag) {
    if (*flag < 0) throw DomainError("--max-n must be nonnegative");
    return *flag;
  }
  if (const char* env = std::getenv(kMaxNEnv)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw DomainError(std::string(kMaxNEnv) + " is not a nonnegative integer: '" + env + "'");
    }
  }
  return kDefaultCeiling;
}

std::vector<StatId> parse_stats(const std::vector<std::string>& names) {
  std::vector<StatId> out;
  if (names.empty()) {
    for (StatKind k : kAllStatKinds) out.emplace_back(k);
    return out;
  }
  for (const auto& n : names) out.push_back(parse_stat(n));
  return out;
}

// Stat values for a word; stats undefined on the word are left out.
std::vector<std::pair<std::string, std::size_t>> word_stats(const Word& w) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (StatKind k : kAllStatKinds) {
    try {
      out.emplace_back(stat_name(k), stat_value(w, StatId(k)));
    } catch (const DomainError&) {
    }
  }
  return out;
}

struct EnumerateOpts {
  std::string kind = "words";
  int n = 0;
  std::string format = "plain";
  bool with_stats = false;
};

int cmd_enumerate(const EnumerateOpts& o, int ceiling, std::ostream& out) {
  if (o.n < 0) throw DomainError("--n must be nonnegative");
  std::size_t index = 0;
  bool header = false;
  auto emit = [&](const std::string& value, const Word& w) {
    ++index;
    if (o.format == "plain") {
      out << value;
      if (o.with_stats) {
        for (const auto& [name, v] : word_stats(w)) out << ' ' << name << '=' << v;
      }
      out << '\n';
    } else if (o.format == "json") {
      json j{{"index", index}, {"value", value}};
      if (o.with_stats) {
        json s = json::object();
        for (const auto& [name, v] : word_stats(w)) s[name] = v;
        j["stats"] = s;
      }
      out << j.dump() << '\n';
    } else {
      if (!header) {
        std::vector<std::string> h{"index", "value"};
        if (o.with_stats) {
          for (StatKind k : kAllStatKinds) h.push_back(stat_name(k));
        }
        out << csv_row(h) << '\n';
        header = true;
      }
      std::vector<std::string> row{std::to_string(index), value};
      if (o.with_stats) {
        std::map<std::string, std::size_t> s;
        for (const auto& [name, v] : word_stats(w)) s[name] = v;
        for (StatKind k : kAllStatKinds) {
          const auto it = s.find(stat_name(k));
          row.push_back(it == s.end() ? "" : std::to_string(it->second));
        }
      }
      out << csv_row(row) << '\n';
    }
  };
  if (o.kind == "words") {
    for_each_catalan(o.n, [&](const Word& w) { emit(w.to_string(), w); }, ceiling);
  } else {
    for_each_dyck(o.n, [&](const Path& p) { emit(p.to_string(), iota_inv(p)); }, ceiling);
  }
  return kExitOk;
}

struct TotalsRow {
  int n;
  std::string stat;
  Count brute;
  Count closed;
  bool match;
};

void print_totals(const std::vector<TotalsRow>& rows, const std::string& format,
                  std::ostream& out) {
  if (format == "csv") {
    out << "n,stat,brute,closed,match\n";
    for (const auto& r : rows) {
      out << csv_row({std::to_string(r.n), r.stat, r.brute.get_str(), r.closed.get_str(),
                      bool_str(r.match)})
          << '\n';
    }
  } else if (format == "json") {
    for (const auto& r : rows) {
      out << json{{"n", r.n},
                  {"stat", r.stat},
                  {"brute", json_count(r.brute)},
                  {"closed", json_count(r.closed)},
                  {"match", r.match}}
                 .dump()
          << '\n';
    }
  } else {
    out << "n stat brute closed match\n";
    for (const auto& r : rows) {
      out << r.n << ' ' << r.stat << ' ' << r.brute << ' ' << r.closed << ' '
          << bool_str(r.match) << '\n';
    }
  }
}

// Re-checks a CSV written by `totals --format csv`.
int recheck_totals_csv(const std::string& file, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open '" + file + "'");
  std::string line;
  if (!std::getline(in, line) || parse_csv_row(line) !=
                                     std::vector<std::string>{"n", "stat", "brute", "closed",
                                                              "match"}) {
    throw DomainError("'" + file + "' is not a totals CSV");
  }
  std::size_t rows = 0;
  std::size_t mismatches = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = parse_csv_row(line);
    if (f.size() != 5) throw DomainError("malformed totals row: " + line);
    Count brute;
    Count closed;
    if (brute.set_str(f[2], 10) != 0 || closed.set_str(f[3], 10) != 0) {
      throw DomainError("malformed totals row: " + line);
    }
    const bool match = brute == closed;
    if (bool_str(match) != f[4]) {
      err << "row n=" << f[0] << " stat=" << f[1] << " has match flag " << f[4]
          << " but the values say " << bool_str(match) << '\n';
    }
    if (!match || f[4] != "true") ++mismatches;
    ++rows;
  }
  out << rows << " rows, " << mismatches << " mismatches\n";
  return mismatches ? kExitMismatch : kExitOk;
}

struct TotalsOpts {
  int n_max = 0;
  std::vector<std::string> stats;
  std::string format = "plain";
  unsigned parallel = 1;
  std::string from_csv;
};

int cmd_totals(const TotalsOpts& o, int ceiling, std::ostream& out, std::ostream& err) {
  if (!o.from_csv.empty()) return recheck_totals_csv(o.from_csv, out, err);
  if (o.n_max > ceiling) {
    throw LimitError("totals refused for n-max " + std::to_string(o.n_max), ceiling);
  }
  const auto stats = parse_stats(o.stats);
  std::vector<TotalsRow> rows;
  bool all = true;
  for (int n = 1; n <= o.n_max; ++n) {
    for (const auto& s : stats) {
      Count brute = o.parallel > 1 ? brute_total_parallel(n, s, o.parallel, ceiling)
                                   : brute_total(n, s, ceiling);
      Count closed = closed_total(n, s);
      const bool match = brute == closed;
      all = all && match;
      rows.push_back({n, stat_name(s), std::move(brute), std::move(closed), match});
    }
  }
  print_totals(rows, o.format, out);
  return all ? kExitOk : kExitMismatch;
}

struct VerifyOpts {
  std::string suite = "all";
  std::optional<int> n_max;
  bool timing = false;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  using Fn = VerifyReport (*)(int);
  const std::vector<std::tuple<std::string, Fn, int>> suites{
      {"bijections", verify_bijections, kBijectionsCap},
      {"transport", verify_transport, kTransportCap},
      {"distributions", verify_distributions, kDistributionsCap},
      {"identities", verify_identities, kIdentitiesCap},
  };
  bool all = true;
  for (const auto& [name, fn, cap] : suites) {
    if (o.suite != "all" && o.suite != name) continue;
    const VerifyReport r = fn(o.n_max.value_or(cap));
    r.print(out, o.timing);
    all = all && r.passed();
  }
  return all ? kExitOk : kExitMismatch;
}

struct OeisOpts {
  std::string id;
  std::string stat;
  int offset = 1;
  std::optional<int> oeis_offset;
  int terms = 10;
  std::string indexing = "n";
  std::string check;
};

int cmd_oeis(const OeisOpts& o, std::ostream& out, std::ostream& err) {
  const OeisBinding b = [&] {
    if (!o.id.empty()) {
      const OeisBinding& found = find_binding(o.id);
      if (!o.stat.empty() && !(parse_stat(o.stat) == found.stat)) {
        throw DomainError(o.id + " is bound to " + stat_name(found.stat) + ", not " + o.stat);
      }
      return found;
    }
    if (o.stat.empty()) throw DomainError("oeis needs --id or --stat");
    const StatId s = parse_stat(o.stat);
    if (const auto builtin = binding_for(s)) return *builtin;
    return OeisBinding{"", s, o.offset, o.oeis_offset.value_or(o.offset)};
  }();
  const auto indexing = o.indexing == "oeis" ? OeisIndexing::Oeis : OeisIndexing::N;
  const auto terms = oeis_terms(b, o.terms, indexing);
  if (o.check.empty()) {
    write_bfile(out, terms);
    return kExitOk;
  }
  std::ifstream in(o.check);
  if (!in) throw DomainError("cannot open '" + o.check + "'");
  const auto theirs = read_bfile(in);
  // b-file indices are OEIS indices; shift them onto the emitted indexing.
  const long shift = indexing == OeisIndexing::Oeis ? 0 : b.offset - b.oeis_offset;
  const auto cmp = compare_bfile(terms, theirs, shift);
  const std::string label = b.id.empty() ? stat_name(b.stat) : b.id;
  if (cmp.matched()) {
    out << label << ": " << cmp.compared << " terms match " << o.check << '\n';
    return kExitOk;
  }
  out << label << ": first divergence after " << cmp.compared << " matching terms: " << cmp.detail
      << '\n';
  err << "b-file check failed\n";
  return kExitMismatch;
}

struct DistributionOpts {
  std::string stat;
  int n = 1;
  std::string format = "plain";
};

int cmd_distribution(const DistributionOpts& o, int ceiling, std::ostream& out) {
  const StatId s = parse_stat(o.stat);
  std::map<std::size_t, std::size_t> hist;
  for_each_catalan(o.n, [&](const Word& w) { ++hist[stat_value(w, s)]; }, ceiling);
  const bool narayana_col =
      (s.kind == StatKind::RunsAsc || s.kind == StatKind::RunsWeakDesc) && o.n >= 1;
  bool all = true;
  if (o.format == "csv") {
    out << (narayana_col ? "value,count,narayana,match\n" : "value,count\n");
  } else if (o.format == "plain") {
    out << (narayana_col ? "value count narayana match\n" : "value count\n");
  }
  for (const auto& [k, c] : hist) {
    std::optional<Count> nar;
    if (narayana_col) {
      nar = narayana(o.n, static_cast<long>(k));
      all = all && *nar == make_count(c);
    }
    if (o.format == "json") {
      json j{{"value", k}, {"count", c}};
      if (nar) {
        j["narayana"] = json_count(*nar);
        j["match"] = *nar == make_count(c);
      }
      out << j.dump() << '\n';
    } else {
      const char sep = o.format == "csv" ? ',' : ' ';
      out << k << sep << c;
      if (nar) out << sep << *nar << sep << bool_str(*nar == make_count(c));
      out << '\n';
    }
  }
  if (narayana_col) {
    // Every Narayana bucket must be present, including ones the words missed.
    for (long k = 1; k <= o.n; ++k) {
      all = all && hist.count(static_cast<std::size_t>(k)) == 1;
    }
  }
  return all ? kExitOk : kExitMismatch;
}

struct SampleOpts {
  int n = 0;
  std::optional<std::uint64_t> seed;
  int count = 1;
};

int cmd_sample(const SampleOpts& o, int ceiling, std::ostream& out) {
  if (o.n > ceiling) throw LimitError("sample refused for n " + std::to_string(o.n), ceiling);
  if (o.count < 0) throw DomainError("--count must be nonnegative");
  std::mt19937_64 rng(*o.seed);
  for (int i = 0; i < o.count; ++i) out << uniform_dyck_sample(o.n, rng).to_string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Catalan word and Dyck path statistics lab", "catalan-lab"};
  app.require_subcommand(1);
  std::optional<int> max_n;
  app.add_option("--max-n", max_n, "Enumeration ceiling (overrides " + std::string(kMaxNEnv) + ")");

  const std::vector<std::string> formats{"plain", "json", "csv"};

  EnumerateOpts eo;
  auto* enumerate = app.add_subcommand("enumerate", "List C_n or D_n in lexicographic order");
  enumerate->add_option("--kind", eo.kind)->check(CLI::IsMember({"words", "paths"}));
  enumerate->add_option("--n", eo.n)->required();
  enumerate->add_option("--format", eo.format)->check(CLI::IsMember(formats));
  enumerate->add_flag("--with-stats", eo.with_stats, "Attach every statistic of the word");

  TotalsOpts to;
  auto* totals = app.add_subcommand("totals", "Brute-force totals against the closed forms");
  auto* n_max_opt = totals->add_option("--n-max", to.n_max);
  totals->add_option("--stat", to.stats, "Statistic (repeatable; default all)");
  totals->add_option("--format", to.format)->check(CLI::IsMember(formats));
  totals->add_option("--parallel", to.parallel, "Worker threads")->check(CLI::PositiveNumber);
  auto* from_csv = totals->add_option("--from-csv", to.from_csv, "Re-check a totals CSV");
  n_max_opt->excludes(from_csv);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", vo.suite);
  verify->add_option("--n-max", vo.n_max);
  verify->add_flag("--timing", vo.timing);

  OeisOpts oo;
  auto* oeis = app.add_subcommand("oeis", "Emit or check OEIS b-file terms");
  oeis->add_option("--id", oo.id, "Built-in A-number");
  oeis->add_option("--stat", oo.stat, "Statistic (custom binding when no id is known)");
  oeis->add_option("--offset", oo.offset, "First n of a custom binding");
  oeis->add_option("--oeis-offset", oo.oeis_offset, "OEIS index of the first term (custom)");
  oeis->add_option("--terms", oo.terms);
  oeis->add_option("--indexing", oo.indexing)->check(CLI::IsMember({"n", "oeis"}));
  oeis->add_option("--check", oo.check, "b-file to compare against");

  DistributionOpts dopt;
  auto* distribution = app.add_subcommand("distribution", "Histogram of a statistic over C_n");
  distribution->add_option("--stat", dopt.stat)->required();
  distribution->add_option("--n", dopt.n)->required();
  distribution->add_option("--format", dopt.format)->check(CLI::IsMember(formats));

  SampleOpts so;
  auto* sample = app.add_subcommand("sample", "Uniform random Dyck paths");
  sample->add_option("--n", so.n)->required();
  sample->add_option("--seed", so.seed)->required();
  sample->add_option("--count", so.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const int ceiling = resolve_ceiling(max_n);
    if (*enumerate) return cmd_enumerate(eo, ceiling, out);
    if (*totals) {
      if (to.from_csv.empty() && n_max_opt->count() == 0) {
        throw DomainError("totals needs --n-max or --from-csv");
      }
      return cmd_totals(to, ceiling, out, err);
    }
    if (*verify) {
      if (vo.suite != "all" && vo.suite != "bijections" && vo.suite != "transport" &&
          vo.suite != "distributions" && vo.suite != "identities") {
        err << "unknown suite '" << vo.suite << "'\n";
        return kExitUsage;
      }
      return cmd_verify(vo, out);
    }
    if (*oeis) return cmd_oeis(oo, out, err);
    if (*distribution) return cmd_distribution(dopt, ceiling, out);
    if (*sample) return cmd_sample(so, ceiling, out);
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("catalan-lab");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace catalan_lab
