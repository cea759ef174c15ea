// Copyright 2026 The binmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The `binmat` command line. run() is the whole program; tools/binmat.cpp
// only forwards argv and the standard streams.
//
// Data goes to `out` (or to --output), diagnostics and progress to `err`.
// Exit codes: 0 success, 1 an identity failed to verify, 2 usage error,
// 3 enumeration cap or size limit exceeded.

#ifndef BINMAT_CLI_HPP_
#define BINMAT_CLI_HPP_

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "binmat/errors.hpp"
#include "binmat/euler.hpp"
#include "binmat/exact.hpp"
#include "binmat/grassmann.hpp"
#include "binmat/io.hpp"
#include "binmat/matroid.hpp"

namespace binmat::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapExceeded = 3 };

inline constexpr const char* kCapEnv = "BINMAT_CAP";

inline std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument(std::string("invalid ") + what + ": '" + s + "'");
  }
  return v;
}

inline std::uint64_t default_cap() {
  const char* env = std::getenv(kCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  const std::uint64_t cap = parse_u64(env, kCapEnv);
  if (cap < 1) throw InvalidArgument(std::string(kCapEnv) + " must be >= 1");
  return cap;
}

// Accepts "5", "3..7", "{3..7}" and "3,4,5"; result is sorted and unique.
inline std::vector<int> parse_n_values(const std::vector<std::string>& args) {
  std::vector<int> out;
  auto to_int = [](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidArgument("invalid n value '" + std::string(s) + "'");
    }
    return v;
  };
  for (std::string arg : args) {
    if (!arg.empty() && arg.front() == '{' && arg.back() == '}') arg = arg.substr(1, arg.size() - 2);
    std::stringstream parts(arg);
    std::string part;
    while (std::getline(parts, part, ',')) {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(to_int(part));
        continue;
      }
      const int lo = to_int(std::string_view(part).substr(0, dots));
      const int hi = to_int(std::string_view(part).substr(dots + 2));
      if (hi < lo) throw InvalidArgument("empty n range '" + part + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      while (q % d == 0) q /= d;
      return q == 1;
    }
  }
  return true;
}

namespace detail {

struct Common {
  std::string format = "text";
  std::string output;
  std::uint64_t cap = kDefaultEnumerationCap;
  int jobs = 1;
  bool quiet = false;

  EnumerationOptions options() const { return {cap, jobs}; }
};

inline void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output,-o", c.output, "Write data to this file instead of stdout");
  cmd->add_option("--cap", c.cap, "Maximum number of Grassmannian points to enumerate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs,-j", c.jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--quiet", c.quiet, "Suppress progress messages");
}

inline void warn_prime_power(long long q, std::ostream& err) {
  if (!is_prime_power(q)) {
    err << "warning: q=" << q
        << " is not a prime power; the counts are plain arithmetic with no field behind them\n";
  }
}

inline void require_prime(long long p, const char* what) {
  if (!PrimeField::is_prime(p) || p > PrimeField::kMaxPrime) {
    throw InvalidArgument(std::string(what) + " requires a prime p <= 31, got " +
                          std::to_string(p));
  }
}

// --- chi ------------------------------------------------------------------

struct ChiArgs {
  long long q = 2;
  int r = 0;
  std::string method = "closed";
  bool all_methods = false;
  std::optional<int> n_max;
};

inline ChiReport chi_by(const std::string& method, const ChiArgs& a, const Common& c) {
  if (method == "closed") return chi_closed_report(a.q, a.r);
  if (method == "counts") return chi_via_counts(a.q, a.r);
  if (a.q == 2 && !a.n_max) return chi_enumerated(a.r);
  require_prime(a.q, "chi --method enum");
  return chi_p_partial(static_cast<int>(a.q), a.r,
                       a.n_max.value_or(static_cast<int>(projective_bound(static_cast<int>(a.q), a.r))),
                       c.options());
}

inline int run_chi(const ChiArgs& a, const Common& c, std::ostream& data, std::ostream& err) {
  if (a.r < 1) throw InvalidArgument("--r must be >= 1");
  warn_prime_power(a.q, err);
  std::vector<std::string> methods;
  if (a.all_methods) {
    methods = {"enum", "counts", "closed"};
    if (a.q != 2 && !PrimeField::is_prime(a.q)) methods.erase(methods.begin());
  } else {
    methods = {a.method};
  }
  std::vector<ChiReport> reports;
  for (const auto& m : methods) {
    if (!c.quiet) err << "[chi] method " << m << " q=" << a.q << " r=" << a.r << '\n';
    reports.push_back(chi_by(m, a, c));
  }
  // Over F_p with p != 2 the class sum is a different quantity from the
  // product formula, and a partial sum carries no claim; neither is compared.
  auto compared = [](const ChiReport& rep) {
    return !rep.partial && (rep.method != ChiMethod::kEnumerated || rep.q == 2);
  };
  bool agree = true;
  const ChiReport* anchor = nullptr;
  for (const auto& rep : reports) {
    if (!compared(rep)) continue;
    if (anchor == nullptr) anchor = &rep;
    agree = agree && rep.total == anchor->total;
  }

  if (c.format == "json") {
    if (reports.size() == 1) {
      data << io::to_json(reports.front()).dump(2) << '\n';
    } else {
      io::Json arr = io::Json::array();
      for (const auto& rep : reports) arr.push_back(io::to_json(rep));
      data << io::Json{{"reports", arr}, {"agree", agree}}.dump(2) << '\n';
    }
  } else if (c.format == "csv") {
    bool header = true;
    for (const auto& rep : reports) {
      io::write_csv(data, rep, header);
      header = false;
    }
  } else if (reports.size() == 1) {
    const ChiReport& rep = reports.front();
    data << "q=" << rep.q << " r=" << rep.r << " method=" << to_string(rep.method)
         << (rep.partial ? " (partial)" : "") << '\n';
    for (const ChiTerm& t : rep.terms) {
      data << "  n=" << t.n << " count=" << io::detail::count_string(rep, t.count)
           << " term=" << t.term << '\n';
    }
    data << "total " << rep.total << '\n';
  } else {
    data << "q=" << a.q << " r=" << a.r << '\n';
    for (const auto& rep : reports) {
      data << to_string(rep.method) << ' ' << rep.total;
      if (rep.partial) {
        data << " (partial)";
      } else if (!compared(rep)) {
        data << " (F_" << rep.q << "-realizable classes, not compared)";
      }
      data << '\n';
    }
    data << (agree ? "agree" : "DISAGREE") << '\n';
  }
  if (!agree) {
    for (const auto& rep : reports) {
      err << "mismatch: " << to_string(rep.method) << " = " << rep.total << '\n';
    }
    return kVerifyFailed;
  }
  return kOk;
}

// --- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  int r = 0;
  std::vector<std::string> n;
  int p = 2;
};

inline int run_enumerate(const EnumerateArgs& a, const Common& c, std::ostream& data,
                         std::ostream& err) {
  if (a.r < 1) throw InvalidArgument("--r must be >= 1");
  require_prime(a.p, "enumerate");
  const std::vector<int> ns = parse_n_values(a.n);
  struct Block {
    int n;
    std::vector<IsoClass> classes;
    std::vector<BigInt> observed;
  };
  std::vector<Block> blocks;
  for (int n : ns) {
    if (!c.quiet) err << "[enumerate] p=" << a.p << " r=" << a.r << " n=" << n << '\n';
    Block b{n, {}, {}};
    if (a.p == 2) {
      b.classes = enumerate_binary_classes(a.r, n);
    } else {
      for (auto& rc : enumerate_realizable_classes(a.p, a.r, n, c.options())) {
        b.classes.push_back(std::move(rc.iso));
        b.observed.push_back(rc.labeled_observed);
      }
    }
    blocks.push_back(std::move(b));
  }

  std::size_t total = 0;
  for (const auto& b : blocks) total += b.classes.size();
  if (c.format == "json") {
    io::Json arr = io::Json::array();
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.classes.size(); ++i) {
        io::Json j = io::to_json(b.classes[i], static_cast<int>(i) + 1);
        j["p"] = a.p;
        arr.push_back(std::move(j));
      }
    }
    data << io::Json{{"p", a.p}, {"r", a.r}, {"num_classes", total}, {"classes", arr}}.dump(2)
         << '\n';
  } else if (c.format == "csv") {
    io::write_csv_header_classes(data);
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.classes.size(); ++i) {
        io::write_csv_row(data, b.classes[i], static_cast<int>(i) + 1);
      }
    }
  } else {
    for (const auto& b : blocks) {
      data << "r=" << a.r << " n=" << b.n << " classes=" << b.classes.size() << '\n';
      for (std::size_t i = 0; i < b.classes.size(); ++i) {
        const IsoClass& cls = b.classes[i];
        data << "  class " << i + 1 << ": aut_order=" << cls.aut_order
             << " labeled_count=" << cls.labeled_count
             << " num_bases=" << cls.representative.num_bases() << '\n';
      }
    }
    data << "total classes " << total << '\n';
  }
  return kOk;
}

// --- count-grdc -----------------------------------------------------------

struct CountArgs {
  int r = 0;
  std::vector<std::string> n;
  long long q = 2;
  std::string method = "both";
};

inline int run_count(const CountArgs& a, const Common& c, std::ostream& data, std::ostream& err) {
  if (a.r < 1) throw InvalidArgument("--r must be >= 1");
  const bool brute = a.method != "recursive";
  const bool recursive = a.method != "brute";
  if (brute) require_prime(a.q, "brute-force counting");
  warn_prime_power(a.q, err);

  CountTable rec{a.q, a.r, {}};
  CountTable bf{a.q, a.r, {}};
  if (a.n.empty()) {
    if (brute) throw InvalidArgument("brute-force counting needs --n");
    rec = grdc_count_table(a.r, a.q);
  } else {
    for (int n : parse_n_values(a.n)) {
      if (!c.quiet) err << "[count-grdc] q=" << a.q << " r=" << a.r << " n=" << n << '\n';
      if (recursive) rec.entries.emplace(n, grdc_count_recursive(a.r, n, a.q));
      if (brute) {
        bf.entries.emplace(n, grdc_bruteforce_count(a.r, n, static_cast<int>(a.q), c.options()));
      }
    }
  }

  bool agree = true;
  if (brute && recursive) {
    for (const auto& [n, v] : bf.entries) agree = agree && rec.entries.at(n) == v;
  }

  if (brute && recursive) {
    if (c.format == "json") {
      io::Json counts = io::Json::array();
      for (const auto& [n, v] : bf.entries) {
        counts.push_back({{"n", n}, {"brute", v.str()}, {"recursive", rec.entries.at(n).str()}});
      }
      data << io::Json{{"q", a.q}, {"r", a.r}, {"counts", counts}, {"agree", agree}}.dump(2)
           << '\n';
    } else if (c.format == "csv") {
      data << "q,r,n,brute,recursive\n";
      for (const auto& [n, v] : bf.entries) {
        data << a.q << ',' << a.r << ',' << n << ',' << v << ',' << rec.entries.at(n) << '\n';
      }
    } else {
      for (const auto& [n, v] : bf.entries) {
        data << "q=" << a.q << " r=" << a.r << " n=" << n << '\n'
             << "brute " << v << '\n'
             << "recursive " << rec.entries.at(n) << '\n';
      }
      data << (agree ? "agree" : "DISAGREE") << '\n';
    }
  } else {
    const CountTable& t = brute ? bf : rec;
    if (c.format == "json") {
      io::Json j = io::to_json(t);
      j["method"] = a.method;
      data << j.dump(2) << '\n';
    } else if (c.format == "csv") {
      io::write_csv(data, t);
    } else {
      for (const auto& [n, v] : t.entries) {
        data << "q=" << a.q << " r=" << a.r << " n=" << n << ' ' << a.method << ' ' << v << '\n';
      }
    }
  }
  if (!agree) {
    for (const auto& [n, v] : bf.entries) {
      if (rec.entries.at(n) != v) {
        err << "mismatch at n=" << n << ": brute " << v << " recursive " << rec.entries.at(n)
            << '\n';
      }
    }
    return kVerifyFailed;
  }
  return kOk;
}

// --- stratum --------------------------------------------------------------

struct StratumArgs {
  int p = 2;
  std::string matroid_path;
};

inline int run_stratum(const StratumArgs& a, const Common& c, std::ostream& data,
                       std::ostream& err) {
  require_prime(a.p, "stratum");
  std::ifstream in(a.matroid_path);
  if (!in) throw InvalidArgument("cannot open matroid file '" + a.matroid_path + "'");
  io::Json j;
  try {
    in >> j;
  } catch (const io::Json::exception& e) {
    throw ParseError(std::string("bad JSON in '") + a.matroid_path + "': " + e.what());
  }
  const Matroid m = io::matroid_from_json(j);
  if (!c.quiet) err << "[stratum] p=" << a.p << " r=" << m.r() << " n=" << m.n() << '\n';
  const BigInt count = stratum_count(m, a.p, c.options());
  if (c.format == "json") {
    data << io::Json{{"p", a.p}, {"matroid", io::to_json(m)}, {"count", count.str()}}.dump(2)
         << '\n';
  } else if (c.format == "csv") {
    data << "p,r,n,num_bases,count\n"
         << a.p << ',' << m.r() << ',' << m.n() << ',' << m.num_bases() << ',' << count << '\n';
  } else {
    data << "p=" << a.p << " r=" << m.r() << " n=" << m.n() << '\n' << "count " << count << '\n';
  }
  return kOk;
}

// --- table ----------------------------------------------------------------

inline int run_table(int r, const Common& c, std::ostream& data, std::ostream& err) {
  if (r < 1) throw InvalidArgument("--r must be >= 1");
  struct Row {
    int n;
    int class_index;
    BigInt aut;
    BigRat term;
    BigRat running;
  };
  std::vector<Row> rows;
  std::map<int, std::size_t> per_n;
  BigRat running = 0;
  for (int n = r; n <= (1 << std::min(r, kMaxBinaryClassRank)) - 1; ++n) {
    if (!c.quiet) err << "[table] r=" << r << " n=" << n << '\n';
    const auto classes = enumerate_binary_classes(r, n);
    per_n[n] = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const BigRat term = BigRat(BigInt(sign_pow(n)), classes[i].aut_order);
      running += term;
      rows.push_back({n, static_cast<int>(i) + 1, classes[i].aut_order, term, running});
    }
  }
  const BigRat closed = chi_closed(2, r);
  const bool ok = running == closed;

  if (c.format == "json") {
    io::Json arr = io::Json::array();
    for (const Row& row : rows) {
      arr.push_back({{"n", row.n},
                     {"class_index", row.class_index},
                     {"aut_order", row.aut.str()},
                     {"term", row.term.str()},
                     {"running_total", row.running.str()}});
    }
    data << io::Json{{"r", r},
                     {"num_classes", rows.size()},
                     {"rows", arr},
                     {"total", running.str()},
                     {"closed", closed.str()},
                     {"pass", ok}}
                .dump(2)
         << '\n';
  } else if (c.format == "csv") {
    data << "r,n,class_index,aut_order,term,running_total\n";
    for (const Row& row : rows) {
      data << r << ',' << row.n << ',' << row.class_index << ',' << row.aut << ',' << row.term
           << ',' << row.running << '\n';
    }
  } else {
    data << "r=" << r << '\n';
    for (const auto& [n, count] : per_n) {
      data << "n=" << n << " classes=" << count << " aut orders {";
      bool first = true;
      for (const Row& row : rows) {
        if (row.n != n) continue;
        data << (first ? "" : ", ") << row.aut;
        first = false;
      }
      data << "}\n";
      for (const Row& row : rows) {
        if (row.n == n) {
          data << "  class " << row.class_index << " term " << row.term << " running "
               << row.running << '\n';
        }
      }
    }
    data << "classes " << rows.size() << '\n'
         << "total " << running << '\n'
         << "closed " << closed << '\n'
         << (ok ? "agree" : "DISAGREE") << '\n';
  }
  if (!ok) {
    err << "mismatch: enumerated " << running << " closed " << closed << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::vector<long long> q;
  std::vector<int> r;
  std::vector<std::string> n;
};

struct Check {
  std::string suite;
  std::string label;
  std::string lhs;
  std::string rhs;
  bool pass;
};

template <typename T>
std::vector<T> pick(const std::vector<T>& requested, std::vector<T> defaults) {
  return requested.empty() ? defaults : requested;
}

inline bool n_allowed(const std::vector<int>& ns, int n) {
  return ns.empty() || std::binary_search(ns.begin(), ns.end(), n);
}

inline void suite_prop22(const VerifyArgs& a, const Common& c, std::vector<Check>& out,
                         std::ostream& err) {
  const std::vector<int> ns = parse_n_values(a.n);
  for (int r : pick(a.r, {1, 2, 3})) {
    const int top = std::min((1 << std::min(r, 5)) - 1, 7);
    for (int n = r; n <= top; ++n) {
      if (!n_allowed(ns, n)) continue;
      if (!c.quiet) err << "[verify] prop22 r=" << r << " n=" << n << '\n';
      const Prop22Report rep = verify_prop22(r, n, c.options());
      out.push_back({"prop22",
                     "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                         " classes=" + std::to_string(rep.num_classes) + " grdc=" + rep.grdc.str(),
                     rep.lhs.str(), rep.rhs.str(), rep.holds()});
    }
  }
}

inline void suite_thm31(const VerifyArgs& a, const Common& c, std::vector<Check>& out,
                        std::ostream& err) {
  for (long long q : pick(a.q, {2, 3, 4, 5, 7, 8, 9})) {
    warn_prime_power(q, err);
    for (int r : pick(a.r, {1, 2, 3})) {
      if (!c.quiet) err << "[verify] thm31 q=" << q << " r=" << r << '\n';
      const BigRat counts = chi_via_counts(q, r).total;
      const BigRat closed = chi_closed(q, r);
      out.push_back({"thm31", "q=" + std::to_string(q) + " r=" + std::to_string(r) + " via_counts",
                     counts.str(), closed.str(), counts == closed});
      if (q == 2 && r <= kMaxBinaryClassRank) {
        const BigRat enumerated = chi_enumerated(r).total;
        out.push_back({"thm31", "q=2 r=" + std::to_string(r) + " enumerated", enumerated.str(),
                       closed.str(), enumerated == closed});
      }
    }
  }
}

inline void suite_lemma32(const VerifyArgs& a, const Common& c, std::vector<Check>& out,
                          std::ostream& err) {
  for (long long q : pick(a.q, {2, 3})) {
    for (int r : pick(a.r, {0, 1, 2})) {
      if (!c.quiet) err << "[verify] lemma32 q=" << q << " r=" << r << '\n';
      const BigInt top = ipow(BigInt(q), r + 1) - 1;
      if (top > 4096) throw SizeLimit("lemma32 supports q^(r+1) <= 4097");
      for (long long k = 1; k <= static_cast<long long>(top); ++k) {
        const LemmaSides s = lemma_sum(q, r, k);
        std::string label = "q=" + std::to_string(q) + " r=" + std::to_string(r) +
                            " k=" + std::to_string(k);
        if (k < r) label += " (below stated range)";
        out.push_back({"lemma32", label, s.lhs.str(), s.rhs.str(), s.holds()});
      }
    }
  }
}

inline void suite_groth(const VerifyArgs& a, const Common& c, std::vector<Check>& out,
                        std::ostream& err) {
  const std::vector<int> ns = parse_n_values(a.n);
  for (long long p : pick(a.q, {2, 3})) {
    require_prime(p, "verify --suite groth");
    for (int r : pick(a.r, {2, 3})) {
      for (int n = r; n <= 8; ++n) {
        if (!n_allowed(ns, n)) continue;
        if (gaussian_binomial(r, n, p) > c.cap) {
          if (!c.quiet) err << "[verify] groth p=" << p << " r=" << r << " n=" << n
                            << " skipped, above cap\n";
          continue;
        }
        if (!c.quiet) err << "[verify] groth p=" << p << " r=" << r << " n=" << n << '\n';
        const BigInt rec = grdc_count_recursive(r, n, p);
        const BigInt bf = grdc_bruteforce_count(r, n, static_cast<int>(p), c.options());
        out.push_back({"groth",
                       "p=" + std::to_string(p) + " r=" + std::to_string(r) +
                           " n=" + std::to_string(n),
                       rec.str(), bf.str(), rec == bf});
      }
    }
  }
}

// Here --r is the rank of the enumerated Grassmannian (r+1 in Y_k terms).
inline void suite_yk(const VerifyArgs& a, const Common& c, std::vector<Check>& out,
                     std::ostream& err) {
  struct Case {
    int r_plus_1;
    int n;
    int p;
  };
  std::vector<Case> cases;
  if (a.q.empty() && a.r.empty() && a.n.empty()) {
    cases = {{2, 3, 2}, {2, 4, 3}, {3, 5, 2}};
  } else {
    const std::vector<int> ns = parse_n_values(a.n);
    for (long long p : pick(a.q, {2})) {
      for (int r1 : pick(a.r, {2})) {
        for (int n : ns.empty() ? std::vector<int>{r1 + 1} : ns) {
          cases.push_back({r1, n, static_cast<int>(p)});
        }
      }
    }
  }
  for (const Case& cs : cases) {
    require_prime(cs.p, "verify --suite yk");
    if (!c.quiet) {
      err << "[verify] yk r+1=" << cs.r_plus_1 << " n=" << cs.n << " p=" << cs.p << '\n';
    }
    const auto got = yk_partition(cs.r_plus_1, cs.n, cs.p, c.options());
    const auto want = yk_expected(cs.r_plus_1, cs.n, cs.p, c.options());
    const std::string base = "r+1=" + std::to_string(cs.r_plus_1) + " n=" + std::to_string(cs.n) +
                             " p=" + std::to_string(cs.p);
    BigInt sum = 0;
    for (const auto& [k, v] : got) {
      sum += v;
      out.push_back({"yk", base + " k=" + std::to_string(k), v.str(), want.at(k).str(),
                     v == want.at(k)});
    }
    const BigInt whole = grdc_bruteforce_count(cs.r_plus_1, cs.n, cs.p, c.options());
    out.push_back({"yk", base + " sum", sum.str(), whole.str(), sum == whole});
  }
}

inline void suite_beta(const VerifyArgs& a, const Common& c, std::vector<Check>& out,
                       std::ostream& err) {
  for (int r : pick(a.r, {1, 2, 3})) {
    if (!c.quiet) err << "[verify] beta r=" << r << '\n';
    const BetaReport rep = verify_beta_relation(r);
    out.push_back({"beta",
                   "r=" + std::to_string(r) + " beta=" + rep.beta.str() +
                       " chi'(1)=" + rep.beta_raw.str() + " chi=" + rep.chi.str(),
                   rep.product.str(), BigRat(rep.expected).str(), rep.holds()});
  }
}

inline int run_verify(const VerifyArgs& a, const Common& c, std::ostream& data,
                      std::ostream& err) {
  using Suite = void (*)(const VerifyArgs&, const Common&, std::vector<Check>&, std::ostream&);
  const std::vector<std::pair<std::string, Suite>> suites = {
      {"prop22", suite_prop22}, {"thm31", suite_thm31}, {"lemma32", suite_lemma32},
      {"groth", suite_groth},   {"yk", suite_yk},       {"beta", suite_beta}};
  std::vector<Check> checks;
  for (const auto& [name, fn] : suites) {
    if (a.suite == "all" || a.suite == name) fn(a, c, checks, err);
  }
  std::size_t failed = 0;
  for (const Check& ch : checks) failed += ch.pass ? 0 : 1;

  if (c.format == "json") {
    io::Json arr = io::Json::array();
    for (const Check& ch : checks) {
      arr.push_back({{"suite", ch.suite},
                     {"case", ch.label},
                     {"lhs", ch.lhs},
                     {"rhs", ch.rhs},
                     {"pass", ch.pass}});
    }
    data << io::Json{{"suite", a.suite},
                     {"checks", arr},
                     {"total", checks.size()},
                     {"failed", failed}}
                .dump(2)
         << '\n';
  } else if (c.format == "csv") {
    data << "suite,case,lhs,rhs,pass\n";
    for (const Check& ch : checks) {
      data << ch.suite << ",\"" << ch.label << "\"," << ch.lhs << ',' << ch.rhs << ','
           << (ch.pass ? "true" : "false") << '\n';
    }
  } else {
    for (const Check& ch : checks) {
      data << (ch.pass ? "PASS " : "FAIL ") << ch.suite << ' ' << ch.label << " lhs=" << ch.lhs
           << " rhs=" << ch.rhs << '\n';
    }
    data << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  }
  for (const Check& ch : checks) {
    if (!ch.pass) {
      err << "FAIL " << ch.suite << ' ' << ch.label << "\n  lhs: " << ch.lhs
          << "\n  rhs: " << ch.rhs << '\n';
    }
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple binary matroids and their virtual Euler characteristic", "binmat"};
  app.require_subcommand(1);

  detail::Common common;
  try {
    common.cap = default_cap();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  detail::ChiArgs chi_args;
  auto* chi = app.add_subcommand("chi", "Virtual Euler characteristic chi(B_q(r))");
  chi->add_option("--q", chi_args.q, "Field size")->check(CLI::Range(2LL, 1LL << 20));
  chi->add_option("--r", chi_args.r, "Rank")->required();
  chi->add_option("--method", chi_args.method, "enum, counts or closed")
      ->check(CLI::IsMember({"enum", "counts", "closed"}));
  chi->add_flag("--all-methods", chi_args.all_methods, "Run every method and compare totals");
  chi->add_option("--n-max", chi_args.n_max, "Truncate an enumerated sum over F_p at this n");
  detail::add_common(chi, common);

  detail::EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes of simple matroids");
  enumerate->add_option("--r", enum_args.r, "Rank")->required();
  enumerate->add_option("--n", enum_args.n, "Ground-set sizes, e.g. 5, 3..7 or 3,4")
      ->required()
      ->expected(1, -1);
  enumerate->add_option("--p", enum_args.p, "Prime field");
  detail::add_common(enumerate, common);

  detail::CountArgs count_args;
  auto* count = app.add_subcommand("count-grdc", "Points of the distinct-column locus");
  count->add_option("--r", count_args.r, "Rank")->required();
  count->add_option("--n", count_args.n, "Ground-set sizes; omit for the whole support")
      ->expected(1, -1);
  count->add_option("--q", count_args.q, "Field size")->check(CLI::Range(2LL, 1LL << 20));
  count->add_option("--method", count_args.method, "brute, recursive or both")
      ->check(CLI::IsMember({"brute", "recursive", "both"}));
  detail::add_common(count, common);

  detail::StratumArgs stratum_args;
  auto* stratum = app.add_subcommand("stratum", "Points of Gr(r, n; F_p) realizing a matroid");
  stratum->add_option("--p", stratum_args.p, "Prime field");
  stratum->add_option("--matroid", stratum_args.matroid_path, "Matroid JSON file")->required();
  detail::add_common(stratum, common);

  int table_r = 0;
  auto* table = app.add_subcommand("table", "Per-class table of the binary rank-r sum");
  table->add_option("--r", table_r, "Rank")->required();
  detail::add_common(table, common);

  detail::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exact verification suites");
  verify->add_option("--suite", verify_args.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "prop22", "thm31", "lemma32", "groth", "yk", "beta"}));
  verify->add_option("--q,--p", verify_args.q, "Restrict q (or p)")->expected(1, -1);
  verify->add_option("--r", verify_args.r, "Restrict r")->expected(1, -1);
  verify->add_option("--n", verify_args.n, "Restrict n")->expected(1, -1);
  detail::add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::ostringstream data;
    int code = kOk;
    if (*chi) {
      code = detail::run_chi(chi_args, common, data, err);
    } else if (*enumerate) {
      code = detail::run_enumerate(enum_args, common, data, err);
    } else if (*count) {
      code = detail::run_count(count_args, common, data, err);
    } else if (*stratum) {
      code = detail::run_stratum(stratum_args, common, data, err);
    } else if (*table) {
      code = detail::run_table(table_r, common, data, err);
    } else if (*verify) {
      code = detail::run_verify(verify_args, common, data, err);
    }
    if (common.output.empty()) {
      out << data.str();
    } else {
      std::ofstream file(common.output, std::ios::binary);
      if (!file || !(file << data.str())) {
        err << "error: cannot write '" << common.output << "'\n";
        return kUsage;
      }
    }
    return code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const SizeLimit& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace binmat::cli

#endif  // BINMAT_CLI_HPP_
