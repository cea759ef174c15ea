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

// Acceptance run: one PASS/FAIL line per numbered criterion, each with its
// own runtime budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binmat/cli.hpp"
#include "binmat/euler.hpp"
#include "binmat/gf.hpp"
#include "binmat/grassmann.hpp"
#include "binmat/matroid.hpp"

namespace {

using namespace binmat;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string cli_out(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "binmat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

// 1. Rank-3 table: classes, automorphism orders and chi(B(3)).
Outcome rank_three_table() {
  Outcome o;
  int code = 0;
  const std::string csv = cli_out({"enumerate", "--r", "3", "--n", "{3..7}", "--format", "csv", "--quiet"}, code);
  o.require(code == 0, "enumerate exit code " + std::to_string(code));
  std::map<int, std::multiset<std::string>> auts;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::size_t classes = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> f;
    std::stringstream fields(line);
    for (std::string x; std::getline(fields, x, ',');) f.push_back(x);
    auts[std::stoi(f[1])].insert(f[3]);
    ++classes;
  }
  const std::map<int, std::multiset<std::string>> want = {
      {3, {"6"}}, {4, {"24", "6"}}, {5, {"8"}}, {6, {"24"}}, {7, {"168"}}};
  o.require(auts == want, "automorphism orders by n");
  const std::string chi = cli_out({"chi", "--q", "2", "--r", "3", "--method", "enum", "--quiet"}, code);
  o.require(code == 0 && chi.find("total -1/21\n") != std::string::npos, "chi enum = -1/21");
  o.note("aut orders {6} {24,6} {8} {24} {168}");
  o.note("chi(B(3)) = " + chi_enumerated(3).total.str());
  o.note("computed " + std::to_string(classes) + " classes vs a published count of 7 (known discrepancy)");
  o.require(classes == 6, "six classes");
  return o;
}

// 2. Enumerated chi(B(4)) against the closed product.
Outcome rank_four() {
  Outcome o;
  const ChiReport rep = chi_enumerated(4);
  const BigRat closed = chi_closed(2, 4);
  std::size_t classes = 0;
  for (int n = 4; n <= 15; ++n) classes += binary_subset_orbits(4, n).size();
  o.require(rep.total == closed, "enumerated " + rep.total.str() + " vs closed " + closed.str());
  o.require(closed == BigRat::parse("1/315"), "closed = 1/315");
  o.note("enumerated " + rep.total.str() + " = closed " + closed.str() + " over " +
         std::to_string(classes) + " classes");
  return o;
}

// 3. Point-count route against the product formula.
Outcome counts_vs_closed() {
  Outcome o;
  int cases = 0;
  for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int r = 1; r <= 3; ++r) {
      const BigRat lhs = chi_via_counts(q, r).total;
      const BigRat rhs = chi_closed(q, r);
      o.require(lhs == rhs, "q=" + std::to_string(q) + " r=" + std::to_string(r) + ": " +
                                lhs.str() + " vs " + rhs.str());
      ++cases;
    }
  }
  o.note(std::to_string(cases) + " (q, r) pairs exact, e.g. q=9 r=3 " + chi_closed(9, 3).str());
  return o;
}

// 4. Class sums against brute-force Grassmannian counts over F_2.
Outcome prop22() {
  Outcome o;
  int cases = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= std::min((1 << r) - 1, 7); ++n) {
      const Prop22Report rep = verify_prop22(r, n);
      o.require(rep.holds(), "r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " +
                                 rep.lhs.str() + " vs " + rep.rhs.str());
      ++cases;
    }
  }
  o.note(std::to_string(cases) + " (r, n) pairs");
  return o;
}

// 5. Recursive counts against brute force.
Outcome recursion_vs_brute() {
  Outcome o;
  int cases = 0;
  for (int p : {2, 3}) {
    for (int r = 2; r <= 3; ++r) {
      for (int n = r; n <= 8; ++n) {
        const BigInt rec = grdc_count_recursive(r, n, p);
        const BigInt bf = grdc_bruteforce_count(r, n, p);
        o.require(rec == bf, "p=" + std::to_string(p) + " r=" + std::to_string(r) + " n=" +
                                 std::to_string(n) + ": " + rec.str() + " vs " + bf.str());
        ++cases;
      }
    }
  }
  const BigInt witness = grdc_count_recursive(2, 4, 3);
  o.require(witness == 35 && grdc_bruteforce_count(2, 4, 3) == 35, "(2,4,3) = 35");
  o.note(std::to_string(cases) + " (p, r, n) triples; (2,4,3) -> " + witness.str());
  return o;
}

// 6. Summation lemma over every valid k.
Outcome lemma() {
  Outcome o;
  int cases = 0;
  for (long long q : {2, 3}) {
    for (int r = 0; r <= 2; ++r) {
      const long long top = static_cast<long long>(ipow(BigInt(q), r + 1) - 1);
      for (long long k = 1; k <= top; ++k) {
        const LemmaSides s = lemma_sum(q, r, k);
        o.require(s.holds(), "q=" + std::to_string(q) + " r=" + std::to_string(r) + " k=" +
                                 std::to_string(k));
        ++cases;
      }
    }
  }
  o.note(std::to_string(cases) + " (q, r, k) triples with 1 <= k <= q^(r+1)-1");
  return o;
}

// 7. Last-pivot strata against product counts.
Outcome yk_strata() {
  Outcome o;
  const int cases[][3] = {{2, 3, 2}, {2, 4, 3}, {3, 5, 2}};
  for (const auto& c : cases) {
    const auto got = yk_partition(c[0], c[1], c[2]);
    const auto want = yk_expected(c[0], c[1], c[2]);
    BigInt sum = 0;
    std::string parts;
    for (const auto& [k, v] : got) {
      sum += v;
      parts += (parts.empty() ? "" : ",") + v.str();
    }
    const std::string tag = "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                            std::to_string(c[2]) + ")";
    o.require(got == want, tag + " strata");
    o.require(sum == grdc_bruteforce_count(c[0], c[1], c[2]), tag + " total");
    o.note(tag + " Y_k = [" + parts + "]");
  }
  return o;
}

// 8. Matroid strata over F_3 and F_2.
Outcome strata() {
  Outcome o;
  const BigInt u23 = stratum_count(Matroid::uniform(2, 3), 3);
  o.require(u23 == 4, "U_{2,3} over F_3 = " + u23.str());
  std::mt19937_64 rng(8);
  int tested = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int n = r; n <= (1 << r) - 1; ++n) {
      for (const IsoClass& c : enumerate_binary_classes(r, n)) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        for (int t = 0; t < 3; ++t) {
          const Matroid m = c.representative.relabel(perm);
          const BigInt count = stratum_count(m, 2);
          o.require(count == 1, "binary stratum " + count.str());
          ++tested;
          std::shuffle(perm.begin(), perm.end(), rng);
        }
      }
    }
  }
  o.note("U_{2,3} over F_3 -> " + u23.str() + "; " + std::to_string(tested) +
         " labeled binary matroids over F_2 -> 1");
  return o;
}

// 9. Beta invariant relation.
Outcome beta() {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    const BetaReport rep = verify_beta_relation(r);
    o.require(rep.holds(), "r=" + std::to_string(r) + ": " + rep.product.str());
    o.note("r=" + std::to_string(r) + " beta " + rep.beta.str() + " * " + rep.chi.str() + " = " +
           rep.product.str());
  }
  o.require(verify_beta_relation(2).beta == 3, "beta(P^2) = 3");
  o.require(verify_beta_relation(3).beta == 21, "beta(P^3) = 21");
  const CharPoly fano = characteristic_polynomial(pg_matroid(3));
  o.require(fano == CharPoly::from_roots({1, 2, 4}), "Fano polynomial " + fano.str());
  o.note("Fano " + fano.str());
  return o;
}

GFMatrix random_matrix(std::mt19937_64& rng, int p, int rows, int cols) {
  std::uniform_int_distribution<int> d(0, p - 1);
  GFMatrix m(PrimeField(p), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<Residue>(d(rng)));
  return m;
}

// 10. Property suites.
Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(10);

  int gl_trials = 0;
  for (int t = 0; t < 1000; ++t) {
    const int p = t % 2 == 0 ? 2 : 3;
    const int r = 1 + t % 4;
    const int n = r + t % 5;
    const GFMatrix a = random_matrix(rng, p, r, n);
    GFMatrix g = random_matrix(rng, p, r, r);
    while (det(g) == 0) g = random_matrix(rng, p, r, r);
    const RrefResult x = rref(a);
    const RrefResult y = rref(g * a);
    if (!(x.matrix == y.matrix) || x.pivots != y.pivots) o.require(false, "RREF under GL");
    ++gl_trials;
  }

  int plucker_cases = 0;
  for (int p : {2, 3}) {
    for (int r = 1; r <= 2; ++r) {
      for (int n = r; n <= 4; ++n) {
        long long total = 1;
        for (int i = 0; i < r * n; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
          GFMatrix a(PrimeField(p), r, n);
          long long c = code;
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j, c /= p) a.set(i, j, static_cast<Residue>(c % p));
          if (rank(a) != r) continue;
          if (distinct_columns_via_plucker(plucker(a)) != columns_distinct_nonzero(rref(a).matrix)) {
            o.require(false, "Plucker predicate");
          }
          ++plucker_cases;
        }
      }
    }
  }

  std::size_t exchange_checked = 0;
  for (int p : {2, 3}) {
    for (int r = 1; r <= 3; ++r) {
      for (int n = r; n <= 6; ++n) {
        std::set<Matroid> seen;
        for_each_subspace(r, n, p, [&](const GrassmannPoint& pt) {
          seen.insert(matroid_of_matrix(pt.matrix()));
        });
        for (const Matroid& m : seen) {
          if (!check_basis_exchange(m)) o.require(false, "basis exchange");
          ++exchange_checked;
        }
      }
    }
  }
  for (int r = 1; r <= 4; ++r) {
    for (int n = r; n <= (1 << r) - 1; ++n) {
      for (const IsoClass& c : enumerate_binary_classes(r, n)) {
        if (!check_basis_exchange(c.representative)) o.require(false, "basis exchange (class)");
        ++exchange_checked;
      }
    }
  }

  int relabelings = 0;
  for (const IsoClass& c : enumerate_binary_classes(3, 5)) {
    const Matroid canon = canonical_form(c.representative);
    std::vector<int> perm(c.n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int t = 0; t < 500; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (canonical_form(c.representative.relabel(perm)) != canon) o.require(false, "canonical form");
      ++relabelings;
    }
  }
  const Matroid pg4 = pg_matroid(4);
  const Matroid pg4_canon = canonical_form(pg4);
  std::vector<int> perm(15);
  std::iota(perm.begin(), perm.end(), 1);
  for (int t = 0; t < 500; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    if (canonical_form(pg4.relabel(perm)) != pg4_canon) o.require(false, "canonical form PG(3,2)");
    ++relabelings;
  }

  o.note(std::to_string(gl_trials) + " GL trials, " + std::to_string(plucker_cases) +
         " Plucker cases, " + std::to_string(exchange_checked) + " matroids exchange-checked, " +
         std::to_string(relabelings) + " relabelings");
  return o;
}

// 11. The class sum over F_3 does not match the product formula.
Outcome negative_witness() {
  Outcome o;
  const ChiReport rep = chi_p_partial(3, 2, 4);
  const BigRat closed = chi_closed(3, 2);
  o.require(rep.total == BigRat::parse("3/8"), "chi_p_partial(3,2,4) = " + rep.total.str());
  o.require(closed == BigRat::parse("1/16"), "chi_closed(3,2) = " + closed.str());
  o.require(rep.total != closed, "values differ");
  o.require(!rep.partial, "sum complete at n_max = 4");
  o.note(rep.total.str() + " != " + closed.str());
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "rank-3 class table and chi(B(3)) = -1/21", 5, rank_three_table},
      {2, "enumerated chi(B(4)) = 1/315", 60, rank_four},
      {3, "point-count chi equals product formula", 10, counts_vs_closed},
      {4, "class sums equal |Gr^dc|/n! over F_2", 60, prop22},
      {5, "recursive counts equal brute force", 300, recursion_vs_brute},
      {6, "summation lemma identity", 5, lemma},
      {7, "last-pivot strata products", 60, yk_strata},
      {8, "matroid strata over F_3 and F_2", 5, strata},
      {9, "beta(P^r) * chi(B(r)) = (-1)^r", 30, beta},
      {10, "property suites", 60, properties},
      {11, "class sum over F_3 differs from product", 30, negative_witness},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.require(false, "over runtime budget");
    if (!o.pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
              << timing << "] " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
