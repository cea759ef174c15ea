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

// JSON and CSV forms of the library's records. Rationals are "num/den"
// strings and big integers are decimal strings throughout; CSV is
// comma-separated with a header row and LF line endings.

#ifndef BINMAT_IO_HPP_
#define BINMAT_IO_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "binmat/euler.hpp"
#include "binmat/exact.hpp"
#include "binmat/gf.hpp"
#include "binmat/grassmann.hpp"
#include "binmat/matroid.hpp"
#include "json.hpp"

namespace binmat::io {

using Json = nlohmann::json;

// {"n": int, "r": int, "bases": [[int, ...], ...]} with 1-based sorted bases.
inline Json to_json(const Matroid& m) {
  return Json{{"n", m.n()}, {"r", m.r()}, {"bases", m.bases_as_lists()}};
}

inline Matroid matroid_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    std::vector<std::vector<int>> lists;
    for (const auto& b : j.at("bases")) {
      std::vector<int> basis = b.get<std::vector<int>>();
      for (int e : basis) {
        if (e < 1 || e > n) throw InvalidArgument("basis element outside [n]");
      }
      lists.push_back(std::move(basis));
    }
    return Matroid::from_lists(n, r, lists);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad matroid JSON: ") + e.what());
  }
}

// {"p": int, "rows": [[int, ...], ...]}
inline Json to_json(const GFMatrix& m) {
  return Json{{"p", m.p()}, {"rows", m.to_rows()}};
}

inline GFMatrix matrix_from_json(const Json& j) {
  try {
    return GFMatrix::from_rows(j.at("p").get<int>(),
                               j.at("rows").get<std::vector<std::vector<long long>>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what());
  }
}

inline Json to_json(const CountTable& t) {
  Json counts = Json::array();
  for (const auto& [n, c] : t.entries) counts.push_back({{"n", n}, {"count", c.str()}});
  return Json{{"q", t.q}, {"r", t.r}, {"counts", counts}};
}

inline void write_csv(std::ostream& os, const CountTable& t) {
  os << "q,r,n,count\n";
  for (const auto& [n, c] : t.entries) os << t.q << ',' << t.r << ',' << n << ',' << c << '\n';
}

inline Json to_json(const IsoClass& c, int class_index) {
  return Json{{"r", c.r},
              {"n", c.n},
              {"class_index", class_index},
              {"aut_order", c.aut_order.str()},
              {"labeled_count", c.labeled_count.str()},
              {"num_bases", c.representative.num_bases()},
              {"representative", to_json(c.representative)}};
}

inline void write_csv_header_classes(std::ostream& os) {
  os << "r,n,class_index,aut_order,labeled_count,num_bases\n";
}

inline void write_csv_row(std::ostream& os, const IsoClass& c, int class_index) {
  os << c.r << ',' << c.n << ',' << class_index << ',' << c.aut_order << ','
     << c.labeled_count << ',' << c.representative.num_bases() << '\n';
}

namespace detail {

inline std::string count_string(const ChiReport& rep, const BigRat& count) {
  return rep.method == ChiMethod::kViaCounts ? count.numerator().str() : count.str();
}

}  // namespace detail

// {"q", "r", "method", "partial", "terms": [{"n", "count", "term"}], "total"}
inline Json to_json(const ChiReport& rep) {
  Json terms = Json::array();
  for (const ChiTerm& t : rep.terms) {
    terms.push_back({{"n", t.n}, {"count", detail::count_string(rep, t.count)}, {"term", t.term.str()}});
  }
  return Json{{"q", rep.q},
              {"r", rep.r},
              {"method", to_string(rep.method)},
              {"partial", rep.partial},
              {"terms", terms},
              {"total", rep.total.str()}};
}

inline void write_csv(std::ostream& os, const ChiReport& rep, bool header = true) {
  if (header) os << "q,r,method,n,count,term\n";
  const std::string prefix =
      std::to_string(rep.q) + ',' + std::to_string(rep.r) + ',' + to_string(rep.method) + ',';
  for (const ChiTerm& t : rep.terms) {
    os << prefix << t.n << ',' << detail::count_string(rep, t.count) << ',' << t.term << '\n';
  }
  os << prefix << "total,," << rep.total << '\n';
}

inline Json to_json(const CharPoly& p) {
  std::vector<std::string> coeffs;
  for (auto c : p.coeffs) coeffs.push_back(std::to_string(c));
  return Json{{"coefficients", coeffs}, {"text", p.str()}};
}

inline Json to_json(const BetaReport& b) {
  return Json{{"r", b.r},
              {"characteristic_polynomial", to_json(b.poly)},
              {"beta_raw", b.beta_raw.str()},
              {"beta", b.beta.str()},
              {"chi", b.chi.str()},
              {"lhs", b.product.str()},
              {"rhs", BigRat(b.expected).str()},
              {"pass", b.holds()}};
}

inline Json to_json(const Prop22Report& p) {
  return Json{{"r", p.r},
              {"n", p.n},
              {"classes", p.num_classes},
              {"grdc", p.grdc.str()},
              {"lhs", p.lhs.str()},
              {"rhs", p.rhs.str()},
              {"pass", p.holds()}};
}

}  // namespace binmat::io

#endif  // BINMAT_IO_HPP_
