// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_RATIONAL_HPP_
#define FACLOC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "facloc/error.hpp"

namespace facloc {

// Exact rational scalar. All values the library stores are canonical:
// reduced fraction, positive denominator. Every constructor below
// canonicalizes; raw mpq_class two-argument construction does not, so new
// values must come through rat()/parse_rat() or arithmetic on existing ones.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "a/b" when the reduced denominator exceeds 1, plain
// "a" otherwise. parse_rat(rat_str(q)) == q exactly.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts exactly an optional '-', digits, and an optional "/digits" suffix.
// Decimal forms, whitespace, and '+' signs are rejected.
inline Rat parse_rat(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw Error(Errc::kSyntaxError, why + " in rational literal \"" +
                                        std::string(text) + "\"");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto scan_digits = [&text](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i;
  };
  const std::size_t num_end = scan_digits(pos);
  if (num_end == pos) fail("expected digits");
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den(1);
  if (num_end != text.size()) {
    if (text[num_end] != '/') fail("only \"a\" or \"a/b\" forms are accepted");
    const std::size_t den_begin = num_end + 1;
    const std::size_t den_end = scan_digits(den_begin);
    if (den_end == den_begin || den_end != text.size()) {
      fail("malformed denominator");
    }
    den = mpz_class(std::string(text.substr(den_begin, den_end - den_begin)),
                    10);
    if (den == 0) fail("zero denominator");
  }
  if (negative) num = -num;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_abs(const Rat& q) {
  Rat r = q;
  if (r < 0) r = -r;
  return r;
}

inline bool is_coordinate(const Rat& q) { return q >= 0 && q <= 1; }

}  // namespace facloc

#endif  // FACLOC_RATIONAL_HPP_
