// Copyright 2026 The Farey Mosaics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Index tuples, continuants and the index recurrences that drive a chain
// of consecutive Farey denominators from its first two terms.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "farey/rational.hpp"

namespace farey {

// (k_1, ..., k_n) with every k_j >= 1. The empty tuple has order 0.
class IndexTuple {
 public:
  IndexTuple() = default;
  // Throws DomainError on an entry < 1.
  explicit IndexTuple(std::vector<std::int64_t> entries);
  IndexTuple(std::initializer_list<std::int64_t> entries);

  // Accepts "2,2,3", "2 2 3" or "(2,2,3)"; "" and "()" give the empty
  // tuple.
  static IndexTuple parse(std::string_view text);

  std::size_t order() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  // 1-based access, k_j.
  std::int64_t k(std::size_t j) const { return entries_.at(j - 1); }
  std::int64_t max_entry() const;

  IndexTuple extended(std::int64_t next) const;
  IndexTuple reversed() const;
  // (k_from, ..., k_{from+len-1}), 1-based. RangeError when out of range.
  IndexTuple sub(std::size_t from, std::size_t len) const;

  // Entries joined by `sep`; "·" for the empty tuple when `dot_if_empty`.
  std::string to_string(std::string_view sep = ",",
                        bool dot_if_empty = false) const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

// p_j(k_1, ..., k_j): p_{-1} = 0, p_0 = 1, p_j = k_j p_{j-1} - p_{j-2}.
// RangeError unless -1 <= j <= order(k).
BigInt continuant(const IndexTuple& k, int j);

// Continuant of the sub-tuple (k_from, ..., k_{from+j-1}), 1-based from.
BigInt continuant_shifted(const IndexTuple& k, int from, int j);

// x_j = p * y - pp * x as a function of the generators (x, y), where
// p = p_j(k_1..k_j) and pp = p_{j-1}(k_2..k_j). For j = -1 this is
// (0, -1), i.e. x itself.
struct LinearForm {
  BigInt p;
  BigInt pp;

  Rational operator()(const Rational& x, const Rational& y) const;
};
LinearForm linear_form(const IndexTuple& k, int j);

Rational eval_linear(const IndexTuple& k, int j, const Rational& x,
                     const Rational& y);

// x_{-1}, x_0 and the successors x_1..x_n of a real chain.
struct ValueChain {
  Rational x_minus1;
  Rational x_0;
  std::vector<Rational> successors;
  IndexTuple indices;

  // x_j for -1 <= j <= n.
  const Rational& at(int j) const;
};

// Denominators q_{-1}, q_0 and q_1..q_n of a chain in F^Q.
struct DenominatorChain {
  std::int64_t Q = 1;
  std::int64_t q_minus1 = 1;
  std::int64_t q_0 = 1;
  std::vector<std::int64_t> successors;
  IndexTuple indices;

  std::int64_t at(int j) const;
};

// k_j = floor((1 + x_{j-2}) / x_{j-1}) for j = 1..n. DomainError unless
// 0 < x, y <= 1 and x + y > 1.
std::pair<IndexTuple, ValueChain> index_sequence_real(const Rational& x,
                                                      const Rational& y,
                                                      int n);

// k_j = floor((Q + q_{j-2}) / q_{j-1}). DomainError unless
// 1 <= qp, qpp <= Q, gcd(qp, qpp) = 1 and qp + qpp > Q.
std::pair<IndexTuple, DenominatorChain> index_sequence_int(std::int64_t qp,
                                                           std::int64_t qpp,
                                                           std::int64_t Q,
                                                           int n);

}  // namespace farey
