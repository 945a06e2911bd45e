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

// Pull-based generation of F^Q and F^Q(c, d), consecutive-denominator
// tuples with their gap types, and the choice application.

#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace farey {

struct FareyFraction {
  std::int64_t a = 0;
  std::int64_t q = 1;

  std::string to_string() const;
  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

// Denominators congruent to c modulo d. DomainError unless d >= 2 and
// 0 <= c < d.
class ProgressionClass {
 public:
  ProgressionClass(std::int64_t c, std::int64_t d);

  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  bool contains(std::int64_t q) const { return q % d_ == c_; }
  // gcd(c, d), with gcd(0, d) = d.
  std::int64_t g() const;

  friend bool operator==(const ProgressionClass&,
                         const ProgressionClass&) = default;

 private:
  std::int64_t c_;
  std::int64_t d_;
};

// Gap pattern (r_1, ..., r_s); r_i - 1 fractions of F^Q outside the class
// sit between the i-th and (i+1)-th selected ones.
class TupleType {
 public:
  TupleType() = default;
  // DomainError on an entry < 1.
  explicit TupleType(std::vector<std::int64_t> r);
  TupleType(std::initializer_list<std::int64_t> r);

  const std::vector<std::int64_t>& r() const { return r_; }
  std::size_t s() const { return r_.size(); }
  std::int64_t total() const;
  // Chain positions -1 + r_1 + ... + r_i for i = 1..s.
  std::vector<std::int64_t> positions() const;
  std::string to_string() const;

  friend bool operator==(const TupleType&, const TupleType&) = default;

 private:
  std::vector<std::int64_t> r_;
};

// Adapts a source with `std::optional<T> next()` to a single-pass range.
template <class Source>
class PullRange {
 public:
  using value_type = typename decltype(std::declval<Source&>().next())::value_type;

  class iterator {
   public:
    using iterator_concept = std::input_iterator_tag;
    using value_type = PullRange::value_type;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Source* src) : src_(src) { advance(); }
    const value_type& operator*() const { return *cur_; }
    const value_type* operator->() const { return &*cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.cur_.has_value();
    }

   private:
    void advance() { cur_ = src_->next(); }
    Source* src_ = nullptr;
    std::optional<value_type> cur_;
  };

  explicit PullRange(Source src) : src_(std::move(src)) {}
  iterator begin() { return iterator(&src_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Source src_;
};

// All of F^Q from 0/1 to 1/1 by the next-term recurrence; O(1) state.
class FareySource {
 public:
  explicit FareySource(std::int64_t Q);
  std::optional<FareyFraction> next();

 private:
  std::int64_t Q_;
  std::int64_t a_ = 0, b_ = 1, c_ = 0, d_ = 1;
  bool started_ = false;
  bool done_ = false;
};

class FilteredSource {
 public:
  FilteredSource(std::int64_t Q, ProgressionClass cls);
  std::optional<FareyFraction> next();

 private:
  FareySource inner_;
  ProgressionClass cls_;
};

struct ConsecutiveTuple {
  std::vector<std::int64_t> denominators;
  TupleType type;
};

// Windows of s+1 consecutive class members; the trailing incomplete window
// is dropped.
class TupleSource {
 public:
  TupleSource(std::int64_t Q, ProgressionClass cls, int s);
  std::optional<ConsecutiveTuple> next();

 private:
  FareySource inner_;
  ProgressionClass cls_;
  std::size_t s_;
  std::vector<std::int64_t> dens_;
  std::vector<std::int64_t> pos_;
  std::int64_t index_ = -1;
};

// Consecutive pairs (q_0, q_1) of F^Q(c, d) together with the F^Q
// denominator q'' that follows q_0 and the gap n + 1. q'' is 0 when q_0
// is the last fraction of F^Q.
struct GeneratedPair {
  std::int64_t q0 = 0;
  std::int64_t q1 = 0;
  std::int64_t next_in_full = 0;
  std::int64_t gap = 0;
};

class PairSource {
 public:
  PairSource(std::int64_t Q, ProgressionClass cls);
  std::optional<GeneratedPair> next();

 private:
  FareySource inner_;
  ProgressionClass cls_;
  std::optional<GeneratedPair> pending_;
  std::int64_t pending_pos_ = 0;
  std::int64_t index_ = -1;
  bool want_next_ = false;
};

PullRange<FareySource> farey_stream(std::int64_t Q);
PullRange<FilteredSource> farey_filtered(std::int64_t Q,
                                         const ProgressionClass& cls);
PullRange<TupleSource> consecutive_tuples(std::int64_t Q,
                                          const ProgressionClass& cls, int s);
PullRange<PairSource> consecutive_pairs(std::int64_t Q,
                                        const ProgressionClass& cls);

// #F^Q(c, d) by streaming.
std::int64_t filtered_count(std::int64_t Q, const ProgressionClass& cls);

// (q_{-1}, q_{-1+r_1}, ..., q_{-1+|r|}) from the chain started at
// (qp, qpp). DomainError from the chain generator.
std::vector<std::int64_t> choice_map(std::int64_t qp, std::int64_t qpp,
                                     std::int64_t Q, const TupleType& r);

}  // namespace farey
