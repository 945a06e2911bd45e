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

#include "farey/engine.hpp"

#include <numeric>

#include "farey/continuants.hpp"
#include "farey/errors.hpp"

namespace farey {

std::string FareyFraction::to_string() const {
  return std::to_string(a) + "/" + std::to_string(q);
}

ProgressionClass::ProgressionClass(std::int64_t c, std::int64_t d)
    : c_(c), d_(d) {
  if (d < 2) throw DomainError("modulus d must be >= 2");
  if (c < 0 || c >= d) throw DomainError("residue c must satisfy 0 <= c < d");
}

std::int64_t ProgressionClass::g() const { return std::gcd(c_, d_); }

TupleType::TupleType(std::vector<std::int64_t> r) : r_(std::move(r)) {
  for (auto v : r_) {
    if (v < 1) throw DomainError("type entries must be >= 1");
  }
}

TupleType::TupleType(std::initializer_list<std::int64_t> r)
    : TupleType(std::vector<std::int64_t>(r)) {}

std::int64_t TupleType::total() const {
  return std::accumulate(r_.begin(), r_.end(), std::int64_t{0});
}

std::vector<std::int64_t> TupleType::positions() const {
  std::vector<std::int64_t> out;
  std::int64_t pos = -1;
  for (auto v : r_) {
    pos += v;
    out.push_back(pos);
  }
  return out;
}

std::string TupleType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r_[i]);
  }
  return out + ")";
}

FareySource::FareySource(std::int64_t Q) : Q_(Q) {
  if (Q < 1) throw DomainError("Q must be >= 1");
}

std::optional<FareyFraction> FareySource::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    a_ = 0;
    b_ = 1;
    c_ = 1;
    d_ = Q_;
    return FareyFraction{0, 1};
  }
  if (a_ == 1 && b_ == 1) {
    done_ = true;
    return std::nullopt;
  }
  const std::int64_t k = (Q_ + b_) / d_;
  const std::int64_t nc = k * c_ - a_;
  const std::int64_t nd = k * d_ - b_;
  a_ = c_;
  b_ = d_;
  c_ = nc;
  d_ = nd;
  return FareyFraction{a_, b_};
}

FilteredSource::FilteredSource(std::int64_t Q, ProgressionClass cls)
    : inner_(Q), cls_(cls) {}

std::optional<FareyFraction> FilteredSource::next() {
  while (auto f = inner_.next()) {
    if (cls_.contains(f->q)) return f;
  }
  return std::nullopt;
}

TupleSource::TupleSource(std::int64_t Q, ProgressionClass cls, int s)
    : inner_(Q), cls_(cls), s_(static_cast<std::size_t>(s)) {
  if (s < 1) throw DomainError("tuple length s must be >= 1");
}

std::optional<ConsecutiveTuple> TupleSource::next() {
  while (auto f = inner_.next()) {
    ++index_;
    if (!cls_.contains(f->q)) continue;
    if (dens_.size() == s_ + 1) {
      dens_.erase(dens_.begin());
      pos_.erase(pos_.begin());
    }
    dens_.push_back(f->q);
    pos_.push_back(index_);
    if (dens_.size() == s_ + 1) {
      std::vector<std::int64_t> r;
      r.reserve(s_);
      for (std::size_t i = 1; i < pos_.size(); ++i) {
        r.push_back(pos_[i] - pos_[i - 1]);
      }
      return ConsecutiveTuple{dens_, TupleType(std::move(r))};
    }
  }
  return std::nullopt;
}

PairSource::PairSource(std::int64_t Q, ProgressionClass cls)
    : inner_(Q), cls_(cls) {}

std::optional<GeneratedPair> PairSource::next() {
  while (auto f = inner_.next()) {
    ++index_;
    if (want_next_) {
      pending_->next_in_full = f->q;
      want_next_ = false;
    }
    if (!cls_.contains(f->q)) continue;
    std::optional<GeneratedPair> out;
    if (pending_) {
      out = pending_;
      out->q1 = f->q;
      out->gap = index_ - pending_pos_;
    }
    pending_ = GeneratedPair{f->q, 0, 0, 0};
    pending_pos_ = index_;
    want_next_ = true;
    if (out) return out;
  }
  return std::nullopt;
}

PullRange<FareySource> farey_stream(std::int64_t Q) {
  return PullRange<FareySource>(FareySource(Q));
}

PullRange<FilteredSource> farey_filtered(std::int64_t Q,
                                         const ProgressionClass& cls) {
  return PullRange<FilteredSource>(FilteredSource(Q, cls));
}

PullRange<TupleSource> consecutive_tuples(std::int64_t Q,
                                          const ProgressionClass& cls, int s) {
  return PullRange<TupleSource>(TupleSource(Q, cls, s));
}

PullRange<PairSource> consecutive_pairs(std::int64_t Q,
                                        const ProgressionClass& cls) {
  return PullRange<PairSource>(PairSource(Q, cls));
}

std::int64_t filtered_count(std::int64_t Q, const ProgressionClass& cls) {
  std::int64_t n = 0;
  FareySource src(Q);
  while (auto f = src.next()) {
    if (cls.contains(f->q)) ++n;
  }
  return n;
}

std::vector<std::int64_t> choice_map(std::int64_t qp, std::int64_t qpp,
                                     std::int64_t Q, const TupleType& r) {
  if (r.s() == 0) throw DomainError("empty tuple type");
  const auto positions = r.positions();
  const auto [k, chain] =
      index_sequence_int(qp, qpp, Q, static_cast<int>(positions.back()));
  std::vector<std::int64_t> out{chain.q_minus1};
  for (auto p : positions) out.push_back(chain.at(static_cast<int>(p)));
  return out;
}

}  // namespace farey
