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

#include "farey/continuants.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "farey/errors.hpp"

namespace farey {

IndexTuple::IndexTuple(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e < 1) {
      throw DomainError("index tuple entries must be >= 1, got " +
                        std::to_string(e));
    }
  }
}

IndexTuple::IndexTuple(std::initializer_list<std::int64_t> entries)
    : IndexTuple(std::vector<std::int64_t>(entries)) {}

IndexTuple IndexTuple::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad index tuple entry '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' ||
        ch == ']') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      token += ch;
    } else {
      throw ParseError("bad character in index tuple: '" +
                       std::string(text) + "'");
    }
  }
  flush();
  return IndexTuple(std::move(out));
}

std::int64_t IndexTuple::max_entry() const {
  return entries_.empty() ? 0
                          : *std::max_element(entries_.begin(), entries_.end());
}

IndexTuple IndexTuple::extended(std::int64_t next) const {
  auto e = entries_;
  e.push_back(next);
  return IndexTuple(std::move(e));
}

IndexTuple IndexTuple::reversed() const {
  IndexTuple out;
  out.entries_.assign(entries_.rbegin(), entries_.rend());
  return out;
}

IndexTuple IndexTuple::sub(std::size_t from, std::size_t len) const {
  if (from < 1 || from - 1 + len > entries_.size()) {
    throw RangeError("sub-tuple out of range");
  }
  IndexTuple out;
  out.entries_.assign(entries_.begin() + static_cast<std::ptrdiff_t>(from - 1),
                      entries_.begin() +
                          static_cast<std::ptrdiff_t>(from - 1 + len));
  return out;
}

std::string IndexTuple::to_string(std::string_view sep,
                                  bool dot_if_empty) const {
  if (entries_.empty()) return dot_if_empty ? "·" : "";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(entries_[i]);
  }
  return out;
}

namespace {

BigInt run_continuant(const std::vector<std::int64_t>& e, std::size_t begin,
                      std::size_t count) {
  BigInt prev = 0;
  BigInt cur = 1;
  for (std::size_t i = 0; i < count; ++i) {
    BigInt next = BigInt(static_cast<long>(e[begin + i])) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

BigInt continuant(const IndexTuple& k, int j) {
  return continuant_shifted(k, 1, j);
}

BigInt continuant_shifted(const IndexTuple& k, int from, int j) {
  if (from < 1 || j < -1 ||
      static_cast<long>(from) + j - 1 > static_cast<long>(k.order())) {
    throw RangeError("continuant index out of range: from=" +
                     std::to_string(from) + " j=" + std::to_string(j) +
                     " order=" + std::to_string(k.order()));
  }
  if (j == -1) return 0;
  return run_continuant(k.entries(), static_cast<std::size_t>(from - 1),
                        static_cast<std::size_t>(j));
}

Rational LinearForm::operator()(const Rational& x, const Rational& y) const {
  return Rational(p) * y - Rational(pp) * x;
}

LinearForm linear_form(const IndexTuple& k, int j) {
  if (j < -1 || j > static_cast<int>(k.order())) {
    throw RangeError("linear form index out of range");
  }
  if (j == -1) return {0, -1};
  if (j == 0) return {1, 0};
  return {continuant(k, j), continuant_shifted(k, 2, j - 1)};
}

Rational eval_linear(const IndexTuple& k, int j, const Rational& x,
                     const Rational& y) {
  return linear_form(k, j)(x, y);
}

const Rational& ValueChain::at(int j) const {
  if (j == -1) return x_minus1;
  if (j == 0) return x_0;
  if (j < -1 || j > static_cast<int>(successors.size())) {
    throw RangeError("chain index out of range");
  }
  return successors[static_cast<std::size_t>(j - 1)];
}

std::int64_t DenominatorChain::at(int j) const {
  if (j == -1) return q_minus1;
  if (j == 0) return q_0;
  if (j < -1 || j > static_cast<int>(successors.size())) {
    throw RangeError("chain index out of range");
  }
  return successors[static_cast<std::size_t>(j - 1)];
}

std::pair<IndexTuple, ValueChain> index_sequence_real(const Rational& x,
                                                      const Rational& y,
                                                      int n) {
  const Rational one(1);
  if (x.sign() <= 0 || y.sign() <= 0 || x > one || y > one || x + y <= one) {
    throw DomainError("generators (" + x.to_string() + ", " + y.to_string() +
                      ") lie outside the Farey triangle");
  }
  if (n < 0) throw DomainError("chain length must be >= 0");
  ValueChain chain{x, y, {}, {}};
  std::vector<std::int64_t> k;
  k.reserve(static_cast<std::size_t>(n));
  Rational a = x;
  Rational b = y;
  for (int j = 0; j < n; ++j) {
    const BigInt kj = ((one + a) / b).floor();
    k.push_back(kj.get_si());
    Rational next = Rational(kj) * b - a;
    a = std::move(b);
    b = next;
    chain.successors.push_back(std::move(next));
  }
  chain.indices = IndexTuple(k);
  return {chain.indices, chain};
}

std::pair<IndexTuple, DenominatorChain> index_sequence_int(std::int64_t qp,
                                                           std::int64_t qpp,
                                                           std::int64_t Q,
                                                           int n) {
  if (Q < 1 || qp < 1 || qpp < 1 || qp > Q || qpp > Q ||
      std::gcd(qp, qpp) != 1 || qp + qpp <= Q) {
    throw DomainError("(" + std::to_string(qp) + ", " + std::to_string(qpp) +
                      ") is not a consecutive pair of F^" + std::to_string(Q));
  }
  if (n < 0) throw DomainError("chain length must be >= 0");
  DenominatorChain chain{Q, qp, qpp, {}, {}};
  std::vector<std::int64_t> k;
  k.reserve(static_cast<std::size_t>(n));
  std::int64_t a = qp;
  std::int64_t b = qpp;
  for (int j = 0; j < n; ++j) {
    const std::int64_t kj = (Q + a) / b;
    const std::int64_t next = kj * b - a;
    k.push_back(kj);
    chain.successors.push_back(next);
    a = b;
    b = next;
  }
  chain.indices = IndexTuple(k);
  return {chain.indices, chain};
}

}  // namespace farey
