// Copyright 2026 The Authors.
//
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

#include "greedoid/rational.hpp"

#include <cctype>

namespace greedoid {

namespace {

bool parse_integer(const std::string& text, BigInt* out) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (text[0] == '-' || text[0] == '+') start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  *out = BigInt(text);
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  BigInt num;
  if (slash == std::string::npos) {
    if (!parse_integer(text, &num)) return std::nullopt;
    return Rational(num);
  }
  BigInt den;
  if (!parse_integer(text.substr(0, slash), &num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), &den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (!is_integer(r)) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

}  // namespace greedoid
