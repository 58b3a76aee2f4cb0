// Copyright 2026 The sgm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sgm {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;

/// Reserved id: marks an unused PCSR slot and is never a valid vertex.
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

inline constexpr std::uint64_t kDefaultSeed = 0x5bd1e9955bd1e995ULL;

/// Default cap on |GBA| + |M'| in bytes (8 GiB).
inline constexpr std::size_t kDefaultMemCap = std::size_t{8} << 30;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input; the message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured memory cap would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// splitmix64 finalizer over (x, seed). Shared by PCSR bucketing and
/// signature pair-keys.
constexpr std::uint64_t mix64(std::uint64_t x, std::uint64_t seed) noexcept {
  std::uint64_t z = x + seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sgm
