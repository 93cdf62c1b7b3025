// Copyright 2026 The Heddle Authors
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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace heddle {

using Digest256 = std::array<std::uint8_t, 32>;

// FIPS 180-4 SHA-256.  Self-contained so trace digests carry no library
// dependency; checked against the published test vectors in the unit tests.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, std::size_t len);
  Digest256 finish();

  static Digest256 of(const void* data, std::size_t len);
  static Digest256 of(const std::vector<std::uint8_t>& bytes);

 private:
  void compress(const std::uint8_t* block);

  std::uint32_t h_[8];
  std::uint64_t total_len_ = 0;
  std::uint8_t buffer_[64];
  std::size_t buffered_ = 0;
};

std::string to_hex(const Digest256& digest);

}  // namespace heddle
