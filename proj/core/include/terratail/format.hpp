// Copyright 2026 The terratail Authors
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

#ifndef TERRATAIL_FORMAT_HPP_
#define TERRATAIL_FORMAT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace terratail {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Shortest round-trip decimal representation, locale-independent. All file
// output goes through this so results are byte-stable across runs.
std::string format_double(double v);

// FNV-1a 64-bit, used to stamp outputs with a digest of their inputs.
std::uint64_t fnv1a(std::string_view data);

std::string hex64(std::uint64_t v);

}  // namespace terratail

#endif  // TERRATAIL_FORMAT_HPP_
