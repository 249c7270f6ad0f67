// Copyright 2026 The segcomb Authors
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

#ifndef SEGCOMB_UTF8_H_
#define SEGCOMB_UTF8_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace segcomb::utf8 {

// Decodes strict UTF-8 (no overlongs, no surrogates, max U+10FFFF).
// Returns std::nullopt on the first invalid sequence.
std::optional<std::u32string> decode(std::string_view text);

bool is_valid(std::string_view text);

void append(char32_t cp, std::string* out);
std::string encode(char32_t cp);
std::string encode(std::u32string_view text);

// Splits valid UTF-8 into one string per code point.
std::vector<std::string> split_code_points(std::string_view text);

std::size_t code_point_count(std::string_view text);

}  // namespace segcomb::utf8

#endif  // SEGCOMB_UTF8_H_
