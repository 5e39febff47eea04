/*
 * Copyright 2026 The ppmetrics Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ppmetrics/pattern.hpp"

namespace ppm::io {

// Text format: one point per line, coordinates separated by whitespace
// and/or commas. Lines whose first non-blank character is '#' are comments.
// One or more blank lines end a pattern. A block consisting of the single
// line "-" is the empty pattern. All points in a file share one dimension.
PatternCollection read_patterns(std::istream& in);
PatternCollection read_pattern_file(const std::filesystem::path& path);

// Every regular file in `dir` (sorted by name) must hold exactly one pattern.
PatternCollection read_pattern_dir(const std::filesystem::path& dir);

// Reads a file, or a directory of single-pattern files.
PatternCollection read_patterns_from(const std::filesystem::path& path);

// Inverse of read_patterns; coordinates use the shortest decimal form that
// reads back to the same double.
void write_patterns(std::ostream& out, const PatternCollection& patterns);

}  // namespace ppm::io
