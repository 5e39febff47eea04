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

#include <stdexcept>
#include <string>

namespace ppm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// A numeric argument is outside its admissible domain (NaN, negative cost,
// p < 1, lambda <= 0, pmf not summing to one, ...).
class DomainError : public Error {
 public:
    using Error::Error;
};

// Shapes do not agree: point dimensions, matrix sizes, collection sizes.
class DimensionError : public Error {
 public:
    using Error::Error;
};

// Input is well formed but too large for the exact dense solvers.
class SizeError : public Error {
 public:
    using Error::Error;
};

// Malformed text input (pattern files, distribution specs).
class ParseError : public Error {
 public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

 private:
    std::size_t line_;
};

}  // namespace ppm
