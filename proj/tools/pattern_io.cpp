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
#include "pattern_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "ppmetrics/error.hpp"

namespace ppm::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_point(std::string_view line, std::size_t line_no) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r'))
            ++pos;
        if (pos == line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != ',' && line[end] != '\r')
            ++end;
        std::string_view tok = line.substr(pos, end - pos);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw ParseError("'" + std::string(line.substr(pos, end - pos)) + "' is not a number", line_no);
        }
        if (!std::isfinite(v)) throw ParseError("non-finite coordinate", line_no);
        out.push_back(v);
        pos = end;
    }
    return out;
}

}  // namespace

PatternCollection read_patterns(std::istream& in) {
    PatternCollection out;
    std::optional<std::size_t> dim;
    std::vector<std::vector<double>> block;
    bool block_open = false, block_empty_marker = false;
    std::size_t block_start = 0;

    auto close_block = [&]() {
        if (!block_open) return;
        PointPattern p(dim.value_or(1));
        for (const auto& pt : block) p.push_back(pt);
        out.push_back(std::move(p));
        block.clear();
        block_open = false;
        block_empty_marker = false;
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            close_block();
            continue;
        }
        if (line.front() == '#') continue;
        if (line == "-") {
            if (block_open) throw ParseError("empty-pattern marker '-' inside a non-empty pattern", line_no);
            block_open = true;
            block_empty_marker = true;
            block_start = line_no;
            continue;
        }
        if (block_empty_marker) {
            throw ParseError("pattern started at line " + std::to_string(block_start) +
                                 " is marked empty but has points",
                             line_no);
        }
        auto pt = parse_point(line, line_no);
        if (!dim) {
            dim = pt.size();
        } else if (pt.size() != *dim) {
            throw ParseError("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                                 std::to_string(*dim),
                             line_no);
        }
        if (!block_open) block_start = line_no;
        block_open = true;
        block.push_back(std::move(pt));
    }
    close_block();
    // Empty patterns read before the dimension was known get it now.
    if (dim) {
        for (auto& p : out)
            if (p.empty()) p = PointPattern(*dim);
    }
    return out;
}

PatternCollection read_pattern_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    try {
        return read_patterns(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), 0);
    }
}

PatternCollection read_pattern_dir(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    PatternCollection out;
    for (const auto& f : files) {
        auto ps = read_pattern_file(f);
        if (ps.size() != 1) {
            throw ParseError(f.string() + ": expected exactly one pattern, found " + std::to_string(ps.size()), 0);
        }
        out.push_back(std::move(ps.front()));
    }
    if (out.empty()) throw ParseError("no pattern files in " + dir.string(), 0);
    require_dimension(out, out.front().dim());
    return out;
}

PatternCollection read_patterns_from(const std::filesystem::path& path) {
    if (std::filesystem::is_directory(path)) return read_pattern_dir(path);
    return read_pattern_file(path);
}

void write_patterns(std::ostream& out, const PatternCollection& patterns) {
    char buf[32];
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        if (k > 0) out << '\n';
        const PointPattern& p = patterns[k];
        if (p.empty()) {
            out << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t d = 0; d < p.dim(); ++d) {
                const auto res = std::to_chars(buf, buf + sizeof buf, p[i][d]);
                if (d > 0) out << ' ';
                out.write(buf, res.ptr - buf);
            }
            out << '\n';
        }
    }
}

}  // namespace ppm::io
