// SPDX-License-Identifier: Apache-2.0
//
// wavefront: physical channel models for large antenna arrays
// Copyright (C) 2026 The wavefront authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WAVEFRONT_IO_HPP
#define WAVEFRONT_IO_HPP

#include <array>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace wavefront
{
    inline constexpr std::string_view version = "0.1.0";

    // %.17g, locale independent
    inline std::string format_17g(double v)
    {
        std::array<char, 64> buf{};
        const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
        return std::string(buf.data(), r.ptr);
    }

    // Shortest representation that parses back to the same double, locale independent
    inline std::string format_shortest(double v)
    {
        std::array<char, 64> buf{};
        const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), r.ptr);
    }

    inline double parse_double(std::string_view s, std::string_view what)
    {
        double v = 0.0;
        const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (r.ec != std::errc() || r.ptr != s.data() + s.size())
            throw std::invalid_argument(std::string(what) + ": not a number: '" + std::string(s) + "'");
        return v;
    }

    inline long long parse_int(std::string_view s, std::string_view what)
    {
        long long v = 0;
        const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (r.ec != std::errc() || r.ptr != s.data() + s.size())
            throw std::invalid_argument(std::string(what) + ": not an integer: '" + std::string(s) + "'");
        return v;
    }

    inline std::string trim(std::string_view s)
    {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string_view::npos)
            return {};
        const auto e = s.find_last_not_of(" \t\r\n");
        return std::string(s.substr(b, e - b + 1));
    }

    inline std::vector<std::string> split_list(std::string_view s, char sep = ',')
    {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start <= s.size())
        {
            const auto pos = s.find(sep, start);
            const auto end = pos == std::string_view::npos ? s.size() : pos;
            auto item = trim(s.substr(start, end - start));
            if (!item.empty())
                out.push_back(std::move(item));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
        return out;
    }

    // FNV-1a, 64 bit
    inline std::uint64_t fnv1a64(std::string_view data)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : data)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    inline std::string hex64(std::uint64_t v)
    {
        static constexpr char digits[] = "0123456789abcdef";
        std::string s(16, '0');
        for (int i = 15; i >= 0; --i, v >>= 4)
            s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        return s;
    }

    // "key = value" lines; '#' and ';' start comments, [section] headers are
    // accepted and ignored, values may be double-quoted. Duplicate keys are an error.
    inline std::map<std::string, std::string> parse_key_values(std::istream &in)
    {
        std::map<std::string, std::string> kv;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            std::string s = trim(line);
            if (s.empty() || s.front() == '#' || s.front() == ';')
                continue;
            if (s.front() == '[')
            {
                if (s.back() != ']')
                    throw std::invalid_argument("config line " + std::to_string(line_no) + ": malformed section header");
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
            std::string key = trim(std::string_view(s).substr(0, eq));
            std::string value = trim(std::string_view(s).substr(eq + 1));
            if (!value.empty() && value.front() == '"')
            {
                const auto close = value.find('"', 1);
                if (close == std::string::npos)
                    throw std::invalid_argument("config line " + std::to_string(line_no) + ": unterminated string");
                value = value.substr(1, close - 1);
            }
            else
            {
                const auto hash = value.find_first_of("#;");
                if (hash != std::string::npos)
                    value = trim(std::string_view(value).substr(0, hash));
            }
            if (key.empty())
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
            if (!kv.emplace(key, value).second)
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
        return kv;
    }

    inline std::map<std::string, std::string> parse_key_values(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        return parse_key_values(in);
    }

    // Sorted "key = value" lines; stable input for hashing.
    inline std::string canonical_text(const std::map<std::string, std::string> &kv)
    {
        std::string out;
        for (const auto &[k, v] : kv)
            out += k + " = " + v + "\n";
        return out;
    }
}

#endif
