// Copyright 2026 The vcbound Authors
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

#include "report.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace vcbound::cli {

void check(vcb_status status) {
  switch (status) {
    case VCB_OK:
      return;
    case VCB_ERROR_DOMAIN:
    case VCB_ERROR_NULL_ARGUMENT:
      throw CliError(kExitUsage, vcb_last_error());
    case VCB_ERROR_SIZE:
    case VCB_ERROR_UNSUPPORTED:
      throw CliError(kExitUnsupported, vcb_last_error());
    case VCB_ERROR_IO:
      throw CliError(kExitIo, vcb_last_error());
    case VCB_ERROR_INTERNAL:
      break;
  }
  throw CliError(kExitInternal, vcb_last_error());
}

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string sig6(double x) {
  if (!std::isfinite(x)) return shortest(x);
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 6);
  return std::string(buf.data(), res.ptr);
}

namespace {

void dump_into(const Json& j, int indent, int depth, std::string& out) {
  const auto pad = [&](int d) {
    if (indent > 0) out += '\n' + std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += Json(key).dump();
        out += indent > 0 ? ": " : ":";
        dump_into(value, indent, depth + 1, out);
      }
      pad(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        dump_into(value, indent, depth + 1, out);
      }
      pad(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? shortest(v) : Json(shortest(v)).dump();
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw CliError(kExitInternal, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xF];
  }
  return hex;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
T parse_number(std::string_view s) {
  T v{};
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end) {
    throw CliError(kExitUsage, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

template <class T>
std::vector<T> parse_range(std::string_view text) {
  if (text.empty()) throw CliError(kExitUsage, "empty range");
  std::vector<T> out;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw CliError(kExitUsage, "range must be lo:hi:step");
    const T lo = parse_number<T>(parts[0]);
    const T hi = parse_number<T>(parts[1]);
    const T step = parse_number<T>(parts[2]);
    if (!(step > 0) || hi < lo) throw CliError(kExitUsage, "empty range '" + std::string(text) + "'");
    // count from the rounded span so 0.02:0.4:0.02 includes 0.4
    const auto count = static_cast<std::size_t>(
        std::floor(static_cast<double>(hi - lo) / static_cast<double>(step) + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<T>(lo + static_cast<T>(i) * step));
    return out;
  }
  for (auto part : split(text, ',')) out.push_back(parse_number<T>(part));
  return out;
}

}  // namespace

std::vector<double> parse_real_range(std::string_view text) { return parse_range<double>(text); }

std::vector<std::int64_t> parse_int_range(std::string_view text) {
  return parse_range<std::int64_t>(text);
}

Json RunManifest::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "vcbound";
  j["version"] = vcb_version();
  j["command"] = command;
  j["config"] = config;
  j["base_seeds"] = base_seeds;
  j["runtime"] = runtime;
  return j;
}

std::string manifest_path_for(const std::filesystem::path& path) {
  return path.string() + ".manifest.json";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitIo, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw CliError(kExitIo, "failed writing '" + path.string() + "'");
}

void write_with_manifest(const std::filesystem::path& path, const std::string& content,
                         RunManifest manifest) {
  write_file(path, content);
  Json j = manifest.to_json();
  j["outputs"] = Json::array({Json{{"path", path.filename().string()},
                                   {"sha256", sha256_hex(content)},
                                   {"bytes", content.size()}}});
  write_file(manifest_path_for(path), dump_json(j) + "\n");
}

}  // namespace vcbound::cli
