// Copyright 2026 The galsieve Authors.
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

#ifndef GALSIEVE_TRACE_CACHE_HPP_
#define GALSIEVE_TRACE_CACHE_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galsieve/curves.hpp"

namespace galsieve {

// Curve identity stored in the cache header. Genus 1: {a, b}. Genus 2: the
// coefficients of f, lowest degree first.
struct CurveDescriptor {
  std::uint8_t genus = 1;
  std::vector<i64> coeffs;

  static CurveDescriptor elliptic(i64 a, i64 b) { return {1, {a, b}}; }
  static CurveDescriptor genus2(std::vector<i64> f_low_first) { return {2, std::move(f_low_first)}; }

  bool operator==(const CurveDescriptor&) const = default;

  bool is_good(u64 p) const;
  std::string to_string() const;
};

struct TraceRecord {
  u64 p;
  i64 ap = 0;  // genus 1
  u64 n1 = 0;  // genus 2
  u64 n2 = 0;
};

// Records for every odd good prime p <= max_prime, ascending.
class TraceTable {
 public:
  TraceTable() = default;
  TraceTable(CurveDescriptor curve, u64 max_prime, std::vector<TraceRecord> records);

  const CurveDescriptor& curve() const { return curve_; }
  u64 max_prime() const { return max_prime_; }
  const std::vector<TraceRecord>& records() const { return records_; }
  size_t size() const { return records_.size(); }
  bool covers(double x) const { return static_cast<double>(max_prime_) >= std::floor(x); }
  const TraceRecord* find(u64 p) const;
  // Records with p <= x.
  std::vector<TraceRecord> up_to(double x) const;

  // Frobenius polynomial at a record.
  WeilPolynomial frobenius(const TraceRecord& r) const;

  // Binary layout: "GSTT", u16 version, u8 genus, u64 coefficient count,
  // i64 coefficients, u64 max_prime, fixed-size records, u64 CRC-64/XZ of
  // everything before it. Little endian.
  std::string serialize() const;
  static TraceTable deserialize(const std::string& bytes);

  // Writes to a sibling temporary file and renames it into place.
  void save(const std::filesystem::path& path) const;
  // FormatError on a bad header or checksum, DataCorruptionError when a
  // record fails validation.
  static TraceTable load(const std::filesystem::path& path);

 private:
  CurveDescriptor curve_;
  u64 max_prime_ = 0;
  std::vector<TraceRecord> records_;
};

inline constexpr std::uint16_t kTraceCacheVersion = 1;

std::uint64_t crc64_xz(const void* data, size_t n);

TraceRecord compute_record(const CurveDescriptor& curve, u64 p);

// Computes records for the good odd primes in (from, to] with `workers`
// threads; output is in prime order regardless of the thread count.
std::vector<TraceRecord> compute_records(const CurveDescriptor& curve, u64 from, u64 to, unsigned workers = 1);

// Loads the cache at `path` (if any), extends it to x and saves it back.
// A cache for a different curve raises FormatError.
TraceTable build_trace_table(const CurveDescriptor& curve, double x,
                             const std::optional<std::filesystem::path>& path = std::nullopt,
                             unsigned workers = 1);

// Loads a cache that must already cover x; DataGapError otherwise.
TraceTable require_trace_table(const CurveDescriptor& curve, double x, const std::filesystem::path& path);

}  // namespace galsieve

#endif  // GALSIEVE_TRACE_CACHE_HPP_
