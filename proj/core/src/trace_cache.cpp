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

#include "galsieve/trace_cache.hpp"

#include <boost/crc.hpp>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "galsieve/error.hpp"

namespace galsieve {

namespace {

constexpr char kMagic[4] = {'G', 'S', 'T', 'T'};

// The curve behind a descriptor, built once.
struct CurveModel {
  std::optional<EllipticCurveQ> e;
  std::optional<Genus2CurveQ> c;

  explicit CurveModel(const CurveDescriptor& d) {
    if (d.genus == 1) {
      if (d.coeffs.size() != 2) throw DomainError("elliptic descriptor needs {a, b}");
      e.emplace(d.coeffs[0], d.coeffs[1]);
    } else if (d.genus == 2) {
      std::vector<mpz_class> f;
      for (i64 v : d.coeffs) f.emplace_back(static_cast<long>(v));
      c.emplace(IntPolynomial(std::move(f)));
    } else {
      throw DomainError("curve genus must be 1 or 2");
    }
  }

  bool is_good(u64 p) const { return e ? e->is_good(p) : c->is_good(p); }

  TraceRecord record(u64 p) const {
    TraceRecord r{p};
    if (e) {
      r.ap = ap(*e, p);
    } else {
      const PointCounts pc = count_points_g2(*c, p);
      r.n1 = pc.n1;
      r.n2 = pc.n2;
    }
    return r;
  }

  bool valid(const TraceRecord& r) const {
    return e ? hasse_ok(r.ap, r.p) : weil_ok({r.n1, r.n2}, r.p);
  }
};

size_t record_size(std::uint8_t genus) { return genus == 1 ? 16 : 24; }

template <typename T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));  // host order; the build targets little endian
  out.append(buf, sizeof(T));
}

template <typename T>
T get(const std::string& in, size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw FormatError("trace cache: truncated file");
  T v;
  std::memcpy(&v, in.data() + pos, sizeof(T));
  pos += sizeof(T);
  return v;
}

std::vector<u64> good_primes(const CurveModel& m, u64 from, u64 to) {
  std::vector<u64> out;
  if (to <= from) return out;
  for (u64 p : primes_up_to(static_cast<double>(to)))
    if (p > from && m.is_good(p)) out.push_back(p);
  return out;
}

}  // namespace

std::uint64_t crc64_xz(const void* data, size_t n) {
  boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, ~0ULL, ~0ULL, true, true> crc;
  crc.process_bytes(data, n);
  return crc.checksum();
}

bool CurveDescriptor::is_good(u64 p) const { return CurveModel(*this).is_good(p); }

std::string CurveDescriptor::to_string() const {
  std::ostringstream os;
  os << "genus " << int(genus) << " [";
  for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << "]";
  return os.str();
}

TraceTable::TraceTable(CurveDescriptor curve, u64 max_prime, std::vector<TraceRecord> records)
    : curve_(std::move(curve)), max_prime_(max_prime), records_(std::move(records)) {}

const TraceRecord* TraceTable::find(u64 p) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), p,
                             [](const TraceRecord& r, u64 q) { return r.p < q; });
  return it != records_.end() && it->p == p ? &*it : nullptr;
}

std::vector<TraceRecord> TraceTable::up_to(double x) const {
  std::vector<TraceRecord> out;
  for (const auto& r : records_) {
    if (static_cast<double>(r.p) > x) break;
    out.push_back(r);
  }
  return out;
}

WeilPolynomial TraceTable::frobenius(const TraceRecord& r) const {
  return curve_.genus == 1 ? frobenius_poly_g1(r.ap, r.p) : frobenius_poly_g2({r.n1, r.n2}, r.p);
}

std::string TraceTable::serialize() const {
  std::string out(kMagic, 4);
  put<std::uint16_t>(out, kTraceCacheVersion);
  put<std::uint8_t>(out, curve_.genus);
  put<u64>(out, curve_.coeffs.size());
  for (i64 c : curve_.coeffs) put<i64>(out, c);
  put<u64>(out, max_prime_);
  for (const auto& r : records_) {
    put<u64>(out, r.p);
    if (curve_.genus == 1) {
      put<i64>(out, r.ap);
    } else {
      put<u64>(out, r.n1);
      put<u64>(out, r.n2);
    }
  }
  put<u64>(out, crc64_xz(out.data(), out.size()));
  return out;
}

TraceTable TraceTable::deserialize(const std::string& bytes) {
  if (bytes.size() < 4 + 2 + 1 + 8 + 8 + 8 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("trace cache: bad magic");
  const size_t body = bytes.size() - 8;
  size_t tail = body;
  if (get<u64>(bytes, tail) != crc64_xz(bytes.data(), body)) throw FormatError("trace cache: checksum mismatch");
  size_t pos = 4;
  if (get<std::uint16_t>(bytes, pos) != kTraceCacheVersion) throw FormatError("trace cache: unsupported version");
  CurveDescriptor curve;
  curve.genus = get<std::uint8_t>(bytes, pos);
  if (curve.genus != 1 && curve.genus != 2) throw FormatError("trace cache: bad genus");
  const u64 nc = get<u64>(bytes, pos);
  if (nc > 16) throw FormatError("trace cache: bad coefficient count");
  for (u64 i = 0; i < nc; ++i) curve.coeffs.push_back(get<i64>(bytes, pos));
  const u64 max_prime = get<u64>(bytes, pos);
  const size_t rs = record_size(curve.genus);
  if (pos > body || (body - pos) % rs != 0) throw FormatError("trace cache: partial record");
  std::vector<TraceRecord> records;
  while (pos < body) {
    TraceRecord r{get<u64>(bytes, pos)};
    if (curve.genus == 1) {
      r.ap = get<i64>(bytes, pos);
    } else {
      r.n1 = get<u64>(bytes, pos);
      r.n2 = get<u64>(bytes, pos);
    }
    records.push_back(r);
  }

  CurveModel model(curve);
  const auto expected = good_primes(model, 0, max_prime);
  if (expected.size() != records.size())
    throw DataCorruptionError("trace cache: record count does not match the good primes up to max_prime");
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].p != expected[i])
      throw DataCorruptionError("trace cache: unexpected prime " + std::to_string(records[i].p));
    if (!model.valid(records[i]))
      throw DataCorruptionError("trace cache: record at p=" + std::to_string(records[i].p) +
                                " violates the Hasse-Weil bound");
  }
  return TraceTable(std::move(curve), max_prime, std::move(records));
}

void TraceTable::save(const std::filesystem::path& path) const {
  const std::string bytes = serialize();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataGapError("trace cache: cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataGapError("trace cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

TraceTable TraceTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataGapError("trace cache: cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

TraceRecord compute_record(const CurveDescriptor& curve, u64 p) { return CurveModel(curve).record(p); }

std::vector<TraceRecord> compute_records(const CurveDescriptor& curve, u64 from, u64 to, unsigned workers) {
  const CurveModel model(curve);
  const auto primes = good_primes(model, from, to);
  std::vector<TraceRecord> out(primes.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(primes.size() / 64 + 1)));
  auto run = [&](unsigned w) {
    for (size_t i = w; i < primes.size(); i += workers) out[i] = model.record(primes[i]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return out;
}

TraceTable build_trace_table(const CurveDescriptor& curve, double x,
                             const std::optional<std::filesystem::path>& path, unsigned workers) {
  if (!(x >= 3)) throw DomainError("trace table: x must be >= 3");
  const u64 target = static_cast<u64>(std::floor(x));
  TraceTable table(curve, 0, {});
  if (path && std::filesystem::exists(*path)) {
    table = TraceTable::load(*path);
    if (!(table.curve() == curve))
      throw FormatError("trace cache " + path->string() + " belongs to " + table.curve().to_string());
    if (table.max_prime() >= target) return table;
  }
  auto records = table.records();
  for (auto& r : compute_records(curve, table.max_prime(), target, workers)) records.push_back(r);
  TraceTable grown(curve, target, std::move(records));
  if (path) grown.save(*path);
  return grown;
}

TraceTable require_trace_table(const CurveDescriptor& curve, double x, const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw DataGapError("trace cache " + path.string() + " does not exist");
  TraceTable table = TraceTable::load(path);
  if (!(table.curve() == curve))
    throw FormatError("trace cache " + path.string() + " belongs to " + table.curve().to_string());
  if (!table.covers(x))
    throw DataGapError("trace cache covers p <= " + std::to_string(table.max_prime()) + ", need " +
                       std::to_string(static_cast<u64>(x)));
  return table;
}

}  // namespace galsieve
