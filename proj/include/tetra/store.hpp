#pragma once

// Text persistence for SolutionStore.
//
//   TETRA-DS-V1 count=<N> field=F2 group=GL3
//   <r1> <r2> <r3> <r4>          (N lines, canonical order, "rrr/rrr/rrr")
//   END <checksum>
//
// The checksum is 64-bit FNV-1a over the record lines, each including its
// terminating '\n', written as 16 lowercase hex digits.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/gf2.hpp"
#include "tetra/search.hpp"

namespace tetra {

inline constexpr std::string_view kStoreMagic = "TETRA-DS-V1";

class StoreFormatError : public std::runtime_error {
 public:
  StoreFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("store line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class Fnv1a64 {
 public:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  constexpr void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= kPrime;
    }
  }
  constexpr std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = kOffset;
};

inline std::string record_line(const SolutionRecord& r) {
  return r.r1.to_string() + ' ' + r.r2.to_string() + ' ' + r.r3.to_string() + ' ' + r.r4.to_string();
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

inline std::uint64_t store_checksum(const SolutionStore& store) {
  Fnv1a64 h;
  for (const auto& r : store.records()) {
    h.update(record_line(r));
    h.update("\n");
  }
  return h.value();
}

inline void save_store(const SolutionStore& store, std::ostream& os) {
  os << kStoreMagic << " count=" << store.size() << " field=F2 group=GL3\n";
  Fnv1a64 h;
  for (const auto& r : store.records()) {
    const std::string line = record_line(r) + '\n';
    h.update(line);
    os << line;
  }
  os << "END " << hex64(h.value()) << '\n';
  if (!os) throw std::runtime_error("failed writing store");
}

inline void save_store(const SolutionStore& store, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  save_store(store, os);
}

inline SolutionStore load_store(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) throw StoreFormatError(lineno, "empty file");

  std::istringstream header(line);
  std::string magic, count_field, field_field, group_field, extra;
  header >> magic >> count_field >> field_field >> group_field;
  if (magic != kStoreMagic) throw StoreFormatError(lineno, "bad magic '" + magic + "'");
  if (field_field != "field=F2" || group_field != "group=GL3" || (header >> extra))
    throw StoreFormatError(lineno, "unsupported header '" + line + "'");
  if (count_field.rfind("count=", 0) != 0) throw StoreFormatError(lineno, "missing count");
  std::size_t count = 0;
  try {
    std::size_t used = 0;
    count = std::stoull(count_field.substr(6), &used);
    if (used != count_field.size() - 6) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw StoreFormatError(lineno, "bad count '" + count_field + "'");
  }

  std::vector<SolutionRecord> records;
  records.reserve(count);
  Fnv1a64 h;
  for (std::size_t i = 0; i < count; ++i) {
    ++lineno;
    if (!std::getline(is, line))
      throw StoreFormatError(lineno, "truncated: expected " + std::to_string(count) + " records, found " +
                                         std::to_string(i));
    if (line.size() != 4 * 11 + 3 || line[11] != ' ' || line[23] != ' ' || line[35] != ' ')
      throw StoreFormatError(lineno, "bad record '" + line + "'");
    SolutionRecord r;
    try {
      r.r1 = Mat3::parse(std::string_view(line).substr(0, 11));
      r.r2 = Mat3::parse(std::string_view(line).substr(12, 11));
      r.r3 = Mat3::parse(std::string_view(line).substr(24, 11));
      r.r4 = Mat3::parse(std::string_view(line).substr(36, 11));
    } catch (const ParseError& e) {
      throw StoreFormatError(lineno, e.what());
    }
    if (!records.empty() && !(records.back() < r)) throw StoreFormatError(lineno, "records out of canonical order");
    if (!check_ds_tetra(r.r1, r.r2, r.r3, r.r4)) throw StoreFormatError(lineno, "record is not a solution");
    h.update(line);
    h.update("\n");
    records.push_back(r);
  }

  ++lineno;
  if (!std::getline(is, line)) throw StoreFormatError(lineno, "truncated: missing END line");
  if (line.rfind("END ", 0) != 0) throw StoreFormatError(lineno, "wrong count: expected END, found '" + line + "'");
  if (line.substr(4) != hex64(h.value()))
    throw StoreFormatError(lineno, "checksum mismatch: file says " + line.substr(4) + ", computed " + hex64(h.value()));
  ++lineno;
  if (std::getline(is, line)) throw StoreFormatError(lineno, "trailing data after END");

  return SolutionStore(std::move(records));
}

inline SolutionStore load_store(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open store '" + path.string() + "'");
  return load_store(is);
}

}  // namespace tetra
