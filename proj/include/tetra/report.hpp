#pragma once

// JSON-lines and CSV rows for search results.  Both formats carry the same
// fields; matrices use the "rrr/rrr/rrr" text form.

#include <json.hpp>

#include <ostream>
#include <string>

#include "tetra/quantum.hpp"
#include "tetra/search.hpp"

namespace tetra {

enum class ReportFormat { text, json, csv };

inline nlohmann::ordered_json to_json(const SolutionRecord& r) {
  return {{"r1", r.r1.to_string()}, {"r2", r.r2.to_string()}, {"r3", r.r3.to_string()}, {"r4", r.r4.to_string()}};
}

inline nlohmann::ordered_json to_json(const SixTuple& t) {
  return {{"r1", t.r1.to_string()}, {"r2", t.r2.to_string()}, {"r3", t.r3.to_string()},
          {"r4", t.r4.to_string()}, {"s3", t.s3.to_string()}, {"s4", t.s4.to_string()},
          {"nontrivial", filter_nontrivial(t)}};
}

inline nlohmann::ordered_json to_json(const ModifiedPair& p) {
  return {{"r1", p.r1.to_string()}, {"r2", p.r2.to_string()}, {"r3", p.r3.to_string()},
          {"r4", p.r4.to_string()}, {"q4", p.q4.to_string()}};
}

template <std::size_t N>
nlohmann::ordered_json to_json(const WeightedOp<N>& w) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : w.terms) terms.push_back({{"coefficient", t.coeff.to_string()}, {"perm", t.op.to_string()}});
  return {{"dim", N}, {"terms", terms}};
}

inline std::string csv_header(const SolutionRecord&) { return "r1,r2,r3,r4"; }
inline std::string csv_header(const SixTuple&) { return "r1,r2,r3,r4,s3,s4,nontrivial"; }
inline std::string csv_header(const ModifiedPair&) { return "r1,r2,r3,r4,q4"; }

inline std::string csv_row(const SolutionRecord& r) {
  return r.r1.to_string() + ',' + r.r2.to_string() + ',' + r.r3.to_string() + ',' + r.r4.to_string();
}

inline std::string csv_row(const SixTuple& t) {
  return t.r1.to_string() + ',' + t.r2.to_string() + ',' + t.r3.to_string() + ',' + t.r4.to_string() + ',' +
         t.s3.to_string() + ',' + t.s4.to_string() + ',' + (filter_nontrivial(t) ? "true" : "false");
}

inline std::string csv_row(const ModifiedPair& p) {
  return p.r1.to_string() + ',' + p.r2.to_string() + ',' + p.r3.to_string() + ',' + p.r4.to_string() + ',' +
         p.q4.to_string();
}

// Writes one row; the CSV header is emitted before the first row only.
class RowWriter {
 public:
  RowWriter(std::ostream& os, ReportFormat format) : os_(os), format_(format) {}

  template <typename Row>
  void write(const Row& row) {
    switch (format_) {
      case ReportFormat::json:
        os_ << to_json(row).dump() << '\n';
        break;
      case ReportFormat::csv:
        if (!header_done_) {
          os_ << csv_header(row) << '\n';
          header_done_ = true;
        }
        os_ << csv_row(row) << '\n';
        break;
      case ReportFormat::text:
        os_ << text_row(row) << '\n';
        break;
    }
  }

 private:
  static std::string text_row(const SolutionRecord& r) {
    return r.r1.to_string() + ' ' + r.r2.to_string() + ' ' + r.r3.to_string() + ' ' + r.r4.to_string();
  }
  static std::string text_row(const SixTuple& t) {
    return t.r1.to_string() + ' ' + t.r2.to_string() + ' ' + t.r3.to_string() + ' ' + t.r4.to_string() + ' ' +
           t.s3.to_string() + ' ' + t.s4.to_string();
  }
  static std::string text_row(const ModifiedPair& p) {
    return p.r1.to_string() + ' ' + p.r2.to_string() + ' ' + p.r3.to_string() + "  {" + p.r4.to_string() + ", " +
           p.q4.to_string() + '}';
  }

  std::ostream& os_;
  ReportFormat format_;
  bool header_done_ = false;
};

}  // namespace tetra
