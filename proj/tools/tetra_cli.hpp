#pragma once

// Command-line frontend.  Exit codes: 0 success / relation holds,
// 1 verified false, 2 usage or parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tetra/gf2.hpp"
#include "tetra/quantum.hpp"
#include "tetra/report.hpp"
#include "tetra/search.hpp"
#include "tetra/store.hpp"
#include "tetra/verify.hpp"

namespace tetra::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

struct Invocation {
  unsigned threads = 0;
  bool json = false;
  bool csv = false;

  ReportFormat format() const { return json ? ReportFormat::json : csv ? ReportFormat::csv : ReportFormat::text; }
};

namespace detail {

inline std::vector<Mat3> parse_all(const std::vector<std::string>& texts) {
  std::vector<Mat3> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Mat3::parse(t));
  return out;
}

inline void print_counts(std::ostream& out, const Invocation& inv, const SixTupleCounts& c, bool nontrivial) {
  if (inv.json) {
    nlohmann::ordered_json j{{"raw", c.raw}, {"deduplicated", c.deduplicated}};
    if (nontrivial) {
      j["nontrivial_raw"] = c.nontrivial_raw;
      j["nontrivial_deduplicated"] = c.nontrivial_deduplicated;
    }
    out << j.dump() << '\n';
    return;
  }
  out << "raw: " << c.raw << '\n' << "deduplicated: " << c.deduplicated << '\n';
  if (nontrivial)
    out << "nontrivial raw: " << c.nontrivial_raw << '\n'
        << "nontrivial deduplicated: " << c.nontrivial_deduplicated << '\n';
}

inline void print_pairs(std::ostream& out, const Invocation& inv, Mat3 r1, Mat3 r2, Mat3 r3,
                        const std::vector<ModifiedPair>& pairs) {
  if (inv.format() == ReportFormat::text) {
    out << "triple " << r1.to_string() << ' ' << r2.to_string() << ' ' << r3.to_string() << ": " << pairs.size()
        << " pair(s)\n";
    for (const auto& p : pairs) out << "  R4=" << p.r4.to_string() << " Q4=" << p.q4.to_string() << '\n';
    return;
  }
  RowWriter w(out, inv.format());
  for (const auto& p : pairs) w.write(p);
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact search and verification of two-colour tetrahedron-equation solutions over F2", "tetra"};
  app.require_subcommand(1);
  Invocation inv;
  app.add_option("--threads", inv.threads, "Worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);
  auto* json_flag = app.add_flag("--json", inv.json, "JSON-lines output");
  app.add_flag("--csv", inv.csv, "CSV output")->excludes(json_flag);
  app.fallthrough();

  int code = kOk;

  auto* enumerate = app.add_subcommand("enumerate-gl", "List GL(3,F2) in packing order");
  bool count_only = false;
  enumerate->add_flag("--count", count_only, "Print only the number of elements");
  enumerate->callback([&] {
    const auto& gl = enumerate_gl3();
    if (count_only) {
      out << gl.size() << '\n';
      return;
    }
    for (Mat3 m : gl) out << m.to_string() << '\n';
  });

  auto* base = app.add_subcommand("search-base", "Find all base solutions and save the store");
  std::string base_out;
  bool unrestricted = false, force_unrestricted = false;
  base->add_option("--out", base_out, "Store file to write")->required();
  base->add_flag("--all-matrices", unrestricted, "Search all 512 matrices instead of GL(3,F2)");
  base->add_flag("--force", force_unrestricted, "Allow the 512^4 unrestricted search");
  base->callback([&] {
    SearchOptions opts;
    opts.threads = inv.threads;
    opts.restrict_invertible = !unrestricted;
    opts.allow_unrestricted = force_unrestricted;
    const SolutionStore store = search_base(opts);
    save_store(store, base_out);
    if (inv.json)
      out << nlohmann::ordered_json{{"count", store.size()}, {"checksum", hex64(store_checksum(store))}}.dump()
          << '\n';
    else
      out << store.size() << '\n';
  });

  auto* six = app.add_subcommand("search-sixtuples", "Count six-tuples over a saved store");
  std::string store_path;
  bool nontrivial = false, list = false;
  six->add_option("--store", store_path, "Store file from search-base")->required();
  six->add_flag("--nontrivial", nontrivial, "Report (and list) only genuinely 3D six-tuples");
  six->add_flag("--list", list, "Stream the six-tuples before the counts");
  six->callback([&] {
    const SolutionStore store = load_store(store_path);
    RowWriter w(out, inv.format());
    SixTupleSink sink;
    if (list)
      sink = [&](const SixTuple& t) {
        if (!nontrivial || filter_nontrivial(t)) w.write(t);
      };
    detail::print_counts(out, inv, search_sixtuples(store, sink), nontrivial);
  });

  auto* mod = app.add_subcommand("search-modified", "Find modified (R4, Q4) pairs");
  std::vector<std::string> triple;
  bool all_triples = false, histogram = false, any_r4 = false;
  std::vector<std::size_t> range;
  auto* triple_opt = mod->add_option("--triple", triple, "R1 R2 R3")->expected(3);
  auto* all_opt = mod->add_flag("--all", all_triples, "Scan every GL(3,F2) triple")->excludes(triple_opt);
  mod->add_option("--range", range, "Linear triple index range [begin end) for --all")->expected(2)->needs(all_opt);
  mod->add_flag("--histogram", histogram, "Print the pair-count histogram");
  mod->add_flag("--all-matrices", any_r4, "Allow singular R4/Q4 candidates");
  mod->callback([&] {
    const bool restrict_inv = !any_r4;
    std::vector<TripleResult> results;
    if (!triple.empty()) {
      const auto m = detail::parse_all(triple);
      results.push_back({m[0], m[1], m[2], search_modified_pairs(m[0], m[1], m[2], restrict_inv)});
    } else if (all_triples) {
      TripleRange r;
      if (!range.empty()) r = {range[0], range[1]};
      results = search_all_modified(r, inv.threads, restrict_inv);
    } else {
      throw CLI::ValidationError("search-modified", "one of --triple or --all is required");
    }
    for (const auto& t : results) detail::print_pairs(out, inv, t.r1, t.r2, t.r3, t.pairs);
    if (histogram) {
      const auto h = pair_count_histogram(results);
      if (inv.json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (auto [k, v] : h) j[std::to_string(k)] = v;
        out << nlohmann::ordered_json{{"histogram", j}}.dump() << '\n';
      } else {
        out << "histogram (pairs: triples):\n";
        for (auto [k, v] : h) out << "  " << k << ": " << v << '\n';
      }
    }
  });

  auto* verify = app.add_subcommand("verify-example", "Run the verification battery for a worked example");
  int example = 0;
  bool no_search = false;
  verify->add_option("example", example, "Example number 1..8")->required()->check(CLI::Range(1, 8));
  verify->add_flag("--no-search", no_search, "Skip the exhaustive pair search (examples 5-8)");
  verify->callback([&] {
    const auto rep = verify_example(example, !no_search);
    if (inv.json) {
      auto checks = nlohmann::ordered_json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      nlohmann::ordered_json j{{"example", rep.example}, {"passed", rep.passed()}, {"checks", checks}};
      if (example <= 4) j["vertex_counts"] = {{"slot3", rep.vertices3}, {"slot4", rep.vertices4}};
      out << j.dump() << '\n';
    } else {
      print_report(out, rep);
    }
    code = rep.passed() ? kOk : kFalse;
  });

  auto* classify = app.add_subcommand("classify", "Genuinely-3D verdict for a matrix");
  std::string classify_arg;
  classify->add_option("matrix", classify_arg, "rrr/rrr/rrr")->required();
  classify->callback([&] {
    const Mat3 m = Mat3::parse(classify_arg);
    const bool g = is_genuinely_3d(m);
    if (inv.json)
      out << nlohmann::ordered_json{{"matrix", m.to_string()}, {"genuinely_3d", g}}.dump() << '\n';
    else
      out << m.to_string() << ": " << (g ? "genuinely 3D" : "block triangular") << '\n';
    code = g ? kOk : kFalse;
  });

  auto* quant = app.add_subcommand("quantize", "Print the 8-state permutation of a matrix");
  std::string quant_arg;
  quant->add_option("matrix", quant_arg, "rrr/rrr/rrr")->required();
  quant->callback([&] {
    const PermOp8 p = quantize(Mat3::parse(quant_arg));
    if (inv.json)
      out << nlohmann::ordered_json{{"matrix", quant_arg}, {"perm", p.to_string()}}.dump() << '\n';
    else
      out << p.to_string() << '\n';
  });

  auto* check = app.add_subcommand("check", "Check a direct-sum or modified relation");
  std::vector<std::string> ds_args, mod_args;
  auto* ds_opt = check->add_option("--ds", ds_args, "R1 R2 R3 R4")->expected(4);
  check->add_option("--modified", mod_args, "R1 R2 R3 R4 Q4")->expected(5)->excludes(ds_opt);
  check->callback([&] {
    if (!ds_args.empty()) {
      const auto m = detail::parse_all(ds_args);
      const bool ds = check_ds_tetra(m[0], m[1], m[2], m[3]);
      std::optional<bool> quantum;
      if (std::all_of(m.begin(), m.end(), [](Mat3 x) { return x.invertible(); })) {
        const PermOp8 q4 = quantize(m[3]);
        quantum = check_quantum_pure(quantize(m[0]), quantize(m[1]), quantize(m[2]), q4, q4);
      }
      if (inv.json) {
        nlohmann::ordered_json j{{"direct_sum", ds}};
        if (quantum) j["quantum"] = *quantum;
        out << j.dump() << '\n';
      } else {
        out << "direct-sum: " << (ds ? "holds" : "does not hold") << '\n';
        if (quantum) out << "quantum: " << (*quantum ? "holds" : "does not hold") << '\n';
      }
      code = ds ? kOk : kFalse;
      return;
    }
    if (mod_args.empty()) throw CLI::ValidationError("check", "one of --ds or --modified is required");
    const auto m = detail::parse_all(mod_args);
    const bool first = check_ds_relation(m[0], m[1], m[2], m[3], m[4]);
    const bool second = check_ds_relation(m[0], m[1], m[2], m[4], m[3]);
    const bool distinct = m[3] != m[4];
    if (inv.json) {
      out << nlohmann::ordered_json{{"r4_q4", first}, {"q4_r4", second}, {"distinct", distinct}}.dump() << '\n';
    } else {
      out << "modified R4|Q4: " << (first ? "holds" : "does not hold") << '\n'
          << "modified Q4|R4: " << (second ? "holds" : "does not hold") << '\n';
      if (!distinct) out << "R4 == Q4: not a modified pair\n";
    }
    code = first && second && distinct ? kOk : kFalse;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Malformed matrices, singular input, unreadable or corrupt stores.
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

}  // namespace tetra::cli
