#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pybox/boxes.hpp"
#include "pybox/quadruples.hpp"
#include "pybox/report.hpp"
#include "pybox/triples.hpp"

namespace pybox {

/// One line of canonical output: a record kind plus an ordered list of
/// (key, value) fields. An empty value marks a field that is absent for
/// this record (an irrational diagonal, provenance that does not apply);
/// the plain renderer skips it, the CSV renderer leaves the cell empty.
struct OutputRecord {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;
};

enum class RecordFormat { Plain, Csv };

inline std::string render_plain(const OutputRecord& rec) {
  std::string line = rec.kind;
  for (const auto& [key, value] : rec.fields) {
    if (value.empty()) continue;
    line += ' ';
    line += key;
    line += '=';
    line += value;
  }
  return line;
}

inline std::string render_csv_header(const OutputRecord& rec) {
  std::string line = "kind";
  for (const auto& [key, value] : rec.fields) {
    line += ',';
    line += key;
  }
  return line;
}

inline std::string render_csv_row(const OutputRecord& rec) {
  std::string line = rec.kind;
  for (const auto& [key, value] : rec.fields) {
    line += ',';
    line += value;
  }
  return line;
}

/// Streams records in either format; in CSV mode a header row is emitted
/// whenever the record kind changes.
class RecordEmitter {
 public:
  RecordEmitter(std::ostream& out, RecordFormat format) : out_(out), format_(format) {}

  void emit(const OutputRecord& rec) {
    if (format_ == RecordFormat::Csv) {
      if (rec.kind != last_kind_) {
        out_ << render_csv_header(rec) << '\n';
        last_kind_ = rec.kind;
      }
      out_ << render_csv_row(rec) << '\n';
    } else {
      out_ << render_plain(rec) << '\n';
    }
  }

 private:
  std::ostream& out_;
  RecordFormat format_;
  std::string last_kind_;
};

namespace detail {

inline std::string str(u64 v) { return std::to_string(v); }

inline std::string root_or_empty(u64 square) {
  const auto r = perfect_square_root(square);
  return r ? std::to_string(*r) : std::string{};
}

}  // namespace detail

inline OutputRecord triple_record(const TripleParams& p, const Triple& t) {
  return OutputRecord{"triple",
                      {{"M", detail::str(p.m)},
                       {"N", detail::str(p.n)},
                       {"a", detail::str(t.a)},
                       {"b", detail::str(t.b)},
                       {"c", detail::str(t.c)}}};
}

inline OutputRecord quadruple_record(const Quadruple& q, std::string_view source) {
  return OutputRecord{"quadruple",
                      {{"x", detail::str(q.x)},
                       {"y", detail::str(q.y)},
                       {"z", detail::str(q.z)},
                       {"t", detail::str(q.t)},
                       {"source", std::string(source)}}};
}

struct BoxProvenance {
  std::string source;  // "result2" or "search"
  std::string branch;  // "even-m1", "odd-m1" or empty
  std::optional<Result2Params> params;
};

/// Boxes always carry the squared diagonals; the integer fields s, u, w
/// appear only when the corresponding face diagonal is an integer, so
/// irrational diagonals remain exactly representable.
inline OutputRecord box_record(const PythagoreanBox& pb, const BoxProvenance& origin) {
  const BoxCandidate& b = pb.box;
  OutputRecord rec{"box",
                   {{"x", detail::str(b.x)},
                    {"y", detail::str(b.y)},
                    {"z", detail::str(b.z)},
                    {"t", detail::str(pb.t)},
                    {"s", detail::root_or_empty(b.s2)},
                    {"u", detail::root_or_empty(b.u2)},
                    {"w", detail::root_or_empty(b.w2)},
                    {"s2", detail::str(b.s2)},
                    {"u2", detail::str(b.u2)},
                    {"w2", detail::str(b.w2)},
                    {"source", origin.source},
                    {"branch", origin.branch}}};
  const auto param_str = [&](u64 Result2Params::* field) {
    return origin.params ? detail::str((*origin.params).*field) : std::string{};
  };
  rec.fields.emplace_back("M1", param_str(&Result2Params::m1));
  rec.fields.emplace_back("N1", param_str(&Result2Params::n1));
  rec.fields.emplace_back("N2", param_str(&Result2Params::n2));
  rec.fields.emplace_back("M2", param_str(&Result2Params::m2));
  return rec;
}

inline OutputRecord witness_record(const Result1Witness& w) {
  return OutputRecord{"witness",
                      {{"M1", detail::str(w.m1)},
                       {"N1", detail::str(w.n1)},
                       {"M2", detail::str(w.m2)},
                       {"N2", detail::str(w.n2)},
                       {"delta", detail::str(w.delta)}}};
}

/// Partial witness from splitting a single Pythagorean pair (w, y, t).
inline OutputRecord wyt_record(const WytParts& parts) {
  return OutputRecord{"witness",
                      {{"M1", ""},
                       {"N1", ""},
                       {"M2", detail::str(parts.m2)},
                       {"N2", detail::str(parts.n2)},
                       {"delta", detail::str(parts.delta)}}};
}

inline OutputRecord report_record(std::string_view search, std::string_view bound_kind,
                                  const SearchReport& report,
                                  std::vector<std::pair<std::string, std::string>> extras = {}) {
  OutputRecord rec{"report",
                   {{"search", std::string(search)},
                    {"bound-kind", std::string(bound_kind)},
                    {"bound", detail::str(report.bound)},
                    {"count", detail::str(report.count)},
                    {"min-t", report.min_t ? detail::str(*report.min_t) : std::string{}}}};
  for (auto& extra : extras) rec.fields.push_back(std::move(extra));
  return rec;
}

}  // namespace pybox
