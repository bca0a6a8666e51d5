// speechfis/dataio.cpp
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

#include "speechfis/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "speechfis/fis_config.hpp"

namespace speechfis {

namespace {

constexpr double kOverlaps[] = {20, 25, 30, 35, 40, 45, 50, 55, 60};

const char* kHeader = "table_id,window_size,digit,base_snr,overlap_pct,frame_size,snr_db,accuracy_pct";

[[noreturn]] void row_error(int row, const std::string& what) {
  throw std::runtime_error("table csv row " + std::to_string(row) + ": " + what);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_cell(const std::string& cell, int row, const char* column) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    row_error(row, std::string("non-numeric ") + column + " cell '" + cell + "'");
  }
  return v;
}

int digit_rank(const std::string& digit) {
  static const std::map<std::string, int> ranks = {
      {"Zero", 0}, {"One", 1}, {"Two", 2},   {"Three", 3}, {"Four", 4},
      {"Five", 5}, {"Six", 6}, {"Seven", 7}, {"Eight", 8}, {"Nine", 9}};
  const auto it = ranks.find(digit);
  return it == ranks.end() ? 10 : it->second;
}

// Canonical grouping key: one group per (table, window, digit), ordered by
// table id, then window size, then spoken-digit order.
struct GroupKey {
  int table_id;
  int window_size;
  std::string digit;

  bool operator<(const GroupKey& other) const {
    if (table_id != other.table_id) return table_id < other.table_id;
    if (window_size != other.window_size) return window_size < other.window_size;
    const int ra = digit_rank(digit);
    const int rb = digit_rank(other.digit);
    if (ra != rb) return ra < rb;
    return digit < other.digit;
  }
};

using Groups = std::map<GroupKey, std::map<double, const TableRecord*>>;

Groups group_records(const std::vector<TableRecord>& records) {
  Groups groups;
  for (const TableRecord& r : records) {
    groups[GroupKey{r.table_id, r.window_size, r.digit}][r.overlap_pct] = &r;
  }
  return groups;
}

std::string display_key(const GroupKey& key, GroupBy group_by, bool multi_table) {
  std::string name = group_by == GroupBy::digit && !key.digit.empty()
                         ? key.digit
                         : std::to_string(key.window_size);
  if (multi_table) name = "t" + std::to_string(key.table_id) + ":" + name;
  return name;
}

bool multi_table(const std::vector<TableRecord>& records) {
  std::set<int> ids;
  for (const TableRecord& r : records) ids.insert(r.table_id);
  return ids.size() > 1;
}

bool group_complete(const std::map<double, const TableRecord*>& cells) {
  if (cells.size() != std::size(kOverlaps)) return false;
  for (double o : kOverlaps) {
    if (cells.find(o) == cells.end()) return false;
  }
  return true;
}

void finalize(ClaimReport& report) {
  for (const GroupResult& g : report.groups) {
    if (g.verdict == Verdict::unchecked) continue;
    ++report.groups_checked;
    if (g.verdict == Verdict::pass) ++report.groups_passing;
  }
}

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::vector<TableRecord> parse_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("table csv: empty file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) {
    throw std::runtime_error(std::string("table csv: header must be '") + kHeader + "'");
  }

  std::vector<TableRecord> records;
  std::set<std::tuple<int, int, std::string, double>> seen;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 8) {
      row_error(row, "expected 8 columns, got " + std::to_string(fields.size()));
    }
    TableRecord rec;
    rec.table_id = static_cast<int>(parse_cell(fields[0], row, "table_id"));
    rec.window_size = static_cast<int>(parse_cell(fields[1], row, "window_size"));
    rec.digit = fields[2];
    if (!fields[3].empty()) rec.base_snr = parse_cell(fields[3], row, "base_snr");
    rec.overlap_pct = parse_cell(fields[4], row, "overlap_pct");
    rec.frame_size = fields[5].empty() ? std::nan("") : parse_cell(fields[5], row, "frame_size");
    rec.snr_db = parse_cell(fields[6], row, "snr_db");
    rec.accuracy_pct = parse_cell(fields[7], row, "accuracy_pct");

    if (std::find(std::begin(kOverlaps), std::end(kOverlaps), rec.overlap_pct) ==
        std::end(kOverlaps)) {
      row_error(row, "overlap_pct must be one of 20,25,...,60, got " + fields[4]);
    }
    if (!(rec.accuracy_pct >= 0.0 && rec.accuracy_pct <= 100.0)) {
      row_error(row, "accuracy_pct out of [0, 100]");
    }
    if (!std::isfinite(rec.snr_db)) {
      row_error(row, "snr_db must be finite");
    }
    if (!seen.emplace(rec.table_id, rec.window_size, rec.digit, rec.overlap_pct).second) {
      row_error(row, "duplicate (group, overlap) key");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TableRecord> load_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open table csv '" + path.string() + "'");
  }
  try {
    return parse_table_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::string serialize_table_csv(const std::vector<TableRecord>& records) {
  std::string out = kHeader;
  out += '\n';
  for (const TableRecord& r : records) {
    out += std::to_string(r.table_id);
    out += ',';
    out += std::to_string(r.window_size);
    out += ',';
    out += r.digit;
    out += ',';
    if (r.base_snr) out += format_number(*r.base_snr);
    out += ',';
    out += format_number(r.overlap_pct);
    out += ',';
    if (!std::isnan(r.frame_size)) out += format_number(r.frame_size);
    out += ',';
    out += format_number(r.snr_db);
    out += ',';
    out += format_number(r.accuracy_pct);
    out += '\n';
  }
  return out;
}

GroupBy auto_group_by(const std::vector<TableRecord>& records) {
  for (const TableRecord& r : records) {
    if (!r.digit.empty()) return GroupBy::digit;
  }
  return GroupBy::window_size;
}

ClaimReport snr_peak_check(const std::vector<TableRecord>& records, GroupBy group_by) {
  ClaimReport report;
  report.claim_id = "snr-peak";
  const bool multi = multi_table(records);
  for (const auto& [key, cells] : group_records(records)) {
    GroupResult g;
    g.key = display_key(key, group_by, multi);
    if (!group_complete(cells)) {
      g.verdict = Verdict::unchecked;
      g.note = "incomplete group: expected all nine overlap cells, found " +
               std::to_string(cells.size());
      report.groups.push_back(std::move(g));
      continue;
    }

    double best = cells.begin()->second->snr_db;
    double best_overlap = cells.begin()->first;
    for (const auto& [overlap, rec] : cells) {
      if (rec->snr_db > best) {
        best = rec->snr_db;
        best_overlap = overlap;
      }
    }
    g.witness_overlap = best_overlap;
    g.witness_value = best;

    g.verdict = Verdict::pass;
    for (std::size_t i = 1; i < std::size(kOverlaps); ++i) {
      const double prev = cells.at(kOverlaps[i - 1])->snr_db;
      const double cur = cells.at(kOverlaps[i])->snr_db;
      const bool rising_leg = kOverlaps[i] <= 50.0;
      if ((rising_leg && !(cur > prev)) || (!rising_leg && !(cur < prev))) {
        g.verdict = Verdict::fail;
        g.note = "SNR not strictly " + std::string(rising_leg ? "rising" : "falling") +
                 " between " + format_number(kOverlaps[i - 1]) + "% and " +
                 format_number(kOverlaps[i]) + "% (" + fmt4(prev) + " -> " + fmt4(cur) + ")";
        break;
      }
    }
    report.groups.push_back(std::move(g));
  }
  finalize(report);
  return report;
}

ClaimReport accuracy_argmax_report(const std::vector<TableRecord>& records, GroupBy group_by) {
  ClaimReport report;
  report.claim_id = "acc-argmax";
  const bool multi = multi_table(records);
  for (const auto& [key, cells] : group_records(records)) {
    GroupResult g;
    g.key = display_key(key, group_by, multi);
    if (!group_complete(cells)) {
      g.verdict = Verdict::unchecked;
      g.note = "incomplete group: expected all nine overlap cells, found " +
               std::to_string(cells.size());
      report.groups.push_back(std::move(g));
      continue;
    }

    double best = -1.0;
    double best_overlap = 0.0;
    for (double overlap : kOverlaps) {
      const double acc = cells.at(overlap)->accuracy_pct;
      if (acc > best) {
        best = acc;
        best_overlap = overlap;
      }
    }
    g.witness_overlap = best_overlap;
    g.witness_value = best;
    if (best_overlap >= 45.0 && best_overlap <= 55.0) {
      g.verdict = Verdict::pass;
    } else {
      g.verdict = Verdict::fail;
      g.note = "accuracy argmax at " + format_number(best_overlap) + "% lies outside [45, 55]";
    }
    report.groups.push_back(std::move(g));
  }
  finalize(report);
  return report;
}

std::vector<GroupSummary> summarize(const std::vector<TableRecord>& records, GroupBy group_by) {
  if (records.empty()) {
    throw std::invalid_argument("summarize: no records");
  }
  const bool multi = multi_table(records);
  std::vector<GroupSummary> out;
  for (const auto& [key, cells] : group_records(records)) {
    GroupSummary s;
    s.key = display_key(key, group_by, multi);
    s.rows = static_cast<int>(cells.size());
    double snr_sum = 0.0, acc_sum = 0.0;
    bool first = true;
    for (const auto& [overlap, rec] : cells) {
      if (first) {
        s.snr_min = s.snr_max = rec->snr_db;
        s.acc_min = s.acc_max = rec->accuracy_pct;
        first = false;
      } else {
        s.snr_min = std::min(s.snr_min, rec->snr_db);
        s.snr_max = std::max(s.snr_max, rec->snr_db);
        s.acc_min = std::min(s.acc_min, rec->accuracy_pct);
        s.acc_max = std::max(s.acc_max, rec->accuracy_pct);
      }
      snr_sum += rec->snr_db;
      acc_sum += rec->accuracy_pct;
    }
    s.snr_mean = snr_sum / s.rows;
    s.acc_mean = acc_sum / s.rows;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> lint_records(const std::vector<TableRecord>& records) {
  std::vector<std::string> warnings;
  const bool multi = multi_table(records);
  for (const auto& [key, cells] : group_records(records)) {
    const std::string name = display_key(key, GroupBy::digit, multi);
    double prev = std::nan("");
    double prev_overlap = 0.0;
    for (const auto& [overlap, rec] : cells) {
      if (std::isnan(rec->frame_size)) {
        warnings.push_back("table " + std::to_string(key.table_id) + " group " + name +
                           " overlap " + format_number(overlap) + "%: blank frame size cell");
        continue;
      }
      if (!std::isnan(prev) && rec->frame_size < prev) {
        warnings.push_back("table " + std::to_string(key.table_id) + " group " + name +
                           ": frame size drops from " + fmt4(prev) + " to " +
                           fmt4(rec->frame_size) + " between overlaps " +
                           format_number(prev_overlap) + "% and " + format_number(overlap) + "%");
      }
      prev = rec->frame_size;
      prev_overlap = overlap;
    }
  }
  return warnings;
}

std::string claim_report_json(const ClaimReport& report) {
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const GroupResult& g : report.groups) {
    const char* verdict = g.verdict == Verdict::pass     ? "pass"
                          : g.verdict == Verdict::fail   ? "fail"
                                                         : "unchecked";
    nlohmann::ordered_json item = {{"key", g.key}, {"verdict", verdict}};
    if (g.verdict != Verdict::unchecked) {
      item["witness_overlap"] = g.witness_overlap;
      item["witness_value"] = g.witness_value;
    }
    if (!g.note.empty()) item["note"] = g.note;
    groups.push_back(std::move(item));
  }
  nlohmann::ordered_json j = {{"claim", report.claim_id},
                              {"groups_checked", report.groups_checked},
                              {"groups_passing", report.groups_passing},
                              {"groups", std::move(groups)}};
  return j.dump(2);
}

void print_claim_report(std::ostream& out, const ClaimReport& report) {
  out << "claim " << report.claim_id << ": " << report.groups_passing << "/"
      << report.groups_checked << " checked groups pass\n";
  for (const GroupResult& g : report.groups) {
    out << "  group " << g.key << ": ";
    switch (g.verdict) {
      case Verdict::pass:
        out << "pass overlap=" << fmt4(g.witness_overlap) << " value=" << fmt4(g.witness_value);
        break;
      case Verdict::fail:
        out << "FAIL overlap=" << fmt4(g.witness_overlap) << " value=" << fmt4(g.witness_value);
        break;
      case Verdict::unchecked:
        out << "unchecked";
        break;
    }
    if (!g.note.empty()) out << " (" << g.note << ")";
    out << "\n";
  }
}

}  // namespace speechfis
