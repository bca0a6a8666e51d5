// speechfis/dataio.hpp
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

#ifndef SPEECHFIS_DATAIO_HPP_
#define SPEECHFIS_DATAIO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace speechfis {

/// One measurement cell of the published result tables: a (group, overlap)
/// pair with its frame size, SNR and word accuracy. Tables keyed by window
/// size leave `digit` empty; digit tables carry the utterance label and its
/// recorded base SNR. frame_size is NaN for the few cells the source table
/// leaves blank.
struct TableRecord {
  int table_id = 0;
  int window_size = 0;
  std::string digit;
  std::optional<double> base_snr;
  double overlap_pct = 0.0;
  double frame_size = 0.0;
  double snr_db = 0.0;
  double accuracy_pct = 0.0;
};

/// Loads records from a CSV with header
/// `table_id,window_size,digit,base_snr,overlap_pct,frame_size,snr_db,accuracy_pct`.
/// Throws std::runtime_error naming the offending row on schema violations,
/// non-numeric cells or duplicate (group, overlap) keys.
std::vector<TableRecord> load_table_csv(const std::filesystem::path& path);

std::vector<TableRecord> parse_table_csv(std::istream& in);

/// Inverse of the loader; reloading the output yields identical records.
std::string serialize_table_csv(const std::vector<TableRecord>& records);

enum class GroupBy { window_size, digit };

/// digit when any record carries a digit label, window_size otherwise.
GroupBy auto_group_by(const std::vector<TableRecord>& records);

enum class Verdict { pass, fail, unchecked };

struct GroupResult {
  std::string key;
  Verdict verdict = Verdict::unchecked;
  double witness_overlap = 0.0;  // peak / argmax overlap
  double witness_value = 0.0;    // SNR or accuracy at the witness overlap
  std::string note;              // violation or incompleteness description
};

struct ClaimReport {
  std::string claim_id;
  int groups_checked = 0;  // pass + fail; unchecked groups excluded
  int groups_passing = 0;
  std::vector<GroupResult> groups;
};

/// Per group: pass iff SNR strictly rises along overlaps 20..50 and strictly
/// falls along 50..60. Groups missing any of the nine overlap cells are
/// reported as unchecked.
ClaimReport snr_peak_check(const std::vector<TableRecord>& records, GroupBy group_by);

/// Per group: the overlap achieving maximal accuracy; pass iff it lies in
/// [45, 55].
ClaimReport accuracy_argmax_report(const std::vector<TableRecord>& records,
                                   GroupBy group_by);

struct GroupSummary {
  std::string key;
  int rows = 0;
  double snr_min = 0.0, snr_max = 0.0, snr_mean = 0.0;
  double acc_min = 0.0, acc_max = 0.0, acc_mean = 0.0;
};

/// Per-group aggregates in canonical key order. Throws std::invalid_argument
/// on empty input.
std::vector<GroupSummary> summarize(const std::vector<TableRecord>& records,
                                    GroupBy group_by);

/// Fixture sanity warnings: blank frame-size cells and frame sizes that drop
/// as overlap grows (transcription anomalies in the published tables).
std::vector<std::string> lint_records(const std::vector<TableRecord>& records);

std::string claim_report_json(const ClaimReport& report);

/// Human-readable rendering, 4-decimal values, one line per group.
void print_claim_report(std::ostream& out, const ClaimReport& report);

}  // namespace speechfis

#endif  // SPEECHFIS_DATAIO_HPP_
