// tests/test_dataio.cpp
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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "speechfis/dataio.hpp"

using namespace speechfis;

namespace {

std::vector<TableRecord> load_fixture(int table_id) {
  return load_table_csv(std::string(SPEECHFIS_DATA_DIR) + "/table" + std::to_string(table_id) +
                        ".csv");
}

const TableRecord& find_record(const std::vector<TableRecord>& records, int window,
                               const std::string& digit, double overlap) {
  for (const TableRecord& r : records) {
    if (r.window_size == window && r.digit == digit && r.overlap_pct == overlap) return r;
  }
  REQUIRE(false);
  return records.front();
}

bool records_equal(const TableRecord& a, const TableRecord& b) {
  const bool frame_equal = (std::isnan(a.frame_size) && std::isnan(b.frame_size)) ||
                           a.frame_size == b.frame_size;
  return a.table_id == b.table_id && a.window_size == b.window_size && a.digit == b.digit &&
         a.base_snr == b.base_snr && a.overlap_pct == b.overlap_pct && frame_equal &&
         a.snr_db == b.snr_db && a.accuracy_pct == b.accuracy_pct;
}

const GroupResult* find_group(const ClaimReport& report, const std::string& key) {
  for (const GroupResult& g : report.groups) {
    if (g.key == key) return &g;
  }
  return nullptr;
}

std::vector<TableRecord> synthetic_group(double snr_at(int), double acc_at(int)) {
  std::vector<TableRecord> records;
  const double overlaps[] = {20, 25, 30, 35, 40, 45, 50, 55, 60};
  for (int i = 0; i < 9; ++i) {
    TableRecord r;
    r.table_id = 9;
    r.window_size = 240;
    r.overlap_pct = overlaps[i];
    r.frame_size = 10.0 + i;
    r.snr_db = snr_at(i);
    r.accuracy_pct = acc_at(i);
    records.push_back(r);
  }
  return records;
}

}  // namespace

TEST_CASE("window-size fixture loads with full printed precision") {
  const auto records = load_fixture(1);
  REQUIRE(records.size() == 63);
  const TableRecord& cell = find_record(records, 240, "", 50.0);
  CHECK(cell.snr_db == 42.9845);
  CHECK(cell.accuracy_pct == 97.1450);
  CHECK(cell.frame_size == 14.0);
  CHECK(cell.digit.empty());
  CHECK_FALSE(cell.base_snr.has_value());
  CHECK(auto_group_by(records) == GroupBy::window_size);
}

TEST_CASE("digit fixture loads labels and base SNR") {
  const auto records = load_fixture(2);
  REQUIRE(records.size() == 90);
  const TableRecord& cell = find_record(records, 240, "Zero", 50.0);
  CHECK(cell.accuracy_pct == 99.1268);
  REQUIRE(cell.base_snr.has_value());
  CHECK(*cell.base_snr == 2.1552);
  CHECK(auto_group_by(records) == GroupBy::digit);
}

TEST_CASE("loader rejects malformed files with the offending row") {
  const char* kHeader =
      "table_id,window_size,digit,base_snr,overlap_pct,frame_size,snr_db,accuracy_pct\n";

  {
    std::istringstream empty("");
    CHECK_THROWS_WITH_AS(parse_table_csv(empty), doctest::Contains("empty"), std::runtime_error);
  }
  {
    std::istringstream bad_header("a,b,c\n");
    CHECK_THROWS_AS(parse_table_csv(bad_header), std::runtime_error);
  }
  {
    std::istringstream missing_col(std::string(kHeader) + "1,240,,,50,14,42.9845\n");
    CHECK_THROWS_WITH_AS(parse_table_csv(missing_col), doctest::Contains("row 2"),
                         std::runtime_error);
  }
  {
    std::istringstream bad_cell(std::string(kHeader) + "1,240,,,50,14,forty,97.1\n");
    CHECK_THROWS_WITH_AS(parse_table_csv(bad_cell), doctest::Contains("non-numeric"),
                         std::runtime_error);
  }
  {
    std::istringstream dup(std::string(kHeader) + "1,240,,,50,14,42.9,97.1\n1,240,,,50,14,41.0,96.0\n");
    CHECK_THROWS_WITH_AS(parse_table_csv(dup), doctest::Contains("duplicate"), std::runtime_error);
  }
  {
    std::istringstream bad_overlap(std::string(kHeader) + "1,240,,,52,14,42.9,97.1\n");
    CHECK_THROWS_WITH_AS(parse_table_csv(bad_overlap), doctest::Contains("overlap"),
                         std::runtime_error);
  }
}

TEST_CASE("snr peak claim holds for every window group") {
  const ClaimReport report = snr_peak_check(load_fixture(1), GroupBy::window_size);
  CHECK(report.claim_id == "snr-peak");
  CHECK(report.groups_checked == 7);
  CHECK(report.groups_passing == 7);
  const GroupResult* g240 = find_group(report, "240");
  REQUIRE(g240 != nullptr);
  CHECK(g240->verdict == Verdict::pass);
  CHECK(g240->witness_overlap == 50.0);
  CHECK(g240->witness_value == 42.9845);
}

TEST_CASE("snr peak claim fails on a flat group and skips incomplete ones") {
  auto flat = synthetic_group([](int) { return 15.0; }, [](int i) { return 90.0 + i; });
  const ClaimReport report = snr_peak_check(flat, GroupBy::window_size);
  REQUIRE(report.groups.size() == 1);
  CHECK(report.groups[0].verdict == Verdict::fail);
  CHECK(report.groups_checked == 1);
  CHECK(report.groups_passing == 0);

  flat.pop_back();
  const ClaimReport partial = snr_peak_check(flat, GroupBy::window_size);
  REQUIRE(partial.groups.size() == 1);
  CHECK(partial.groups[0].verdict == Verdict::unchecked);
  CHECK(partial.groups_checked == 0);
}

TEST_CASE("accuracy argmax claim: passing and failing window groups") {
  const ClaimReport report = accuracy_argmax_report(load_fixture(1), GroupBy::window_size);
  CHECK(report.groups_checked == 7);
  CHECK(report.groups_passing == 5);

  const GroupResult* g255 = find_group(report, "255");
  REQUIRE(g255 != nullptr);
  CHECK(g255->verdict == Verdict::pass);
  CHECK(g255->witness_overlap == 50.0);
  CHECK(g255->witness_value == 98.9489);

  const GroupResult* g240 = find_group(report, "240");
  REQUIRE(g240 != nullptr);
  CHECK(g240->verdict == Verdict::fail);
  CHECK(g240->witness_overlap == 25.0);

  const GroupResult* g260 = find_group(report, "260");
  REQUIRE(g260 != nullptr);
  CHECK(g260->verdict == Verdict::fail);
  CHECK(g260->witness_overlap == 60.0);
}

TEST_CASE("summaries recompute from the printed cells") {
  const auto records = load_fixture(1);
  const auto summaries = summarize(records, GroupBy::window_size);
  REQUIRE(summaries.size() == 7);
  CHECK(summaries[0].key == "240");

  // independent sum over the nine printed accuracy cells of the 240 group
  const double cells[] = {95.6196, 97.6584, 96.3816, 92.0023, 95.8129,
                          96.0878, 97.1450, 96.8232, 97.2298};
  double sum = 0.0;
  double lo = cells[0], hi = cells[0];
  for (double c : cells) {
    sum += c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(summaries[0].rows == 9);
  CHECK(summaries[0].acc_mean == doctest::Approx(sum / 9.0).epsilon(1e-12));
  CHECK(summaries[0].acc_mean == doctest::Approx(96.08451111111111).epsilon(1e-9));
  CHECK(summaries[0].acc_min == lo);
  CHECK(summaries[0].acc_max == hi);

  TableRecord single;
  single.table_id = 1;
  single.window_size = 300;
  single.overlap_pct = 20.0;
  single.snr_db = 12.5;
  single.accuracy_pct = 91.0;
  const auto one = summarize({single}, GroupBy::window_size);
  REQUIRE(one.size() == 1);
  CHECK(one[0].snr_min == 12.5);
  CHECK(one[0].snr_max == 12.5);
  CHECK(one[0].snr_mean == 12.5);

  CHECK_THROWS_AS(summarize({}, GroupBy::window_size), std::invalid_argument);
}

TEST_CASE("loading is lossless through serialize and reload") {
  for (int table : {1, 2, 3, 4, 5}) {
    const auto records = load_fixture(table);
    std::istringstream round(serialize_table_csv(records));
    const auto reloaded = parse_table_csv(round);
    REQUIRE(reloaded.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(records_equal(records[i], reloaded[i]));
    }
  }
}

TEST_CASE("claim checks ignore input row order") {
  auto records = load_fixture(1);
  const std::string baseline_snr = claim_report_json(snr_peak_check(records, GroupBy::window_size));
  const std::string baseline_acc =
      claim_report_json(accuracy_argmax_report(records, GroupBy::window_size));
  std::mt19937 rng(77);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(claim_report_json(snr_peak_check(records, GroupBy::window_size)) == baseline_snr);
    CHECK(claim_report_json(accuracy_argmax_report(records, GroupBy::window_size)) == baseline_acc);
  }
}

TEST_CASE("digit tables report per-digit groups in spoken order") {
  const ClaimReport report = snr_peak_check(load_fixture(2), GroupBy::digit);
  REQUIRE(report.groups.size() == 10);
  CHECK(report.groups[0].key == "Zero");
  CHECK(report.groups[1].key == "One");
  CHECK(report.groups[9].key == "Nine");
  // Eight's SNR sags before 50% in this table; the claim must not pass there.
  const GroupResult* eight = find_group(report, "Eight");
  REQUIRE(eight != nullptr);
  CHECK(eight->verdict == Verdict::fail);
}

TEST_CASE("fixture lint surfaces blank cells and frame-size drops") {
  const auto warnings4 = lint_records(load_fixture(4));
  int blanks = 0;
  for (const std::string& w : warnings4) {
    if (w.find("blank frame size cell") != std::string::npos) ++blanks;
  }
  CHECK(blanks == 2);

  const auto warnings5 = lint_records(load_fixture(5));
  CHECK(std::any_of(warnings5.begin(), warnings5.end(), [](const std::string& w) {
    return w.find("frame size drops") != std::string::npos;
  }));

  CHECK(lint_records(load_fixture(1)).empty());
}

TEST_CASE("claim report renders to json and text") {
  const ClaimReport report = accuracy_argmax_report(load_fixture(1), GroupBy::window_size);
  const std::string json = claim_report_json(report);
  CHECK(json.find("\"claim\": \"acc-argmax\"") != std::string::npos);
  CHECK(json.find("\"groups_passing\": 5") != std::string::npos);

  std::ostringstream text;
  print_claim_report(text, report);
  CHECK(text.str().find("claim acc-argmax: 5/7 checked groups pass") != std::string::npos);
  CHECK(text.str().find("group 240: FAIL") != std::string::npos);
}
