// speechfis/fis_config.hpp
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

#ifndef SPEECHFIS_FIS_CONFIG_HPP_
#define SPEECHFIS_FIS_CONFIG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speechfis/fuzzy.hpp"

namespace speechfis {

enum class Severity { error, warning };

/// One diagnostic from parsing or validation. `line` is 1-based in the
/// source text; 0 when the issue has no source location (in-memory checks).
struct ParseIssue {
  Severity severity = Severity::error;
  int line = 0;
  std::string message;
};

/// Raw sectioned view of a `.fis` text: section headers in file order with
/// their non-blank entry lines and source line numbers.
struct FisDocument {
  struct Section {
    std::string header;  // e.g. "System", "Input1", "Rules"
    int header_line = 0;
    std::vector<std::pair<int, std::string>> entries;  // (line, text)
  };
  std::vector<Section> sections;
};

struct ParseResult {
  std::optional<FisDefinition> fis;  // engaged iff no error issues
  std::vector<ParseIssue> issues;

  bool ok() const { return fis.has_value(); }
  bool has_errors() const;
};

/// Splits text into [Section] blocks. Tolerates LF and CRLF endings and
/// blank lines everywhere; never throws. Lines outside any section or with
/// unrecognized headers are reported through `issues`.
FisDocument lex_fis_document(std::string_view text, std::vector<ParseIssue>& issues);

/// Parses the MATLAB-style `.fis` text format. On success the result holds a
/// validated FisDefinition; otherwise the issue list carries errors with
/// 1-based line numbers. Parsing is total: no input text throws.
ParseResult parse_fis(std::string_view text);

/// Emits the sectioned `.fis` layout with LF endings, sections ordered
/// System, inputs ascending, outputs ascending, Rules. Numbers are printed
/// with shortest round-trip precision, so parse(serialize(f)) == f.
std::string serialize_fis(const FisDefinition& fis);

/// Semantic validation of an in-memory definition. Returns an empty list iff
/// all structural invariants hold; range/support anomalies that the format
/// permits come back as warnings.
std::vector<ParseIssue> validate(const FisDefinition& fis);

bool structurally_equal(const FisDefinition& a, const FisDefinition& b);

/// Shortest round-trip decimal form of a double ("0.8493", "240", "1e-09").
std::string format_number(double value);

std::string issue_to_string(const ParseIssue& issue);

}  // namespace speechfis

#endif  // SPEECHFIS_FIS_CONFIG_HPP_
