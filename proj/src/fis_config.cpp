// speechfis/fis_config.cpp
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

#include "speechfis/fis_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace speechfis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Content between single ASCII apostrophes; rejects anything else.
bool parse_quoted(std::string_view s, std::string& out) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '\'' || s.back() != '\'') return false;
  out.assign(s.substr(1, s.size() - 2));
  return out.find('\'') == std::string::npos;
}

// "[p1 p2 ...]" with arbitrary internal whitespace.
bool parse_bracket_vector(std::string_view s, std::vector<double>& out) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return false;
  s = s.substr(1, s.size() - 2);
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    double v = 0.0;
    if (!parse_double(s.substr(i, j - i), v)) return false;
    out.push_back(v);
    i = j;
  }
  return true;
}

struct SourceMap {
  std::vector<std::vector<int>> input_mf_lines;
  std::vector<std::vector<int>> output_mf_lines;
  std::vector<int> input_lines;
  std::vector<int> output_lines;
  std::vector<int> rule_lines;
};

void add_issue(std::vector<ParseIssue>& issues, Severity sev, int line, std::string msg) {
  issues.push_back(ParseIssue{sev, line, std::move(msg)});
}

// Structural invariants of an assembled definition, with best-effort source
// lines when a SourceMap is available.
void semantic_check(const FisDefinition& fis, std::vector<ParseIssue>& issues,
                    const SourceMap* src) {
  auto var_line = [&](bool input, std::size_t vi) -> int {
    if (!src) return 0;
    const auto& v = input ? src->input_lines : src->output_lines;
    return vi < v.size() ? v[vi] : 0;
  };
  auto mf_line = [&](bool input, std::size_t vi, std::size_t mi) -> int {
    if (!src) return 0;
    const auto& v = input ? src->input_mf_lines : src->output_mf_lines;
    return vi < v.size() && mi < v[vi].size() ? v[vi][mi] : 0;
  };
  auto rule_line = [&](std::size_t ri) -> int {
    if (!src) return 0;
    return ri < src->rule_lines.size() ? src->rule_lines[ri] : 0;
  };

  auto check_variable = [&](const FuzzyVariable& var, bool input, std::size_t vi) {
    const int vline = var_line(input, vi);
    if (!(var.range_lo < var.range_hi)) {
      add_issue(issues, Severity::error, vline,
                "variable '" + var.name + "': range lower bound must be below upper bound");
    }
    if (var.mfs.empty()) {
      add_issue(issues, Severity::error, vline,
                "variable '" + var.name + "': at least one membership function required");
    }
    for (std::size_t mi = 0; mi < var.mfs.size(); ++mi) {
      const MembershipFunction& mf = var.mfs[mi];
      const int mline = mf_line(input, vi, mi);
      for (std::size_t mj = 0; mj < mi; ++mj) {
        if (var.mfs[mj].name == mf.name) {
          add_issue(issues, Severity::error, mline,
                    "variable '" + var.name + "': duplicate MF name '" + mf.name + "'");
        }
      }
      if (mf.kind == MfKind::triangular) {
        if (mf.params.size() != 3) {
          add_issue(issues, Severity::error, mline,
                    "MF '" + mf.name + "': trimf expects 3 parameters");
        } else if (!(mf.params[0] <= mf.params[1] && mf.params[1] <= mf.params[2])) {
          add_issue(issues, Severity::error, mline,
                    "MF '" + mf.name + "': trimf parameters must satisfy a <= b <= c");
        } else if (mf.params[0] < var.range_lo || mf.params[2] > var.range_hi) {
          add_issue(issues, Severity::warning, mline,
                    "MF '" + mf.name + "': support [" + format_number(mf.params[0]) + ", " +
                        format_number(mf.params[2]) + "] extends beyond variable range [" +
                        format_number(var.range_lo) + ", " + format_number(var.range_hi) + "]");
        }
      } else {
        if (mf.params.size() != 2) {
          add_issue(issues, Severity::error, mline,
                    "MF '" + mf.name + "': gaussmf expects 2 parameters");
        } else if (!(mf.params[0] > 0.0)) {
          add_issue(issues, Severity::error, mline,
                    "MF '" + mf.name + "': gaussmf sigma must be > 0");
        }
      }
    }
  };

  for (std::size_t vi = 0; vi < fis.inputs.size(); ++vi) check_variable(fis.inputs[vi], true, vi);
  for (std::size_t vi = 0; vi < fis.outputs.size(); ++vi) check_variable(fis.outputs[vi], false, vi);

  std::vector<std::vector<bool>> output_mf_used(fis.outputs.size());
  for (std::size_t vi = 0; vi < fis.outputs.size(); ++vi) {
    output_mf_used[vi].assign(fis.outputs[vi].mfs.size(), false);
  }

  for (std::size_t ri = 0; ri < fis.rules.size(); ++ri) {
    const FuzzyRule& rule = fis.rules[ri];
    const int rline = rule_line(ri);
    const std::string tag = "rule " + std::to_string(ri + 1);
    if (rule.antecedent.size() != fis.inputs.size()) {
      add_issue(issues, Severity::error, rline,
                tag + ": antecedent arity " + std::to_string(rule.antecedent.size()) +
                    " does not match input count " + std::to_string(fis.inputs.size()));
      continue;
    }
    if (rule.consequent.size() != fis.outputs.size()) {
      add_issue(issues, Severity::error, rline,
                tag + ": consequent arity " + std::to_string(rule.consequent.size()) +
                    " does not match output count " + std::to_string(fis.outputs.size()));
      continue;
    }
    bool any_nonzero = false;
    for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
      const int idx = rule.antecedent[i];
      if (idx < 0) {
        add_issue(issues, Severity::error, rline,
                  tag + ": unsupported feature: negative (NOT) MF index");
      } else if (idx > static_cast<int>(fis.inputs[i].mfs.size())) {
        add_issue(issues, Severity::error, rline,
                  tag + ": antecedent MF index " + std::to_string(idx) + " out of range for '" +
                      fis.inputs[i].name + "' (" + std::to_string(fis.inputs[i].mfs.size()) +
                      " MFs)");
      } else if (idx != 0) {
        any_nonzero = true;
      }
    }
    if (!any_nonzero) {
      add_issue(issues, Severity::error, rline,
                tag + ": at least one nonzero antecedent index required");
    }
    for (std::size_t o = 0; o < rule.consequent.size(); ++o) {
      const int idx = rule.consequent[o];
      if (idx < 0) {
        add_issue(issues, Severity::error, rline,
                  tag + ": unsupported feature: negative (NOT) MF index");
      } else if (idx == 0) {
        add_issue(issues, Severity::error, rline, tag + ": consequent MF index must be nonzero");
      } else if (idx > static_cast<int>(fis.outputs[o].mfs.size())) {
        add_issue(issues, Severity::error, rline,
                  tag + ": consequent MF index " + std::to_string(idx) + " out of range for '" +
                      fis.outputs[o].name + "' (" + std::to_string(fis.outputs[o].mfs.size()) +
                      " MFs)");
      } else {
        output_mf_used[o][static_cast<std::size_t>(idx) - 1] = true;
      }
    }
    if (!(rule.weight > 0.0 && rule.weight <= 1.0)) {
      add_issue(issues, Severity::error, rline, tag + ": weight must be in (0, 1]");
    }
  }

  for (std::size_t vi = 0; vi < fis.outputs.size(); ++vi) {
    for (std::size_t mi = 0; mi < output_mf_used[vi].size(); ++mi) {
      if (!output_mf_used[vi][mi]) {
        add_issue(issues, Severity::warning, mf_line(false, vi, mi),
                  "output MF '" + fis.outputs[vi].mfs[mi].name +
                      "' is not reachable by any rule");
      }
    }
  }
}

struct VariableSection {
  int index = 0;  // 1-based from the header
  int header_line = 0;
  const FisDocument::Section* section = nullptr;
};

// Parses a "key=value" entry; returns false (with an issue) on malformed text.
bool split_key_value(const std::pair<int, std::string>& entry, std::vector<ParseIssue>& issues,
                     std::string& key, std::string& value) {
  const std::string& text = entry.second;
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos) {
    add_issue(issues, Severity::error, entry.first, "expected key=value, got '" + text + "'");
    return false;
  }
  key.assign(trim(std::string_view(text).substr(0, eq)));
  value.assign(trim(std::string_view(text).substr(eq + 1)));
  if (key.empty()) {
    add_issue(issues, Severity::error, entry.first, "empty key before '='");
    return false;
  }
  return true;
}

bool parse_variable_section(const VariableSection& vs, bool is_input,
                            std::vector<ParseIssue>& issues, FuzzyVariable& var,
                            std::vector<int>& mf_lines, int& var_line) {
  const std::string kind = is_input ? "Input" : "Output";
  bool ok = true;
  bool have_name = false, have_range = false;
  int declared_mfs = -1;
  std::map<int, std::pair<int, MembershipFunction>> mfs_by_index;  // index -> (line, mf)
  var_line = vs.header_line;

  for (const auto& entry : vs.section->entries) {
    std::string key, value;
    if (!split_key_value(entry, issues, key, value)) {
      ok = false;
      continue;
    }
    if (key == "Name") {
      if (!parse_quoted(value, var.name)) {
        add_issue(issues, Severity::error, entry.first, "Name must be a quoted string");
        ok = false;
      } else {
        have_name = true;
      }
    } else if (key == "Range") {
      std::vector<double> bounds;
      if (!parse_bracket_vector(value, bounds) || bounds.size() != 2) {
        add_issue(issues, Severity::error, entry.first, "Range must be [lo hi]");
        ok = false;
      } else {
        var.range_lo = bounds[0];
        var.range_hi = bounds[1];
        have_range = true;
      }
    } else if (key == "NumMFs") {
      if (!parse_int(value, declared_mfs) || declared_mfs < 0) {
        add_issue(issues, Severity::error, entry.first, "NumMFs must be a non-negative integer");
        ok = false;
      }
    } else if (key.size() > 2 && key.compare(0, 2, "MF") == 0) {
      int mf_index = 0;
      if (!parse_int(std::string_view(key).substr(2), mf_index) || mf_index < 1) {
        add_issue(issues, Severity::error, entry.first, "malformed MF key '" + key + "'");
        ok = false;
        continue;
      }
      // '<name>':'<type>',[params]
      MembershipFunction mf;
      std::string_view rest = trim(value);
      const std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos) {
        add_issue(issues, Severity::error, entry.first, "malformed MF line: missing ':'");
        ok = false;
        continue;
      }
      const std::size_t comma = rest.find(',', colon);
      if (comma == std::string_view::npos) {
        add_issue(issues, Severity::error, entry.first, "malformed MF line: missing ','");
        ok = false;
        continue;
      }
      std::string type;
      if (!parse_quoted(rest.substr(0, colon), mf.name) ||
          !parse_quoted(rest.substr(colon + 1, comma - colon - 1), type)) {
        add_issue(issues, Severity::error, entry.first,
                  "malformed MF line: name and type must be quoted strings");
        ok = false;
        continue;
      }
      if (type == "trimf") {
        mf.kind = MfKind::triangular;
      } else if (type == "gaussmf") {
        mf.kind = MfKind::gaussian;
      } else {
        add_issue(issues, Severity::error, entry.first, "unsupported MF type '" + type + "'");
        ok = false;
        continue;
      }
      if (!parse_bracket_vector(rest.substr(comma + 1), mf.params)) {
        add_issue(issues, Severity::error, entry.first,
                  "malformed MF line: parameters must be [p1 p2 ...]");
        ok = false;
        continue;
      }
      if (mfs_by_index.count(mf_index) != 0) {
        add_issue(issues, Severity::error, entry.first,
                  "duplicate MF index " + std::to_string(mf_index));
        ok = false;
        continue;
      }
      mfs_by_index.emplace(mf_index, std::make_pair(entry.first, std::move(mf)));
    } else {
      add_issue(issues, Severity::warning, entry.first,
                "unknown [" + kind + std::to_string(vs.index) + "] key '" + key + "'");
    }
  }

  if (!have_name) {
    add_issue(issues, Severity::error, vs.header_line,
              "[" + kind + std::to_string(vs.index) + "] missing Name");
    ok = false;
  }
  if (!have_range) {
    add_issue(issues, Severity::error, vs.header_line,
              "[" + kind + std::to_string(vs.index) + "] missing Range");
    ok = false;
  }
  if (declared_mfs < 0) {
    add_issue(issues, Severity::error, vs.header_line,
              "[" + kind + std::to_string(vs.index) + "] missing NumMFs");
    ok = false;
  }

  int expected = 1;
  for (const auto& [idx, line_mf] : mfs_by_index) {
    if (idx != expected) {
      add_issue(issues, Severity::error, line_mf.first,
                "MF indices must be contiguous from 1 (found MF" + std::to_string(idx) +
                    ", expected MF" + std::to_string(expected) + ")");
      ok = false;
      break;
    }
    ++expected;
  }
  if (declared_mfs >= 0 && static_cast<int>(mfs_by_index.size()) != declared_mfs) {
    add_issue(issues, Severity::error, vs.header_line,
              "MF count mismatch in [" + kind + std::to_string(vs.index) + "]: NumMFs=" +
                  std::to_string(declared_mfs) + " but " + std::to_string(mfs_by_index.size()) +
                  " MF lines");
    ok = false;
  }

  for (auto& [idx, line_mf] : mfs_by_index) {
    mf_lines.push_back(line_mf.first);
    var.mfs.push_back(std::move(line_mf.second));
  }
  return ok;
}

bool parse_rule_line(int line, std::string_view text, std::size_t n_inputs,
                     std::size_t n_outputs, std::vector<ParseIssue>& issues, FuzzyRule& rule) {
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos) {
    add_issue(issues, Severity::error, line, "malformed rule: missing ',' after antecedents");
    return false;
  }
  const std::size_t colon = text.find(':', comma);
  if (colon == std::string_view::npos) {
    add_issue(issues, Severity::error, line, "malformed rule: missing ':' before connective");
    return false;
  }

  auto parse_index_list = [&](std::string_view part, std::vector<int>& out) -> bool {
    std::size_t i = 0;
    while (i < part.size()) {
      while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
      if (i >= part.size()) break;
      std::size_t j = i;
      while (j < part.size() && !std::isspace(static_cast<unsigned char>(part[j]))) ++j;
      int v = 0;
      if (!parse_int(part.substr(i, j - i), v)) {
        add_issue(issues, Severity::error, line,
                  "malformed rule: bad MF index '" + std::string(part.substr(i, j - i)) + "'");
        return false;
      }
      out.push_back(v);
      i = j;
    }
    return true;
  };

  if (!parse_index_list(text.substr(0, comma), rule.antecedent)) return false;

  std::string_view mid = text.substr(comma + 1, colon - comma - 1);
  rule.weight = 1.0;
  bool weight_seen = false;
  const std::size_t open = mid.find('(');
  if (open != std::string_view::npos) {
    const std::size_t close = mid.find(')', open);
    if (close == std::string_view::npos) {
      add_issue(issues, Severity::error, line, "malformed rule: unterminated weight '('");
      return false;
    }
    if (!trim(mid.substr(close + 1)).empty()) {
      add_issue(issues, Severity::error, line, "malformed rule: trailing text after weight");
      return false;
    }
    if (!parse_double(mid.substr(open + 1, close - open - 1), rule.weight)) {
      add_issue(issues, Severity::error, line, "malformed rule: weight is not a number");
      return false;
    }
    weight_seen = true;
    mid = mid.substr(0, open);
  }
  if (!parse_index_list(mid, rule.consequent)) return false;
  if (!weight_seen) {
    add_issue(issues, Severity::warning, line, "rule weight missing; defaulting to 1.0");
  } else if (!(rule.weight > 0.0 && rule.weight <= 1.0)) {
    add_issue(issues, Severity::error, line, "rule weight must be in (0, 1]");
    return false;
  }

  int conn = 0;
  if (!parse_int(text.substr(colon + 1), conn) || (conn != 1 && conn != 2)) {
    add_issue(issues, Severity::error, line, "rule connective must be 1 (AND) or 2 (OR)");
    return false;
  }
  rule.connective = conn == 1 ? Connective::And : Connective::Or;

  if (rule.antecedent.size() != n_inputs) {
    add_issue(issues, Severity::error, line,
              "rule has " + std::to_string(rule.antecedent.size()) + " antecedents, expected " +
                  std::to_string(n_inputs));
    return false;
  }
  if (rule.consequent.size() != n_outputs) {
    add_issue(issues, Severity::error, line,
              "rule has " + std::to_string(rule.consequent.size()) + " consequents, expected " +
                  std::to_string(n_outputs));
    return false;
  }
  return true;
}

}  // namespace

bool ParseResult::has_errors() const {
  return std::any_of(issues.begin(), issues.end(),
                     [](const ParseIssue& i) { return i.severity == Severity::error; });
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "0";
  return std::string(buf, ptr);
}

std::string issue_to_string(const ParseIssue& issue) {
  std::string out = issue.severity == Severity::error ? "error" : "warning";
  if (issue.line > 0) out += " line " + std::to_string(issue.line);
  out += ": " + issue.message;
  return out;
}

FisDocument lex_fis_document(std::string_view text, std::vector<ParseIssue>& issues) {
  FisDocument doc;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = (nl == std::string_view::npos) ? text.substr(pos)
                                                          : text.substr(pos, nl - pos);
    if (nl == std::string_view::npos && raw.empty() && pos == text.size()) break;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view line = trim(raw);
    if (!line.empty()) {
      if (line.front() == '[' && line.back() == ']') {
        FisDocument::Section sec;
        sec.header.assign(trim(line.substr(1, line.size() - 2)));
        sec.header_line = line_no;
        doc.sections.push_back(std::move(sec));
      } else if (doc.sections.empty()) {
        add_issue(issues, Severity::error, line_no, "text outside any [Section]");
      } else {
        doc.sections.back().entries.emplace_back(line_no, std::string(line));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return doc;
}

ParseResult parse_fis(std::string_view text) {
  ParseResult result;
  try {
    FisDocument doc = lex_fis_document(text, result.issues);

    const FisDocument::Section* system = nullptr;
    const FisDocument::Section* rules_section = nullptr;
    std::vector<VariableSection> input_sections;
    std::vector<VariableSection> output_sections;

    for (const auto& sec : doc.sections) {
      if (sec.header == "System") {
        if (system) {
          add_issue(result.issues, Severity::error, sec.header_line, "duplicate [System] section");
        } else {
          system = &sec;
        }
      } else if (sec.header == "Rules") {
        if (rules_section) {
          add_issue(result.issues, Severity::error, sec.header_line, "duplicate [Rules] section");
        } else {
          rules_section = &sec;
        }
      } else if (sec.header.rfind("Input", 0) == 0 || sec.header.rfind("Output", 0) == 0) {
        const bool is_input = sec.header.rfind("Input", 0) == 0;
        const std::size_t prefix = is_input ? 5 : 6;
        int idx = 0;
        if (!parse_int(std::string_view(sec.header).substr(prefix), idx) || idx < 1) {
          add_issue(result.issues, Severity::error, sec.header_line,
                    "malformed section header [" + sec.header + "]");
          continue;
        }
        (is_input ? input_sections : output_sections)
            .push_back(VariableSection{idx, sec.header_line, &sec});
      } else {
        add_issue(result.issues, Severity::error, sec.header_line,
                  "unknown section [" + sec.header + "]");
      }
    }

    if (!system) {
      add_issue(result.issues, Severity::error, 0, "missing [System] section");
      return result;
    }

    FisDefinition fis;
    int declared_inputs = -1, declared_outputs = -1, declared_rules = -1;
    for (const auto& entry : system->entries) {
      std::string key, value;
      if (!split_key_value(entry, result.issues, key, value)) continue;
      if (key == "Name") {
        if (!parse_quoted(value, fis.name)) {
          add_issue(result.issues, Severity::error, entry.first, "Name must be a quoted string");
        }
      } else if (key == "Type") {
        std::string type;
        if (!parse_quoted(value, type) || type != "mamdani") {
          add_issue(result.issues, Severity::error, entry.first,
                    "unsupported Type " + value + " (only 'mamdani' is supported)");
        }
      } else if (key == "Version") {
        // informational
      } else if (key == "NumInputs" || key == "NumOutputs" || key == "NumRules") {
        int v = 0;
        if (!parse_int(value, v) || v < 0) {
          add_issue(result.issues, Severity::error, entry.first,
                    key + " must be a non-negative integer");
        } else if (key == "NumInputs") {
          declared_inputs = v;
        } else if (key == "NumOutputs") {
          declared_outputs = v;
        } else {
          declared_rules = v;
        }
      } else if (key == "AndMethod" || key == "OrMethod" || key == "ImpMethod" ||
                 key == "AggMethod" || key == "DefuzzMethod") {
        static const std::map<std::string, std::string> expected = {
            {"AndMethod", "min"},
            {"OrMethod", "max"},
            {"ImpMethod", "min"},
            {"AggMethod", "max"},
            {"DefuzzMethod", "centroid"},
        };
        std::string method;
        if (!parse_quoted(value, method) || method != expected.at(key)) {
          add_issue(result.issues, Severity::error, entry.first,
                    "unsupported " + key + " " + value + " (only '" + expected.at(key) +
                        "' is supported)");
        }
      } else {
        add_issue(result.issues, Severity::warning, entry.first,
                  "unknown [System] key '" + key + "'");
      }
    }
    for (const char* missing : {"NumInputs", "NumOutputs", "NumRules"}) {
      const int v = missing[3] == 'I'   ? declared_inputs
                    : missing[3] == 'O' ? declared_outputs
                                        : declared_rules;
      if (v < 0) {
        add_issue(result.issues, Severity::error, system->header_line,
                  std::string("[System] missing ") + missing);
      }
    }

    auto assemble_variables = [&](std::vector<VariableSection>& sections, bool is_input,
                                  std::vector<FuzzyVariable>& vars, std::vector<int>& var_lines,
                                  std::vector<std::vector<int>>& mf_lines) {
      std::sort(sections.begin(), sections.end(),
                [](const VariableSection& a, const VariableSection& b) {
                  return a.index < b.index;
                });
      const std::string kind = is_input ? "Input" : "Output";
      for (std::size_t i = 0; i < sections.size(); ++i) {
        const int want = static_cast<int>(i) + 1;
        if (sections[i].index != want) {
          add_issue(result.issues, Severity::error, sections[i].header_line,
                    (sections[i].index == static_cast<int>(i) ? "duplicate [" : "non-contiguous [") +
                        kind + std::to_string(sections[i].index) + "] (expected [" + kind +
                        std::to_string(want) + "])");
          continue;
        }
        FuzzyVariable var;
        std::vector<int> lines;
        int vline = 0;
        parse_variable_section(sections[i], is_input, result.issues, var, lines, vline);
        vars.push_back(std::move(var));
        var_lines.push_back(vline);
        mf_lines.push_back(std::move(lines));
      }
    };

    SourceMap src;
    assemble_variables(input_sections, true, fis.inputs, src.input_lines, src.input_mf_lines);
    assemble_variables(output_sections, false, fis.outputs, src.output_lines, src.output_mf_lines);

    if (declared_inputs >= 0 && static_cast<int>(fis.inputs.size()) != declared_inputs) {
      add_issue(result.issues, Severity::error, system->header_line,
                "input count mismatch: NumInputs=" + std::to_string(declared_inputs) + " but " +
                    std::to_string(fis.inputs.size()) + " [Input] sections");
    }
    if (declared_outputs >= 0 && static_cast<int>(fis.outputs.size()) != declared_outputs) {
      add_issue(result.issues, Severity::error, system->header_line,
                "output count mismatch: NumOutputs=" + std::to_string(declared_outputs) + " but " +
                    std::to_string(fis.outputs.size()) + " [Output] sections");
    }

    if (rules_section) {
      for (const auto& entry : rules_section->entries) {
        FuzzyRule rule;
        if (parse_rule_line(entry.first, entry.second, fis.inputs.size(), fis.outputs.size(),
                            result.issues, rule)) {
          fis.rules.push_back(std::move(rule));
          src.rule_lines.push_back(entry.first);
        }
      }
    }
    if (declared_rules >= 0 && static_cast<int>(fis.rules.size()) != declared_rules &&
        !result.has_errors()) {
      add_issue(result.issues, Severity::error,
                rules_section ? rules_section->header_line : system->header_line,
                "rule count mismatch: NumRules=" + std::to_string(declared_rules) + " but " +
                    std::to_string(fis.rules.size()) + " rule lines");
    }

    if (!result.has_errors()) {
      semantic_check(fis, result.issues, &src);
    }
    if (!result.has_errors()) {
      result.fis = std::move(fis);
    }
  } catch (const std::exception& e) {
    add_issue(result.issues, Severity::error, 0, std::string("internal parse failure: ") + e.what());
    result.fis.reset();
  }
  return result;
}

std::string serialize_fis(const FisDefinition& fis) {
  std::string out;
  out += "[System]\n";
  out += "Name='" + fis.name + "'\n";
  out += "Type='mamdani'\n";
  out += "Version=2.0\n";
  out += "NumInputs=" + std::to_string(fis.inputs.size()) + "\n";
  out += "NumOutputs=" + std::to_string(fis.outputs.size()) + "\n";
  out += "NumRules=" + std::to_string(fis.rules.size()) + "\n";
  out += "AndMethod='min'\n";
  out += "OrMethod='max'\n";
  out += "ImpMethod='min'\n";
  out += "AggMethod='max'\n";
  out += "DefuzzMethod='centroid'\n";

  auto emit_variable = [&out](const FuzzyVariable& var, const char* kind, std::size_t index) {
    out += "\n[" + std::string(kind) + std::to_string(index + 1) + "]\n";
    out += "Name='" + var.name + "'\n";
    out += "Range=[" + format_number(var.range_lo) + " " + format_number(var.range_hi) + "]\n";
    out += "NumMFs=" + std::to_string(var.mfs.size()) + "\n";
    for (std::size_t m = 0; m < var.mfs.size(); ++m) {
      const MembershipFunction& mf = var.mfs[m];
      out += "MF" + std::to_string(m + 1) + "='" + mf.name + "':'" + mf_kind_name(mf.kind) + "',[";
      for (std::size_t p = 0; p < mf.params.size(); ++p) {
        if (p) out += " ";
        out += format_number(mf.params[p]);
      }
      out += "]\n";
    }
  };
  for (std::size_t i = 0; i < fis.inputs.size(); ++i) emit_variable(fis.inputs[i], "Input", i);
  for (std::size_t i = 0; i < fis.outputs.size(); ++i) emit_variable(fis.outputs[i], "Output", i);

  out += "\n[Rules]\n";
  for (const FuzzyRule& rule : fis.rules) {
    std::string line;
    for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
      if (i) line += " ";
      line += std::to_string(rule.antecedent[i]);
    }
    line += ", ";
    for (std::size_t i = 0; i < rule.consequent.size(); ++i) {
      if (i) line += " ";
      line += std::to_string(rule.consequent[i]);
    }
    line += " (" + format_number(rule.weight) + ") : ";
    line += rule.connective == Connective::And ? "1" : "2";
    out += line + "\n";
  }
  return out;
}

std::vector<ParseIssue> validate(const FisDefinition& fis) {
  std::vector<ParseIssue> issues;
  semantic_check(fis, issues, nullptr);
  return issues;
}

bool structurally_equal(const FisDefinition& a, const FisDefinition& b) {
  return a == b;
}

}  // namespace speechfis
