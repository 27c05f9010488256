#include "gor/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace gor {

using nlohmann::json;

namespace {

std::string csv_escape(const std::string& s) {
  bool need_quotes = false;
  for (char c : s) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      need_quotes = true;
      break;
    }
  }
  if (!need_quotes) {
    return s;
  }
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"') {
      out.push_back('"');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

json event_to_json(const Event& event) {
  json j;
  j["name"] = event_label(event);
  j["number"] = event.number;
  j["binary"] = binary_label(event);
  j["bits"] = event.bits;
  return j;
}

json subset_to_json(const SubsetSpec& subset) {
  json j;
  j["name"] = subset_name(subset);
  j["number"] = subset.number;
  j["members"] = subset.members;
  j["label"] = subset_label(subset);
  return j;
}

json record_to_json(const OddsRatioRecord& record) {
  json j;
  j["kind"] = kind_label(record.kind);
  j["target"] = event_to_json(record.target);
  j["reference"] = event_to_json(record.reference);
  j["subset"] = subset_to_json(record.subset);
  j["exponent"] = record.exponent;
  j["symbolic"] = symbolic_exponent(record);
  j["value"] = record.value;
  return j;
}

json summary_to_json(const EnsembleSummary& summary) {
  json j;
  j["records"] = summary.n_records;
  j["min"] = summary.min_value;
  j["max"] = summary.max_value;
  j["geometric_mean"] = summary.geometric_mean;
  j["argmin"] = subset_to_json(summary.argmin);
  j["argmax"] = subset_to_json(summary.argmax);
  j["above_one"] = summary.n_above_one;
  j["equal_one"] = summary.n_equal_one;
  j["below_one"] = summary.n_below_one;
  return j;
}

std::vector<std::string> record_row(const OddsRatioRecord& record) {
  return {kind_label(record.kind), event_label(record.target),
          subset_label(record.subset), symbolic_exponent(record),
          format_fixed(record.value)};
}

}  // namespace

std::string event_label(const Event& event) {
  return "E_" + std::to_string(event.number);
}

std::string bits_label(const Event& event) {
  std::string out = "{";
  for (std::size_t i = 0; i < event.bits.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out.push_back(event.bits[i] ? '1' : '0');
  }
  out.push_back('}');
  return out;
}

std::string binary_label(const Event& event) {
  std::string out;
  out.reserve(event.bits.size());
  for (std::uint8_t b : event.bits) {
    out.push_back(b ? '1' : '0');
  }
  return out;
}

std::string subset_label(const SubsetSpec& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.members.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += "x" + std::to_string(subset.members[i]);
  }
  out.push_back('}');
  return out;
}

std::string subset_name(const SubsetSpec& subset) {
  return "S_" + std::to_string(subset.number);
}

std::string kind_label(RatioKind kind) {
  switch (kind) {
    case RatioKind::basic:
      return "basic";
    case RatioKind::group:
      return "group";
    case RatioKind::inverse:
      return "inverse";
  }
  return "unknown";
}

std::string symbolic_exponent(const OddsRatioRecord& record) {
  std::string sum;
  for (std::size_t i = 0; i < record.subset.members.size(); ++i) {
    if (i > 0) {
      sum.push_back('+');
    }
    sum += "b" + std::to_string(record.subset.members[i]);
  }
  if (record.kind == RatioKind::inverse) {
    return "-(" + sum + ")";
  }
  return sum;
}

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void render_text_table(std::ostream& out,
                       const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) {
    return;
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line.append(widths[c] - row[c].size() + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    out << line << '\n';
  }
}

void render_events(std::ostream& out, const std::vector<Event>& events,
                   ReportFormat format) {
  switch (format) {
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"event", "number", "binary", "bits"});
      for (const Event& e : events) {
        rows.push_back({event_label(e), std::to_string(e.number),
                        binary_label(e), bits_label(e)});
      }
      render_text_table(out, rows);
      break;
    }
    case ReportFormat::csv: {
      out << "event,number,binary";
      if (!events.empty()) {
        for (int i = 1; i <= events.front().n_vars; ++i) {
          out << ",x" << i;
        }
      }
      out << '\n';
      for (const Event& e : events) {
        out << event_label(e) << ',' << e.number << ',' << binary_label(e);
        for (std::uint8_t b : e.bits) {
          out << ',' << static_cast<int>(b);
        }
        out << '\n';
      }
      break;
    }
    case ReportFormat::json: {
      json j = json::array();
      for (const Event& e : events) {
        j.push_back(event_to_json(e));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
}

void render_records(std::ostream& out,
                    const std::vector<OddsRatioRecord>& records,
                    ReportFormat format, const EnsembleSummary* summary) {
  switch (format) {
    case ReportFormat::table: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"kind", "target", "subset", "exponent", "value"});
      for (const OddsRatioRecord& r : records) {
        rows.push_back(record_row(r));
      }
      render_text_table(out, rows);
      if (summary != nullptr) {
        out << '\n';
        render_summary_text(out, *summary);
      }
      break;
    }
    case ReportFormat::csv: {
      CsvRecordWriter writer(out);
      for (const OddsRatioRecord& r : records) {
        writer.add(r);
      }
      break;
    }
    case ReportFormat::json: {
      json j;
      j["records"] = json::array();
      for (const OddsRatioRecord& r : records) {
        j["records"].push_back(record_to_json(r));
      }
      if (summary != nullptr) {
        j["summary"] = summary_to_json(*summary);
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
}

CsvRecordWriter::CsvRecordWriter(std::ostream& out) : out_(out) {
  out_ << "kind,target,nu,subset,exponent,value\n";
}

void CsvRecordWriter::add(const OddsRatioRecord& record) {
  out_ << kind_label(record.kind) << ',' << event_label(record.target) << ','
       << record.target.number << ',' << csv_escape(subset_label(record.subset))
       << ',' << symbolic_exponent(record) << ',' << format_full(record.value)
       << '\n';
}

void render_summary_text(std::ostream& out, const EnsembleSummary& summary) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"summary", ""});
  rows.push_back({"  records", std::to_string(summary.n_records)});
  rows.push_back({"  min", format_fixed(summary.min_value) + "  (" +
                               subset_name(summary.argmin) + " = " +
                               subset_label(summary.argmin) + ")"});
  rows.push_back({"  max", format_fixed(summary.max_value) + "  (" +
                               subset_name(summary.argmax) + " = " +
                               subset_label(summary.argmax) + ")"});
  rows.push_back({"  geometric mean", format_fixed(summary.geometric_mean)});
  rows.push_back({"  above 1", std::to_string(summary.n_above_one)});
  rows.push_back({"  equal 1", std::to_string(summary.n_equal_one)});
  rows.push_back({"  below 1", std::to_string(summary.n_below_one)});
  render_text_table(out, rows);
}

}  // namespace gor
