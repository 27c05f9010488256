#ifndef GOR_REPORT_HPP
#define GOR_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gor/model.hpp"
#include "gor/ratios.hpp"

namespace gor {

enum class ReportFormat { table, csv, json };

// Label helpers shared by every renderer.
std::string event_label(const Event& event);        // "E_5"
std::string bits_label(const Event& event);         // "{1,0,1}"
std::string binary_label(const Event& event);       // "101"
std::string subset_label(const SubsetSpec& subset);  // "{x1,x3}", "{}" when empty
std::string subset_name(const SubsetSpec& subset);   // "S_5"
std::string kind_label(RatioKind kind);

// Symbolic exponent: "b1+b3" for forward records, "-(b1+b2+b3)" for the
// inverse.
std::string symbolic_exponent(const OddsRatioRecord& record);

// Human tables use fixed six decimals; csv and json carry full precision.
std::string format_fixed(double value);
std::string format_full(double value);

// Left-aligned column table, two-space separator, last column unpadded.
void render_text_table(std::ostream& out,
                       const std::vector<std::vector<std::string>>& rows);

void render_events(std::ostream& out, const std::vector<Event>& events,
                   ReportFormat format);

// One row per record; for the full ensemble pass the summary so table and
// json output carry the summary block.
void render_records(std::ostream& out,
                    const std::vector<OddsRatioRecord>& records,
                    ReportFormat format,
                    const EnsembleSummary* summary = nullptr);

// Streaming csv writer: header immediately, one line per add().
class CsvRecordWriter {
public:
  explicit CsvRecordWriter(std::ostream& out);
  void add(const OddsRatioRecord& record);

private:
  std::ostream& out_;
};

void render_summary_text(std::ostream& out, const EnsembleSummary& summary);

}  // namespace gor

#endif  // GOR_REPORT_HPP
