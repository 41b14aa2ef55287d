#include "tptl/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tptl {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> parse_real(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::optional<bool> parse_bool(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  return std::nullopt;
}

std::string row_label(std::size_t row) { return "row " + std::to_string(row); }

}  // namespace

TimedStateSequence::TimedStateSequence(const std::vector<Sample>& samples, bool normalize,
                                       const std::vector<std::string>& alphabet) {
  if (samples.empty()) throw TraceError("trace is empty");
  std::set<std::string> names(alphabet.begin(), alphabet.end());
  for (const auto& s : samples) names.insert(s.state.begin(), s.state.end());
  propositions_.assign(names.begin(), names.end());

  const double origin = samples.front().time;
  if (!std::isfinite(origin)) throw TraceError("sample 0: timestamp is not finite");
  if (origin != 0.0 && !normalize) {
    throw TraceError("sample 0: first timestamp is " + format_number(origin) +
                     ", expected 0 (use normalization to shift it)");
  }

  times_.reserve(samples.size());
  columns_.assign(propositions_.size(), std::vector<std::uint8_t>(samples.size(), 0));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double t = samples[i].time;
    if (!std::isfinite(t)) throw TraceError("sample " + std::to_string(i) + ": timestamp is not finite");
    if (i > 0 && t < samples[i - 1].time) {
      throw TraceError("sample " + std::to_string(i) + ": timestamp " + format_number(t) +
                       " precedes " + format_number(samples[i - 1].time));
    }
    times_.push_back(t - origin);
    for (const auto& p : samples[i].state) {
      auto it = std::lower_bound(propositions_.begin(), propositions_.end(), p);
      columns_[static_cast<std::size_t>(it - propositions_.begin())][i] = 1;
    }
  }
}

std::optional<std::span<const std::uint8_t>> TimedStateSequence::column(
    const std::string& name) const {
  auto it = std::lower_bound(propositions_.begin(), propositions_.end(), name);
  if (it == propositions_.end() || *it != name) return std::nullopt;
  return std::span<const std::uint8_t>(columns_[static_cast<std::size_t>(it - propositions_.begin())]);
}

bool TimedStateSequence::holds(const std::string& name, std::size_t i) const {
  auto col = column(name);
  return col && (*col)[i] != 0;
}

std::vector<std::string> TimedStateSequence::state(std::size_t i) const {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < propositions_.size(); ++p) {
    if (columns_[p][i]) out.push_back(propositions_[p]);
  }
  return out;
}

PredicateMap::PredicateMap(std::vector<Predicate> predicates) : predicates_(std::move(predicates)) {
  std::set<std::string> seen;
  for (const auto& p : predicates_) {
    if (!seen.insert(p.proposition).second) {
      throw TraceError("predicate map defines '" + p.proposition + "' twice");
    }
  }
}

PredicateMap parse_predicate_map(std::istream& in) {
  std::vector<Predicate> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string text = trim(line);
    if (text.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw TraceError("predicate map line " + std::to_string(lineno) + ": " + what);
    };
    auto assign = text.find(":=");
    if (assign == std::string::npos) fail("expected 'name := column <op> number'");
    Predicate p;
    p.proposition = trim(std::string_view(text).substr(0, assign));
    std::string rest = trim(std::string_view(text).substr(assign + 2));
    auto op_at = rest.find_first_of("<>=");
    if (p.proposition.empty() || op_at == std::string::npos || op_at == 0) {
      fail("expected 'name := column <op> number'");
    }
    p.column = trim(std::string_view(rest).substr(0, op_at));
    std::size_t op_len = (op_at + 1 < rest.size() && rest[op_at + 1] == '=') ? 2 : 1;
    std::string op = rest.substr(op_at, op_len);
    if (op == "<=") p.relation = Relation::Le;
    else if (op == "<") p.relation = Relation::Lt;
    else if (op == "=") p.relation = Relation::Eq;
    else if (op == ">") p.relation = Relation::Gt;
    else if (op == ">=") p.relation = Relation::Ge;
    else fail("unknown comparison '" + op + "'");
    auto threshold = parse_real(trim(std::string_view(rest).substr(op_at + op_len)));
    if (!threshold) fail("threshold is not a number");
    p.threshold = *threshold;
    out.push_back(std::move(p));
  }
  return PredicateMap(std::move(out));
}

std::vector<Sample> map_samples(const NumericTrace& trace, const PredicateMap& map) {
  std::vector<std::size_t> source;
  for (const auto& p : map.predicates()) {
    auto it = std::find(trace.columns.begin(), trace.columns.end(), p.column);
    if (it == trace.columns.end()) throw TraceError("missing column '" + p.column + "'");
    source.push_back(static_cast<std::size_t>(it - trace.columns.begin()));
  }
  std::vector<Sample> out(trace.rows.size());
  for (std::size_t i = 0; i < trace.rows.size(); ++i) {
    out[i].time = trace.times[i];
    for (std::size_t k = 0; k < source.size(); ++k) {
      const auto& p = map.predicates()[k];
      const double value = source[k] < trace.rows[i].size()
                               ? trace.rows[i][source[k]]
                               : std::numeric_limits<double>::quiet_NaN();
      if (std::isnan(value)) {
        throw TraceError(row_label(i) + ": missing column '" + p.column + "'");
      }
      if (compare(value, p.relation, p.threshold)) out[i].state.push_back(p.proposition);
    }
  }
  return out;
}

TimedStateSequence apply_predicate_map(const NumericTrace& trace, const PredicateMap& map,
                                       bool normalize) {
  std::vector<std::string> alphabet;
  for (const auto& p : map.predicates()) alphabet.push_back(p.proposition);
  return TimedStateSequence(map_samples(trace, map), normalize, alphabet);
}

namespace {

struct CsvTable {
  std::vector<std::string> header;  // without "time"
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // (line, cells)
};

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (!have_header) {
      if (cells.front() != "time") {
        throw TraceError("line " + std::to_string(lineno) + ": header must start with 'time'");
      }
      table.header.assign(cells.begin() + 1, cells.end());
      for (const auto& name : table.header) {
        if (name.empty()) throw TraceError("line " + std::to_string(lineno) + ": empty column name");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size() + 1) {
      throw TraceError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(table.header.size() + 1) + " cells, found " +
                       std::to_string(cells.size()));
    }
    table.rows.emplace_back(lineno, std::move(cells));
  }
  if (!have_header) throw TraceError("trace is empty");
  return table;
}

double cell_real(const std::string& cell, std::size_t lineno) {
  auto v = parse_real(cell);
  if (!v) throw TraceError("line " + std::to_string(lineno) + ": '" + cell + "' is not a number");
  return *v;
}

NumericTrace numeric_from_csv(const CsvTable& table) {
  NumericTrace out;
  out.columns = table.header;
  for (const auto& [lineno, cells] : table.rows) {
    out.times.push_back(cell_real(cells[0], lineno));
    std::vector<double> row;
    for (std::size_t c = 1; c < cells.size(); ++c) row.push_back(cell_real(cells[c], lineno));
    out.rows.push_back(std::move(row));
  }
  return out;
}

TimedStateSequence load_csv(std::istream& in, const LoadOptions& opts) {
  CsvTable table = read_csv(in);
  if (opts.predicates) {
    return apply_predicate_map(numeric_from_csv(table), *opts.predicates, opts.normalize);
  }
  std::vector<Sample> samples;
  for (const auto& [lineno, cells] : table.rows) {
    Sample s;
    s.time = cell_real(cells[0], lineno);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      auto b = parse_bool(cells[c]);
      if (!b) {
        throw TraceError("line " + std::to_string(lineno) + ": '" + cells[c] +
                         "' is not a boolean (0/1/true/false)");
      }
      if (*b) s.state.push_back(table.header[c - 1]);
    }
    samples.push_back(std::move(s));
  }
  return TimedStateSequence(samples, opts.normalize, table.header);
}

TimedStateSequence load_json(std::istream& in, const LoadOptions& opts) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw TraceError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw TraceError("JSON trace must be an array of samples");

  std::vector<Sample> samples;
  NumericTrace numeric;
  std::map<std::string, std::size_t> column_of;
  bool signals = false;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    auto fail = [&](const std::string& what) { throw TraceError("sample " + std::to_string(i) + ": " + what); };
    if (!item.is_object() || !item.contains("time") || !item["time"].is_number()) {
      fail("expected an object with a numeric \"time\"");
    }
    const bool has_state = item.contains("state");
    const bool has_signals = item.contains("signals");
    if (has_state == has_signals) fail("expected exactly one of \"state\" or \"signals\"");
    if (i == 0) signals = has_signals;
    if (signals != has_signals) fail("samples mix \"state\" and \"signals\"");
    const double time = item["time"].get<double>();
    if (has_state) {
      if (!item["state"].is_array()) fail("\"state\" must be an array of names");
      Sample s;
      s.time = time;
      for (const auto& name : item["state"]) {
        if (!name.is_string()) fail("\"state\" must be an array of names");
        s.state.push_back(name.get<std::string>());
      }
      samples.push_back(std::move(s));
    } else {
      if (!item["signals"].is_object()) fail("\"signals\" must be an object");
      numeric.times.push_back(time);
      std::vector<double> row(numeric.columns.size(), std::numeric_limits<double>::quiet_NaN());
      for (const auto& [name, value] : item["signals"].items()) {
        if (!value.is_number()) fail("signal '" + name + "' is not a number");
        auto [it, inserted] = column_of.emplace(name, numeric.columns.size());
        if (inserted) {
          numeric.columns.push_back(name);
          row.push_back(std::numeric_limits<double>::quiet_NaN());
        }
        row[it->second] = value.get<double>();
      }
      numeric.rows.push_back(std::move(row));
    }
  }
  if (signals) {
    if (!opts.predicates) throw TraceError("signal samples need a predicate map");
    return apply_predicate_map(numeric, *opts.predicates, opts.normalize);
  }
  return TimedStateSequence(samples, opts.normalize);
}

}  // namespace

TimedStateSequence load_trace(std::istream& in, TraceFormat format, const LoadOptions& opts) {
  return format == TraceFormat::Csv ? load_csv(in, opts) : load_json(in, opts);
}

NumericTrace load_numeric_csv(std::istream& in) { return numeric_from_csv(read_csv(in)); }

void write_csv(const TimedStateSequence& trace, std::ostream& out) {
  out << "time";
  for (const auto& p : trace.propositions()) out << ',' << p;
  out << '\n';
  std::vector<std::span<const std::uint8_t>> cols;
  for (const auto& p : trace.propositions()) cols.push_back(*trace.column(p));
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << format_number(trace.time(i));
    for (const auto& c : cols) out << ',' << (c[i] ? '1' : '0');
    out << '\n';
  }
}

TimedStateSequence gen_random(std::size_t length, const std::vector<std::string>& propositions,
                              double mean_step, std::uint64_t seed) {
  if (length == 0) throw TraceError("trace length must be positive");
  if (!(mean_step > 0.0)) throw TraceError("mean time step must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> step(0.0, 2.0 * mean_step);
  std::bernoulli_distribution coin(0.5);
  std::vector<Sample> samples(length);
  double now = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) now += 2.0 * mean_step - step(rng);  // (0, 2*mean]
    samples[i].time = now;
    for (const auto& p : propositions) {
      if (coin(rng)) samples[i].state.push_back(p);
    }
  }
  return TimedStateSequence(samples, false, propositions);
}

}  // namespace tptl
