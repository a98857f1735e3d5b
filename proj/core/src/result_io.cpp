#include "spaf/result_io.hpp"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace spaf {

namespace {

using nlohmann::json;

// Literals such as "5." or ".5" are fine in graph files but not JSON numbers.
std::string json_number_text(const Capacity& c) {
  static const std::regex json_number(R"(-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?)");
  return std::regex_match(c.literal(), json_number) ? c.literal() : c.canonical();
}

// Builds a DOM in which every number is stored as its exact source text, so
// capacities survive without a trip through double.
class RawNumberSax : public nlohmann::json_sax<json> {
 public:
  json take() { return std::move(root_); }

  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return put(raw); }
  bool string(string_t&) override { throw ResultFormatError("unexpected string value"); }
  bool binary(binary_t&) override { throw ResultFormatError("unexpected binary value"); }
  bool start_object(std::size_t) override { return open(json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override {
    throw ResultFormatError("malformed JSON at byte " + std::to_string(pos) + ": " + e.what());
  }

 private:
  json* place(json v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return &root_;
    }
    json* top = stack_.back();
    if (top->is_array()) {
      top->push_back(std::move(v));
      return &top->back();
    }
    json& slot = (*top)[key_];
    slot = std::move(v);
    return &slot;
  }
  bool put(json v) {
    place(std::move(v));
    return true;
  }
  bool open(json v) {
    stack_.push_back(place(std::move(v)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  json root_;
  std::vector<json*> stack_;
  std::string key_;
};

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ResultFormatError(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

std::size_t as_count(const json& v, const char* what) {
  if (!v.is_string()) throw ResultFormatError(std::string(what) + " must be a number");
  const std::string& s = v.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ResultFormatError(std::string(what) + " must be a non-negative integer");
  }
  return std::stoull(s);
}

}  // namespace

void write_result_json(const ApspAfResult& res, std::ostream& out) {
  out << "{\"n\": " << res.n << ", \"flows\": [";
  const auto flows = res.flow_rank.values();
  for (std::size_t k = 0; k < flows.size(); ++k) out << (k ? ", " : "") << json_number_text(flows[k]);
  out << "], \"pairs\": [";
  bool first = true;
  for (std::size_t i = 0; i < res.n; ++i) {
    for (std::size_t j = 0; j < res.n; ++j) {
      const FlowStaircase& t = res.staircases(i, j);
      if (t.empty()) continue;
      out << (first ? "\n" : ",\n") << "  {\"i\": " << i + 1 << ", \"j\": " << j + 1 << ", \"t\": [";
      first = false;
      for (std::size_t k = 0; k < t.size(); ++k) {
        const StairStep& s = t.steps()[k];
        out << (k ? ", " : "") << '[' << s.length << ", " << json_number_text(res.flow_rank.value(s.flow))
            << ']';
      }
      out << "]}";
    }
  }
  out << (first ? "" : "\n") << "]}\n";
}

std::string result_json_text(const ApspAfResult& res) {
  std::ostringstream out;
  write_result_json(res, out);
  return out.str();
}

ApspAfResult read_result_json(std::istream& in) {
  RawNumberSax sax;
  json::sax_parse(in, &sax);
  const json doc = sax.take();

  ApspAfResult res;
  res.n = as_count(field(doc, "n"), "n");

  const json& flows = field(doc, "flows");
  if (!flows.is_array()) throw ResultFormatError("'flows' must be an array");
  std::vector<Capacity> values;
  for (const json& f : flows) {
    if (!f.is_string()) throw ResultFormatError("flow values must be numbers");
    try {
      values.push_back(Capacity::parse(f.get_ref<const std::string&>()));
    } catch (const std::exception& e) {
      throw ResultFormatError(std::string("bad flow value: ") + e.what());
    }
    if (values.size() > 1 && !(values[values.size() - 2] < values.back())) {
      throw ResultFormatError("flows must be strictly ascending");
    }
  }
  res.flow_rank = FlowRank(std::move(values));
  res.staircases = StaircaseMatrix(res.n, FlowStaircase{});

  const json& pairs = field(doc, "pairs");
  if (!pairs.is_array()) throw ResultFormatError("'pairs' must be an array");
  for (const json& p : pairs) {
    const std::size_t i = as_count(field(p, "i"), "i");
    const std::size_t j = as_count(field(p, "j"), "j");
    if (i < 1 || j < 1 || i > res.n || j > res.n || i == j) {
      throw ResultFormatError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    const json& t = field(p, "t");
    if (!t.is_array()) throw ResultFormatError("'t' must be an array");
    std::vector<StairStep> steps;
    for (const json& step : t) {
      if (!step.is_array() || step.size() != 2) throw ResultFormatError("steps must be [l, f]");
      const std::size_t len = as_count(step[0], "l");
      if (!step[1].is_string()) throw ResultFormatError("flow must be a number");
      std::optional<Rank> rank;
      try {
        rank = res.flow_rank.rank_of(Capacity::parse(step[1].get_ref<const std::string&>()));
      } catch (const std::exception& e) {
        throw ResultFormatError(std::string("bad flow in step: ") + e.what());
      }
      if (!rank) throw ResultFormatError("step flow not listed in 'flows'");
      if (len < 1 || len >= res.n) throw ResultFormatError("step length out of range");
      steps.push_back({static_cast<Length>(len), *rank});
    }
    try {
      res.staircases(i - 1, j - 1) = FlowStaircase(std::move(steps));
    } catch (const std::invalid_argument& e) {
      throw ResultFormatError(e.what());
    }
  }
  return res;
}

ApspAfResult read_result_json_text(const std::string& text) {
  std::istringstream in(text);
  return read_result_json(in);
}

ApspAfResult as_all_pairs(const SsspAfResult& res) {
  ApspAfResult out;
  out.n = res.staircases.size();
  out.flow_rank = res.flow_rank;
  out.staircases = StaircaseMatrix(out.n, FlowStaircase{});
  for (std::size_t v = 0; v < out.n; ++v) out.staircases(res.source, v) = res.staircases[v];
  return out;
}

}  // namespace spaf
