#include "towers/report.hpp"

#include <algorithm>

namespace towers {

void Report::append(const Report& other) {
  cells.insert(cells.end(), other.cells.begin(), other.cells.end());
}

bool Report::passed() const {
  return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.equal; });
}

const Cell* Report::first_failure() const {
  for (const Cell& c : cells)
    if (!c.equal) return &c;
  return nullptr;
}

Json Report::to_json() const {
  Json j;
  j["request"] = request;
  j["status"] = passed() ? "pass" : "fail";
  j["elapsed_ms"] = elapsed_ms;
  Json arr = Json::array();
  for (const Cell& c : cells) {
    arr.push_back(Json{{"identity", c.identity},
                       {"inputs", c.inputs},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"equal", c.equal}});
  }
  j["cells"] = std::move(arr);
  if (const Cell* f = first_failure())
    j["witness"] = Json{{"identity", f->identity}, {"inputs", f->inputs}, {"lhs", f->lhs}, {"rhs", f->rhs}};
  return j;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string Report::csv_text() const {
  std::string out = "identity,inputs,lhs,rhs,equal\n";
  for (const Cell& c : cells) {
    out += csv_field(c.identity) + ',' + csv_field(c.inputs.dump()) + ',' + csv_field(c.lhs.dump()) + ',' +
           csv_field(c.rhs.dump()) + ',' + (c.equal ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace towers
