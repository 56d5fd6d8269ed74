#pragma once

// Named check suites and table dumps over the registered towers. This is the
// layer behind the C API and the command line.

#include <string>
#include <vector>

#include "towers/report.hpp"

namespace towers {

struct CheckRequest {
  std::string tower;
  std::string check;  // cond12 cond3 cond5 cond5prime bialgebra duality antipode pairing
  std::string group = "g0";
  std::string route = "auto";  // auto character module combinatorial
  int max_degree = 0;
  bool negative_control = false;
  bool timing = false;
};

struct TableRequest {
  std::string tower;
  std::string op;  // product coproduct antipode pairing characters module-bases
  std::string group = "g0";
  std::string route = "auto";
  std::vector<int> degrees;
  std::string composition;
};

/// Rendered output: JSON document, CSV text and the pass flag.
struct Document {
  Json json;
  std::string csv;
  bool passed = true;

  std::string json_text() const;
};

/// Throws UsageError (DegreeCapError over a cap) before computing anything
/// when the request is invalid.
Report run_check(const CheckRequest& req);
Document run_table(const TableRequest& req);
Document to_document(const Report& r);

/// Largest degree a route supports for the given tower and check.
int route_cap(const std::string& tower, const std::string& route);
/// The route "auto" resolves to.
std::string resolve_route(const std::string& tower, const std::string& check, const std::string& group, int n);

}  // namespace towers
