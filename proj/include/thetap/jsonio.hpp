#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "thetap/theta.hpp"

namespace thetap {

struct CliOptions {
  int max_rank = 8;
};

struct Response {
  nlohmann::json doc;
  int status = 0;  // 0 ok, 1 domain error, 2 parse/schema error
};

// One request document -> one response document.
Response run_line(const std::string& line, const CliOptions& opt);

// Line-oriented batch driver; returns the process exit code (worst status).
int run_stream(std::istream& in, std::ostream& out, const CliOptions& opt);

// Wire helpers shared with the tests.
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);
nlohmann::json hc_to_json(const HCParam& h);
nlohmann::json lv_to_json(const LVParam& lv);

}  // namespace thetap
