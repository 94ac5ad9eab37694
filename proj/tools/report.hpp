#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetainv/mpcore.hpp"

namespace zetainv::cli {

enum class Format { text, json, csv };

// One command's result. `value` is the JSON payload; `header`/`rows` give the
// same data as a table for text and csv output.
struct Report {
  nlohmann::json value;
  int digits = 0;
  int m = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

nlohmann::json complex_json(const BigComplex& z, int sig);
std::string complex_text(const BigComplex& z, int sig);

void emit(const Report& r, Format f, std::ostream& os);
// {"error": {kind, message, ...}} for --format json, one line on stderr otherwise.
void emit_error(const std::string& kind, const std::string& message, const nlohmann::json& extra, Format f,
                std::ostream& out, std::ostream& err);

std::string csv_escape(const std::string& s);

}  // namespace zetainv::cli
