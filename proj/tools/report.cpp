#include "report.hpp"

#include <algorithm>
#include <ostream>

namespace zetainv::cli {

namespace {

// Imaginary parts below the printed precision are noise.
bool printed_real(const BigComplex& z, int sig) {
  if (z.im().is_zero()) return true;
  return z.is_real(ten_pow(-sig, z.ctx()));
}

}  // namespace

nlohmann::json complex_json(const BigComplex& z, int sig) {
  if (printed_real(z, sig)) return format_decimal(z.re(), sig);
  return {{"re", format_decimal(z.re(), sig)}, {"im", format_decimal(z.im(), sig)}};
}

std::string complex_text(const BigComplex& z, int sig) {
  if (printed_real(z, sig)) return format_decimal(z.re(), sig);
  const std::string im = format_decimal(abs(z.im()), sig);
  return format_decimal(z.re(), sig) + (z.im().sign() < 0 ? " - " : " + ") + im + "i";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

void emit_text(const Report& r, std::ostream& os) {
  if (r.rows.empty()) {
    if (r.value.is_string()) os << r.value.get<std::string>() << "\n";
    else os << r.value.dump(2) << "\n";
  } else if (r.header.size() == 2 && r.header[0] == "key") {
    size_t w = 0;
    for (const auto& row : r.rows) w = std::max(w, row[0].size());
    for (const auto& row : r.rows) os << row[0] << std::string(w - row[0].size() + 2, ' ') << row[1] << "\n";
  } else {
    std::vector<size_t> w(r.header.size(), 0);
    for (size_t i = 0; i < r.header.size(); ++i) w[i] = r.header[i].size();
    for (const auto& row : r.rows)
      for (size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        os << cells[i];
        if (i + 1 < cells.size()) os << std::string(w[i] - cells[i].size() + 2, ' ');
      }
      os << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
  }
  for (const auto& wmsg : r.warnings) os << "warning: " << wmsg << "\n";
}

void emit_csv(const Report& r, std::ostream& os) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_escape(cells[i]);
    os << "\n";
  };
  if (r.rows.empty()) {
    line({"value"});
    line({r.value.is_string() ? r.value.get<std::string>() : r.value.dump()});
    return;
  }
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

}  // namespace

void emit(const Report& r, Format f, std::ostream& os) {
  switch (f) {
    case Format::text:
      emit_text(r, os);
      break;
    case Format::csv:
      emit_csv(r, os);
      break;
    case Format::json: {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - r.start);
      nlohmann::json j = {{"value", r.value},
                          {"digits", r.digits},
                          {"m", r.m},
                          {"elapsed_ms", ms.count()},
                          {"warnings", r.warnings}};
      os << j.dump(2) << "\n";
      break;
    }
  }
}

void emit_error(const std::string& kind, const std::string& message, const nlohmann::json& extra, Format f,
                std::ostream& out, std::ostream& err) {
  if (f == Format::json) {
    nlohmann::json e = {{"kind", kind}, {"message", message}};
    for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
    out << nlohmann::json{{"error", e}}.dump(2) << "\n";
  } else {
    err << "error (" << kind << "): " << message << "\n";
  }
}

}  // namespace zetainv::cli
