#include <fstream>
#include <regex>
#include <sstream>

#include "zetainv/invzeta.hpp"

namespace zetainv {

std::string AttractorTable::to_text() const {
  std::ostringstream os;
  os << "# zetainv-attractor m=" << m << " digits=" << ctx.digits() << '\n';
  for (const auto& r : roots) {
    os << format_decimal(r.re(), ctx.digits());
    if (!r.im().is_zero()) os << ' ' << format_decimal(r.im(), ctx.digits());
    os << '\n';
  }
  return os.str();
}

void AttractorTable::save(const std::filesystem::path& path) const {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path.string());
  f << to_text();
  if (!f) throw UsageError("write failed for " + path.string());
}

AttractorTable AttractorTable::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty attractor file");
  static const std::regex header(R"(#\s*zetainv-attractor\s+m=(\d+)\s+digits=(\d+)\s*)");
  std::smatch mt;
  if (!std::regex_match(line, mt, header)) throw ParseError("missing '# zetainv-attractor m=<m> digits=<d>' header");
  AttractorTable t;
  t.m = std::stoi(mt[1]);
  t.ctx = PrecisionContext(std::max(kMinDigits, std::stoi(mt[2])));
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string re, im, extra;
    if (!(ls >> re)) continue;
    ls >> im;
    if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": expected one or two numbers");
    t.roots.push_back(parse_complex(re, im, t.ctx));
  }
  if (static_cast<int>(t.roots.size()) != t.m) {
    throw ParseError("header says m=" + std::to_string(t.m) + " but " + std::to_string(t.roots.size()) +
                     " roots follow");
  }
  // Rebuild the monic polynomial prod (w - j_n).
  std::vector<BigComplex> p{BigComplex(1L, t.ctx)};
  for (const auto& r : t.roots) {
    std::vector<BigComplex> q(p.size() + 1, BigComplex(t.ctx));
    for (size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= p[k] * r;
    }
    p = std::move(q);
  }
  for (const auto& c : p) t.source_poly.push_back(c.re());
  return t;
}

AttractorTable AttractorTable::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str());
}

}  // namespace zetainv
