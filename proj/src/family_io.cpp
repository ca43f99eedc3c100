#include "vcfam/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "vcfam/errors.hpp"

namespace vcfam {
namespace {

int parse_int(std::string_view tok, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
    throw ParseError(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

SubsetMask parse_member(std::string_view line, int n, std::size_t lineno) {
  const std::string where = " on line " + std::to_string(lineno);
  SubsetMask m(n);
  if (line == "-") return m;
  int prev = 0;
  for (auto tok : split(line, ' ')) {
    const int e = parse_int(tok, ("element" + where).c_str());
    if (e < 1 || e > n) throw ParseError("element " + std::to_string(e) + " out of range" + where);
    if (e <= prev) throw ParseError("unsorted line" + where);
    m.insert(e);
    prev = e;
  }
  return m;
}

}  // namespace

SetFamily read_family(std::string_view text) {
  if (text.find('\r') != std::string_view::npos) throw ParseError("CR characters not allowed");
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2 || lines[0] != "vcfam 1") throw ParseError("malformed header: expected 'vcfam 1'");

  auto fields = split(lines[1], ' ');
  if (fields.size() != 2 || !fields[0].starts_with("n=") || !fields[1].starts_with("s="))
    throw ParseError("malformed header: expected 'n=<n> s=<s|mixed>'");
  const int n = parse_int(fields[0].substr(2), "header n");
  if (n < 1 || n > kMaxGroundSize) throw ParseError("malformed header: n out of range");
  std::optional<int> declared_s;
  if (fields[1].substr(2) != "mixed") declared_s = parse_int(fields[1].substr(2), "header s");

  std::vector<SubsetMask> members;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto m = parse_member(lines[i], n, i + 1);
    if (!members.empty()) {
      if (m == members.back()) throw ParseError("duplicate member on line " + std::to_string(i + 1));
      if (m < members.back()) throw ParseError("unsorted line " + std::to_string(i + 1) + ": members out of canonical order");
    }
    members.push_back(m);
  }
  auto f = SetFamily::from_masks(n, std::move(members));
  if (f.uniform_size() != declared_s)
    throw ParseError("malformed header: s does not match the members");
  return f;
}

std::string write_family(const SetFamily& f) {
  std::ostringstream os;
  os << "vcfam 1\n"
     << "n=" << f.ground_size() << " s=";
  if (f.uniform_size())
    os << *f.uniform_size();
  else
    os << "mixed";
  os << '\n';
  for (const auto& m : f.members()) {
    if (m.empty()) {
      os << "-\n";
      continue;
    }
    bool first = true;
    for (int e : m.elements()) {
      if (!first) os << ' ';
      os << e;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

SetFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_family(buf.str());
}

void save_family(const std::filesystem::path& path, const SetFamily& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << write_family(f);
}

nlohmann::json family_to_json(const SetFamily& f) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : f.members()) members.push_back(m.elements());
  return {{"n", f.ground_size()}, {"members", std::move(members)}};
}

SetFamily family_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxGroundSize) throw ParseError("n out of range");
    std::vector<SubsetMask> members;
    for (const auto& row : j.at("members")) {
      SubsetMask m(n);
      int prev = 0;
      for (const auto& v : row) {
        const int e = v.get<int>();
        if (e < 1 || e > n) throw ParseError("element " + std::to_string(e) + " out of range");
        if (e <= prev) throw ParseError("unsorted member");
        m.insert(e);
        prev = e;
      }
      if (!members.empty() && !(members.back() < m))
        throw ParseError(m == members.back() ? "duplicate member" : "members out of canonical order");
      members.push_back(m);
    }
    return SetFamily::from_masks(n, std::move(members));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed family JSON: ") + e.what());
  }
}

}  // namespace vcfam
