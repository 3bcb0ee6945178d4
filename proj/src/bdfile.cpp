#include "z2cover/bdfile.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "z2cover/expr.hpp"

namespace z2cover {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw bdfile_error("line " + std::to_string(line) + ": " + msg);
}

unsigned parse_label(const std::string& s, int n, int line) {
  if (static_cast<int>(s.size()) != n) fail(line, "label '" + s + "' must have " + std::to_string(n) + " bits");
  unsigned bits = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') fail(line, "label '" + s + "' must have " + std::to_string(n) + " bits");
    bits = (bits << 1) | unsigned(ch - '0');
  }
  return bits;
}

std::vector<NamedCurve> parse_curve_list(const std::string& rhs, int line) {
  std::vector<NamedCurve> out;
  if (rhs.empty() || rhs == "0") return out;
  std::stringstream ss(rhs);
  std::string piece;
  while (std::getline(ss, piece, '+')) {
    piece = trim(piece);
    if (piece.empty()) fail(line, "empty curve name in component list");
    try {
      out.push_back(NamedCurve::parse(piece));
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
  }
  return out;
}

}  // namespace

BdFile parse_bd_text(const std::string& text) {
  BdFile out;
  int n = -1;
  bool surface_seen = false;
  enum class Section { header, d, l } section = Section::header;

  std::map<unsigned, std::vector<NamedCurve>> d_rows;
  std::map<unsigned, DivisorClass> l_rows;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;  // '#' comments are whole lines

    if (s == "[D]") {
      if (!surface_seen || n < 0) fail(line, "surface and group must come before [D]");
      section = Section::d;
      continue;
    }
    if (s == "[L]") {
      if (!surface_seen || n < 0) fail(line, "surface and group must come before [L]");
      section = Section::l;
      continue;
    }
    if (s.front() == '[') fail(line, "unknown section '" + s + "'");

    size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));

    switch (section) {
      case Section::header:
        if (key == "surface") {
          if (value != "Y4") fail(line, "unsupported surface '" + value + "' (expected Y4)");
          surface_seen = true;
        } else if (key == "group") {
          if (value.rfind("Z2^", 0) != 0) fail(line, "unsupported group '" + value + "'");
          try {
            n = std::stoi(value.substr(3));
          } catch (...) {
            fail(line, "unsupported group '" + value + "'");
          }
          if (n < 1 || n > 12) fail(line, "unsupported group '" + value + "'");
        } else {
          fail(line, "unknown header key '" + key + "'");
        }
        break;

      case Section::d: {
        unsigned bits = parse_label(key, n, line);
        if (bits == 0) fail(line, "sigma 0000 is not a valid branch label");
        if (d_rows.count(bits)) fail(line, "duplicate [D] entry for " + key);
        d_rows[bits] = parse_curve_list(value, line);
        break;
      }

      case Section::l: {
        unsigned bits = parse_label(key, n, line);
        if (bits == 0) {
          out.warnings.push_back("line " + std::to_string(line) +
                                 ": ignoring L entry for the trivial character");
          break;
        }
        if (l_rows.count(bits)) fail(line, "duplicate [L] entry for " + key);
        try {
          l_rows[bits] = parse_class_expr(value);
        } catch (const expr_error& e) {
          fail(line, e.what());
        }
        break;
      }
    }
  }

  if (!surface_seen) throw bdfile_error("missing 'surface = Y4' header");
  if (n < 0) throw bdfile_error("missing 'group = Z2^n' header");

  out.bd = BuildingData::make(n);
  for (auto& [bits, comps] : d_rows) out.bd.d[bits] = EffectiveDivisor::of(std::move(comps));
  for (unsigned c = 1; c < (1u << n); ++c) {
    auto it = l_rows.find(c);
    if (it == l_rows.end())
      throw bdfile_error("missing [L] entry for character " + Character(n, c).str());
    out.bd.l[c] = it->second;
  }

  // notice gaps in the chosen pencil members: f1#2 without f1#1 and so on
  std::map<int, std::set<int>> members;
  for (const NamedCurve& c : out.bd.branch_components())
    if (c.kind == CurveKind::pencil_member) members[c.i].insert(c.j);
  for (const auto& [pencil, ks] : members) {
    int expect = 1;
    for (int k : ks) {
      if (k != expect) {
        out.warnings.push_back("pencil f" + std::to_string(pencil) +
                               " members are not numbered 1.." + std::to_string(ks.size()));
        break;
      }
      ++expect;
    }
  }
  return out;
}

BdFile load_bd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bdfile_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bd_text(ss.str());
}

std::string serialize_bd(const BuildingData& bd) {
  std::ostringstream out;
  out << "surface = Y4\n";
  out << "group = Z2^" << bd.n << "\n";
  out << "\n[D]\n";
  for (unsigned s = 1; s < bd.d.size(); ++s) {
    if (bd.d[s].empty()) continue;
    out << GroupElement(bd.n, s).str() << " =";
    bool first = true;
    for (const NamedCurve& c : bd.d[s].components) {
      out << (first ? " " : " + ") << c.name();
      first = false;
    }
    out << "\n";
  }
  out << "\n[L]\n";
  for (unsigned c = 1; c < bd.l.size(); ++c)
    out << Character(bd.n, c).str() << " = " << to_expr(bd.l[c]) << "\n";
  return out.str();
}

}  // namespace z2cover
