#include "z2cover/catalog.hpp"

#include <stdexcept>
#include <utility>

namespace z2cover {

NamedCurve NamedCurve::e(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("exceptional index out of range");
  return NamedCurve{CurveKind::exceptional, i, 0};
}

NamedCurve NamedCurve::h(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 4 || i == j) throw std::invalid_argument("line indices out of range");
  return NamedCurve{CurveKind::line, i, j};
}

NamedCurve NamedCurve::f(int i, int k) {
  if (i < 1 || i > 4) throw std::invalid_argument("pencil index out of range");
  if (k < 1) throw std::invalid_argument("pencil member index must be >= 1");
  return NamedCurve{CurveKind::pencil_member, i, k};
}

DivisorClass NamedCurve::cls() const {
  switch (kind) {
    case CurveKind::exceptional: return exceptional_class(i);
    case CurveKind::line: return line_through_class(i, j);
    case CurveKind::pencil_member: return pencil_class(i);
  }
  throw std::logic_error("bad curve kind");
}

std::string NamedCurve::name() const {
  switch (kind) {
    case CurveKind::exceptional: return "e" + std::to_string(i);
    case CurveKind::line: return "h" + std::to_string(i) + std::to_string(j);
    case CurveKind::pencil_member: return "f" + std::to_string(i) + "#" + std::to_string(j);
  }
  throw std::logic_error("bad curve kind");
}

NamedCurve NamedCurve::parse(const std::string& s) {
  auto bad = [&s]() -> NamedCurve {
    throw std::invalid_argument("unknown curve name '" + s + "'");
  };
  if (s.size() < 2) return bad();
  if (s[0] == 'e') {
    if (s.size() != 2 || s[1] < '1' || s[1] > '4') return bad();
    return e(s[1] - '0');
  }
  if (s[0] == 'h') {
    if (s.size() != 3 || s[1] < '1' || s[1] > '4' || s[2] < '1' || s[2] > '4' || s[1] >= s[2])
      return bad();
    return h(s[1] - '0', s[2] - '0');
  }
  if (s[0] == 'f') {
    if (s[1] < '1' || s[1] > '4' || s.size() < 4 || s[2] != '#') return bad();
    int k = 0;
    for (size_t p = 3; p < s.size(); ++p) {
      if (s[p] < '0' || s[p] > '9' || k > 100000) return bad();
      k = k * 10 + (s[p] - '0');
    }
    if (k < 1) return bad();
    return f(s[1] - '0', k);
  }
  return bad();
}

int intersection_count(const NamedCurve& c1, const NamedCurve& c2) {
  if (c1 == c2)
    throw std::invalid_argument(
        "self-intersection of an irreducible curve is not a transversality count");
  return dot(c1.cls(), c2.cls());
}

namespace {

// Forced incidences of the fixed arrangement; each point lies on exactly
// two curves.
std::vector<std::pair<NamedCurve, NamedCurve>> forced_pairs() {
  std::vector<std::pair<NamedCurve, NamedCurve>> out;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      out.push_back({NamedCurve::e(i), NamedCurve::h(i, j)});
      out.push_back({NamedCurve::e(j), NamedCurve::h(i, j)});
    }
  out.push_back({NamedCurve::h(1, 2), NamedCurve::h(3, 4)});
  out.push_back({NamedCurve::h(1, 3), NamedCurve::h(2, 4)});
  out.push_back({NamedCurve::h(1, 4), NamedCurve::h(2, 3)});
  return out;
}

bool is_forced_pair(const NamedCurve& a, const NamedCurve& b) {
  static const auto table = forced_pairs();
  for (const auto& [x, y] : table)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

}  // namespace

GenericPositionResult certify_generic_position(const std::vector<NamedCurve>& components) {
  GenericPositionResult res;
  for (size_t i = 0; i < components.size(); ++i)
    for (size_t j = i + 1; j < components.size(); ++j)
      if (components[i] == components[j]) {
        res.violation = "branch divisor not reduced: " + components[i].name();
        return res;
      }

  for (size_t i = 0; i < components.size(); ++i) {
    for (size_t j = i + 1; j < components.size(); ++j) {
      const NamedCurve& a = components[i];
      const NamedCurve& b = components[j];
      int k = intersection_count(a, b);
      if (k == 0) continue;
      bool fixed_pair =
          a.kind != CurveKind::pencil_member && b.kind != CurveKind::pencil_member;
      if (fixed_pair) {
        // every intersecting fixed pair must be in the forced table
        if (!is_forced_pair(a, b))
          throw std::logic_error("incidence model is missing a forced point for " + a.name() +
                                 " and " + b.name());
        res.points.push_back({{a, b}, true});
      } else {
        // generic placement: k fresh transversal points on exactly these two
        for (int t = 0; t < k; ++t) res.points.push_back({{a, b}, false});
      }
    }
  }

  for (const IncidencePoint& p : res.points) {
    if (p.curves.size() > 2) {
      res.violation = "point lies on " + std::to_string(p.curves.size()) + " components:";
      for (const NamedCurve& c : p.curves) res.violation += " " + c.name();
      return res;
    }
  }
  res.ok = true;
  return res;
}

const std::array<NamedCurve, 10>& negative_curves() {
  static const std::array<NamedCurve, 10> neg = {
      NamedCurve::e(1),    NamedCurve::e(2),    NamedCurve::e(3),    NamedCurve::e(4),
      NamedCurve::h(1, 2), NamedCurve::h(1, 3), NamedCurve::h(1, 4), NamedCurve::h(2, 3),
      NamedCurve::h(2, 4), NamedCurve::h(3, 4)};
  return neg;
}

std::vector<NamedCurve> full_catalog(int pencil_members) {
  if (pencil_members < 0) throw std::invalid_argument("negative pencil member count");
  std::vector<NamedCurve> out(negative_curves().begin(), negative_curves().end());
  for (int i = 1; i <= 4; ++i)
    for (int k = 1; k <= pencil_members; ++k) out.push_back(NamedCurve::f(i, k));
  return out;
}

}  // namespace z2cover
