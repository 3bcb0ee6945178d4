#include "z2cover/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace z2cover {

BuildingData apply_point_permutation(const BuildingData& bd, const std::array<int, 4>& image) {
  {
    std::array<int, 4> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4})
      throw std::invalid_argument("not a permutation of 1..4");
  }
  auto map_class = [&image](const DivisorClass& d) {
    if (d.rank() != 4) throw std::invalid_argument("permutation needs rank-4 classes");
    DivisorClass out = DivisorClass::zero();
    out.c[0] = d.c[0];
    for (int i = 1; i <= 4; ++i) out.c[image[i - 1]] = d.c[i];
    return out;
  };
  auto map_curve = [&image](const NamedCurve& c) {
    switch (c.kind) {
      case CurveKind::exceptional: return NamedCurve::e(image[c.i - 1]);
      case CurveKind::line: return NamedCurve::h(image[c.i - 1], image[c.j - 1]);
      case CurveKind::pencil_member: return NamedCurve::f(image[c.i - 1], c.j);
    }
    throw std::logic_error("bad curve kind");
  };

  BuildingData out = BuildingData::make(bd.n);
  for (unsigned s = 1; s < bd.d.size(); ++s) {
    std::vector<NamedCurve> comps;
    comps.reserve(bd.d[s].components.size());
    for (const NamedCurve& c : bd.d[s].components) comps.push_back(map_curve(c));
    out.d[s] = EffectiveDivisor::of(std::move(comps));
  }
  for (unsigned c = 1; c < bd.l.size(); ++c) out.l[c] = map_class(bd.l[c]);
  return out;
}

// serialization with pencil members renumbered by first appearance, so the
// key is invariant under member relabeling
std::string building_data_key(const BuildingData& bd) {
  std::map<std::pair<int, int>, int> renumber;  // (pencil, old index) -> new index
  std::array<int, 5> next{0, 1, 1, 1, 1};
  for (unsigned s = 1; s < bd.d.size(); ++s)
    for (const NamedCurve& c : bd.d[s].components)
      if (c.kind == CurveKind::pencil_member && !renumber.count({c.i, c.j}))
        renumber[{c.i, c.j}] = next[c.i]++;

  std::string key = "D";
  for (unsigned s = 1; s < bd.d.size(); ++s) {
    if (bd.d[s].empty()) continue;
    std::vector<NamedCurve> comps = bd.d[s].components;
    for (NamedCurve& c : comps)
      if (c.kind == CurveKind::pencil_member) c.j = renumber.at({c.i, c.j});
    std::sort(comps.begin(), comps.end());
    key += ";" + GroupElement(bd.n, s).str() + "=";
    for (size_t i = 0; i < comps.size(); ++i) key += (i ? "+" : "") + comps[i].name();
  }
  key += "|L";
  for (unsigned c = 1; c < bd.l.size(); ++c) {
    key += ";" + Character(bd.n, c).str() + "=";
    for (size_t i = 0; i < bd.l[c].c.size(); ++i)
      key += (i ? "," : "") + std::to_string(bd.l[c].c[i]);
  }
  return key;
}

std::string canonicalize(const BuildingData& bd) {
  std::array<int, 4> image{1, 2, 3, 4};
  std::string best;
  do {
    std::string key = building_data_key(apply_point_permutation(bd, image));
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

namespace {

using Class5 = std::array<int, 5>;
using Clock = std::chrono::steady_clock;

Class5 to_class5(const DivisorClass& d) {
  Class5 out{};
  for (int i = 0; i < 5; ++i) out[i] = d.c[i];
  return out;
}

DivisorClass from_class5(const Class5& a) {
  return DivisorClass(std::vector<int>(a.begin(), a.end()));
}

int dot5(const Class5& a, const Class5& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3] - a[4] * b[4];
}

// 10-bit parity signature of a family of slot classes: bits 0..4 carry the
// mod-2 coordinate sums over slots with a3 = 1, bits 5..9 the same for
// a4 = 1.  The cover relations are solvable for integral L_chi iff the
// total signature vanishes (the four single-bit relation sums determine the
// parity of all fifteen, and the a1/a2 sums are even block sums by
// construction).
unsigned parity_sig(unsigned slot_mask, const Class5& cls) {
  unsigned sig = 0;
  for (int i = 0; i < 5; ++i) {
    unsigned bit = unsigned(cls[i]) & 1u;
    if (slot_mask & 2u) sig ^= bit << i;
    if (slot_mask & 1u) sig ^= bit << (5 + i);
  }
  return sig;
}

struct RegionAssignment {
  std::vector<std::vector<int>> per_slot;  // parallel to the region's slot list
  std::vector<Class5> slot_cls;
  unsigned sig = 0;
};

// all ways to place `items` into the region's slots (every item placed),
// respecting the component budget and pairwise disjointness inside a slot
void assignments_placing_all(const std::vector<int>& items, const std::vector<unsigned>& slot_masks,
                             int budget, const std::vector<Class5>& ccls,
                             const std::vector<std::vector<int8_t>>& meet,
                             std::vector<RegionAssignment>& out) {
  RegionAssignment cur;
  cur.per_slot.assign(slot_masks.size(), {});
  cur.slot_cls.assign(slot_masks.size(), Class5{});

  auto rec = [&](auto&& self, size_t t) -> void {
    if (t == items.size()) {
      RegionAssignment done = cur;
      for (size_t s = 0; s < slot_masks.size(); ++s)
        done.sig ^= parity_sig(slot_masks[s], cur.slot_cls[s]);
      out.push_back(std::move(done));
      return;
    }
    int item = items[t];
    for (size_t s = 0; s < slot_masks.size(); ++s) {
      auto& slot = cur.per_slot[s];
      if (static_cast<int>(slot.size()) >= budget) continue;
      bool disjoint = true;
      for (int other : slot)
        if (meet[item][other]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      slot.push_back(item);
      for (int i = 0; i < 5; ++i) cur.slot_cls[s][i] += ccls[item][i];
      self(self, t + 1);
      for (int i = 0; i < 5; ++i) cur.slot_cls[s][i] -= ccls[item][i];
      slot.pop_back();
    }
  };
  rec(rec, 0);
}

// like the above, but items may also stay unused (for the 0001/0010/0011
// slots, whose total is constrained only by the nef-and-big hypothesis)
void assignments_optional(const std::vector<int>& items, const std::vector<unsigned>& slot_masks,
                          int budget, const std::vector<Class5>& ccls,
                          const std::vector<std::vector<int8_t>>& meet,
                          std::vector<RegionAssignment>& out) {
  RegionAssignment cur;
  cur.per_slot.assign(slot_masks.size(), {});
  cur.slot_cls.assign(slot_masks.size(), Class5{});

  auto rec = [&](auto&& self, size_t t) -> void {
    if (t == items.size()) {
      RegionAssignment done = cur;
      for (size_t s = 0; s < slot_masks.size(); ++s)
        done.sig ^= parity_sig(slot_masks[s], cur.slot_cls[s]);
      out.push_back(std::move(done));
      return;
    }
    self(self, t + 1);  // item unused
    int item = items[t];
    for (size_t s = 0; s < slot_masks.size(); ++s) {
      auto& slot = cur.per_slot[s];
      if (static_cast<int>(slot.size()) >= budget) continue;
      bool disjoint = true;
      for (int other : slot)
        if (meet[item][other]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      slot.push_back(item);
      for (int i = 0; i < 5; ++i) cur.slot_cls[s][i] += ccls[item][i];
      self(self, t + 1);
      for (int i = 0; i < 5; ++i) cur.slot_cls[s][i] -= ccls[item][i];
      slot.pop_back();
    }
  };
  rec(rec, 0);
}

struct AntiSet {
  uint64_t mask = 0;
  std::vector<int> curves;
};

struct Prepared {
  std::vector<NamedCurve> catalog;
  std::vector<Class5> ccls;
  std::vector<std::vector<int8_t>> meet;
  std::vector<AntiSet> anti;
  std::array<std::vector<unsigned>, 3> block_slots;  // cosets 01**, 10**, 11**
  std::vector<unsigned> gamma_slots;                 // 0001, 0010, 0011
  int budget = 2;
};

// subsets of the catalog with class sum -K: exactly three curves of
// l-degree 1 plus the uniquely determined exceptional correction
std::vector<AntiSet> anticanonical_sets(const std::vector<NamedCurve>& catalog,
                                        const std::vector<Class5>& ccls) {
  std::vector<int> lines;
  std::array<int, 5> e_index;
  e_index.fill(-1);
  for (size_t i = 0; i < catalog.size(); ++i) {
    if (ccls[i][0] == 1) lines.push_back(static_cast<int>(i));
    if (catalog[i].kind == CurveKind::exceptional) e_index[catalog[i].i] = static_cast<int>(i);
  }

  const Class5 anti_k{3, -1, -1, -1, -1};
  std::vector<AntiSet> out;
  for (size_t a = 0; a < lines.size(); ++a)
    for (size_t b = a + 1; b < lines.size(); ++b)
      for (size_t c = b + 1; c < lines.size(); ++c) {
        Class5 sum{};
        for (int i = 0; i < 5; ++i)
          sum[i] = ccls[lines[a]][i] + ccls[lines[b]][i] + ccls[lines[c]][i];
        AntiSet set;
        set.curves = {lines[a], lines[b], lines[c]};
        bool good = true;
        for (int i = 1; i <= 4 && good; ++i) {
          int need = anti_k[i] - sum[i];  // e_i coefficient still missing
          if (need == 0) continue;
          if (need != 1 || e_index[i] < 0) {
            good = false;
            break;
          }
          set.curves.push_back(e_index[i]);
        }
        if (!good) continue;
        for (int idx : set.curves) set.mask |= uint64_t(1) << idx;
        out.push_back(std::move(set));
      }
  return out;
}

struct TripleResult {
  std::vector<SearchResult> results;
  bool complete = true;
};

// everything downstream of one choice of anticanonical triple
void process_triple(const Prepared& prep, const AntiSet& b1, const AntiSet& b2, const AntiSet& b3,
                    const std::optional<Clock::time_point>& deadline, TripleResult& out) {
  const DivisorClass k_y = canonical_class();
  const Class5 anti_k{3, -1, -1, -1, -1};

  uint64_t used = b1.mask | b2.mask | b3.mask;
  std::vector<int> rest;
  for (size_t i = 0; i < prep.catalog.size(); ++i)
    if (!(used >> i & 1)) rest.push_back(static_cast<int>(i));

  std::vector<RegionAssignment> gamma;
  assignments_optional(rest, prep.gamma_slots, prep.budget, prep.ccls, prep.meet, gamma);
  // the nef-and-big hypothesis only sees the gamma total; filter here
  std::erase_if(gamma, [&](const RegionAssignment& g) {
    Class5 total{};
    for (const Class5& c : g.slot_cls)
      for (int i = 0; i < 5; ++i) total[i] += c[i];
    DivisorClass a = from_class5(total) - k_y;
    return !is_nef_and_big(a);
  });
  if (gamma.empty()) return;

  std::array<std::vector<RegionAssignment>, 3> block;
  const AntiSet* sets[3] = {&b1, &b2, &b3};
  for (int t = 0; t < 3; ++t) {
    assignments_placing_all(sets[t]->curves, prep.block_slots[t], prep.budget, prep.ccls,
                            prep.meet, block[t]);
    if (block[t].empty()) return;
  }

  // join the last block on the parity signature
  std::unordered_map<unsigned, std::vector<int>> by_sig;
  for (size_t i = 0; i < block[2].size(); ++i) by_sig[block[2][i].sig].push_back(int(i));

  long counter = 0;
  for (const RegionAssignment& g : gamma)
    for (const RegionAssignment& a1 : block[0])
      for (const RegionAssignment& a2 : block[1]) {
        if (deadline && ++counter % 1024 == 0 && Clock::now() > *deadline) {
          out.complete = false;
          return;
        }
        auto match = by_sig.find(g.sig ^ a1.sig ^ a2.sig);
        if (match == by_sig.end()) continue;
        for (int a3_idx : match->second) {
          const RegionAssignment& a3 = block[2][a3_idx];

          std::array<Class5, 16> slot_cls{};
          std::array<const std::vector<int>*, 16> slot_curves{};
          auto install = [&](const std::vector<unsigned>& masks, const RegionAssignment& a) {
            for (size_t s = 0; s < masks.size(); ++s) {
              slot_cls[masks[s]] = a.slot_cls[s];
              slot_curves[masks[s]] = &a.per_slot[s];
            }
          };
          install(prep.gamma_slots, g);
          install(prep.block_slots[0], a1);
          install(prep.block_slots[1], a2);
          install(prep.block_slots[2], a3);

          // solve the relations: L_chi is half the sum over chi(sigma) = -1
          std::array<Class5, 16> l_cls{};
          bool viable = true;
          for (unsigned chi = 1; chi < 16 && viable; ++chi) {
            Class5 sum{};
            for (unsigned s = 1; s < 16; ++s) {
              if (!(std::popcount(chi & s) & 1)) continue;
              for (int i = 0; i < 5; ++i) sum[i] += slot_cls[s][i];
            }
            bool zero = true;
            for (int i = 0; i < 5; ++i) {
              if (sum[i] % 2 != 0) throw std::logic_error("parity join admitted an odd sum");
              l_cls[chi][i] = sum[i] / 2;
              zero = zero && l_cls[chi][i] == 0;
            }
            if (zero) viable = false;  // trivial L_chi is not building data
          }
          if (!viable) continue;

          // vanishing hypothesis for the twelve non-special characters
          for (unsigned chi = 1; chi < 16 && viable; ++chi) {
            if (chi == 0b1000 || chi == 0b0100 || chi == 0b1100) continue;
            Class5 kl{};
            for (int i = 0; i < 5; ++i) kl[i] = l_cls[chi][i] + canonical_class().c[i];
            if (dot5(kl, anti_k) < 0) continue;  // not effective, h0 = 0
            if (h0(from_class5(kl)) != 0) viable = false;
          }
          if (!viable) continue;

          BuildingData bd = BuildingData::make(4);
          for (unsigned s = 1; s < 16; ++s) {
            if (!slot_curves[s]) continue;
            std::vector<NamedCurve> comps;
            for (int idx : *slot_curves[s]) comps.push_back(prep.catalog[idx]);
            bd.d[s] = EffectiveDivisor::of(std::move(comps));
          }
          for (unsigned chi = 1; chi < 16; ++chi) bd.l[chi] = from_class5(l_cls[chi]);

          // re-verify with the full checker before emitting
          if (!verify_pardini(bd).ok()) continue;
          Degree20Report report = check_degree20(bd);
          if (!report.all_pass()) continue;

          SearchResult res;
          res.key = canonicalize(bd);
          res.bd = std::move(bd);
          res.report = std::move(report);
          out.results.push_back(std::move(res));
        }
      }
}

}  // namespace

SearchOutcome enumerate_covers(const SearchConfig& cfg) {
  if (cfg.max_pencil_members < 1) throw std::invalid_argument("max_pencil_members must be >= 1");
  if (cfg.component_budget < 1) throw std::invalid_argument("component_budget must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.time_budget_seconds < 0) throw std::invalid_argument("negative time budget");

  Prepared prep;
  prep.budget = cfg.component_budget;
  prep.catalog = cfg.catalog ? *cfg.catalog : full_catalog(cfg.max_pencil_members);
  if (prep.catalog.size() > 64) throw std::invalid_argument("catalog too large");
  for (size_t i = 0; i < prep.catalog.size(); ++i)
    for (size_t j = i + 1; j < prep.catalog.size(); ++j)
      if (prep.catalog[i] == prep.catalog[j])
        throw std::invalid_argument("catalog repeats " + prep.catalog[i].name());

  std::array<bool, 16> support{};
  if (cfg.sigma_support) {
    for (const GroupElement& s : *cfg.sigma_support) {
      if (s.n != 4 || s.is_identity())
        throw std::invalid_argument("sigma support must consist of non-identity Z_2^4 elements");
      support[s.bits] = true;
    }
  } else {
    support.fill(true);
  }

  prep.ccls.reserve(prep.catalog.size());
  for (const NamedCurve& c : prep.catalog) prep.ccls.push_back(to_class5(c.cls()));
  prep.meet.assign(prep.catalog.size(), std::vector<int8_t>(prep.catalog.size(), 0));
  for (size_t i = 0; i < prep.catalog.size(); ++i)
    for (size_t j = 0; j < prep.catalog.size(); ++j)
      if (i != j)
        prep.meet[i][j] = intersection_count(prep.catalog[i], prep.catalog[j]) != 0 ? 1 : 0;

  for (unsigned m = 1; m <= 3; ++m)
    if (support[m]) prep.gamma_slots.push_back(m);
  for (unsigned top = 1; top <= 3; ++top)
    for (unsigned low = 0; low < 4; ++low)
      if (support[(top << 2) | low]) prep.block_slots[top - 1].push_back((top << 2) | low);

  prep.anti = anticanonical_sets(prep.catalog, prep.ccls);

  std::vector<std::array<int, 3>> triples;
  for (size_t a = 0; a < prep.anti.size(); ++a)
    for (size_t b = 0; b < prep.anti.size(); ++b) {
      if (b == a || (prep.anti[a].mask & prep.anti[b].mask)) continue;
      for (size_t c = 0; c < prep.anti.size(); ++c) {
        if (c == a || c == b) continue;
        if ((prep.anti[a].mask | prep.anti[b].mask) & prep.anti[c].mask) continue;
        triples.push_back({int(a), int(b), int(c)});
      }
    }

  std::optional<Clock::time_point> deadline;
  if (cfg.time_budget_seconds > 0)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(cfg.time_budget_seconds));

  auto run_range = [&prep, &deadline](size_t begin, size_t end,
                                      const std::vector<std::array<int, 3>>& ts) {
    TripleResult acc;
    for (size_t t = begin; t < end && acc.complete; ++t) {
      if (deadline && Clock::now() > *deadline) {
        acc.complete = false;
        break;
      }
      process_triple(prep, prep.anti[ts[t][0]], prep.anti[ts[t][1]], prep.anti[ts[t][2]],
                     deadline, acc);
    }
    return acc;
  };

  SearchOutcome outcome;
  std::vector<TripleResult> parts;
  if (cfg.workers == 1 || triples.size() < 2) {
    parts.push_back(run_range(0, triples.size(), triples));
  } else {
    size_t workers = std::min<size_t>(cfg.workers, triples.size());
    size_t chunk = (triples.size() + workers - 1) / workers;
    std::vector<std::future<TripleResult>> futures;
    for (size_t w = 0; w < workers; ++w) {
      size_t begin = w * chunk;
      size_t end = std::min(begin + chunk, triples.size());
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, run_range, begin, end, std::cref(triples)));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  // deterministic merge in triple order; duplicate suppression only keys on
  // the canonical form when symmetry reduction is on
  std::set<std::string> seen;
  for (TripleResult& part : parts) {
    outcome.complete = outcome.complete && part.complete;
    for (SearchResult& res : part.results) {
      if (cfg.symmetry && !seen.insert(res.key).second) continue;
      outcome.results.push_back(std::move(res));
    }
  }
  return outcome;
}

}  // namespace z2cover
