#include "semnet/inflection.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "semnet/rewiring.hpp"

#ifndef SEMNET_DATA_DIR
#define SEMNET_DATA_DIR "data"
#endif

namespace semnet {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::optional<PeakBounds> detect_peak(const BinnedDensity& binned, const PeakOptions& opts,
                                      const DegreeDensity* density) {
  const std::size_t n = binned.size();
  // Bins narrower than one degree hold zero or one integer and distort the
  // height by up to 1/width, so they are neither fitted nor flagged.
  std::vector<char> usable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    usable[i] = binned.width(i) >= 1.0 && binned.heights[i] > 0.0 && binned.counts[i] >= opts.min_count &&
                opts.baseline.contains(binned.center(i));
  }

  std::vector<char> flagged(n, 0);
  LineFit fit;
  auto predicted = [&](double k) { return std::exp(fit.intercept + fit.slope * std::log(k)); };
  for (std::size_t round = 0; round <= opts.refit_rounds; ++round) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < n; ++i) {
      if (usable[i] && !flagged[i]) {
        x.push_back(std::log(binned.center(i)));
        y.push_back(std::log(binned.heights[i]));
      }
    }
    if (x.size() < 3) return std::nullopt;
    fit = fit_line(x, y);
    std::vector<char> next(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      next[i] = usable[i] && binned.heights[i] >= opts.threshold * predicted(binned.center(i));
    if (next == flagged) break;
    flagged = std::move(next);
  }

  std::optional<PeakBounds> best;
  for (std::size_t i = 0; i < n;) {
    if (!flagged[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    double excess = 0.0;
    while (j < n && flagged[j]) {
      excess += binned.mass[j] - predicted(binned.center(j)) * binned.width(j);
      ++j;
    }
    if (j - i >= opts.min_run && (!best || excess > best->excess_mass)) {
      PeakBounds b;
      b.first_bin = i;
      b.last_bin = j - 1;
      b.excess_mass = excess;
      best = b;
    }
    i = j;
  }
  if (!best) return std::nullopt;
  best->baseline = fit;
  best->k_min = binned.min_degree[best->first_bin];
  best->k_max = binned.max_degree[best->last_bin];

  if (density != nullptr && density->total > 0.0) {
    const double lo = binned.edges[best->first_bin];
    const double hi = binned.edges[best->last_bin + 1];
    std::optional<std::size_t> kmin, kmax;
    for (auto it = density->counts.lower_bound(static_cast<std::size_t>(std::ceil(lo)));
         it != density->counts.end() && static_cast<double>(it->first) < hi; ++it) {
      const auto k = static_cast<double>(it->first);
      if (it->second / density->total >= opts.threshold * predicted(k)) {
        if (!kmin) kmin = it->first;
        kmax = it->first;
      }
    }
    if (kmin) {
      best->k_min = *kmin;
      best->k_max = *kmax;
    }
  }
  return best;
}

GrammarTable GrammarTable::parse(const std::string& json_text) {
  GrammarTable t;
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_object()) throw std::runtime_error("grammar table must be a JSON object");
  for (const auto& [code, entry] : doc.items()) {
    Entry e;
    e.code = lower(code);
    if (entry.is_number_unsigned()) {
      e.m = entry.get<std::size_t>();
    } else {
      e.m = entry.at("m").get<std::size_t>();
      e.name = lower(entry.value("name", std::string{}));
    }
    t.entries_.push_back(std::move(e));
  }
  return t;
}

GrammarTable GrammarTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grammar table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<std::size_t> GrammarTable::expectation(const std::string& language) const {
  const auto key = lower(language);
  for (const auto& e : entries_)
    if (e.code == key || (!e.name.empty() && e.name == key)) return e.m;
  return std::nullopt;
}

std::string default_grammar_table_path() { return std::string(SEMNET_DATA_DIR) + "/grammar_variations.json"; }

PosBreakdown peak_pos_breakdown(const Graph& g, std::span<const NodeId> peak_nodes, const PosTable& pos) {
  PosBreakdown out;
  std::array<std::size_t, 4> tally{};
  std::array<std::vector<double>, 4> neighbor_pct;
  for (NodeId v : peak_nodes) {
    if (auto t = pos.tag(g.label(v))) {
      ++tally[static_cast<int>(*t)];
      ++out.tagged_peak_words;
    }
    std::array<std::size_t, 4> nb{};
    std::size_t tagged = 0;
    for (NodeId u : g.neighbors(v)) {
      if (auto t = pos.tag(g.label(u))) {
        ++nb[static_cast<int>(*t)];
        ++tagged;
      }
    }
    if (tagged == 0) continue;
    ++out.words_with_tagged_neighbors;
    for (int p = 0; p < 4; ++p)
      neighbor_pct[p].push_back(100.0 * static_cast<double>(nb[p]) / static_cast<double>(tagged));
  }
  out.empty = out.tagged_peak_words == 0;
  if (!out.empty)
    for (int p = 0; p < 4; ++p)
      out.peak_percent[p] = 100.0 * static_cast<double>(tally[p]) / static_cast<double>(out.tagged_peak_words);
  for (int p = 0; p < 4; ++p) {
    const auto ms = mean_std(neighbor_pct[p]);
    out.neighbor_mean[p] = ms.mean;
    out.neighbor_std[p] = ms.std;
  }
  return out;
}

bool peak_matches(const PeakBounds& b, std::size_t m, std::size_t tolerance) {
  if (m >= b.k_min && m <= b.k_max) return true;
  const std::size_t gap = m < b.k_min ? b.k_min - m : m - b.k_max;
  return gap <= tolerance;
}

std::vector<NodeId> nodes_in_degree_range(const Graph& g, std::size_t k_min, std::size_t k_max) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) >= k_min && g.degree(v) <= k_max) out.push_back(v);
  return out;
}

MergeComparison merge_and_compare(const Graph& g, const MergeMap& merge, double log_width, const PeakOptions& opts) {
  MergeComparison out;
  const Graph merged = apply_merge(g, merge);
  out.nodes_before = g.node_count();
  out.nodes_after = merged.node_count();
  out.links_before = g.link_count();
  out.links_after = merged.link_count();
  const auto d_before = degree_density(g);
  const auto d_after = degree_density(merged);
  out.before = log_bin(d_before, log_width);
  out.after = log_bin(d_after, log_width);
  out.peak_before = detect_peak(out.before, opts, &d_before);
  out.peak_after = detect_peak(out.after, opts, &d_after);
  if (out.peak_before) {
    double before = 0.0, after = 0.0;
    for (std::size_t k = out.peak_before->k_min; k <= out.peak_before->k_max; ++k) {
      before += d_before.probability(k);
      after += d_after.probability(k);
    }
    out.peak_mass_reduction = before > 0.0 ? 1.0 - after / before : 0.0;
  }
  return out;
}

PeakReport analyze_peak(const Graph& g, const BinnedDensity& binned, const DegreeDensity& density,
                        const PeakOptions& opts, std::optional<std::size_t> m_expected, const MergeMap* merge,
                        const PosTable* pos) {
  PeakReport r;
  r.m_expected = m_expected;
  r.bounds = detect_peak(binned, opts, &density);
  if (!r.bounds) return r;
  r.matched = m_expected.has_value() && peak_matches(*r.bounds, *m_expected);
  r.peak_nodes = nodes_in_degree_range(g, r.bounds->k_min, r.bounds->k_max);
  if (merge != nullptr && !r.peak_nodes.empty()) {
    std::size_t covered = 0;
    for (NodeId v : r.peak_nodes) covered += merge->merged(g.label(v)) ? 1 : 0;
    r.covered_by_formof = static_cast<double>(covered) / static_cast<double>(r.peak_nodes.size());
  }
  if (pos != nullptr) r.pos = peak_pos_breakdown(g, r.peak_nodes, *pos);
  return r;
}

}  // namespace semnet
